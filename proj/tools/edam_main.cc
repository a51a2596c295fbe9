#include <iostream>

#include "cli/app.h"

int main(int argc, char **argv) {
  return edam::cli::RunCli(argc, argv, std::cout, std::cerr);
}

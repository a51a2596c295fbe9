#ifndef EDAM_TOOLS_CLI_APP_H_
#define EDAM_TOOLS_CLI_APP_H_

#include <iosfwd>

namespace edam {
namespace cli {

// Exit status: 0 success, 1 usage or configuration error, 2 data or I/O error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err);

}  // namespace cli
}  // namespace edam

#endif  // EDAM_TOOLS_CLI_APP_H_

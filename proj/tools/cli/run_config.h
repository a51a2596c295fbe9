#ifndef EDAM_TOOLS_CLI_RUN_CONFIG_H_
#define EDAM_TOOLS_CLI_RUN_CONFIG_H_

#include <string>
#include <vector>

#include "edam/cascade.h"

namespace edam {
namespace cli {

// Everything one reproducible run needs. Empty paths mean "not configured".
struct RunConfig {
  std::string definitions;
  std::vector<std::string> scene_graphs;
  std::string assertions;
  std::string lemma_table;
  std::string stopwords;
  std::string gold;
  std::string annotations;

  std::string index_dir;
  std::string output_dir;

  std::string language = "en";
  std::vector<std::string> relation_allowlist;

  CascadeConfig cascade;
  size_t threads = 0;
  int verbosity = 0;

  // Defaults: bundled lemma table and stopwords; index and output
  // directories under $EDAM_DATA_DIR (or ./edam-data).
  static RunConfig Defaults();

  // Relative paths in the file resolve against the file's directory.
  static RunConfig LoadFile(const std::string &path);
  static RunConfig FromJson(const std::string &text,
                            const std::string &base_dir = {});
  std::string ToJson() const;

  // Throws Error(kUsage) naming the first knowledge input that is missing.
  void ValidateBuildInputs() const;

  bool operator==(const RunConfig &other) const = default;
};

std::string DefaultDataDir();

}  // namespace cli
}  // namespace edam

#endif  // EDAM_TOOLS_CLI_RUN_CONFIG_H_

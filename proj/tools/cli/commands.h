#ifndef EDAM_TOOLS_CLI_COMMANDS_H_
#define EDAM_TOOLS_CLI_COMMANDS_H_

#include <array>
#include <iosfwd>
#include <optional>
#include <string>

#include "edam/cascade.h"
#include "edam/text.h"
#include "run_config.h"

namespace edam {
namespace cli {

inline constexpr const char *kManifestFile = "manifest.json";

// Loads the three stores from the configured inputs and writes dumps plus a
// manifest of input digests into config.index_dir.
void RunBuild(const RunConfig &config, std::ostream &out, std::ostream &log);

// Loads built indexes. Throws Error(kUsage) when the index directory holds no
// manifest or when the manifest digests disagree with the configured inputs.
KnowledgeBase LoadIndexes(const RunConfig &config, Normalizer *normalizer);

enum class VerdictFormat { kText, kJsonl, kSemEval };
std::optional<VerdictFormat> ParseVerdictFormat(const std::string &name);

struct ClassifyRequest {
  std::optional<std::array<std::string, 3>> triple;
  std::string triples_file;  // CSV, label column optional
  VerdictFormat format = VerdictFormat::kText;
  std::string verdicts_out;  // also write JSONL records here
};

void RunClassify(const RunConfig &config, const ClassifyRequest &request,
                 std::ostream &out);

struct ExplainRequest {
  std::string verdicts_file;
  std::optional<size_t> line;  // 1-based
  std::optional<std::array<std::string, 3>> triple;
  std::string template_id;  // empty: the record's own template
};

// Re-renders explanations of stored positive verdicts.
void RunExplain(const ExplainRequest &request, std::ostream &out);

// Classifies the gold set, writes verdicts.jsonl, predictions.csv,
// report.json and report.txt into config.output_dir and prints the report.
void RunEvaluate(const RunConfig &config, std::ostream &out, std::ostream &log);

// Prints a stored report.json as text, or re-serialized JSON.
void RunReport(const std::string &report_path, bool json, std::ostream &out);

}  // namespace cli
}  // namespace edam

#endif  // EDAM_TOOLS_CLI_COMMANDS_H_

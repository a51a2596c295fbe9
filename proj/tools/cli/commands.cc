#include "commands.h"

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "edam/csv.h"
#include "edam/digest.h"
#include "edam/error.h"
#include "edam/eval.h"
#include "edam/verdict_io.h"
#include "json.hpp"

namespace edam {
namespace cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr const char *kDbmFile = "dbm.jsonl";
constexpr const char *kCkgFile = "ckg.jsonl";
constexpr const char *kVfmFile = "vfm.jsonl";
constexpr const char *kDbmSpaceFile = "dbm.space";
constexpr const char *kCkgSpaceFile = "ckg.space";

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const fs::path &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  if (!out) throw IoError("write failed: " + path.string());
}

template <typename Store>
std::string DumpToString(const Store &store) {
  std::ostringstream out;
  store.Dump(out);
  return out.str();
}

std::string SpaceToString(const ExplicitVectorSpace &space) {
  std::ostringstream out;
  space.Dump(out);
  return out.str();
}

json InputDigest(const std::string &path) {
  return {{"path", path}, {"sha256", Sha256File(path)}};
}

// Digests that determine the content of the indexes.
json InputsBlock(const RunConfig &config) {
  json scenes = json::array();
  for (const auto &p : config.scene_graphs) scenes.push_back(InputDigest(p));
  return {{"definitions", InputDigest(config.definitions)},
          {"assertions", InputDigest(config.assertions)},
          {"scene_graphs", scenes},
          {"lemma_table", InputDigest(config.lemma_table)},
          {"stopwords", InputDigest(config.stopwords)}};
}

json LoaderBlock(const RunConfig &config) {
  return {{"language", config.language},
          {"relation_allowlist", config.relation_allowlist}};
}

std::vector<std::string> Digests(const json &inputs) {
  std::vector<std::string> out;
  for (const char *key :
       {"definitions", "assertions", "lemma_table", "stopwords"}) {
    out.push_back(std::string(key) + "=" +
                  inputs.at(key).at("sha256").get<std::string>());
  }
  for (const auto &s : inputs.at("scene_graphs")) {
    out.push_back("scene_graph=" + s.at("sha256").get<std::string>());
  }
  return out;
}

Normalizer MakeNormalizer(const RunConfig &config) {
  return Normalizer::FromFiles(config.lemma_table, config.stopwords);
}

std::vector<Triple> ReadTriples(const std::string &path,
                                const Normalizer &normalizer) {
  std::ifstream in(path);
  if (!in) throw UsageError("triples file '" + path + "' does not exist");
  std::vector<Triple> triples;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = SplitCsvLine(line);
    if (line_no == 1 && !fields.empty() && fields[0] == "pivot") continue;
    if (fields.size() != 3 && fields.size() != 4) {
      throw Error(ErrorKind::kData, "expected 3 or 4 fields", path, line_no, "");
    }
    triples.push_back(MakeTriple(normalizer, fields[0], fields[1], fields[2]));
  }
  return triples;
}

void WriteVerdict(const Triple &triple, const Verdict &verdict,
                  VerdictFormat format, bool verbose, std::ostream &out) {
  switch (format) {
    case VerdictFormat::kText:
      out << (verdict.discriminative ? 1 : 0) << '\t'
          << triple.Key().ToString();
      if (verdict.explanation) out << '\t' << verdict.explanation->rendered_text;
      out << '\n';
      break;
    case VerdictFormat::kJsonl:
      out << VerdictToJson(triple, verdict, verbose) << '\n';
      break;
    case VerdictFormat::kSemEval:
      out << SemEvalLine(triple, verdict.discriminative) << '\n';
      break;
  }
}


}  // namespace

void RunBuild(const RunConfig &config, std::ostream &out, std::ostream &log) {
  config.ValidateBuildInputs();
  Normalizer normalizer = MakeNormalizer(config);

  ckg::LoadOptions ckg_options;
  ckg_options.language = config.language;
  ckg_options.relation_allowlist = {config.relation_allowlist.begin(),
                                    config.relation_allowlist.end()};
  ckg::LoadStats ckg_stats;
  vfm::LoadStats vfm_stats;

  auto dbm_future = std::async(std::launch::async, [&] {
    return dbm::DefinitionStore::Load(config.definitions, normalizer);
  });
  auto ckg_future = std::async(std::launch::async, [&] {
    return ckg::CkgStore::Load(config.assertions, normalizer, ckg_options,
                               &ckg_stats);
  });
  vfm::VisualStore vfm_store =
      vfm::VisualStore::Load(config.scene_graphs, normalizer, &vfm_stats);
  dbm::DefinitionStore dbm_store = dbm_future.get();
  ckg::CkgStore ckg_store = ckg_future.get();

  fs::path dir(config.index_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

  const std::pair<const char *, std::string> files[] = {
      {kDbmFile, DumpToString(dbm_store)},
      {kCkgFile, DumpToString(ckg_store)},
      {kVfmFile, DumpToString(vfm_store)},
      {kDbmSpaceFile, SpaceToString(dbm_store.space())},
      {kCkgSpaceFile, SpaceToString(ckg_store.space())},
  };
  json index_digests = json::object();
  for (const auto &[name, content] : files) {
    WriteFile(dir / name, content);
    index_digests[name] = Sha256Hex(content);
  }

  // Thread count and verbosity never change the indexes, so they stay out of
  // the manifest and runs with different settings produce identical bytes.
  json recorded = json::parse(config.ToJson());
  recorded.erase("threads");
  recorded.erase("verbosity");

  json manifest{
      {"format", "edam-manifest"},
      {"version", 1},
      {"inputs", InputsBlock(config)},
      {"loader", LoaderBlock(config)},
      {"config", recorded},
      {"indexes", index_digests},
      {"counts",
       {{"dbm", {{"terms", dbm_store.term_count()},
                 {"records", dbm_store.record_count()},
                 {"documents", dbm_store.space().document_count()},
                 {"vocabulary", dbm_store.space().vocabulary_size()}}},
        {"ckg", {{"assertions", ckg_store.assertions().size()},
                 {"concepts", ckg_store.concept_count()},
                 {"documents", ckg_store.space().document_count()},
                 {"vocabulary", ckg_store.space().vocabulary_size()},
                 {"negated_dropped", ckg_stats.negated},
                 {"malformed_skipped", ckg_stats.skipped_malformed}}},
        {"vfm", {{"regions", vfm_store.regions().size()},
                 {"relationships", vfm_store.relationships().size()},
                 {"object_attribute_pairs", vfm_store.pair_count()},
                 {"skipped", vfm_stats.skipped}}}}},
  };
  WriteFile(dir / kManifestFile, manifest.dump(2) + "\n");

  out << "built indexes in " << dir.string() << ": " << dbm_store.record_count()
      << " definitions, " << ckg_store.assertions().size() << " assertions, "
      << vfm_store.regions().size() << " regions\n";
  if (config.verbosity > 0) {
    log << "ckg: " << ckg_stats.lines << " lines, " << ckg_stats.negated
        << " negated, " << ckg_stats.other_language << " other language, "
        << ckg_stats.non_concept << " non-concept, "
        << ckg_stats.disallowed_relation << " disallowed, "
        << ckg_stats.skipped_malformed << " malformed\n";
    log << "vfm: " << vfm_stats.regions << " regions, "
        << vfm_stats.relationships << " relationships, " << vfm_stats.skipped
        << " skipped\n";
    for (const auto &w : ckg_stats.warnings) log << "warning: " << w << '\n';
    for (const auto &w : vfm_stats.warnings) log << "warning: " << w << '\n';
  }
}

KnowledgeBase LoadIndexes(const RunConfig &config, Normalizer *normalizer) {
  fs::path dir(config.index_dir);
  fs::path manifest_path = dir / kManifestFile;
  std::error_code ec;
  if (!fs::is_regular_file(manifest_path, ec)) {
    throw UsageError("no index found in '" + dir.string() +
                     "'; run `edam build` with the same inputs first");
  }
  json manifest = json::parse(ReadFile(manifest_path.string()), nullptr, false);
  if (manifest.is_discarded() || manifest.value("format", "") != "edam-manifest") {
    throw Error(ErrorKind::kData, "not an index manifest",
                manifest_path.string(), 0, "");
  }

  // Configured inputs must match what the indexes were built from.
  config.ValidateBuildInputs();
  json current = InputsBlock(config);
  if (Digests(current) != Digests(manifest.at("inputs"))) {
    throw UsageError("indexes in '" + dir.string() +
                     "' were built from different inputs; rerun `edam build`");
  }
  if (LoaderBlock(config) != manifest.at("loader")) {
    throw UsageError("indexes in '" + dir.string() +
                     "' were built with different loader options; rerun "
                     "`edam build`");
  }

  auto read_checked = [&](const char *name) {
    std::string content = ReadFile((dir / name).string());
    if (Sha256Hex(content) != manifest.at("indexes").value(name, "")) {
      throw Error(ErrorKind::kData, "index file does not match its manifest",
                  (dir / name).string(), 0, "");
    }
    return content;
  };
  KnowledgeBase kb;
  {
    std::istringstream in(read_checked(kDbmFile));
    kb.dbm = dbm::DefinitionStore::LoadDump(in);
  }
  {
    std::istringstream in(read_checked(kCkgFile));
    kb.ckg = ckg::CkgStore::LoadDump(in);
  }
  {
    std::istringstream in(read_checked(kVfmFile));
    kb.vfm = vfm::VisualStore::LoadDump(in);
  }
  if (normalizer != nullptr) *normalizer = MakeNormalizer(config);
  return kb;
}

std::optional<VerdictFormat> ParseVerdictFormat(const std::string &name) {
  if (name == "text") return VerdictFormat::kText;
  if (name == "jsonl") return VerdictFormat::kJsonl;
  if (name == "semeval") return VerdictFormat::kSemEval;
  return std::nullopt;
}

void RunClassify(const RunConfig &config, const ClassifyRequest &request,
                 std::ostream &out) {
  if (request.triple.has_value() == !request.triples_file.empty()) {
    throw UsageError("give exactly one of a triple or --triples");
  }
  config.cascade.Validate();
  Normalizer normalizer;
  KnowledgeBase kb = LoadIndexes(config, &normalizer);

  std::vector<Triple> triples;
  if (request.triple) {
    const auto &t = *request.triple;
    triples.push_back(MakeTriple(normalizer, t[0], t[1], t[2]));
  } else {
    triples = ReadTriples(request.triples_file, normalizer);
  }
  auto items = ClassifyBatch(triples, kb, config.cascade, config.threads);

  std::ofstream verdicts;
  if (!request.verdicts_out.empty()) {
    verdicts.open(request.verdicts_out, std::ios::trunc);
    if (!verdicts) throw IoError("cannot write " + request.verdicts_out);
  }
  bool verbose = config.verbosity > 0;
  for (const auto &item : items) {
    WriteVerdict(item.triple, item.verdict, request.format, verbose, out);
    if (verdicts.is_open()) {
      verdicts << VerdictToJson(item.triple, item.verdict, verbose) << '\n';
    }
  }
}

void RunExplain(const ExplainRequest &request, std::ostream &out) {
  std::ifstream in(request.verdicts_file);
  if (!in) {
    throw UsageError("verdict file '" + request.verdicts_file +
                     "' does not exist");
  }
  std::optional<TripleKey> wanted;
  if (request.triple) {
    const auto &t = *request.triple;
    wanted = MakeKey(t[0], t[1], t[2]);
  }

  std::string line;
  size_t line_no = 0;
  size_t shown = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (request.line && *request.line != line_no) continue;
    StoredVerdict v;
    try {
      v = ParseVerdictJson(line);
    } catch (const Error &e) {
      throw Error(ErrorKind::kData, e.what(), request.verdicts_file, line_no, "");
    }
    if (wanted && MakeKey(v.pivot, v.comparison, v.attribute) != *wanted) {
      continue;
    }
    ++shown;
    if (!v.label) {
      out << v.pivot << ',' << v.comparison << ',' << v.attribute
          << ": not discriminative, nothing to explain\n";
      continue;
    }
    ExplanationInput input = v.ToExplanationInput();
    std::string id = request.template_id.empty()
                         ? v.template_id.value_or(
                               DefaultTemplateId(*v.deciding_component))
                         : request.template_id;
    out << RenderExplanation(input, id) << '\n';
  }
  if (shown == 0) {
    if (request.line) {
      throw UsageError("no verdict on line " + std::to_string(*request.line));
    }
    if (wanted) throw UsageError("no verdict for the requested triple");
  }
}

void RunEvaluate(const RunConfig &config, std::ostream &out, std::ostream &log) {
  if (config.gold.empty()) throw UsageError("gold file is not configured");
  std::error_code ec;
  if (!fs::is_regular_file(config.gold, ec)) {
    throw UsageError("gold file '" + config.gold + "' does not exist");
  }
  config.cascade.Validate();
  Normalizer normalizer;
  KnowledgeBase kb = LoadIndexes(config, &normalizer);
  eval::GoldDataset gold = eval::LoadGold(config.gold, normalizer);

  std::optional<eval::CategoryAnnotations> annotations;
  std::string annotation_note;
  if (config.annotations.empty()) {
    annotation_note = "no category annotations configured; category tables skipped";
  } else if (!fs::is_regular_file(config.annotations, ec)) {
    annotation_note = "annotation file '" + config.annotations +
                      "' not found; category tables skipped";
  } else {
    annotations = eval::LoadAnnotations(config.annotations);
  }
  if (!annotation_note.empty()) log << "notice: " << annotation_note << '\n';

  auto items = ClassifyBatch(gold.triples, kb, config.cascade, config.threads);
  eval::ModelPredictions predictions = eval::PredictionsFromBatch(items);
  eval::EvalReport report = eval::Evaluate(
      predictions, gold, annotations ? &*annotations : nullptr);

  fs::path dir(config.output_dir);
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  std::ostringstream verdicts, semeval;
  bool verbose = config.verbosity > 0;
  for (const auto &item : items) {
    verdicts << VerdictToJson(item.triple, item.verdict, verbose) << '\n';
    semeval << SemEvalLine(item.triple, item.verdict.discriminative) << '\n';
  }
  std::string text = eval::RenderText(report);
  WriteFile(dir / "verdicts.jsonl", verdicts.str());
  WriteFile(dir / "predictions.csv", semeval.str());
  WriteFile(dir / "report.json", eval::ToJson(report));
  WriteFile(dir / "report.txt", text);
  out << text;
}

void RunReport(const std::string &report_path, bool json_out, std::ostream &out) {
  std::error_code ec;
  if (!fs::is_regular_file(report_path, ec)) {
    throw UsageError("report file '" + report_path + "' does not exist");
  }
  eval::EvalReport report = eval::FromJson(ReadFile(report_path));
  out << (json_out ? eval::ToJson(report) : eval::RenderText(report));
}

}  // namespace cli
}  // namespace edam

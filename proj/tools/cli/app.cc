#include "app.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.h"
#include "edam/error.h"

namespace edam {
namespace cli {
namespace {

// Flags shared by every command that reads knowledge inputs. Values given on
// the command line override the config file.
struct ConfigFlags {
  std::string config_file;
  std::string definitions, assertions, lemma_table, stopwords, gold,
      annotations, index_dir, output_dir, language, stage_order;
  std::vector<std::string> scene_graphs, relations;
  size_t max_depth = 0, min_count = 0, threads = 0;
  bool use_sor = false, token_match = false;
  std::vector<CLI::Option *> opts;

  void Attach(CLI::App *app) {
    app->add_option("-c,--config", config_file, "JSON run configuration")
        ->check(CLI::ExistingFile);
    auto add = [&](const char *name, std::string &dest, const char *help) {
      opts.push_back(app->add_option(name, dest, help));
    };
    add("--definitions", definitions, "role-labeled definitions (JSONL)");
    add("--assertions", assertions, "ConceptNet assertions");
    add("--lemmas", lemma_table, "lemma table (TSV)");
    add("--stopwords", stopwords, "stopword list");
    add("--gold", gold, "gold triples (CSV)");
    add("--annotations", annotations, "category annotations (CSV)");
    add("--index-dir", index_dir, "index directory");
    add("--out-dir", output_dir, "output directory");
    add("--language", language, "ConceptNet language to keep");
    add("--stage-order", stage_order, "cascade order, e.g. DBM,CKG,VFM");
    opts.push_back(app->add_option("--scene-graph", scene_graphs,
                                   "scene graph file (repeatable)"));
    opts.push_back(app->add_option("--relation", relations,
                                   "keep only this relation (repeatable)"));
    opts.push_back(app->add_option("--max-depth", max_depth,
                                   "supertype expansion depth"));
    opts.push_back(app->add_option("--min-count", min_count,
                                   "minimum region count for VFM")
                       ->check(CLI::PositiveNumber));
    opts.push_back(app->add_option("--threads", threads, "worker threads"));
    opts.push_back(app->add_flag("--use-sor", use_sor,
                                 "inherit attributes through relationships"));
    opts.push_back(app->add_flag("--token-match", token_match,
                                 "match multiword ConceptNet concepts by part"));
  }

  bool Given(const std::string &name) const {
    for (auto *o : opts) {
      if (o->check_lname(name.substr(2)) && o->count() > 0) return true;
    }
    return false;
  }

  RunConfig Resolve(int verbosity) const {
    RunConfig c = config_file.empty() ? RunConfig::Defaults()
                                      : RunConfig::LoadFile(config_file);
    auto set = [&](const char *flag, const std::string &v, std::string &dest) {
      if (Given(flag)) dest = v;
    };
    set("--definitions", definitions, c.definitions);
    set("--assertions", assertions, c.assertions);
    set("--lemmas", lemma_table, c.lemma_table);
    set("--stopwords", stopwords, c.stopwords);
    set("--gold", gold, c.gold);
    set("--annotations", annotations, c.annotations);
    set("--index-dir", index_dir, c.index_dir);
    set("--out-dir", output_dir, c.output_dir);
    set("--language", language, c.language);
    if (Given("--scene-graph")) c.scene_graphs = scene_graphs;
    if (Given("--relation")) c.relation_allowlist = relations;
    if (Given("--stage-order")) {
      std::vector<std::string> names;
      std::stringstream ss(stage_order);
      for (std::string part; std::getline(ss, part, ',');) names.push_back(part);
      if (names.size() != 3) {
        throw UsageError("--stage-order needs three comma-separated components");
      }
      for (size_t i = 0; i < 3; ++i) {
        auto comp = ParseComponent(names[i]);
        if (!comp) throw UsageError("unknown component '" + names[i] + "'");
        c.cascade.stage_order[i] = *comp;
      }
    }
    if (Given("--max-depth")) c.cascade.dbm_max_depth = max_depth;
    if (Given("--min-count")) c.cascade.vfm_min_count = min_count;
    if (Given("--use-sor")) c.cascade.vfm_use_sor = use_sor;
    if (Given("--token-match")) c.cascade.ckg_token_match = token_match;
    if (Given("--threads")) c.threads = threads;
    c.verbosity = std::max(c.verbosity, verbosity);
    c.cascade.Validate();
    return c;
  }
};

std::optional<std::array<std::string, 3>> SplitTriple(const std::string &s) {
  if (s.empty()) return std::nullopt;
  std::array<std::string, 3> out;
  std::stringstream ss(s);
  size_t i = 0;
  for (std::string part; std::getline(ss, part, ',');) {
    if (i == 3) throw UsageError("triple must be pivot,comparison,attribute");
    out[i++] = part;
  }
  if (i != 3) throw UsageError("triple must be pivot,comparison,attribute");
  return out;
}

}  // namespace

int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err) {
  CLI::App app{"Discriminative attribute identification with explanations",
               "edam"};
  app.require_subcommand(1);
  app.fallthrough();
  int verbosity = 0;
  app.add_flag("-v,--verbose", verbosity, "more diagnostics (repeatable)");
  std::string dump_config;

  ConfigFlags build_flags, classify_flags, evaluate_flags;

  CLI::App *build = app.add_subcommand("build", "build knowledge indexes");
  build_flags.Attach(build);
  build->add_option("--dump-config", dump_config,
                    "write the resolved configuration to this file");

  CLI::App *classify = app.add_subcommand("classify", "classify triples");
  classify_flags.Attach(classify);
  std::string triple_arg, triples_file, format = "text", verdicts_out;
  classify->add_option("triple", triple_arg, "pivot,comparison,attribute");
  classify->add_option("--triples", triples_file, "CSV file of triples");
  classify->add_option("--format", format, "text, jsonl or semeval")
      ->check(CLI::IsMember({"text", "jsonl", "semeval"}));
  classify->add_option("--verdicts", verdicts_out,
                       "also write JSONL verdict records here");

  CLI::App *explain = app.add_subcommand("explain", "re-render explanations");
  std::string explain_file, explain_triple, template_id;
  size_t explain_line = 0;
  explain->add_option("verdicts", explain_file, "verdict JSONL file")->required();
  auto *line_opt = explain->add_option("--line", explain_line, "1-based line");
  explain->add_option("--triple", explain_triple, "pivot,comparison,attribute");
  explain->add_option("--template", template_id, "template id");

  CLI::App *evaluate = app.add_subcommand("evaluate", "score against gold");
  evaluate_flags.Attach(evaluate);

  CLI::App *report = app.add_subcommand("report", "print a stored report");
  std::string report_file;
  bool report_json = false;
  report->add_option("report", report_file, "report.json")->required();
  report->add_flag("--json", report_json, "print JSON instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "edam: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*build) {
      RunConfig config = build_flags.Resolve(verbosity);
      if (!dump_config.empty()) {
        std::ofstream f(dump_config, std::ios::trunc);
        if (!f) throw IoError("cannot write " + dump_config);
        f << config.ToJson();
      }
      RunBuild(config, out, err);
    } else if (*classify) {
      RunConfig config = classify_flags.Resolve(verbosity);
      ClassifyRequest request;
      request.triple = SplitTriple(triple_arg);
      request.triples_file = triples_file;
      request.format = *ParseVerdictFormat(format);
      request.verdicts_out = verdicts_out;
      RunClassify(config, request, out);
    } else if (*explain) {
      ExplainRequest request;
      request.verdicts_file = explain_file;
      if (line_opt->count() > 0) request.line = explain_line;
      request.triple = SplitTriple(explain_triple);
      request.template_id = template_id;
      RunExplain(request, out);
    } else if (*evaluate) {
      RunEvaluate(evaluate_flags.Resolve(verbosity), out, err);
    } else if (*report) {
      RunReport(report_file, report_json, out);
    }
  } catch (const Error &e) {
    err << "edam: " << ErrorKindName(e.kind()) << " error: " << e.what() << '\n';
    return e.kind() == ErrorKind::kUsage ? kExitUsage : kExitData;
  } catch (const std::exception &e) {
    err << "edam: error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace cli
}  // namespace edam

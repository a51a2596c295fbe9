#include "run_config.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "edam/error.h"
#include "edam/text.h"
#include "json.hpp"

namespace edam {
namespace cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string Resolve(const std::string &path, const std::string &base) {
  if (path.empty() || base.empty() || fs::path(path).is_absolute()) return path;
  return (fs::path(base) / path).lexically_normal().string();
}

void RequireFile(const std::string &path, const std::string &what) {
  if (path.empty()) throw UsageError(what + " is not configured");
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) {
    throw UsageError(what + " '" + path + "' does not exist");
  }
}

}  // namespace

std::string DefaultDataDir() {
  const char *env = std::getenv("EDAM_DATA_DIR");
  return env != nullptr && *env != '\0' ? env : "edam-data";
}

RunConfig RunConfig::Defaults() {
  RunConfig c;
  c.lemma_table = DefaultLemmaTablePath();
  c.stopwords = DefaultStopwordPath();
  c.index_dir = (fs::path(DefaultDataDir()) / "index").string();
  c.output_dir = (fs::path(DefaultDataDir()) / "out").string();
  return c;
}

RunConfig RunConfig::LoadFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return FromJson(ss.str(), fs::path(path).parent_path().string());
}

RunConfig RunConfig::FromJson(const std::string &text,
                              const std::string &base_dir) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw UsageError("config is not a JSON object");
  }
  RunConfig c = Defaults();
  try {
    if (j.contains("inputs")) {
      const json &in = j["inputs"];
      auto path = [&](const char *key, std::string &out) {
        if (in.contains(key)) out = Resolve(in[key].get<std::string>(), base_dir);
      };
      path("definitions", c.definitions);
      path("assertions", c.assertions);
      path("lemma_table", c.lemma_table);
      path("stopwords", c.stopwords);
      path("gold", c.gold);
      path("annotations", c.annotations);
      if (in.contains("scene_graphs")) {
        c.scene_graphs.clear();
        for (const auto &p : in["scene_graphs"]) {
          c.scene_graphs.push_back(Resolve(p.get<std::string>(), base_dir));
        }
      }
    }
    if (j.contains("index_dir")) {
      c.index_dir = Resolve(j["index_dir"].get<std::string>(), base_dir);
    }
    if (j.contains("output_dir")) {
      c.output_dir = Resolve(j["output_dir"].get<std::string>(), base_dir);
    }
    if (j.contains("ckg")) {
      c.language = j["ckg"].value("language", c.language);
      if (j["ckg"].contains("relation_allowlist")) {
        c.relation_allowlist =
            j["ckg"]["relation_allowlist"].get<std::vector<std::string>>();
      }
    }
    if (j.contains("cascade")) {
      const json &k = j["cascade"];
      if (k.contains("stage_order")) {
        auto names = k["stage_order"].get<std::vector<std::string>>();
        if (names.size() != 3) throw UsageError("stage_order needs 3 entries");
        for (size_t i = 0; i < 3; ++i) {
          auto comp = ParseComponent(names[i]);
          if (!comp) throw UsageError("unknown component '" + names[i] + "'");
          c.cascade.stage_order[i] = *comp;
        }
      }
      c.cascade.dbm_max_depth = k.value("dbm_max_depth", c.cascade.dbm_max_depth);
      c.cascade.vfm_min_count = k.value("vfm_min_count", c.cascade.vfm_min_count);
      c.cascade.vfm_use_sor = k.value("vfm_use_sor", c.cascade.vfm_use_sor);
      c.cascade.ckg_token_match =
          k.value("ckg_token_match", c.cascade.ckg_token_match);
    }
    c.threads = j.value("threads", c.threads);
    c.verbosity = j.value("verbosity", c.verbosity);
  } catch (const json::exception &e) {
    throw UsageError(std::string("invalid config: ") + e.what());
  }
  c.cascade.Validate();
  return c;
}

std::string RunConfig::ToJson() const {
  json order = json::array();
  for (Component comp : cascade.stage_order) order.push_back(ComponentName(comp));
  json j{
      {"inputs",
       {{"definitions", definitions},
        {"scene_graphs", scene_graphs},
        {"assertions", assertions},
        {"lemma_table", lemma_table},
        {"stopwords", stopwords},
        {"gold", gold},
        {"annotations", annotations}}},
      {"index_dir", index_dir},
      {"output_dir", output_dir},
      {"ckg", {{"language", language}, {"relation_allowlist", relation_allowlist}}},
      {"cascade",
       {{"stage_order", order},
        {"dbm_max_depth", cascade.dbm_max_depth},
        {"vfm_min_count", cascade.vfm_min_count},
        {"vfm_use_sor", cascade.vfm_use_sor},
        {"ckg_token_match", cascade.ckg_token_match}}},
      {"threads", threads},
      {"verbosity", verbosity},
  };
  return j.dump(2) + "\n";
}

void RunConfig::ValidateBuildInputs() const {
  RequireFile(lemma_table, "lemma table");
  RequireFile(stopwords, "stopword list");
  RequireFile(definitions, "definitions file");
  RequireFile(assertions, "assertion file");
  if (scene_graphs.empty()) throw UsageError("no scene graph files configured");
  for (const auto &p : scene_graphs) RequireFile(p, "scene graph file");
}

}  // namespace cli
}  // namespace edam

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "app.h"
#include "edam/error.h"
#include "fixture_paths.h"
#include "run_config.h"

namespace edam {
namespace cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Edam(std::vector<std::string> args) {
  args.insert(args.begin(), "edam");
  std::vector<const char *> argv;
  for (const auto &a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string Slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("edam_cli_" + std::string(::testing::UnitTest::GetInstance()
                                          ->current_test_info()
                                          ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    setenv("EDAM_DATA_DIR", dir_.c_str(), 1);
    config_ = testing::FixturePath("run_config.json");
  }
  void TearDown() override {
    unsetenv("EDAM_DATA_DIR");
    fs::remove_all(dir_);
  }

  fs::path dir_;
  std::string config_;
};

TEST_F(CliTest, Help) {
  auto r = Edam({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("classify"), std::string::npos);
  EXPECT_EQ(Edam({}).code, kExitUsage);
  EXPECT_EQ(Edam({"frobnicate"}).code, kExitUsage);
}

TEST_F(CliTest, FullPipeline) {
  auto b = Edam({"build", "-c", config_});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_TRUE(fs::exists(dir_ / "index" / "manifest.json"));

  auto c = Edam({"classify", "-c", config_, "brandy,whiskey,wine"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(c.out.rfind("1\tbrandy,whiskey,wine\t", 0), 0u) << c.out;

  auto s = Edam({"classify", "-c", config_, "--triples",
                testing::FixturePath("triples.csv"), "--format", "semeval"});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(s.out,
            "apple,banana,red,1\nplanet,moon,body,0\nbrandy,whiskey,wine,1\n"
            "cognac,whiskey,french,1\ncat,lion,whiskers,1\nlion,cat,mane,1\n"
            "penguin,dog,fly,0\n");

  auto e = Edam({"evaluate", "-c", config_});
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_NE(e.out.find("Macro F1"), std::string::npos);
  for (const char *f : {"verdicts.jsonl", "predictions.csv", "report.json", "report.txt"}) {
    EXPECT_TRUE(fs::exists(dir_ / "out" / f)) << f;
  }

  auto rep = Edam({"report", (dir_ / "out" / "report.json").string()});
  ASSERT_EQ(rep.code, 0) << rep.err;
  EXPECT_EQ(rep.out, Slurp(dir_ / "out" / "report.txt"));
  auto rep_json = Edam({"report", "--json", (dir_ / "out" / "report.json").string()});
  EXPECT_EQ(rep_json.out, Slurp(dir_ / "out" / "report.json"));

  auto x = Edam({"explain", (dir_ / "out" / "verdicts.jsonl").string(), "--triple",
                "cognac,whiskey,french", "--template", "ckg.compact.v1"});
  ASSERT_EQ(x.code, 0) << x.err;
  EXPECT_EQ(x.out, "cognac/whiskey/french: CKG cognac HasProperty french\n");
  auto bad_template = Edam({"explain", (dir_ / "out" / "verdicts.jsonl").string(),
                           "--line", "1", "--template", "vfm.regions.v1"});
  EXPECT_EQ(bad_template.code, kExitUsage);
}

TEST_F(CliTest, FlagsOverrideConfig) {
  ASSERT_EQ(Edam({"build", "-c", config_}).code, 0);
  auto deep = Edam({"classify", "-c", config_, "planet,moon,body"});
  EXPECT_EQ(deep.out.rfind("0\t", 0), 0u);
  auto shallow = Edam({"classify", "-c", config_, "--max-depth", "0", "planet,moon,body"});
  EXPECT_EQ(shallow.out.rfind("1\t", 0), 0u);
  auto order = Edam({"classify", "-c", config_, "--stage-order", "VFM,DBM,CKG",
                    "--format", "jsonl", "cognac,whiskey,french"});
  EXPECT_NE(order.out.find("\"deciding_component\":\"CKG\""), std::string::npos);
  EXPECT_EQ(Edam({"classify", "-c", config_, "--stage-order", "VFM,VFM,CKG",
                 "cognac,whiskey,french"})
                .code,
            kExitUsage);
}

TEST_F(CliTest, DumpedConfigReproducesRun) {
  fs::path dumped = dir_ / "resolved.json";
  ASSERT_EQ(Edam({"build", "-c", config_, "--max-depth", "1", "--dump-config",
                 dumped.string()})
                .code,
            0);
  RunConfig c = RunConfig::LoadFile(dumped.string());
  EXPECT_EQ(c.cascade.dbm_max_depth, 1u);
  EXPECT_EQ(RunConfig::FromJson(c.ToJson()), c);
  EXPECT_EQ(Edam({"build", "-c", dumped.string()}).code, 0);
}

TEST_F(CliTest, MissingInputsFailBeforeWork) {
  auto r = Edam({"build", "-c", config_, "--definitions", "/nonexistent/defs.jsonl"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("/nonexistent/defs.jsonl"), std::string::npos);
  EXPECT_FALSE(fs::exists(dir_ / "index"));
  EXPECT_EQ(Edam({"build", "--config", "/nonexistent/config.json"}).code, kExitUsage);
}

TEST_F(CliTest, UnbuiltIndexIsInstructive) {
  auto r = Edam({"classify", "-c", config_, "apple,banana,red"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("edam build"), std::string::npos);
}

TEST_F(CliTest, DigestMismatchRefused) {
  ASSERT_EQ(Edam({"build", "-c", config_}).code, 0);
  fs::path changed = dir_ / "assertions.tsv";
  fs::copy_file(testing::FixturePath("assertions.tsv"), changed);
  std::ofstream(changed, std::ios::app) << "IsA\tcat\tanimal\n";
  auto r = Edam({"evaluate", "-c", config_, "--assertions", changed.string()});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("different inputs"), std::string::npos);
}

TEST_F(CliTest, MalformedDataExitsTwo) {
  fs::path bad = dir_ / "defs.jsonl";
  std::ofstream(bad) << "{\"term\": \"a\", \"sense\": \"1\", \"segments\": "
                        "[{\"role\": \"colour\", \"text\": \"x\"}]}\n";
  auto r = Edam({"build", "-c", config_, "--definitions", bad.string()});
  EXPECT_EQ(r.code, kExitData);
  EXPECT_NE(r.err.find(":1"), std::string::npos);

  ASSERT_EQ(Edam({"build", "-c", config_}).code, 0);
  fs::path gold = dir_ / "gold.csv";
  std::ofstream(gold) << "apple,banana,red,7\n";
  EXPECT_EQ(Edam({"evaluate", "-c", config_, "--gold", gold.string()}).code, kExitData);
}

TEST_F(CliTest, MissingAnnotationsSkipCategoryTables) {
  ASSERT_EQ(Edam({"build", "-c", config_}).code, 0);
  auto r = Edam({"evaluate", "-c", config_, "--annotations", "/nonexistent/a.csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("category tables skipped"), std::string::npos);
  EXPECT_EQ(r.out.find("Per-category recall"), std::string::npos);
}

TEST_F(CliTest, RunsAreByteIdentical) {
  auto snapshot = [&] {
    std::map<std::string, std::string> files;
    for (const auto &e : fs::recursive_directory_iterator(dir_)) {
      if (e.is_regular_file()) files[fs::relative(e.path(), dir_).string()] = Slurp(e.path());
    }
    return files;
  };
  ASSERT_EQ(Edam({"build", "-c", config_}).code, 0);
  ASSERT_EQ(Edam({"evaluate", "-c", config_, "--threads", "1"}).code, 0);
  auto first = snapshot();
  ASSERT_EQ(Edam({"build", "-c", config_}).code, 0);
  ASSERT_EQ(Edam({"evaluate", "-c", config_, "--threads", "8"}).code, 0);
  EXPECT_EQ(first, snapshot());
  EXPECT_EQ(first.size(), 10u);
}

TEST(RunConfig, JsonRoundTripIsLossless) {
  RunConfig c = RunConfig::Defaults();
  c.definitions = "/d.jsonl";
  c.scene_graphs = {"/a.json", "/b.json"};
  c.relation_allowlist = {"IsA", "HasProperty"};
  c.cascade.stage_order = {Component::kVfm, Component::kDbm, Component::kCkg};
  c.cascade.vfm_min_count = 4;
  c.cascade.vfm_use_sor = true;
  c.threads = 3;
  c.verbosity = 2;
  EXPECT_EQ(RunConfig::FromJson(c.ToJson()), c);
  EXPECT_EQ(RunConfig::FromJson(c.ToJson()).ToJson(), c.ToJson());
}

TEST(RunConfig, RelativePathsResolveAgainstConfigDir) {
  RunConfig c = RunConfig::LoadFile(testing::FixturePath("run_config.json"));
  EXPECT_EQ(c.definitions, testing::FixturePath("definitions.jsonl"));
  EXPECT_NO_THROW(c.ValidateBuildInputs());
}

TEST(RunConfig, InvalidConfig) {
  EXPECT_THROW(RunConfig::FromJson("[1,2]"), Error);
  EXPECT_THROW(RunConfig::FromJson(R"({"cascade": {"vfm_min_count": 0}})"), Error);
  EXPECT_THROW(RunConfig::FromJson(R"({"cascade": {"stage_order": ["DBM"]}})"), Error);
  EXPECT_THROW(RunConfig::FromJson(R"({"threads": "many"})"), Error);
}

}  // namespace
}  // namespace cli
}  // namespace edam

#include "edam/explanation.h"

#include <gtest/gtest.h>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "edam/cascade.h"
#include "edam/error.h"
#include "fixture_paths.h"

namespace edam {
namespace {

// Set EDAM_UPDATE_GOLDEN=1 to rewrite the golden files from current output.
void ExpectGolden(const std::string &name, const std::string &actual) {
  const std::string path = testing::GoldenPath(name);
  const char *update = std::getenv("EDAM_UPDATE_GOLDEN");
  if (update != nullptr && std::string(update) == "1") {
    std::ofstream(path) << actual;
  }
  std::ifstream in(path);
  ASSERT_TRUE(in) << "missing golden file " << path;
  std::stringstream expected;
  expected << in.rdbuf();
  EXPECT_EQ(actual, expected.str()) << "golden mismatch: " << name;
}

class ExplanationFixture : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    normalizer_ = new Normalizer(testing::FixtureNormalizer());
    kb_ = new KnowledgeBase;
    kb_->dbm = dbm::DefinitionStore::Load(testing::FixturePath("definitions.jsonl"),
                                          *normalizer_);
    kb_->ckg = ckg::CkgStore::Load(testing::FixturePath("assertions.tsv"),
                                   *normalizer_);
    kb_->vfm = vfm::VisualStore::Load({testing::FixturePath("scene_graphs.jsonl")},
                                      *normalizer_);
  }
  static void TearDownTestSuite() {
    delete kb_;
    delete normalizer_;
  }

  ExplanationInput Input(Component c, const std::string &p, const std::string &cmp,
                         const std::string &a) const {
    Triple t = MakeTriple(*normalizer_, p, cmp, a);
    auto m = QueryComponent(c, t.pivot, t.attribute, *kb_, CascadeConfig{});
    EXPECT_TRUE(m.member);
    return ExplanationInput{p, cmp, a, m.evidence};
  }

  // Every template registered for the component, one per line.
  std::string RenderAll(const ExplanationInput &input, Component c) const {
    std::string prefix = ComponentName(c);
    for (char &ch : prefix) ch = static_cast<char>(std::tolower(ch));
    std::string out;
    for (const auto &id : TemplateIds()) {
      if (id.rfind(prefix + ".", 0) != 0) continue;
      out += id + ": " + RenderExplanation(input, id) + "\n";
    }
    return out;
  }

  static Normalizer *normalizer_;
  static KnowledgeBase *kb_;
};

Normalizer *ExplanationFixture::normalizer_ = nullptr;
KnowledgeBase *ExplanationFixture::kb_ = nullptr;

TEST_F(ExplanationFixture, DbmBrandyWhiskeyWine) {
  ExpectGolden("dbm_brandy_whiskey_wine.txt",
               RenderAll(Input(Component::kDbm, "brandy", "whiskey", "wine"),
                         Component::kDbm));
}

TEST_F(ExplanationFixture, DbmInheritedCognacWine) {
  ExpectGolden("dbm_cognac_whiskey_wine.txt",
               RenderAll(Input(Component::kDbm, "cognac", "whiskey", "wine"),
                         Component::kDbm));
}

TEST_F(ExplanationFixture, CkgCognacWhiskeyFrench) {
  ExpectGolden("ckg_cognac_whiskey_french.txt",
               RenderAll(Input(Component::kCkg, "cognac", "whiskey", "french"),
                         Component::kCkg));
}

TEST_F(ExplanationFixture, VfmCatLionWhiskers) {
  ExpectGolden("vfm_cat_lion_whiskers.txt",
               RenderAll(Input(Component::kVfm, "cat", "lion", "whiskers"),
                         Component::kVfm));
}

TEST_F(ExplanationFixture, SpecificPhrases) {
  auto dbm_text = RenderExplanation(Input(Component::kDbm, "brandy", "whiskey", "wine"),
                                    "dbm.definition.v1");
  EXPECT_NE(dbm_text.find("the definition of brandy"), std::string::npos);
  EXPECT_NE(dbm_text.find("role: differentia_event"), std::string::npos);
  EXPECT_NE(dbm_text.find("while no definition of whiskey contains 'wine'."),
            std::string::npos);
  auto vfm_text = RenderExplanation(Input(Component::kVfm, "cat", "lion", "whiskers"),
                                    "vfm.regions.v1");
  EXPECT_NE(vfm_text.find("'whiskers' co-occurs with 'cat' in 3 regions (img 101/r1"),
            std::string::npos);
  EXPECT_NE(vfm_text.find("and never with 'lion'."), std::string::npos);
  auto ckg_text = RenderExplanation(
      Input(Component::kCkg, "cognac", "whiskey", "french"), "ckg.edge.v1");
  EXPECT_NE(ckg_text.find("cognac -HasProperty-> french; no edge links whiskey and french."),
            std::string::npos);
}

TEST_F(ExplanationFixture, Deterministic) {
  auto input = Input(Component::kVfm, "cat", "lion", "whiskers");
  EXPECT_EQ(RenderExplanation(input, "vfm.regions.v1"),
            RenderExplanation(input, "vfm.regions.v1"));
}

TEST_F(ExplanationFixture, TemplateErrors) {
  auto input = Input(Component::kCkg, "cognac", "whiskey", "french");
  try {
    RenderExplanation(input, "nope.v9");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUsage);
  }
  try {
    RenderExplanation(input, "dbm.definition.v1");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUsage);
  }
  ExplanationInput empty{"a", "b", "c", std::vector<ckg::AssertionEvidence>{}};
  try {
    RenderExplanation(empty, "ckg.edge.v1");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvariant);
  }
  EXPECT_THROW(MakeExplanation(empty), Error);
}

TEST_F(ExplanationFixture, KindsAndChecks) {
  EXPECT_EQ(KindOf(Component::kDbm), ExplanationKind::kIntensional);
  EXPECT_EQ(KindOf(Component::kCkg), ExplanationKind::kIntensional);
  EXPECT_EQ(KindOf(Component::kVfm), ExplanationKind::kExtensional);
  auto ex = MakeExplanation(Input(Component::kVfm, "cat", "lion", "whiskers"));
  EXPECT_EQ(ex.kind, ExplanationKind::kExtensional);
  EXPECT_EQ(ex.template_id, DefaultTemplateId(Component::kVfm));
  EXPECT_FALSE(ex.comparison_check.empty());
  EXPECT_NE(ex.comparison_check.find("lion"), std::string::npos);
}

TEST(Components, ParseNames) {
  EXPECT_EQ(ParseComponent("dbm"), Component::kDbm);
  EXPECT_EQ(ParseComponent("CKG"), Component::kCkg);
  EXPECT_EQ(ParseComponent("Vfm"), Component::kVfm);
  EXPECT_EQ(ParseComponent("xyz"), std::nullopt);
}

}  // namespace
}  // namespace edam

#include "edam/cascade.h"

#include <gtest/gtest.h>

#include <algorithm>

#include "edam/error.h"
#include "fixture_paths.h"
#include "random_fixtures.h"

namespace edam {
namespace {

class CascadeFixture : public ::testing::Test {
 protected:
  void SetUp() override {
    normalizer_ = testing::FixtureNormalizer();
    kb_.dbm = dbm::DefinitionStore::Load(testing::FixturePath("definitions.jsonl"),
                                         normalizer_);
    kb_.ckg = ckg::CkgStore::Load(testing::FixturePath("assertions.tsv"), normalizer_);
    kb_.vfm = vfm::VisualStore::Load({testing::FixturePath("scene_graphs.jsonl")},
                                     normalizer_);
  }
  Verdict Run(const std::string &p, const std::string &c, const std::string &a,
              const CascadeConfig &config = {}) const {
    return Classify(MakeTriple(normalizer_, p, c, a), kb_, config);
  }

  Normalizer normalizer_;
  KnowledgeBase kb_;
};

TEST_F(CascadeFixture, AppleBananaRed) {
  auto v = Run("apple", "banana", "red");
  EXPECT_TRUE(v.discriminative);
  EXPECT_EQ(v.deciding_component, Component::kDbm);
  ASSERT_TRUE(v.explanation.has_value());
}

TEST_F(CascadeFixture, PlanetMoonBodyDependsOnDepth) {
  CascadeConfig shallow;
  shallow.dbm_max_depth = 0;
  auto v = Run("planet", "moon", "body", shallow);
  EXPECT_TRUE(v.discriminative);
  EXPECT_EQ(v.deciding_component, Component::kDbm);
  for (size_t depth : {1, 2, 3, 6}) {
    CascadeConfig deep;
    deep.dbm_max_depth = depth;
    auto d = Run("planet", "moon", "body", deep);
    EXPECT_FALSE(d.discriminative) << depth;
    EXPECT_FALSE(d.explanation.has_value());
    EXPECT_FALSE(d.deciding_component.has_value());
  }
}

TEST_F(CascadeFixture, BrandyWhiskeyWineViaDbm) {
  auto v = Run("brandy", "whiskey", "wine");
  EXPECT_TRUE(v.discriminative);
  EXPECT_EQ(v.deciding_component, Component::kDbm);
  EXPECT_EQ(v.explanation->kind, ExplanationKind::kIntensional);
}

TEST_F(CascadeFixture, CognacWhiskeyFrenchViaCkg) {
  auto v = Run("cognac", "whiskey", "french");
  EXPECT_TRUE(v.discriminative);
  EXPECT_EQ(v.deciding_component, Component::kCkg);
}

TEST_F(CascadeFixture, CatLionWhiskersViaVfm) {
  auto v = Run("cat", "lion", "whiskers");
  EXPECT_TRUE(v.discriminative);
  EXPECT_EQ(v.deciding_component, Component::kVfm);
  EXPECT_EQ(v.explanation->kind, ExplanationKind::kExtensional);
}

TEST_F(CascadeFixture, NegatedEdgeNeverPositive) {
  for (const auto &order : {std::array{Component::kDbm, Component::kCkg, Component::kVfm},
                            std::array{Component::kCkg, Component::kVfm, Component::kDbm}}) {
    CascadeConfig config;
    config.stage_order = order;
    EXPECT_FALSE(Run("penguin", "dog", "fly", config).discriminative);
    EXPECT_FALSE(Run("dog", "penguin", "fly", config).discriminative);
  }
}

TEST_F(CascadeFixture, IdenticalPivotAndComparison) {
  for (const char *t : {"apple", "brandy", "cat", "cognac", "planet"}) {
    for (const char *a : {"red", "wine", "whiskers", "french", "body"}) {
      EXPECT_FALSE(Run(t, t, a).discriminative) << t << " " << a;
    }
  }
}

TEST_F(CascadeFixture, StageOrderDecidesProvenance) {
  // brandy/wine is in DBM only; cognac/french in CKG only. Swapping order
  // changes nothing about the verdicts, only which stage is consulted first.
  CascadeConfig vfm_first;
  vfm_first.stage_order = {Component::kVfm, Component::kCkg, Component::kDbm};
  EXPECT_EQ(Run("brandy", "whiskey", "wine", vfm_first).deciding_component,
            Component::kDbm);
  EXPECT_EQ(Run("cognac", "whiskey", "french", vfm_first).deciding_component,
            Component::kCkg);
}

TEST_F(CascadeFixture, BatchEqualsSingleCalls) {
  std::vector<Triple> triples;
  for (auto [p, c, a] : {std::tuple{"apple", "banana", "red"},
                         std::tuple{"brandy", "whiskey", "wine"},
                         std::tuple{"cat", "lion", "whiskers"},
                         std::tuple{"penguin", "dog", "fly"}}) {
    triples.push_back(MakeTriple(normalizer_, p, c, a));
  }
  auto items = ClassifyBatch(triples, kb_, CascadeConfig{}, 3);
  ASSERT_EQ(items.size(), triples.size());
  for (size_t i = 0; i < triples.size(); ++i) {
    auto single = Classify(triples[i], kb_, CascadeConfig{});
    EXPECT_EQ(items[i].triple.Key(), triples[i].Key());
    EXPECT_EQ(items[i].verdict.discriminative, single.discriminative);
    EXPECT_EQ(items[i].verdict.deciding_component, single.deciding_component);
    if (single.explanation) {
      EXPECT_EQ(items[i].verdict.explanation->rendered_text,
                single.explanation->rendered_text);
    }
  }
  EXPECT_TRUE(ClassifyBatch({}, kb_, CascadeConfig{}).empty());
}

TEST_F(CascadeFixture, EmptyDefinitionStoreFallsThrough) {
  kb_.dbm = dbm::DefinitionStore{};
  EXPECT_FALSE(Run("apple", "banana", "red").discriminative);
  EXPECT_EQ(Run("cognac", "whiskey", "french").deciding_component, Component::kCkg);
}

TEST(CascadeConfig, Validation) {
  CascadeConfig c;
  EXPECT_NO_THROW(c.Validate());
  c.stage_order = {Component::kDbm, Component::kDbm, Component::kVfm};
  EXPECT_THROW(c.Validate(), Error);
  c = CascadeConfig{};
  c.vfm_min_count = 0;
  EXPECT_THROW(c.Validate(), Error);
}

TEST(CascadeBatch, ThreadCountDoesNotChangeResults) {
  auto world = testing::MakeRandomWorld(5);
  std::mt19937 rng(6);
  auto triples = testing::RandomTriples(world, 300, rng);
  auto one = ClassifyBatch(triples, world.kb, CascadeConfig{}, 1);
  for (size_t threads : {2, 7, 64}) {
    auto many = ClassifyBatch(triples, world.kb, CascadeConfig{}, threads);
    ASSERT_EQ(one.size(), many.size());
    for (size_t i = 0; i < one.size(); ++i) {
      EXPECT_EQ(one[i].verdict.discriminative, many[i].verdict.discriminative);
      EXPECT_EQ(one[i].verdict.deciding_component, many[i].verdict.deciding_component);
      EXPECT_EQ(one[i].components, many[i].components);
    }
  }
}

}  // namespace
}  // namespace edam

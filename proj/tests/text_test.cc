#include "edam/text.h"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "edam/error.h"
#include "fixture_paths.h"

namespace edam {
namespace {

using ::testing::ElementsAre;

TEST(Tokenize, SplitsOnPunctuationAndLowercases) {
  EXPECT_EQ(Tokenize("Crescent-shaped, YELLOW fruit!"),
            (std::vector<std::string>{"crescent", "shaped", "yellow", "fruit"}));
  EXPECT_TRUE(Tokenize("").empty());
  EXPECT_TRUE(Tokenize(" ,;- ").empty());
}

TEST(Tokenize, KeepsUtf8Bytes) {
  EXPECT_EQ(Tokenize("café crème"),
            (std::vector<std::string>{"café", "crème"}));
}

TEST(Normalize, DropsStopwords) {
  Normalizer n(LemmaTable{}, StopwordSet::FromWords({"a"}));
  EXPECT_EQ(n.Lemmas("a tall deciduous tree"),
            (std::vector<std::string>{"tall", "deciduous", "tree"}));
}

TEST(Normalize, LooksUpLemmas) {
  Normalizer n(LemmaTable::FromEntries({{"apples", "apple"}}), StopwordSet{});
  auto terms = n.Normalize("Apples");
  ASSERT_EQ(terms.size(), 1u);
  EXPECT_EQ(terms[0].surface, "apples");
  EXPECT_EQ(terms[0].lemma, "apple");
}

TEST(Normalize, FixtureDefinitionText) {
  // Hand-applied fixture table: distilled->distill, fermented->ferment;
  // "from" and "or" are stopwords.
  Normalizer n = testing::FixtureNormalizer();
  EXPECT_EQ(n.Lemmas("distilled from wine or fermented fruit juice"),
            (std::vector<std::string>{"distill", "wine", "ferment", "fruit",
                                      "juice"}));
}

TEST(Normalize, EmptyInput) {
  EXPECT_TRUE(testing::FixtureNormalizer().Normalize("").empty());
}

TEST(Normalize, Idempotent) {
  Normalizer n = testing::FixtureNormalizer();
  for (const char *text : {"distilled from wine or fermented fruit juice",
                           "Celestial bodies orbiting a star", "the apples"}) {
    auto once = n.Lemmas(text);
    std::string joined;
    for (const auto &l : once) joined += l + " ";
    EXPECT_EQ(n.Lemmas(joined), once) << text;
  }
}

TEST(LemmaTable, ClosesChains) {
  auto t = LemmaTable::FromEntries({{"a", "b"}, {"b", "c"}});
  EXPECT_EQ(t.Lookup("a"), "c");
  EXPECT_EQ(t.Lookup("b"), "c");
  EXPECT_EQ(t.Lookup("c"), "c");
  EXPECT_EQ(t.Lookup("zzz"), "zzz");
}

TEST(LemmaTable, RejectsCyclesConflictsAndPhrases) {
  EXPECT_THROW(LemmaTable::FromEntries({{"a", "b"}, {"b", "a"}}), Error);
  EXPECT_THROW(LemmaTable::FromEntries({{"a", "b"}, {"a", "c"}}), Error);
  EXPECT_THROW(LemmaTable::FromEntries({{"a", "b c"}}), Error);
  EXPECT_NO_THROW(LemmaTable::FromEntries({{"a", "b"}, {"a", "b"}}));
}

TEST(LemmaTable, LoadReportsLine) {
  try {
    LemmaTable::Load(testing::FixturePath("stopwords.txt"));
    FAIL() << "expected a data error";
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kData);
    EXPECT_NE(std::string(e.what()).find("stopwords.txt:2"), std::string::npos)
        << e.what();
  }
}

TEST(LemmaTable, MissingFileIsIoError) {
  try {
    LemmaTable::Load("/nonexistent/lemmas.tsv");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIo);
  }
}

TEST(MakeTerm, JoinsPhraseLemmas) {
  Normalizer n = testing::FixtureNormalizer();
  EXPECT_EQ(n.MakeTerm("Fermented fruit").lemma, "ferment_fruit");
  EXPECT_EQ(n.MakeTerm("Fermented fruit").surface, "Fermented fruit");
  EXPECT_EQ(n.MakeTerm("the").lemma, "the");
  EXPECT_EQ(n.MakeTerm("body of water").lemma, "body_water");
  EXPECT_THROW(n.MakeTerm("  --  "), Error);
  EXPECT_THAT(SplitLemma("ice_cream"), ElementsAre("ice", "cream"));
}

TEST(BundledData, DefaultTablesLoad) {
  Normalizer n = Normalizer::FromFiles(DefaultLemmaTablePath(),
                                       DefaultStopwordPath());
  EXPECT_EQ(n.Lemmas("the leaves of apples"),
            (std::vector<std::string>{"leaf", "apple"}));
}

}  // namespace
}  // namespace edam

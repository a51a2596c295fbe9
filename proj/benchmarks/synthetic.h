#ifndef EDAM_BENCHMARKS_SYNTHETIC_H_
#define EDAM_BENCHMARKS_SYNTHETIC_H_

#include <random>
#include <string>
#include <vector>

#include "edam/cascade.h"

namespace edam {
namespace bench {

inline std::string Word(size_t i) { return "w" + std::to_string(i); }

// Zipf-ish token stream: low ids are much more frequent.
inline std::vector<Document> SyntheticDocuments(size_t count, size_t vocabulary,
                                                uint32_t seed = 1) {
  std::mt19937 rng(seed);
  std::geometric_distribution<size_t> word(8.0 / static_cast<double>(vocabulary));
  std::uniform_int_distribution<size_t> len(3, 12);
  std::vector<Document> docs;
  docs.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    Document d{"t" + std::to_string(i / 2) + "#" + std::to_string(i % 2), "gloss", {}};
    for (size_t k = len(rng); k > 0; --k) d.tokens.push_back(Word(word(rng) % vocabulary));
    docs.push_back(std::move(d));
  }
  return docs;
}

inline KnowledgeBase SyntheticKnowledgeBase(size_t terms, uint32_t seed = 2) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<size_t> term(0, terms - 1), attr(0, 199);
  Normalizer n;
  auto t = [](size_t i) { return "t" + std::to_string(i); };
  std::vector<dbm::DefinitionRecord> records;
  for (size_t i = 0; i < terms; ++i) {
    std::string gloss;
    for (int k = 0; k < 6; ++k) gloss += Word(attr(rng)) + " ";
    records.push_back(dbm::MakeRecord(n, t(i), "s1",
                                      {{dbm::SemanticRole::kSupertype, t(term(rng))},
                                       {dbm::SemanticRole::kDifferentiaQuality, gloss}}));
  }
  std::vector<vfm::RegionAnnotation> regions;
  for (size_t i = 0; i < terms * 4; ++i) {
    regions.push_back(vfm::RegionAnnotation{std::to_string(i / 10), std::to_string(i),
                                            n.MakeTerm(t(term(rng))),
                                            {n.MakeTerm(Word(attr(rng)))}});
  }
  std::vector<ckg::Assertion> assertions;
  for (size_t i = 0; i < terms * 3; ++i) {
    assertions.push_back(ckg::Assertion{"HasProperty", n.MakeTerm(t(term(rng))),
                                        n.MakeTerm(Word(attr(rng))), 1.0});
  }
  KnowledgeBase kb;
  kb.dbm = dbm::DefinitionStore::FromRecords(std::move(records));
  kb.vfm = vfm::VisualStore::FromAnnotations(std::move(regions), {});
  kb.ckg = ckg::CkgStore::FromAssertions(std::move(assertions));
  return kb;
}

inline std::vector<Triple> SyntheticTriples(size_t count, size_t terms,
                                            uint32_t seed = 3) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<size_t> term(0, terms - 1), attr(0, 199);
  Normalizer n;
  std::vector<Triple> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    out.push_back(MakeTriple(n, "t" + std::to_string(term(rng)),
                             "t" + std::to_string(term(rng)), Word(attr(rng))));
  }
  return out;
}

}  // namespace bench
}  // namespace edam

#endif  // EDAM_BENCHMARKS_SYNTHETIC_H_

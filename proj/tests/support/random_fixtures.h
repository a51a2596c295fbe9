#ifndef EDAM_TESTS_SUPPORT_RANDOM_FIXTURES_H_
#define EDAM_TESTS_SUPPORT_RANDOM_FIXTURES_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "edam/cascade.h"
#include "edam/text.h"

namespace edam {
namespace testing {

struct WorldOptions {
  size_t concepts = 12;
  size_t attributes = 10;
  size_t images = 8;
  size_t regions = 40;
  size_t relationships = 12;
  size_t assertions = 30;
  // Share of raw assertions given a Not-prefixed relation.
  double negated_share = 0.3;
};

// A small randomized knowledge base together with the raw inputs it was
// built from, so that oracles can rescan them independently.
struct RandomWorld {
  Normalizer normalizer;
  std::vector<std::string> concepts;
  std::vector<std::string> attributes;
  std::vector<dbm::DefinitionRecord> records;
  std::vector<vfm::RegionAnnotation> regions;
  std::vector<vfm::RelationshipAnnotation> relationships;
  std::vector<ckg::Assertion> raw_assertions;  // negated ones included
  KnowledgeBase kb;
};

RandomWorld MakeRandomWorld(uint32_t seed, const WorldOptions &options = {});

// Triples over the world's vocabulary. Pivot and comparison may coincide.
std::vector<Triple> RandomTriples(const RandomWorld &world, size_t count,
                                  std::mt19937 &rng);

// Supertype graph with a cycle: a -> b -> a, plus c -> a.
dbm::DefinitionStore CycleStore(const Normalizer &normalizer);

}  // namespace testing
}  // namespace edam

#endif  // EDAM_TESTS_SUPPORT_RANDOM_FIXTURES_H_

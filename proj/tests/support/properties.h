#ifndef EDAM_TESTS_SUPPORT_PROPERTIES_H_
#define EDAM_TESTS_SUPPORT_PROPERTIES_H_

#include <cstdint>
#include <string>

namespace edam {
namespace testing {

struct PropertyResult {
  bool ok = true;
  size_t cases = 0;    // individual checks performed
  std::string detail;  // first counterexample when !ok

  void Fail(const std::string &why) {
    if (ok) detail = why;
    ok = false;
  }
};

// Under every stage-order permutation, the cascade says yes exactly when
// some component decides standalone, and the deciding component is the
// first such stage. Component bits are recomputed with the oracles.
PropertyResult CheckCascadeUnion(uint32_t seed, size_t triples);

// Every positive verdict's evidence is re-verified against the raw inputs.
PropertyResult CheckExplanationSoundness(uint32_t seed, size_t triples);

// idf and membership agree with brute-force scans of the raw inputs.
PropertyResult CheckOracleEquivalence(uint32_t seed);

// No Not-prefixed relation survives loading or grounds a membership.
PropertyResult CheckNegationExclusion(uint32_t seed);

// Raising min_count never flips false to true; enabling SOR never flips true
// to false; raising max_depth never flips true to false.
PropertyResult CheckMonotonicity(uint32_t seed);

// Supertype expansion terminates on cyclic graphs and visits each term once.
PropertyResult CheckCycleTermination(uint32_t seed);

}  // namespace testing
}  // namespace edam

#endif  // EDAM_TESTS_SUPPORT_PROPERTIES_H_

#ifndef EDAM_TESTS_SUPPORT_FIXTURE_PATHS_H_
#define EDAM_TESTS_SUPPORT_FIXTURE_PATHS_H_

#include <string>

#include "edam/text.h"

namespace edam {
namespace testing {

inline std::string FixturePath(const std::string &name) {
  return std::string(EDAM_TEST_FIXTURE_DIR) + "/" + name;
}

inline std::string GoldenPath(const std::string &name) {
  return std::string(EDAM_TEST_GOLDEN_DIR) + "/" + name;
}

inline Normalizer FixtureNormalizer() {
  return Normalizer::FromFiles(FixturePath("lemmas.tsv"),
                               FixturePath("stopwords.txt"));
}

}  // namespace testing
}  // namespace edam

#endif  // EDAM_TESTS_SUPPORT_FIXTURE_PATHS_H_

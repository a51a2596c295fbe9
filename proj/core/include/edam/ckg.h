#ifndef EDAM_CKG_H_
#define EDAM_CKG_H_

#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "edam/membership.h"
#include "edam/text.h"
#include "edam/vector_space.h"

namespace edam {
namespace ckg {

struct Assertion {
  std::string relation;  // e.g. "HasProperty"
  Term start;
  Term end;
  double weight = 1.0;

  bool operator==(const Assertion &other) const = default;
};

// kForward: the queried term is the start of the edge.
enum class Direction { kForward, kBackward };

const char *DirectionName(Direction direction);

struct AssertionEvidence {
  std::string relation;
  std::string start;
  std::string end;
  double weight = 1.0;
  Direction direction = Direction::kForward;

  bool operator==(const AssertionEvidence &other) const = default;
};

struct LoadOptions {
  // URI language segment to keep; empty keeps every language.
  std::string language = "en";
  // When non-empty, only these relations are kept.
  std::set<std::string> relation_allowlist;
};

struct LoadStats {
  size_t lines = 0;
  size_t loaded = 0;
  size_t skipped_malformed = 0;
  size_t negated = 0;
  size_t other_language = 0;
  size_t non_concept = 0;
  size_t disallowed_relation = 0;
  std::vector<std::string> warnings;
};

// True for negated relations ("NotHasProperty", "NotCapableOf", ...).
bool IsNegated(std::string_view relation);

// Edge store indexed by both endpoints, plus an idf-weighted space in which
// every concept's document is the set of its neighbours. Never contains a
// negated relation. Immutable after construction.
class CkgStore {
 public:
  CkgStore() = default;

  // Negated relations and relations outside a non-empty allowlist are
  // dropped.
  static CkgStore FromAssertions(std::vector<Assertion> assertions,
                                 const std::set<std::string> &allowlist = {});

  // ConceptNet 5 CSV dump (assertion URI, relation URI, start URI, end URI,
  // JSON metadata) or the fixture format relation<TAB>start<TAB>end[<TAB>weight].
  static CkgStore Load(const std::string &path, const Normalizer &normalizer,
                       const LoadOptions &options = {},
                       LoadStats *stats = nullptr);

  const std::vector<Assertion> &assertions() const { return assertions_; }
  // Indices into assertions(), ascending.
  const std::vector<size_t> &ByConcept(const std::string &lemma) const;
  // Multiword concepts having `token` as one of their parts.
  const std::vector<std::string> &ConceptsWithToken(const std::string &token) const;
  const ExplicitVectorSpace &space() const { return space_; }
  size_t concept_count() const { return by_concept_.size(); }

  void Dump(std::ostream &out) const;
  static CkgStore LoadDump(std::istream &in);

 private:
  std::vector<Assertion> assertions_;
  std::unordered_map<std::string, std::vector<size_t>> by_concept_;
  std::unordered_map<std::string, std::vector<std::string>> token_index_;
  ExplicitVectorSpace space_;
};

// True iff an assertion links the term and the attribute in either direction.
// With `token_match`, a query also matches any multiword concept containing
// it as a part.
Membership<AssertionEvidence> HasProperty(const Term &term,
                                          const Term &attribute,
                                          const CkgStore &store,
                                          bool token_match = false);

}  // namespace ckg
}  // namespace edam

#endif  // EDAM_CKG_H_

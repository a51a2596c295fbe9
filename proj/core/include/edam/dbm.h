#ifndef EDAM_DBM_H_
#define EDAM_DBM_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "edam/membership.h"
#include "edam/text.h"
#include "edam/vector_space.h"

namespace edam {
namespace dbm {

// Roles a definition segment can carry.
enum class SemanticRole {
  kSupertype,
  kDifferentiaQuality,
  kDifferentiaEvent,
  kEventLocation,
  kPurpose,
  kAccessoryDeterminer,
  kOriginLocation,
};

inline constexpr int kRoleCount = 7;

const char *RoleName(SemanticRole role);
// Accepts the snake_case names returned by RoleName only.
std::optional<SemanticRole> ParseRole(std::string_view name);

struct Segment {
  SemanticRole role;
  std::string text;
  std::vector<Term> tokens;  // Normalize(text)

  bool operator==(const Segment &other) const = default;
};

struct DefinitionRecord {
  Term term;
  std::string sense_id;
  std::vector<Segment> segments;

  bool operator==(const DefinitionRecord &other) const = default;
};

// One definition segment that mentions the queried attribute.
struct DefinitionEvidence {
  std::string term;      // lemma of the record's owner
  std::string sense_id;
  SemanticRole role;
  std::string text;
  // Supertype chain from the queried term to `term`; a single element when
  // the evidence comes from the term's own definition.
  std::vector<std::string> path;

  bool operator==(const DefinitionEvidence &other) const = default;
};

struct ExpandedRecord {
  const DefinitionRecord *record;
  size_t depth;
  std::vector<std::string> path;
};

inline constexpr size_t kDefaultMaxDepth = 3;

// Definition knowledge graph plus its explicit vector space. Documents are
// (term#sense, role) pairs; same-role segments of one record share a
// document. Immutable after construction.
class DefinitionStore {
 public:
  DefinitionStore() = default;

  // Throws Error(kData) on a duplicate (term, sense) pair.
  static DefinitionStore FromRecords(std::vector<DefinitionRecord> records);

  // Role-annotated JSON-lines file:
  //   {"term": "...", "sense": "...", "segments": [{"role": "...", "text": "..."}]}
  static DefinitionStore Load(const std::string &path,
                              const Normalizer &normalizer);

  const std::vector<DefinitionRecord> &Records(const std::string &lemma) const;
  const std::set<std::string> &Supertypes(const std::string &lemma) const;
  const ExplicitVectorSpace &space() const { return space_; }
  size_t record_count() const { return record_count_; }
  size_t term_count() const { return records_.size(); }

  // Records of `term` and of every ancestor reachable through supertype
  // edges within `max_depth` hops, breadth first. Each ancestor is visited
  // once; ordering is (depth, lemma, file order).
  std::vector<ExpandedRecord> Expand(const Term &term, size_t max_depth) const;

  // Lossless line-oriented dump of the normalized records.
  void Dump(std::ostream &out) const;
  static DefinitionStore LoadDump(std::istream &in);

 private:
  std::map<std::string, std::vector<DefinitionRecord>> records_;
  std::map<std::string, std::set<std::string>> supertype_edges_;
  ExplicitVectorSpace space_;
  size_t record_count_ = 0;
};

// Builds a record from raw role/text pairs, normalizing every segment.
DefinitionRecord MakeRecord(
    const Normalizer &normalizer, std::string_view term, std::string sense_id,
    const std::vector<std::pair<SemanticRole, std::string>> &segments);

// Head of a supertype segment: its last non-stopword token.
std::optional<std::string> SupertypeHead(const Segment &segment);

std::vector<DefinitionRecord> ExpandSupertypes(const Term &term,
                                               const DefinitionStore &store,
                                               size_t max_depth);

// True iff the attribute occurs in a segment of the term's own records or of
// an ancestor's records within max_depth.
Membership<DefinitionEvidence> HasProperty(const Term &term,
                                           const Term &attribute,
                                           const DefinitionStore &store,
                                           size_t max_depth = kDefaultMaxDepth);

}  // namespace dbm
}  // namespace edam

#endif  // EDAM_DBM_H_

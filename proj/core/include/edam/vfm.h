#ifndef EDAM_VFM_H_
#define EDAM_VFM_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "edam/membership.h"
#include "edam/text.h"

namespace edam {
namespace vfm {

struct RegionRef {
  std::string image_id;
  std::string region_id;

  auto operator<=>(const RegionRef &other) const = default;
};

struct RegionAnnotation {
  std::string image_id;
  std::string region_id;
  Term object;
  std::vector<Term> attributes;

  bool operator==(const RegionAnnotation &other) const = default;
};

struct RelationshipAnnotation {
  std::string image_id;
  Term subject;
  Term predicate;
  Term object;

  bool operator==(const RelationshipAnnotation &other) const = default;
};

// Regions that ground an attribute. `object` is the lemma whose regions
// carry the attribute: the queried object itself, or a related object when
// the attribute is inherited through `via`.
struct VisualEvidence {
  std::string object;
  std::vector<RegionRef> regions;
  std::optional<RelationshipAnnotation> via;

  bool operator==(const VisualEvidence &other) const = default;
};

struct LoadStats {
  size_t regions = 0;
  size_t relationships = 0;
  size_t skipped = 0;
  std::vector<std::string> warnings;  // first few skip reasons
};

// Object-attribute (OA) and scene-object-relationship (SOR) indexes.
// Immutable after construction.
class VisualStore {
 public:
  VisualStore() = default;

  static VisualStore FromAnnotations(
      std::vector<RegionAnnotation> regions,
      std::vector<RelationshipAnnotation> relationships);

  // Accepts Visual Genome style JSON arrays of per-image records
  // (attributes.json / objects.json / relationships.json) and the JSON-lines
  // fixture format. Malformed records are skipped and counted in `stats`.
  static VisualStore Load(const std::vector<std::string> &paths,
                          const Normalizer &normalizer,
                          LoadStats *stats = nullptr);

  // Distinct regions where the attribute was annotated on the object.
  size_t Count(const std::string &object, const std::string &attribute) const;
  // Sorted by (image_id, region_id).
  const std::vector<RegionRef> &Regions(const std::string &object,
                                        const std::string &attribute) const;
  // Relationships in which the object takes part, as subject or object.
  const std::vector<RelationshipAnnotation> &Relationships(
      const std::string &object) const;

  const std::vector<RegionAnnotation> &regions() const { return regions_; }
  const std::vector<RelationshipAnnotation> &relationships() const {
    return relationships_;
  }
  size_t pair_count() const { return oa_index_.size(); }

  void Dump(std::ostream &out) const;
  static VisualStore LoadDump(std::istream &in);

 private:
  std::map<std::pair<std::string, std::string>, std::vector<RegionRef>> oa_index_;
  std::unordered_map<std::string, std::vector<RelationshipAnnotation>> sor_index_;
  std::vector<RegionAnnotation> regions_;
  std::vector<RelationshipAnnotation> relationships_;
};

inline constexpr size_t kDefaultMinCount = 1;

// True iff the attribute was annotated on at least `min_count` regions of the
// object, or (with `use_sor`) on at least `min_count` regions of an object
// related to it in the same image. Throws Error(kUsage) if min_count == 0.
Membership<VisualEvidence> HasProperty(const Term &object,
                                       const Term &attribute,
                                       const VisualStore &store,
                                       size_t min_count = kDefaultMinCount,
                                       bool use_sor = false);

}  // namespace vfm
}  // namespace edam

#endif  // EDAM_VFM_H_

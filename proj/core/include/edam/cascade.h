#ifndef EDAM_CASCADE_H_
#define EDAM_CASCADE_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "edam/ckg.h"
#include "edam/dbm.h"
#include "edam/explanation.h"
#include "edam/triple.h"
#include "edam/vfm.h"

namespace edam {

// The three knowledge components a cascade consults.
struct KnowledgeBase {
  dbm::DefinitionStore dbm;
  ckg::CkgStore ckg;
  vfm::VisualStore vfm;
};

struct CascadeConfig {
  std::array<Component, 3> stage_order{Component::kDbm, Component::kCkg,
                                       Component::kVfm};
  size_t dbm_max_depth = dbm::kDefaultMaxDepth;
  size_t vfm_min_count = vfm::kDefaultMinCount;
  bool vfm_use_sor = false;
  bool ckg_token_match = false;

  // Throws Error(kUsage) unless stage_order is a permutation of the three
  // components and vfm_min_count is positive.
  void Validate() const;

  bool operator==(const CascadeConfig &other) const = default;
};

// discriminative == true iff deciding_component and explanation are set.
struct Verdict {
  bool discriminative = false;
  std::optional<Component> deciding_component;
  std::optional<Explanation> explanation;
};

struct ComponentMembership {
  bool member = false;
  Evidence evidence;
};

// Membership of (attribute, term) in one component.
ComponentMembership QueryComponent(Component component, const Term &term,
                                   const Term &attribute,
                                   const KnowledgeBase &kb,
                                   const CascadeConfig &config);

// Stages run in config.stage_order; the first stage where the attribute
// belongs to the pivot and not to the comparison decides a positive verdict.
Verdict Classify(const Triple &triple, const KnowledgeBase &kb,
                 const CascadeConfig &config);

// Standalone decision of each component: member(a, p) && !member(a, c).
class ComponentBits {
 public:
  bool operator[](Component c) const { return bits_[static_cast<int>(c)]; }
  void Set(Component c, bool value) { bits_[static_cast<int>(c)] = value; }
  bool Any() const { return bits_[0] || bits_[1] || bits_[2]; }
  bool operator==(const ComponentBits &other) const = default;

 private:
  std::array<bool, 3> bits_{};
};

struct BatchItem {
  Triple triple;
  Verdict verdict;
  ComponentBits components;
};

// Order-preserving batch classification. `threads` == 0 picks the hardware
// concurrency; results do not depend on the thread count.
std::vector<BatchItem> ClassifyBatch(const std::vector<Triple> &triples,
                                     const KnowledgeBase &kb,
                                     const CascadeConfig &config,
                                     size_t threads = 0);

}  // namespace edam

#endif  // EDAM_CASCADE_H_

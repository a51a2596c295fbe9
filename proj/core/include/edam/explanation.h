#ifndef EDAM_EXPLANATION_H_
#define EDAM_EXPLANATION_H_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "edam/ckg.h"
#include "edam/dbm.h"
#include "edam/vfm.h"

namespace edam {

enum class Component { kDbm, kCkg, kVfm };

inline constexpr Component kAllComponents[] = {Component::kDbm, Component::kCkg,
                                               Component::kVfm};

const char *ComponentName(Component component);  // "DBM", "CKG", "VFM"
std::optional<Component> ParseComponent(std::string_view name);

// Intensional: what the concept is (definitions, graph edges).
// Extensional: where it was observed (image regions).
enum class ExplanationKind { kIntensional, kExtensional };

const char *ExplanationKindName(ExplanationKind kind);
ExplanationKind KindOf(Component component);

using Evidence = std::variant<std::vector<dbm::DefinitionEvidence>,
                              std::vector<ckg::AssertionEvidence>,
                              std::vector<vfm::VisualEvidence>>;

Component ComponentOf(const Evidence &evidence);
size_t EvidenceSize(const Evidence &evidence);

// Everything a template needs: the triple's surface forms and the evidence
// proving the attribute for the pivot.
struct ExplanationInput {
  std::string pivot;
  std::string comparison;
  std::string attribute;
  Evidence evidence;
};

struct Explanation {
  ExplanationKind kind = ExplanationKind::kIntensional;
  std::string template_id;
  Evidence pivot_evidence;
  std::string comparison_check;
  std::string rendered_text;
};

// Template registered for a component's positive verdicts.
const std::string &DefaultTemplateId(Component component);
std::vector<std::string> TemplateIds();

// Deterministic rendering. Throws Error(kInvariant) when the evidence is
// empty, and Error(kUsage) for an unknown template or one registered for a
// different component than the evidence.
std::string RenderExplanation(const ExplanationInput &input,
                              const std::string &template_id);

// Statement that the comparison term lacks the attribute in `component`.
std::string ComparisonCheck(Component component, const std::string &comparison,
                            const std::string &attribute);

// Assembles a full explanation with the component's default template.
Explanation MakeExplanation(const ExplanationInput &input);

}  // namespace edam

#endif  // EDAM_EXPLANATION_H_

#ifndef EDAM_VERDICT_IO_H_
#define EDAM_VERDICT_IO_H_

#include <optional>
#include <string>

#include "edam/cascade.h"
#include "edam/explanation.h"
#include "edam/triple.h"

namespace edam {

// One verdict as a single-line JSON record: pivot, comparison, attribute,
// label (1/0), deciding_component, explanation text, template_id, kind,
// comparison_check and machine-readable evidence. `verbose` adds a note to
// negative verdicts.
std::string VerdictToJson(const Triple &triple, const Verdict &verdict,
                          bool verbose = false);

// A verdict record read back from disk.
struct StoredVerdict {
  std::string pivot;
  std::string comparison;
  std::string attribute;
  bool label = false;
  std::optional<Component> deciding_component;
  std::optional<std::string> template_id;
  std::optional<Evidence> evidence;
  std::string explanation;

  ExplanationInput ToExplanationInput() const;
};

// Throws Error(kData) on malformed records.
StoredVerdict ParseVerdictJson(const std::string &line);

// `pivot,comparison,attribute,label`
std::string SemEvalLine(const Triple &triple, bool label);

}  // namespace edam

#endif  // EDAM_VERDICT_IO_H_

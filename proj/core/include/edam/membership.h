#ifndef EDAM_MEMBERSHIP_H_
#define EDAM_MEMBERSHIP_H_

#include <vector>

namespace edam {

// Answer to "does this component associate the attribute with the term?",
// together with the evidence that justifies a positive answer.
template <typename Evidence>
struct Membership {
  bool member = false;
  std::vector<Evidence> evidence;

  explicit operator bool() const { return member; }
};

}  // namespace edam

#endif  // EDAM_MEMBERSHIP_H_

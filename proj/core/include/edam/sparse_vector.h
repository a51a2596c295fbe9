#ifndef EDAM_SPARSE_VECTOR_H_
#define EDAM_SPARSE_VECTOR_H_

#include <map>
#include <string>

namespace edam {

// Explicit sparse vector keyed by lemma. Zero weights are never stored.
class SparseVector {
 public:
  using Map = std::map<std::string, double>;

  // Negative weights are rejected with Error(kInvariant).
  void Set(const std::string &lemma, double weight);
  // Keeps the larger of the current and the given weight.
  void MaxMerge(const std::string &lemma, double weight);

  double Get(const std::string &lemma) const;
  bool empty() const { return entries_.empty(); }
  size_t size() const { return entries_.size(); }
  const Map &entries() const { return entries_; }
  double Norm() const;

  bool operator==(const SparseVector &other) const = default;

 private:
  Map entries_;
};

// Cosine similarity over shared lemmas, in [0, 1]. Returns 0 when either
// vector is empty.
double Cosine(const SparseVector &a, const SparseVector &b);

}  // namespace edam

#endif  // EDAM_SPARSE_VECTOR_H_

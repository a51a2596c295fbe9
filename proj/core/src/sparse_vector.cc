#include "edam/sparse_vector.h"

#include <algorithm>
#include <cmath>

#include "edam/error.h"

namespace edam {

void SparseVector::Set(const std::string &lemma, double weight) {
  if (weight < 0 || std::isnan(weight)) {
    throw InvariantError("negative weight for '" + lemma + "'");
  }
  if (weight == 0) {
    entries_.erase(lemma);
  } else {
    entries_[lemma] = weight;
  }
}

void SparseVector::MaxMerge(const std::string &lemma, double weight) {
  if (weight > Get(lemma)) Set(lemma, weight);
}

double SparseVector::Get(const std::string &lemma) const {
  auto it = entries_.find(lemma);
  return it == entries_.end() ? 0.0 : it->second;
}

double SparseVector::Norm() const {
  double sum = 0;
  for (const auto &[lemma, w] : entries_) sum += w * w;
  return std::sqrt(sum);
}

double Cosine(const SparseVector &a, const SparseVector &b) {
  if (a.empty() || b.empty()) return 0.0;
  // Merge walk in lemma order so that Cosine(a, b) == Cosine(b, a) exactly.
  double dot = 0;
  auto ia = a.entries().begin(), ib = b.entries().begin();
  while (ia != a.entries().end() && ib != b.entries().end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      dot += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  double denom = a.Norm() * b.Norm();
  if (denom == 0) return 0.0;
  return std::clamp(dot / denom, 0.0, 1.0);
}

}  // namespace edam

#ifndef EDAM_VECTOR_SPACE_H_
#define EDAM_VECTOR_SPACE_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "edam/sparse_vector.h"
#include "edam/text.h"

namespace edam {

// One occurrence of a lemma in a document field. The weight is always the
// idf of the lemma in the owning space.
struct Posting {
  std::string document_id;
  std::string field;
  double weight = 0;

  bool operator==(const Posting &other) const = default;
};

// Input unit for index construction. Document ids follow the convention
// "<owner>" or "<owner>#<qualifier>", where <owner> is the lemma of the term
// the document describes (e.g. "brandy#brandy.n.01").
struct Document {
  std::string id;
  std::string field;
  std::vector<std::string> tokens;

  bool operator==(const Document &other) const = default;
};

std::string_view DocumentOwner(std::string_view document_id);

// Immutable inverted index with idf weights:
//   idf(l) = ln(N / df(l))     for seen lemmas
//   idf(l) = ln(N + 1)         for unseen lemmas
// where N is the number of distinct document ids and df(l) the number of
// distinct document ids containing l.
class ExplicitVectorSpace {
 public:
  ExplicitVectorSpace() = default;

  // Throws Error(kData) when the same (id, field) pair appears twice with
  // different token sets, or when a token is empty or contains whitespace.
  static ExplicitVectorSpace Build(std::vector<Document> documents);

  size_t document_count() const { return document_count_; }
  size_t vocabulary_size() const { return postings_.size(); }

  size_t DocumentFrequency(const std::string &lemma) const;

  // Throws Error(kData) on an empty space.
  double Idf(const std::string &lemma) const;

  // Sorted by (document_id, field). Empty for unseen lemmas.
  const std::vector<Posting> &Postings(const std::string &lemma) const;

  // True if `lemma` occurs in `document_id`; restricted to `field` unless it
  // is empty.
  bool Contains(const std::string &lemma, std::string_view document_id,
                std::string_view field = {}) const;

  // Union of all documents owned by the term's lemma; multiple documents
  // (senses, fields) merge by entrywise maximum weight.
  SparseVector Vector(const Term &term) const;

  // Canonical document list: sorted by (id, field), tokens sorted and unique.
  const std::vector<Document> &documents() const { return documents_; }

  std::vector<std::string> SortedLemmas() const;

  // Line-oriented dump. Dump -> Load -> Dump is byte-identical.
  void Dump(std::ostream &out) const;
  static ExplicitVectorSpace Load(std::istream &in);

  bool operator==(const ExplicitVectorSpace &other) const {
    return documents_ == other.documents_;
  }

 private:
  std::vector<Document> documents_;
  std::unordered_map<std::string, std::vector<Posting>> postings_;
  std::unordered_map<std::string, size_t> df_;
  std::unordered_map<std::string, std::vector<size_t>> by_owner_;
  size_t document_count_ = 0;
};

}  // namespace edam

#endif  // EDAM_VECTOR_SPACE_H_

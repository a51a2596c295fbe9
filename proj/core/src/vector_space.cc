#include "edam/vector_space.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <tuple>

#include "edam/error.h"

namespace edam {
namespace {

constexpr std::string_view kDumpMagic = "edam-space";
constexpr int kDumpVersion = 1;

std::string Escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string Unescape(std::string_view s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\' || i + 1 == s.size()) {
      out.push_back(s[i]);
      continue;
    }
    char next = s[++i];
    switch (next) {
      case 't': out.push_back('\t'); break;
      case 'n': out.push_back('\n'); break;
      case 'r': out.push_back('\r'); break;
      default: out.push_back(next);
    }
  }
  return out;
}

bool ValidToken(const std::string &t) {
  if (t.empty()) return false;
  return std::none_of(t.begin(), t.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  });
}

const std::vector<Posting> kNoPostings;

}  // namespace

std::string_view DocumentOwner(std::string_view document_id) {
  return document_id.substr(0, document_id.find('#'));
}

ExplicitVectorSpace ExplicitVectorSpace::Build(std::vector<Document> documents) {
  for (auto &doc : documents) {
    for (const auto &t : doc.tokens) {
      if (!ValidToken(t)) {
        throw DataError("document '" + doc.id + "' field '" + doc.field +
                        "' has an invalid token '" + t + "'");
      }
    }
    std::sort(doc.tokens.begin(), doc.tokens.end());
    doc.tokens.erase(std::unique(doc.tokens.begin(), doc.tokens.end()),
                     doc.tokens.end());
  }
  std::sort(documents.begin(), documents.end(),
            [](const Document &a, const Document &b) {
              return std::tie(a.id, a.field, a.tokens) <
                     std::tie(b.id, b.field, b.tokens);
            });

  ExplicitVectorSpace space;
  for (auto &doc : documents) {
    if (!space.documents_.empty()) {
      const Document &prev = space.documents_.back();
      if (prev.id == doc.id && prev.field == doc.field) {
        if (prev.tokens == doc.tokens) continue;
        throw DataError("duplicate document ('" + doc.id + "', '" + doc.field +
                        "') with differing tokens");
      }
    }
    space.documents_.push_back(std::move(doc));
  }

  std::unordered_map<std::string, std::set<std::string>> ids_per_lemma;
  std::string last_id;
  for (size_t i = 0; i < space.documents_.size(); ++i) {
    const Document &doc = space.documents_[i];
    if (i == 0 || doc.id != last_id) {
      ++space.document_count_;
      last_id = doc.id;
    }
    space.by_owner_[std::string(DocumentOwner(doc.id))].push_back(i);
    for (const auto &t : doc.tokens) {
      space.postings_[t].push_back(Posting{doc.id, doc.field, 0.0});
      ids_per_lemma[t].insert(doc.id);
    }
  }
  for (auto &[lemma, ids] : ids_per_lemma) space.df_[lemma] = ids.size();
  for (auto &[lemma, list] : space.postings_) {
    double w = space.Idf(lemma);
    for (auto &p : list) p.weight = w;
  }
  return space;
}

size_t ExplicitVectorSpace::DocumentFrequency(const std::string &lemma) const {
  auto it = df_.find(lemma);
  return it == df_.end() ? 0 : it->second;
}

double ExplicitVectorSpace::Idf(const std::string &lemma) const {
  if (document_count_ == 0) {
    throw DataError("idf is undefined on an empty vector space");
  }
  const double n = static_cast<double>(document_count_);
  size_t df = DocumentFrequency(lemma);
  if (df == 0) return std::log(n + 1.0);
  return std::log(n / static_cast<double>(df));
}

const std::vector<Posting> &ExplicitVectorSpace::Postings(
    const std::string &lemma) const {
  auto it = postings_.find(lemma);
  return it == postings_.end() ? kNoPostings : it->second;
}

bool ExplicitVectorSpace::Contains(const std::string &lemma,
                                   std::string_view document_id,
                                   std::string_view field) const {
  const auto &list = Postings(lemma);
  auto it = std::lower_bound(
      list.begin(), list.end(), std::make_pair(document_id, field),
      [](const Posting &p, const std::pair<std::string_view, std::string_view> &k) {
        return std::make_pair(std::string_view(p.document_id),
                              std::string_view(p.field)) < k;
      });
  if (it == list.end() || it->document_id != document_id) return false;
  return field.empty() || it->field == field;
}

SparseVector ExplicitVectorSpace::Vector(const Term &term) const {
  SparseVector v;
  auto it = by_owner_.find(term.lemma);
  if (it == by_owner_.end()) return v;
  for (size_t index : it->second) {
    for (const auto &t : documents_[index].tokens) v.MaxMerge(t, Idf(t));
  }
  return v;
}

std::vector<std::string> ExplicitVectorSpace::SortedLemmas() const {
  std::vector<std::string> out;
  out.reserve(postings_.size());
  for (const auto &[lemma, list] : postings_) out.push_back(lemma);
  std::sort(out.begin(), out.end());
  return out;
}

void ExplicitVectorSpace::Dump(std::ostream &out) const {
  out << kDumpMagic << ' ' << kDumpVersion << '\n';
  out << "documents " << documents_.size() << '\n';
  for (const auto &doc : documents_) {
    out << Escape(doc.id) << '\t' << Escape(doc.field) << '\t';
    for (size_t i = 0; i < doc.tokens.size(); ++i) {
      if (i > 0) out << ' ';
      out << doc.tokens[i];
    }
    out << '\n';
  }
}

ExplicitVectorSpace ExplicitVectorSpace::Load(std::istream &in) {
  std::string line;
  if (!std::getline(in, line) ||
      line != std::string(kDumpMagic) + " " + std::to_string(kDumpVersion)) {
    throw DataError("not an edam vector space dump (bad header)");
  }
  size_t expected = 0;
  if (!std::getline(in, line) || line.rfind("documents ", 0) != 0) {
    throw DataError("vector space dump: missing document count");
  }
  expected = std::stoul(line.substr(10));
  std::vector<Document> docs;
  docs.reserve(expected);
  while (docs.size() < expected && std::getline(in, line)) {
    size_t t1 = line.find('\t');
    size_t t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos) {
      throw DataError("vector space dump: malformed document line " +
                      std::to_string(docs.size() + 3));
    }
    Document doc;
    doc.id = Unescape(std::string_view(line).substr(0, t1));
    doc.field = Unescape(std::string_view(line).substr(t1 + 1, t2 - t1 - 1));
    std::string_view rest = std::string_view(line).substr(t2 + 1);
    size_t start = 0;
    while (start < rest.size()) {
      size_t sp = rest.find(' ', start);
      if (sp == std::string_view::npos) sp = rest.size();
      if (sp > start) doc.tokens.emplace_back(rest.substr(start, sp - start));
      start = sp + 1;
    }
    docs.push_back(std::move(doc));
  }
  if (docs.size() != expected) {
    throw DataError("vector space dump: truncated (expected " +
                    std::to_string(expected) + " documents)");
  }
  return Build(std::move(docs));
}

}  // namespace edam

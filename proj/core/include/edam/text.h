#ifndef EDAM_TEXT_H_
#define EDAM_TEXT_H_

#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace edam {

// A normalized term. The lemma is lowercase, non-empty and whitespace-free;
// multiword terms join their lemmas with '_'.
struct Term {
  std::string surface;
  std::string lemma;

  bool operator==(const Term &other) const = default;
};

// Splits on every byte that is not an ASCII letter or digit and lowercases
// ASCII letters. Bytes >= 0x80 are treated as word characters so UTF-8 words
// stay intact.
std::vector<std::string> Tokenize(std::string_view text);

// Surface form -> lemma mapping. The table is closed under lookup when built:
// every target resolves to a fixed point, so Lookup(Lookup(x)) == Lookup(x).
class LemmaTable {
 public:
  LemmaTable() = default;

  // Throws Error(kData) on conflicting entries, cyclic chains, or targets
  // that are not a single token.
  static LemmaTable FromEntries(
      const std::vector<std::pair<std::string, std::string>> &entries);

  // Two-column `surface<TAB>lemma` file. Blank lines and lines starting with
  // '#' are ignored.
  static LemmaTable Load(const std::string &path);

  // Returns the lemma for `token`, or `token` itself when absent.
  std::string Lookup(std::string_view token) const;

  size_t size() const { return map_.size(); }

 private:
  std::unordered_map<std::string, std::string> map_;
};

class StopwordSet {
 public:
  StopwordSet() = default;
  static StopwordSet FromWords(const std::vector<std::string> &words);
  // One lemma per line; '#' comments allowed.
  static StopwordSet Load(const std::string &path);

  bool Contains(const std::string &lemma) const {
    return words_.count(lemma) > 0;
  }
  size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

// Tokenize -> lemmatize -> drop stopwords. Immutable and thread-safe.
class Normalizer {
 public:
  Normalizer() = default;
  Normalizer(LemmaTable lemmas, StopwordSet stopwords)
      : lemmas_(std::move(lemmas)), stopwords_(std::move(stopwords)) {}

  static Normalizer FromFiles(const std::string &lemma_path,
                              const std::string &stopword_path);

  std::vector<Term> Normalize(std::string_view text) const;

  // Lemma sequence of Normalize(text).
  std::vector<std::string> Lemmas(std::string_view text) const;

  // Builds a single term from a word or phrase ("ice cream" -> ice_cream).
  // Stopwords are dropped unless that would leave nothing. Throws
  // Error(kData) when the text contains no tokens at all.
  Term MakeTerm(std::string_view text) const;

  std::string Lemmatize(std::string_view token) const {
    return lemmas_.Lookup(token);
  }
  bool IsStopword(const std::string &lemma) const {
    return stopwords_.Contains(lemma);
  }

 private:
  LemmaTable lemmas_;
  StopwordSet stopwords_;
};

// Splits a multiword lemma ("ice_cream") into its parts.
std::vector<std::string> SplitLemma(const std::string &lemma);

// Bundled lemma table and stopword list: the source tree copy when present,
// otherwise the installed copy.
std::string BundledDataDir();
std::string DefaultLemmaTablePath();
std::string DefaultStopwordPath();

}  // namespace edam

#endif  // EDAM_TEXT_H_

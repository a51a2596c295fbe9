#include "edam/text.h"

#include <filesystem>
#include <fstream>

#include "edam/error.h"

namespace edam {
namespace {

bool IsWordByte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c >= 0x80;
}

char Lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

std::string Trim(const std::string &s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::ifstream OpenOrThrow(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return in;
}

}  // namespace

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (IsWordByte(static_cast<unsigned char>(c))) {
      current.push_back(Lower(c));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

LemmaTable LemmaTable::FromEntries(
    const std::vector<std::pair<std::string, std::string>> &entries) {
  std::unordered_map<std::string, std::string> raw;
  for (const auto &[surface, lemma] : entries) {
    auto s = Tokenize(surface);
    auto l = Tokenize(lemma);
    if (s.size() != 1 || l.size() != 1) {
      throw DataError("lemma table entry '" + surface + "' -> '" + lemma +
                      "' is not a single token pair");
    }
    auto [it, inserted] = raw.emplace(s[0], l[0]);
    if (!inserted && it->second != l[0]) {
      throw DataError("conflicting lemma table entries for '" + s[0] + "'");
    }
  }

  // Resolve chains (a->b, b->c) so that every target is a fixed point.
  LemmaTable table;
  for (const auto &[surface, lemma] : raw) {
    std::string target = lemma;
    size_t hops = 0;
    for (auto it = raw.find(target); it != raw.end() && it->second != target;
         it = raw.find(target)) {
      target = it->second;
      if (++hops > raw.size()) {
        throw DataError("cyclic lemma table chain through '" + surface + "'");
      }
    }
    if (target != surface) table.map_.emplace(surface, std::move(target));
  }
  return table;
}

LemmaTable LemmaTable::Load(const std::string &path) {
  std::ifstream in = OpenOrThrow(path);
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    size_t tab = trimmed.find('\t');
    if (tab == std::string::npos) {
      throw Error(ErrorKind::kData, "expected surface<TAB>lemma", path, lineno);
    }
    entries.emplace_back(Trim(trimmed.substr(0, tab)),
                         Trim(trimmed.substr(tab + 1)));
  }
  try {
    return FromEntries(entries);
  } catch (const Error &e) {
    throw Error(ErrorKind::kData, e.what(), path, 0);
  }
}

std::string LemmaTable::Lookup(std::string_view token) const {
  auto it = map_.find(std::string(token));
  return it == map_.end() ? std::string(token) : it->second;
}

StopwordSet StopwordSet::FromWords(const std::vector<std::string> &words) {
  StopwordSet set;
  for (const auto &w : words) {
    for (auto &t : Tokenize(w)) set.words_.insert(std::move(t));
  }
  return set;
}

StopwordSet StopwordSet::Load(const std::string &path) {
  std::ifstream in = OpenOrThrow(path);
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    words.push_back(trimmed);
  }
  return FromWords(words);
}

Normalizer Normalizer::FromFiles(const std::string &lemma_path,
                                 const std::string &stopword_path) {
  return Normalizer(LemmaTable::Load(lemma_path),
                    StopwordSet::Load(stopword_path));
}

std::vector<Term> Normalizer::Normalize(std::string_view text) const {
  std::vector<Term> out;
  for (auto &token : Tokenize(text)) {
    std::string lemma = lemmas_.Lookup(token);
    if (stopwords_.Contains(lemma)) continue;
    out.push_back(Term{std::move(token), std::move(lemma)});
  }
  return out;
}

std::vector<std::string> Normalizer::Lemmas(std::string_view text) const {
  std::vector<std::string> out;
  for (auto &term : Normalize(text)) out.push_back(std::move(term.lemma));
  return out;
}

Term Normalizer::MakeTerm(std::string_view text) const {
  std::vector<std::string> parts = Lemmas(text);
  if (parts.empty()) {
    for (const auto &token : Tokenize(text)) {
      parts.push_back(lemmas_.Lookup(token));
    }
  }
  if (parts.empty()) {
    throw DataError("term '" + std::string(text) + "' contains no tokens");
  }
  std::string lemma = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) lemma += "_" + parts[i];
  return Term{Trim(std::string(text)), std::move(lemma)};
}

std::vector<std::string> SplitLemma(const std::string &lemma) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t pos = lemma.find('_', start);
    std::string part = lemma.substr(start, pos - start);
    if (!part.empty()) parts.push_back(std::move(part));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string BundledDataDir() {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (fs::exists(fs::path(EDAM_BUILD_DATA_DIR) / "lemmas.tsv", ec)) {
    return EDAM_BUILD_DATA_DIR;
  }
  return EDAM_INSTALL_DATA_DIR;
}

std::string DefaultLemmaTablePath() { return BundledDataDir() + "/lemmas.tsv"; }
std::string DefaultStopwordPath() { return BundledDataDir() + "/stopwords.txt"; }

}  // namespace edam

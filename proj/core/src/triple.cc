#include "edam/triple.h"

#include <algorithm>
#include <bit>

#include "edam/error.h"

namespace edam {
namespace {

std::string KeyPart(const std::string &surface) {
  std::string out;
  for (char c : surface) {
    out.push_back((c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c);
  }
  size_t b = out.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  size_t e = out.find_last_not_of(" \t\r\n");
  return out.substr(b, e - b + 1);
}

}  // namespace

const char *CategoryName(Category category) {
  switch (category) {
    case Category::kSensory: return "sensory";
    case Category::kLogical: return "logical";
    case Category::kRelative: return "relative";
    case Category::kAbsolute: return "absolute";
    case Category::kEssential: return "essential";
    case Category::kIncidental: return "incidental";
  }
  return "unknown";
}

std::optional<Category> ParseCategory(std::string_view name) {
  std::string lower = KeyPart(std::string(name));
  for (Category c : kAllCategories) {
    if (lower == CategoryName(c)) return c;
  }
  return std::nullopt;
}

size_t CategorySet::size() const { return std::popcount(bits_); }

std::vector<Category> CategorySet::ToVector() const {
  std::vector<Category> out;
  for (Category c : kAllCategories) {
    if (Contains(c)) out.push_back(c);
  }
  return out;
}

std::string TripleKey::ToString() const {
  return pivot + "," + comparison + "," + attribute;
}

TripleKey MakeKey(std::string_view pivot, std::string_view comparison,
                  std::string_view attribute) {
  return TripleKey{KeyPart(std::string(pivot)), KeyPart(std::string(comparison)),
                   KeyPart(std::string(attribute))};
}

TripleKey Triple::Key() const {
  return MakeKey(pivot.surface, comparison.surface, attribute.surface);
}

Triple MakeTriple(const Normalizer &normalizer, std::string_view pivot,
                  std::string_view comparison, std::string_view attribute) {
  Triple t;
  t.pivot = normalizer.MakeTerm(pivot);
  t.comparison = normalizer.MakeTerm(comparison);
  t.attribute = normalizer.MakeTerm(attribute);
  return t;
}

}  // namespace edam

#ifndef EDAM_TRIPLE_H_
#define EDAM_TRIPLE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "edam/text.h"

namespace edam {

// Attribute categories, grouped in dual pairs:
// sensory/logical, relative/absolute, essential/incidental.
enum class Category : uint8_t {
  kSensory,
  kLogical,
  kRelative,
  kAbsolute,
  kEssential,
  kIncidental,
};

inline constexpr Category kAllCategories[] = {
    Category::kSensory,  Category::kLogical,   Category::kRelative,
    Category::kAbsolute, Category::kEssential, Category::kIncidental,
};

const char *CategoryName(Category category);
std::optional<Category> ParseCategory(std::string_view name);

// Small value-type set over the six categories.
class CategorySet {
 public:
  CategorySet() = default;

  void Insert(Category c) { bits_ |= Bit(c); }
  bool Contains(Category c) const { return (bits_ & Bit(c)) != 0; }
  bool empty() const { return bits_ == 0; }
  size_t size() const;
  std::vector<Category> ToVector() const;

  bool operator==(const CategorySet &other) const = default;

 private:
  static uint8_t Bit(Category c) { return uint8_t{1} << static_cast<int>(c); }
  uint8_t bits_ = 0;
};

// Identity of a triple across files: lowercased, trimmed surface forms.
struct TripleKey {
  std::string pivot;
  std::string comparison;
  std::string attribute;

  auto operator<=>(const TripleKey &other) const = default;
  std::string ToString() const;
};

// Lowercased, trimmed surfaces; the identity used by gold files and reports.
TripleKey MakeKey(std::string_view pivot, std::string_view comparison,
                  std::string_view attribute);

struct Triple {
  Term pivot;
  Term comparison;
  Term attribute;
  std::optional<bool> gold_label;
  std::optional<CategorySet> categories;

  TripleKey Key() const;
};

// Builds a triple with normalized terms. Throws Error(kData) on empty slots.
Triple MakeTriple(const Normalizer &normalizer, std::string_view pivot,
                  std::string_view comparison, std::string_view attribute);

}  // namespace edam

#endif  // EDAM_TRIPLE_H_

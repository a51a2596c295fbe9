#include "random_fixtures.h"

#include <set>

namespace edam {
namespace testing {
namespace {

template <typename T>
const T &Pick(const std::vector<T> &v, std::mt19937 &rng) {
  std::uniform_int_distribution<size_t> d(0, v.size() - 1);
  return v[d(rng)];
}

size_t Uniform(size_t lo, size_t hi, std::mt19937 &rng) {
  return std::uniform_int_distribution<size_t>(lo, hi)(rng);
}

constexpr dbm::SemanticRole kNonSupertypeRoles[] = {
    dbm::SemanticRole::kDifferentiaQuality, dbm::SemanticRole::kDifferentiaEvent,
    dbm::SemanticRole::kEventLocation,      dbm::SemanticRole::kPurpose,
    dbm::SemanticRole::kAccessoryDeterminer, dbm::SemanticRole::kOriginLocation};

}  // namespace

RandomWorld MakeRandomWorld(uint32_t seed, const WorldOptions &options) {
  std::mt19937 rng(seed);
  RandomWorld w;
  for (size_t i = 0; i < options.concepts; ++i) {
    w.concepts.push_back("concept" + std::to_string(i));
  }
  for (size_t i = 0; i < options.attributes; ++i) {
    w.attributes.push_back("attr" + std::to_string(i));
  }
  // Attributes sometimes name concepts, so supertype heads can be queried.
  std::vector<std::string> words = w.attributes;
  words.insert(words.end(), w.concepts.begin(), w.concepts.begin() + 3);

  for (const auto &c : w.concepts) {
    size_t senses = Uniform(0, 2, rng);
    for (size_t s = 0; s < senses; ++s) {
      std::vector<std::pair<dbm::SemanticRole, std::string>> segments;
      if (Uniform(0, 3, rng) != 0) {
        std::string text = Uniform(0, 1, rng) ? Pick(words, rng) + " " : "";
        segments.emplace_back(dbm::SemanticRole::kSupertype,
                              text + Pick(w.concepts, rng));
      }
      size_t n = Uniform(1, 3, rng);
      for (size_t k = 0; k < n; ++k) {
        std::string text;
        for (size_t t = Uniform(1, 3, rng); t > 0; --t) {
          text += (text.empty() ? "" : " ") + Pick(words, rng);
        }
        segments.emplace_back(kNonSupertypeRoles[Uniform(0, 5, rng)], text);
      }
      w.records.push_back(dbm::MakeRecord(w.normalizer, c,
                                          c + ".n.0" + std::to_string(s + 1),
                                          segments));
    }
  }

  std::vector<std::vector<std::string>> objects_in_image(options.images);
  for (size_t i = 0; i < options.regions; ++i) {
    size_t image = Uniform(0, options.images - 1, rng);
    vfm::RegionAnnotation r;
    r.image_id = "img" + std::to_string(image);
    r.region_id = "r" + std::to_string(i);
    r.object = w.normalizer.MakeTerm(Pick(w.concepts, rng));
    for (size_t k = Uniform(0, 3, rng); k > 0; --k) {
      r.attributes.push_back(w.normalizer.MakeTerm(Pick(w.attributes, rng)));
    }
    objects_in_image[image].push_back(r.object.lemma);
    w.regions.push_back(std::move(r));
  }
  const std::vector<std::string> predicates = {"on", "near", "holding"};
  for (size_t i = 0; i < options.relationships; ++i) {
    size_t image = Uniform(0, options.images - 1, rng);
    const auto &pool =
        objects_in_image[image].empty() ? w.concepts : objects_in_image[image];
    w.relationships.push_back(vfm::RelationshipAnnotation{
        "img" + std::to_string(image), w.normalizer.MakeTerm(Pick(pool, rng)),
        w.normalizer.MakeTerm(Pick(predicates, rng)),
        w.normalizer.MakeTerm(Pick(w.concepts, rng))});
  }

  const std::vector<std::string> relations = {"HasProperty", "RelatedTo",
                                              "IsA", "CapableOf", "UsedFor"};
  const std::vector<std::string> negated = {"NotHasProperty", "NotCapableOf",
                                            "NotIsA"};
  std::bernoulli_distribution is_negated(options.negated_share);
  for (size_t i = 0; i < options.assertions; ++i) {
    ckg::Assertion a;
    a.relation = is_negated(rng) ? Pick(negated, rng) : Pick(relations, rng);
    a.start = w.normalizer.MakeTerm(Pick(w.concepts, rng));
    a.end = w.normalizer.MakeTerm(Uniform(0, 2, rng) == 0 ? Pick(w.concepts, rng)
                                                          : Pick(w.attributes, rng));
    a.weight = static_cast<double>(Uniform(1, 4, rng));
    w.raw_assertions.push_back(std::move(a));
  }

  w.kb.dbm = dbm::DefinitionStore::FromRecords(w.records);
  w.kb.vfm = vfm::VisualStore::FromAnnotations(w.regions, w.relationships);
  w.kb.ckg = ckg::CkgStore::FromAssertions(w.raw_assertions);
  return w;
}

std::vector<Triple> RandomTriples(const RandomWorld &world, size_t count,
                                  std::mt19937 &rng) {
  std::vector<std::string> attrs = world.attributes;
  attrs.insert(attrs.end(), world.concepts.begin(), world.concepts.begin() + 3);
  std::vector<Triple> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    const std::string &p = Pick(world.concepts, rng);
    const std::string &c = Uniform(0, 19, rng) == 0 ? p : Pick(world.concepts, rng);
    out.push_back(MakeTriple(world.normalizer, p, c, Pick(attrs, rng)));
  }
  return out;
}

dbm::DefinitionStore CycleStore(const Normalizer &normalizer) {
  using dbm::SemanticRole;
  return dbm::DefinitionStore::FromRecords({
      dbm::MakeRecord(normalizer, "a", "a.1",
                      {{SemanticRole::kSupertype, "b"},
                       {SemanticRole::kDifferentiaQuality, "alpha"}}),
      dbm::MakeRecord(normalizer, "b", "b.1",
                      {{SemanticRole::kSupertype, "a"},
                       {SemanticRole::kPurpose, "beta"}}),
      dbm::MakeRecord(normalizer, "c", "c.1",
                      {{SemanticRole::kSupertype, "a"},
                       {SemanticRole::kPurpose, "gamma"}}),
  });
}

}  // namespace testing
}  // namespace edam

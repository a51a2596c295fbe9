#include "edam/vfm.h"

#include <algorithm>
#include <fstream>
#include <future>
#include <istream>
#include <ostream>
#include <set>
#include <tuple>

#include "edam/error.h"
#include "json.hpp"

namespace edam {
namespace vfm {
namespace {

using nlohmann::json;

constexpr size_t kMaxWarnings = 20;

const std::vector<RegionRef> kNoRegions;
const std::vector<RelationshipAnnotation> kNoRelationships;

struct Partial {
  std::vector<RegionAnnotation> regions;
  std::vector<RelationshipAnnotation> relationships;
  LoadStats stats;
};

void Warn(LoadStats &stats, const std::string &message) {
  ++stats.skipped;
  if (stats.warnings.size() < kMaxWarnings) stats.warnings.push_back(message);
}

std::optional<std::string> IdString(const json &j, const char *key) {
  if (!j.contains(key)) return std::nullopt;
  const json &v = j[key];
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  return std::nullopt;
}

std::optional<std::string> FirstId(const json &j,
                                   std::initializer_list<const char *> keys) {
  for (const char *key : keys) {
    if (auto id = IdString(j, key)) return id;
  }
  return std::nullopt;
}

// Object names from either "names": [...] or "name": "...".
std::vector<std::string> Names(const json &j) {
  std::vector<std::string> out;
  if (j.contains("names") && j["names"].is_array()) {
    for (const auto &n : j["names"]) {
      if (n.is_string()) out.push_back(n.get<std::string>());
    }
  } else if (j.contains("name") && j["name"].is_string()) {
    out.push_back(j["name"].get<std::string>());
  }
  return out;
}

std::vector<Term> AttributeTerms(const json &list, const Normalizer &normalizer) {
  std::vector<Term> out;
  if (!list.is_array()) return out;
  for (const auto &a : list) {
    if (!a.is_string()) continue;
    for (auto &t : normalizer.Normalize(a.get<std::string>())) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

// One region/object entry of a Visual Genome image record.
void AddVgObject(const json &obj, const std::string &image_id,
                 const Normalizer &normalizer, Partial &out,
                 const std::string &where) {
  auto region = FirstId(obj, {"object_id", "id", "region_id"});
  std::vector<std::string> names = Names(obj);
  if (!region || names.empty()) {
    Warn(out.stats, where + ": object without id or name");
    return;
  }
  std::vector<Term> attributes;
  if (obj.contains("attributes")) {
    attributes = AttributeTerms(obj["attributes"], normalizer);
  }
  for (const auto &name : names) {
    try {
      out.regions.push_back(RegionAnnotation{image_id, *region,
                                             normalizer.MakeTerm(name),
                                             attributes});
      ++out.stats.regions;
    } catch (const Error &) {
      Warn(out.stats, where + ": object name '" + name + "' has no tokens");
    }
  }
}

std::optional<Term> VgEndpoint(const json &j, const Normalizer &normalizer) {
  if (!j.is_object()) return std::nullopt;
  auto names = Names(j);
  if (names.empty()) return std::nullopt;
  try {
    return normalizer.MakeTerm(names[0]);
  } catch (const Error &) {
    return std::nullopt;
  }
}

void AddVgImage(const json &image, const Normalizer &normalizer, Partial &out,
                const std::string &where) {
  if (!image.is_object()) {
    Warn(out.stats, where + ": image record is not an object");
    return;
  }
  auto image_id = FirstId(image, {"image_id", "id"});
  if (!image_id && image.contains("image") && image["image"].is_object()) {
    image_id = FirstId(image["image"], {"image_id", "id"});
  }
  if (!image_id) {
    Warn(out.stats, where + ": image record without image id");
    return;
  }
  for (const char *key : {"attributes", "objects"}) {
    if (!image.contains(key) || !image[key].is_array()) continue;
    for (const auto &obj : image[key]) {
      if (!obj.is_object()) {
        Warn(out.stats, where + ": non-object entry in '" + key + "'");
        continue;
      }
      AddVgObject(obj, *image_id, normalizer, out, where);
    }
  }
  if (image.contains("relationships") && image["relationships"].is_array()) {
    for (const auto &rel : image["relationships"]) {
      if (!rel.is_object() || !rel.contains("predicate") ||
          !rel["predicate"].is_string()) {
        Warn(out.stats, where + ": relationship without predicate");
        continue;
      }
      auto subject = VgEndpoint(rel.value("subject", json()), normalizer);
      auto object = VgEndpoint(rel.value("object", json()), normalizer);
      std::optional<Term> predicate;
      try {
        predicate = normalizer.MakeTerm(rel["predicate"].get<std::string>());
      } catch (const Error &) {
      }
      if (!subject || !object || !predicate) {
        Warn(out.stats, where + ": relationship with an empty slot");
        continue;
      }
      out.relationships.push_back(
          RelationshipAnnotation{*image_id, *subject, *predicate, *object});
      ++out.stats.relationships;
    }
  }
}

void LoadVisualGenome(std::istream &in, const std::string &path,
                      const Normalizer &normalizer, Partial &out) {
  size_t index = 0;
  json::parser_callback_t callback = [&](int depth, json::parse_event_t event,
                                         json &parsed) {
    if (depth == 1 && event == json::parse_event_t::object_end) {
      AddVgImage(parsed, normalizer, out,
                 path + " [image " + std::to_string(index++) + "]");
      return false;
    }
    return true;
  };
  try {
    json::parse(in, callback);
  } catch (const json::parse_error &e) {
    throw Error(ErrorKind::kData, std::string("invalid JSON: ") + e.what(), path, 0);
  }
}

void LoadFixtureLines(std::istream &in, const std::string &path,
                      const Normalizer &normalizer, Partial &out) {
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::string where = path + ":" + std::to_string(lineno);
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      Warn(out.stats, where + ": not a JSON object");
      continue;
    }
    auto image = FirstId(j, {"image", "image_id"});
    if (!image) {
      Warn(out.stats, where + ": missing image id");
      continue;
    }
    try {
      if (j.contains("region")) {
        auto region = IdString(j, "region");
        if (!region || !j.contains("object") || !j["object"].is_string()) {
          Warn(out.stats, where + ": region record without region id or object");
          continue;
        }
        out.regions.push_back(RegionAnnotation{
            *image, *region, normalizer.MakeTerm(j["object"].get<std::string>()),
            AttributeTerms(j.value("attributes", json::array()), normalizer)});
        ++out.stats.regions;
      } else if (j.contains("subject") && j.contains("predicate") &&
                 j.contains("object") && j["subject"].is_string() &&
                 j["predicate"].is_string() && j["object"].is_string()) {
        out.relationships.push_back(RelationshipAnnotation{
            *image, normalizer.MakeTerm(j["subject"].get<std::string>()),
            normalizer.MakeTerm(j["predicate"].get<std::string>()),
            normalizer.MakeTerm(j["object"].get<std::string>())});
        ++out.stats.relationships;
      } else {
        Warn(out.stats, where + ": neither a region nor a relationship record");
      }
    } catch (const Error &e) {
      Warn(out.stats, where + ": " + e.what());
    }
  }
}

Partial LoadOne(const std::string &path, const Normalizer &normalizer) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open scene graph file " + path);
  Partial out;
  char first = 0;
  while (in.get(first) && (first == ' ' || first == '\n' || first == '\r' ||
                           first == '\t')) {
  }
  if (!in) return out;
  in.unget();
  if (first == '[') {
    LoadVisualGenome(in, path, normalizer, out);
  } else {
    LoadFixtureLines(in, path, normalizer, out);
  }
  return out;
}

json TermJson(const Term &t) { return json::array({t.surface, t.lemma}); }
Term TermFromJson(const json &j) {
  return Term{j.at(0).get<std::string>(), j.at(1).get<std::string>()};
}

}  // namespace

VisualStore VisualStore::FromAnnotations(
    std::vector<RegionAnnotation> regions,
    std::vector<RelationshipAnnotation> relationships) {
  auto term_key = [](const Term &t) { return std::tie(t.lemma, t.surface); };
  for (auto &r : regions) {
    std::sort(r.attributes.begin(), r.attributes.end(),
              [&](const Term &a, const Term &b) { return term_key(a) < term_key(b); });
    r.attributes.erase(std::unique(r.attributes.begin(), r.attributes.end()),
                       r.attributes.end());
  }
  std::sort(regions.begin(), regions.end(),
            [&](const RegionAnnotation &a, const RegionAnnotation &b) {
              return std::tie(a.image_id, a.region_id, a.object.lemma,
                              a.object.surface) <
                     std::tie(b.image_id, b.region_id, b.object.lemma,
                              b.object.surface);
            });
  std::sort(relationships.begin(), relationships.end(),
            [&](const RelationshipAnnotation &a, const RelationshipAnnotation &b) {
              return std::tie(a.image_id, a.subject.lemma, a.predicate.lemma,
                              a.object.lemma, a.subject.surface,
                              a.predicate.surface, a.object.surface) <
                     std::tie(b.image_id, b.subject.lemma, b.predicate.lemma,
                              b.object.lemma, b.subject.surface,
                              b.predicate.surface, b.object.surface);
            });

  VisualStore store;
  for (const auto &r : regions) {
    for (const auto &a : r.attributes) {
      store.oa_index_[{r.object.lemma, a.lemma}].push_back(
          RegionRef{r.image_id, r.region_id});
    }
  }
  for (auto &[key, refs] : store.oa_index_) {
    std::sort(refs.begin(), refs.end());
    refs.erase(std::unique(refs.begin(), refs.end()), refs.end());
  }
  for (const auto &rel : relationships) {
    store.sor_index_[rel.subject.lemma].push_back(rel);
    if (rel.object.lemma != rel.subject.lemma) {
      store.sor_index_[rel.object.lemma].push_back(rel);
    }
  }
  store.regions_ = std::move(regions);
  store.relationships_ = std::move(relationships);
  return store;
}

VisualStore VisualStore::Load(const std::vector<std::string> &paths,
                              const Normalizer &normalizer, LoadStats *stats) {
  std::vector<std::future<Partial>> jobs;
  for (const auto &path : paths) {
    jobs.push_back(std::async(std::launch::async, LoadOne, path,
                              std::cref(normalizer)));
  }
  std::vector<RegionAnnotation> regions;
  std::vector<RelationshipAnnotation> relationships;
  LoadStats total;
  for (auto &job : jobs) {
    Partial part = job.get();
    std::move(part.regions.begin(), part.regions.end(), std::back_inserter(regions));
    std::move(part.relationships.begin(), part.relationships.end(),
              std::back_inserter(relationships));
    total.regions += part.stats.regions;
    total.relationships += part.stats.relationships;
    total.skipped += part.stats.skipped;
    for (auto &w : part.stats.warnings) {
      if (total.warnings.size() < kMaxWarnings) total.warnings.push_back(std::move(w));
    }
  }
  if (stats != nullptr) *stats = std::move(total);
  return FromAnnotations(std::move(regions), std::move(relationships));
}

size_t VisualStore::Count(const std::string &object,
                          const std::string &attribute) const {
  return Regions(object, attribute).size();
}

const std::vector<RegionRef> &VisualStore::Regions(
    const std::string &object, const std::string &attribute) const {
  auto it = oa_index_.find({object, attribute});
  return it == oa_index_.end() ? kNoRegions : it->second;
}

const std::vector<RelationshipAnnotation> &VisualStore::Relationships(
    const std::string &object) const {
  auto it = sor_index_.find(object);
  return it == sor_index_.end() ? kNoRelationships : it->second;
}

void VisualStore::Dump(std::ostream &out) const {
  out << json{{"format", "edam-vfm"},
              {"version", 1},
              {"regions", regions_.size()},
              {"relationships", relationships_.size()}}
             .dump()
      << '\n';
  for (const auto &r : regions_) {
    json attrs = json::array();
    for (const auto &a : r.attributes) attrs.push_back(TermJson(a));
    out << json{{"image", r.image_id},
                {"region", r.region_id},
                {"object", TermJson(r.object)},
                {"attributes", attrs}}
               .dump()
        << '\n';
  }
  for (const auto &rel : relationships_) {
    out << json{{"image", rel.image_id},
                {"subject", TermJson(rel.subject)},
                {"predicate", TermJson(rel.predicate)},
                {"object", TermJson(rel.object)}}
               .dump()
        << '\n';
  }
}

VisualStore VisualStore::LoadDump(std::istream &in) {
  std::string line;
  if (!std::getline(in, line)) throw DataError("empty visual store dump");
  json header = json::parse(line, nullptr, false);
  if (header.is_discarded() || header.value("format", "") != "edam-vfm" ||
      header.value("version", 0) != 1) {
    throw DataError("not an edam visual store dump");
  }
  const size_t n_regions = header.value("regions", size_t{0});
  const size_t n_relationships = header.value("relationships", size_t{0});
  std::vector<RegionAnnotation> regions;
  std::vector<RelationshipAnnotation> relationships;
  try {
    while (regions.size() + relationships.size() < n_regions + n_relationships &&
           std::getline(in, line)) {
      json j = json::parse(line);
      if (regions.size() < n_regions) {
        RegionAnnotation r{j.at("image").get<std::string>(),
                           j.at("region").get<std::string>(),
                           TermFromJson(j.at("object")),
                           {}};
        for (const auto &a : j.at("attributes")) r.attributes.push_back(TermFromJson(a));
        regions.push_back(std::move(r));
      } else {
        relationships.push_back(RelationshipAnnotation{
            j.at("image").get<std::string>(), TermFromJson(j.at("subject")),
            TermFromJson(j.at("predicate")), TermFromJson(j.at("object"))});
      }
    }
  } catch (const json::exception &e) {
    throw DataError(std::string("visual store dump: ") + e.what());
  }
  if (regions.size() != n_regions || relationships.size() != n_relationships) {
    throw DataError("visual store dump is truncated");
  }
  return FromAnnotations(std::move(regions), std::move(relationships));
}

Membership<VisualEvidence> HasProperty(const Term &object,
                                       const Term &attribute,
                                       const VisualStore &store,
                                       size_t min_count, bool use_sor) {
  if (min_count == 0) throw UsageError("vfm min_count must be positive");
  Membership<VisualEvidence> result;

  const auto &direct = store.Regions(object.lemma, attribute.lemma);
  if (direct.size() >= min_count) {
    result.member = true;
    result.evidence.push_back(VisualEvidence{object.lemma, direct, std::nullopt});
    return result;
  }
  if (!use_sor) return result;

  for (const auto &rel : store.Relationships(object.lemma)) {
    const std::string &other = rel.subject.lemma == object.lemma
                                   ? rel.object.lemma
                                   : rel.subject.lemma;
    const auto &regions = store.Regions(other, attribute.lemma);
    auto [lo, hi] = std::equal_range(
        regions.begin(), regions.end(), RegionRef{rel.image_id, {}},
        [](const RegionRef &a, const RegionRef &b) { return a.image_id < b.image_id; });
    if (static_cast<size_t>(hi - lo) < min_count) continue;
    result.evidence.push_back(
        VisualEvidence{other, std::vector<RegionRef>(lo, hi), rel});
  }
  result.member = !result.evidence.empty();
  return result;
}

}  // namespace vfm
}  // namespace edam

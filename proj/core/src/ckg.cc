#include "edam/ckg.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <tuple>

#include "edam/error.h"
#include "json.hpp"

namespace edam {
namespace ckg {
namespace {

using nlohmann::json;

constexpr size_t kMaxWarnings = 20;
const std::vector<size_t> kNoAssertions;
const std::vector<std::string> kNoConcepts;

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

std::string RelationName(std::string_view uri) {
  if (uri.rfind("/r/", 0) == 0) uri.remove_prefix(3);
  return std::string(uri);
}

struct ParsedConcept {
  std::string language;  // empty for plain fixture names
  std::string text;
};

// "/c/en/ice_cream/n" -> {en, "ice cream"}; plain names pass through, URLs
// and other URIs do not.
std::optional<ParsedConcept> ParseConcept(std::string_view field) {
  if (field.empty()) return std::nullopt;
  if (field[0] != '/') {
    if (field.find_first_of(":/") != std::string_view::npos) return std::nullopt;
    return ParsedConcept{"", std::string(field)};
  }
  if (field.rfind("/c/", 0) != 0) return std::nullopt;
  field.remove_prefix(3);
  size_t slash = field.find('/');
  if (slash == std::string_view::npos) return std::nullopt;
  ParsedConcept c;
  c.language = std::string(field.substr(0, slash));
  for (char ch : field.substr(slash + 1)) {
    if (ch == '/') break;
    c.text.push_back(ch == '_' ? ' ' : ch);
  }
  if (c.text.empty()) return std::nullopt;
  return c;
}

json TermJson(const Term &t) { return json::array({t.surface, t.lemma}); }
Term TermFromJson(const json &j) {
  return Term{j.at(0).get<std::string>(), j.at(1).get<std::string>()};
}

}  // namespace

const char *DirectionName(Direction direction) {
  return direction == Direction::kForward ? "forward" : "backward";
}

bool IsNegated(std::string_view relation) {
  if (relation.rfind("/r/", 0) == 0) relation.remove_prefix(3);
  return relation.rfind("Not", 0) == 0;
}

CkgStore CkgStore::FromAssertions(std::vector<Assertion> assertions,
                                  const std::set<std::string> &allowlist) {
  std::erase_if(assertions, [&](const Assertion &a) {
    return IsNegated(a.relation) ||
           (!allowlist.empty() && allowlist.count(a.relation) == 0);
  });
  std::sort(assertions.begin(), assertions.end(),
            [](const Assertion &a, const Assertion &b) {
              return std::tie(a.start.lemma, a.relation, a.end.lemma, a.weight,
                              a.start.surface, a.end.surface) <
                     std::tie(b.start.lemma, b.relation, b.end.lemma, b.weight,
                              b.start.surface, b.end.surface);
            });

  CkgStore store;
  std::map<std::string, std::vector<std::string>> neighbours;
  for (size_t i = 0; i < assertions.size(); ++i) {
    const Assertion &a = assertions[i];
    store.by_concept_[a.start.lemma].push_back(i);
    if (a.end.lemma != a.start.lemma) store.by_concept_[a.end.lemma].push_back(i);
    neighbours[a.start.lemma].push_back(a.end.lemma);
    neighbours[a.end.lemma].push_back(a.start.lemma);
  }
  for (const auto &[concept_lemma, list] : neighbours) {
    auto parts = SplitLemma(concept_lemma);
    if (parts.size() < 2) continue;
    for (const auto &p : parts) store.token_index_[p].push_back(concept_lemma);
  }
  for (auto &[token, concepts] : store.token_index_) {
    concepts.erase(std::unique(concepts.begin(), concepts.end()), concepts.end());
  }
  std::vector<Document> documents;
  documents.reserve(neighbours.size());
  for (auto &[concept_lemma, list] : neighbours) {
    documents.push_back(Document{concept_lemma, "neighbours", std::move(list)});
  }
  store.space_ = ExplicitVectorSpace::Build(std::move(documents));
  store.assertions_ = std::move(assertions);
  return store;
}

CkgStore CkgStore::Load(const std::string &path, const Normalizer &normalizer,
                        const LoadOptions &options, LoadStats *stats) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open assertion file " + path);

  LoadStats local;
  auto warn = [&](size_t lineno, const std::string &msg) {
    ++local.skipped_malformed;
    if (local.warnings.size() < kMaxWarnings) {
      local.warnings.push_back(path + ":" + std::to_string(lineno) + ": " + msg);
    }
  };
  auto language_ok = [&](const ParsedConcept &c) {
    return options.language.empty() || c.language.empty() ||
           c.language == options.language;
  };

  std::vector<Assertion> assertions;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    ++local.lines;
    auto fields = SplitTabs(line);
    std::string_view rel_field, start_field, end_field;
    double weight = 1.0;
    if (fields.size() == 5) {
      rel_field = fields[1];
      start_field = fields[2];
      end_field = fields[3];
      json meta = json::parse(fields[4], nullptr, false);
      if (meta.is_discarded() || !meta.is_object()) {
        warn(lineno, "metadata is not a JSON object");
        continue;
      }
      if (meta.contains("weight")) {
        if (!meta["weight"].is_number()) {
          warn(lineno, "non-numeric weight");
          continue;
        }
        weight = meta["weight"].get<double>();
      }
    } else if (fields.size() == 3 || fields.size() == 4) {
      rel_field = fields[0];
      start_field = fields[1];
      end_field = fields[2];
      if (fields.size() == 4) {
        try {
          size_t used = 0;
          weight = std::stod(std::string(fields[3]), &used);
          if (used != fields[3].size()) throw std::invalid_argument("trailing");
        } catch (const std::exception &) {
          warn(lineno, "non-numeric weight '" + std::string(fields[3]) + "'");
          continue;
        }
      }
    } else {
      warn(lineno, "expected 3, 4 or 5 tab-separated fields, got " +
                       std::to_string(fields.size()));
      continue;
    }
    if (weight < 0) {
      warn(lineno, "negative weight");
      continue;
    }
    std::string relation = RelationName(rel_field);
    if (relation.empty()) {
      warn(lineno, "empty relation");
      continue;
    }
    if (IsNegated(relation)) {
      ++local.negated;
      continue;
    }
    auto start = ParseConcept(start_field);
    auto end = ParseConcept(end_field);
    if (!start || !end) {
      // Non-concept endpoints (e.g. ExternalURL targets) fall outside the
      // concept space.
      ++local.non_concept;
      continue;
    }
    if (!language_ok(*start) || !language_ok(*end)) {
      ++local.other_language;
      continue;
    }
    if (!options.relation_allowlist.empty() &&
        options.relation_allowlist.count(relation) == 0) {
      ++local.disallowed_relation;
      continue;
    }
    try {
      assertions.push_back(Assertion{relation, normalizer.MakeTerm(start->text),
                                     normalizer.MakeTerm(end->text), weight});
    } catch (const Error &e) {
      warn(lineno, e.what());
      continue;
    }
    ++local.loaded;
  }
  if (stats != nullptr) *stats = std::move(local);
  return FromAssertions(std::move(assertions), options.relation_allowlist);
}

const std::vector<size_t> &CkgStore::ByConcept(const std::string &lemma) const {
  auto it = by_concept_.find(lemma);
  return it == by_concept_.end() ? kNoAssertions : it->second;
}

const std::vector<std::string> &CkgStore::ConceptsWithToken(
    const std::string &token) const {
  auto it = token_index_.find(token);
  return it == token_index_.end() ? kNoConcepts : it->second;
}

void CkgStore::Dump(std::ostream &out) const {
  out << json{{"format", "edam-ckg"},
              {"version", 1},
              {"assertions", assertions_.size()}}
             .dump()
      << '\n';
  for (const auto &a : assertions_) {
    out << json{{"relation", a.relation},
                {"start", TermJson(a.start)},
                {"end", TermJson(a.end)},
                {"weight", a.weight}}
               .dump()
        << '\n';
  }
}

CkgStore CkgStore::LoadDump(std::istream &in) {
  std::string line;
  if (!std::getline(in, line)) throw DataError("empty assertion store dump");
  json header = json::parse(line, nullptr, false);
  if (header.is_discarded() || header.value("format", "") != "edam-ckg" ||
      header.value("version", 0) != 1) {
    throw DataError("not an edam assertion store dump");
  }
  const size_t expected = header.value("assertions", size_t{0});
  std::vector<Assertion> assertions;
  try {
    while (assertions.size() < expected && std::getline(in, line)) {
      json j = json::parse(line);
      assertions.push_back(Assertion{j.at("relation").get<std::string>(),
                                     TermFromJson(j.at("start")),
                                     TermFromJson(j.at("end")),
                                     j.at("weight").get<double>()});
    }
  } catch (const json::exception &e) {
    throw DataError(std::string("assertion store dump: ") + e.what());
  }
  if (assertions.size() != expected) {
    throw DataError("assertion store dump is truncated");
  }
  return FromAssertions(std::move(assertions));
}

Membership<AssertionEvidence> HasProperty(const Term &term,
                                          const Term &attribute,
                                          const CkgStore &store,
                                          bool token_match) {
  auto matches = [&](const std::string &concept_lemma, const std::string &query) {
    if (concept_lemma == query) return true;
    if (!token_match) return false;
    auto parts = SplitLemma(concept_lemma);
    return parts.size() > 1 &&
           std::find(parts.begin(), parts.end(), query) != parts.end();
  };

  std::vector<std::string> candidates{term.lemma};
  if (token_match) {
    const auto &extra = store.ConceptsWithToken(term.lemma);
    candidates.insert(candidates.end(), extra.begin(), extra.end());
  }
  std::vector<size_t> hits;
  for (const auto &c : candidates) {
    for (size_t index : store.ByConcept(c)) hits.push_back(index);
  }
  std::sort(hits.begin(), hits.end());
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());

  Membership<AssertionEvidence> result;
  for (size_t index : hits) {
    const Assertion &a = store.assertions()[index];
    std::optional<Direction> direction;
    if (matches(a.start.lemma, term.lemma) && matches(a.end.lemma, attribute.lemma)) {
      direction = Direction::kForward;
    } else if (matches(a.end.lemma, term.lemma) &&
               matches(a.start.lemma, attribute.lemma)) {
      direction = Direction::kBackward;
    }
    if (!direction) continue;
    result.evidence.push_back(AssertionEvidence{
        a.relation, a.start.lemma, a.end.lemma, a.weight, *direction});
  }
  result.member = !result.evidence.empty();
  return result;
}

}  // namespace ckg
}  // namespace edam

#include "edam/dbm.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include "edam/error.h"
#include "json.hpp"

namespace edam {
namespace dbm {
namespace {

using nlohmann::json;

constexpr const char *kRoleNames[kRoleCount] = {
    "supertype",         "differentia_quality",  "differentia_event",
    "event_location",    "purpose",              "accessory_determiner",
    "origin_location",
};

const std::vector<DefinitionRecord> kNoRecords;
const std::set<std::string> kNoSupertypes;

std::string DocumentId(const DefinitionRecord &record) {
  return record.term.lemma + "#" + record.sense_id;
}

// True if `parts` occurs as a contiguous run of lemmas in `tokens`.
bool ContainsRun(const std::vector<Term> &tokens,
                 const std::vector<std::string> &parts) {
  if (parts.empty() || tokens.size() < parts.size()) return false;
  for (size_t i = 0; i + parts.size() <= tokens.size(); ++i) {
    bool match = true;
    for (size_t j = 0; j < parts.size() && match; ++j) {
      match = tokens[i + j].lemma == parts[j];
    }
    if (match) return true;
  }
  return false;
}

std::string ScalarString(const json &value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  return value.dump();
}

json TermJson(const Term &t) { return json::array({t.surface, t.lemma}); }
Term TermFromJson(const json &j) {
  return Term{j.at(0).get<std::string>(), j.at(1).get<std::string>()};
}

}  // namespace

const char *RoleName(SemanticRole role) {
  return kRoleNames[static_cast<int>(role)];
}

std::optional<SemanticRole> ParseRole(std::string_view name) {
  for (int i = 0; i < kRoleCount; ++i) {
    if (name == kRoleNames[i]) return static_cast<SemanticRole>(i);
  }
  return std::nullopt;
}

DefinitionRecord MakeRecord(
    const Normalizer &normalizer, std::string_view term, std::string sense_id,
    const std::vector<std::pair<SemanticRole, std::string>> &segments) {
  DefinitionRecord record;
  record.term = normalizer.MakeTerm(term);
  record.sense_id = std::move(sense_id);
  for (const auto &[role, text] : segments) {
    record.segments.push_back(Segment{role, text, normalizer.Normalize(text)});
  }
  return record;
}

std::optional<std::string> SupertypeHead(const Segment &segment) {
  if (segment.role != SemanticRole::kSupertype || segment.tokens.empty()) {
    return std::nullopt;
  }
  return segment.tokens.back().lemma;
}

DefinitionStore DefinitionStore::FromRecords(
    std::vector<DefinitionRecord> records) {
  DefinitionStore store;
  std::set<std::pair<std::string, std::string>> seen;
  std::vector<Document> documents;
  for (auto &record : records) {
    if (!seen.emplace(record.term.lemma, record.sense_id).second) {
      throw DataError("duplicate definition for term '" + record.term.lemma +
                      "' sense '" + record.sense_id + "'");
    }
    std::map<SemanticRole, std::vector<std::string>> by_role;
    for (const auto &segment : record.segments) {
      auto &tokens = by_role[segment.role];
      for (const auto &t : segment.tokens) tokens.push_back(t.lemma);
      if (auto head = SupertypeHead(segment)) {
        store.supertype_edges_[record.term.lemma].insert(*head);
      }
    }
    for (auto &[role, tokens] : by_role) {
      documents.push_back(
          Document{DocumentId(record), RoleName(role), std::move(tokens)});
    }
    ++store.record_count_;
    store.records_[record.term.lemma].push_back(std::move(record));
  }
  store.space_ = ExplicitVectorSpace::Build(std::move(documents));
  return store;
}

DefinitionStore DefinitionStore::Load(const std::string &path,
                                      const Normalizer &normalizer) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open definitions file " + path);

  std::vector<DefinitionRecord> records;
  std::set<std::pair<std::string, std::string>> seen;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error &e) {
      throw Error(ErrorKind::kData, std::string("invalid JSON: ") + e.what(),
                  path, lineno);
    }
    auto fail = [&](const std::string &field, const std::string &msg) {
      return Error(ErrorKind::kData, msg, path, lineno, field);
    };
    if (!j.is_object()) throw fail("", "record is not a JSON object");
    if (!j.contains("term") || !j["term"].is_string() ||
        j["term"].get<std::string>().empty()) {
      throw fail("term", "missing or empty");
    }
    if (!j.contains("sense") || !(j["sense"].is_string() ||
                                  j["sense"].is_number_integer())) {
      throw fail("sense", "missing or not a string");
    }
    if (!j.contains("segments") || !j["segments"].is_array()) {
      throw fail("segments", "missing or not an array");
    }
    std::vector<std::pair<SemanticRole, std::string>> segments;
    for (size_t i = 0; i < j["segments"].size(); ++i) {
      const json &seg = j["segments"][i];
      std::string prefix = "segments[" + std::to_string(i) + "]";
      if (!seg.is_object()) throw fail(prefix, "segment is not an object");
      if (!seg.contains("role") || !seg["role"].is_string()) {
        throw fail(prefix + ".role", "missing or not a string");
      }
      auto role = ParseRole(seg["role"].get<std::string>());
      if (!role) {
        throw fail(prefix + ".role",
                   "unknown role label '" + seg["role"].get<std::string>() + "'");
      }
      if (!seg.contains("text") || !seg["text"].is_string()) {
        throw fail(prefix + ".text", "missing or not a string");
      }
      segments.emplace_back(*role, seg["text"].get<std::string>());
    }
    DefinitionRecord record;
    try {
      record = MakeRecord(normalizer, j["term"].get<std::string>(),
                          ScalarString(j["sense"]), segments);
    } catch (const Error &e) {
      throw fail("term", e.what());
    }
    if (!seen.emplace(record.term.lemma, record.sense_id).second) {
      throw fail("sense", "duplicate definition for term '" +
                              record.term.lemma + "' sense '" +
                              record.sense_id + "'");
    }
    records.push_back(std::move(record));
  }
  return FromRecords(std::move(records));
}

const std::vector<DefinitionRecord> &DefinitionStore::Records(
    const std::string &lemma) const {
  auto it = records_.find(lemma);
  return it == records_.end() ? kNoRecords : it->second;
}

const std::set<std::string> &DefinitionStore::Supertypes(
    const std::string &lemma) const {
  auto it = supertype_edges_.find(lemma);
  return it == supertype_edges_.end() ? kNoSupertypes : it->second;
}

std::vector<ExpandedRecord> DefinitionStore::Expand(const Term &term,
                                                    size_t max_depth) const {
  std::vector<ExpandedRecord> out;
  std::set<std::string> visited{term.lemma};
  std::map<std::string, std::vector<std::string>> frontier{
      {term.lemma, {term.lemma}}};
  for (size_t depth = 0;; ++depth) {
    for (const auto &[lemma, path] : frontier) {
      for (const auto &record : Records(lemma)) {
        out.push_back(ExpandedRecord{&record, depth, path});
      }
    }
    if (depth == max_depth) break;
    std::map<std::string, std::vector<std::string>> next;
    for (const auto &[lemma, path] : frontier) {
      for (const auto &parent : Supertypes(lemma)) {
        if (visited.count(parent) || next.count(parent)) continue;
        auto extended = path;
        extended.push_back(parent);
        next.emplace(parent, std::move(extended));
      }
    }
    if (next.empty()) break;
    for (const auto &[lemma, path] : next) visited.insert(lemma);
    frontier = std::move(next);
  }
  return out;
}

void DefinitionStore::Dump(std::ostream &out) const {
  out << json{{"format", "edam-dbm"}, {"version", 1}, {"records", record_count_}}
             .dump()
      << '\n';
  for (const auto &[lemma, records] : records_) {
    for (const auto &record : records) {
      json segments = json::array();
      for (const auto &seg : record.segments) {
        json tokens = json::array();
        for (const auto &t : seg.tokens) tokens.push_back(TermJson(t));
        segments.push_back(
            {{"role", RoleName(seg.role)}, {"text", seg.text}, {"tokens", tokens}});
      }
      out << json{{"term", TermJson(record.term)},
                  {"sense", record.sense_id},
                  {"segments", segments}}
                 .dump()
          << '\n';
    }
  }
}

DefinitionStore DefinitionStore::LoadDump(std::istream &in) {
  std::string line;
  if (!std::getline(in, line)) throw DataError("empty definition store dump");
  json header = json::parse(line, nullptr, false);
  if (header.is_discarded() || header.value("format", "") != "edam-dbm" ||
      header.value("version", 0) != 1) {
    throw DataError("not an edam definition store dump");
  }
  std::vector<DefinitionRecord> records;
  size_t lineno = 1;
  try {
    while (std::getline(in, line)) {
      ++lineno;
      json j = json::parse(line);
      DefinitionRecord record;
      record.term = TermFromJson(j.at("term"));
      record.sense_id = j.at("sense").get<std::string>();
      for (const auto &seg : j.at("segments")) {
        auto role = ParseRole(seg.at("role").get<std::string>());
        if (!role) throw DataError("unknown role in dump");
        Segment s{*role, seg.at("text").get<std::string>(), {}};
        for (const auto &t : seg.at("tokens")) s.tokens.push_back(TermFromJson(t));
        record.segments.push_back(std::move(s));
      }
      records.push_back(std::move(record));
    }
  } catch (const json::exception &e) {
    throw DataError("definition store dump line " + std::to_string(lineno) +
                    ": " + e.what());
  }
  if (records.size() != header.value("records", size_t{0})) {
    throw DataError("definition store dump is truncated");
  }
  return FromRecords(std::move(records));
}

std::vector<DefinitionRecord> ExpandSupertypes(const Term &term,
                                               const DefinitionStore &store,
                                               size_t max_depth) {
  std::vector<DefinitionRecord> out;
  for (const auto &expanded : store.Expand(term, max_depth)) {
    out.push_back(*expanded.record);
  }
  return out;
}

Membership<DefinitionEvidence> HasProperty(const Term &term,
                                           const Term &attribute,
                                           const DefinitionStore &store,
                                           size_t max_depth) {
  Membership<DefinitionEvidence> result;
  const std::vector<std::string> parts = SplitLemma(attribute.lemma);
  if (parts.empty()) return result;
  const ExplicitVectorSpace &space = store.space();

  for (const auto &expanded : store.Expand(term, max_depth)) {
    const DefinitionRecord &record = *expanded.record;
    const std::string doc_id = DocumentId(record);
    if (!space.Contains(parts[0], doc_id)) continue;
    for (const auto &segment : record.segments) {
      if (!space.Contains(parts[0], doc_id, RoleName(segment.role))) continue;
      if (!ContainsRun(segment.tokens, parts)) continue;
      result.evidence.push_back(DefinitionEvidence{
          record.term.lemma, record.sense_id, segment.role, segment.text,
          expanded.path});
    }
  }
  result.member = !result.evidence.empty();
  return result;
}

}  // namespace dbm
}  // namespace edam

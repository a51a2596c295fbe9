#include "oracles.h"

#include <cctype>
#include <cmath>
#include <deque>
#include <map>
#include <set>

namespace edam {
namespace testing {
namespace {

std::vector<std::string> Parts(const std::string &lemma) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : lemma) {
    if (c == '_') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

bool HasRun(const std::vector<Term> &tokens, const std::vector<std::string> &parts) {
  for (size_t i = 0; i + parts.size() <= tokens.size(); ++i) {
    bool all = true;
    for (size_t k = 0; k < parts.size() && all; ++k) {
      all = tokens[i + k].lemma == parts[k];
    }
    if (all) return true;
  }
  return false;
}

bool Negated(const std::string &relation) {
  return relation.size() > 3 && relation.compare(0, 3, "Not") == 0 &&
         std::isupper(static_cast<unsigned char>(relation[3]));
}

}  // namespace

double OracleIdf(const std::vector<Document> &documents, const std::string &lemma) {
  std::set<std::string> ids, with;
  for (const auto &d : documents) {
    ids.insert(d.id);
    for (const auto &t : d.tokens) {
      if (t == lemma) with.insert(d.id);
    }
  }
  double n = static_cast<double>(ids.size());
  if (with.empty()) return std::log(n + 1);
  return std::log(n / static_cast<double>(with.size()));
}

bool OracleDbm(const std::vector<dbm::DefinitionRecord> &records,
               const std::string &term, const std::string &attribute,
               size_t max_depth) {
  std::map<std::string, std::set<std::string>> heads;
  for (const auto &r : records) {
    for (const auto &s : r.segments) {
      if (s.role == dbm::SemanticRole::kSupertype && !s.tokens.empty()) {
        heads[r.term.lemma].insert(s.tokens.back().lemma);
      }
    }
  }
  std::set<std::string> reached{term};
  std::deque<std::pair<std::string, size_t>> queue{{term, 0}};
  while (!queue.empty()) {
    auto [t, depth] = queue.front();
    queue.pop_front();
    if (depth == max_depth) continue;
    for (const auto &h : heads[t]) {
      if (reached.insert(h).second) queue.emplace_back(h, depth + 1);
    }
  }
  const auto parts = Parts(attribute);
  for (const auto &r : records) {
    if (!reached.contains(r.term.lemma)) continue;
    for (const auto &s : r.segments) {
      if (HasRun(s.tokens, parts)) return true;
    }
  }
  return false;
}

bool OracleVfm(const std::vector<vfm::RegionAnnotation> &regions,
               const std::vector<vfm::RelationshipAnnotation> &relationships,
               const std::string &object, const std::string &attribute,
               size_t min_count, bool use_sor) {
  auto count = [&](const std::string &obj, const std::string *image) {
    std::set<std::pair<std::string, std::string>> hits;
    for (const auto &r : regions) {
      if (r.object.lemma != obj) continue;
      if (image != nullptr && r.image_id != *image) continue;
      for (const auto &a : r.attributes) {
        if (a.lemma == attribute) hits.emplace(r.image_id, r.region_id);
      }
    }
    return hits.size();
  };
  if (count(object, nullptr) >= min_count) return true;
  if (!use_sor) return false;
  for (const auto &rel : relationships) {
    std::string other;
    if (rel.subject.lemma == object) {
      other = rel.object.lemma;
    } else if (rel.object.lemma == object) {
      other = rel.subject.lemma;
    } else {
      continue;
    }
    if (count(other, &rel.image_id) >= min_count) return true;
  }
  return false;
}

bool OracleCkg(const std::vector<ckg::Assertion> &raw_assertions,
               const std::string &term, const std::string &attribute) {
  for (const auto &a : raw_assertions) {
    if (Negated(a.relation)) continue;
    if ((a.start.lemma == term && a.end.lemma == attribute) ||
        (a.end.lemma == term && a.start.lemma == attribute)) {
      return true;
    }
  }
  return false;
}

std::string CheckEvidence(const Triple &triple, const Verdict &verdict,
                          const std::vector<dbm::DefinitionRecord> &records,
                          const std::vector<vfm::RegionAnnotation> &regions,
                          const std::vector<ckg::Assertion> &raw_assertions,
                          const Normalizer &normalizer) {
  if (!verdict.discriminative) return {};
  if (!verdict.explanation || !verdict.deciding_component) {
    return "positive verdict without explanation";
  }
  const Explanation &ex = *verdict.explanation;
  if (ComponentOf(ex.pivot_evidence) != *verdict.deciding_component) {
    return "evidence from a different component";
  }
  if (EvidenceSize(ex.pivot_evidence) == 0) return "empty evidence";
  if (ex.rendered_text.empty()) return "empty explanation text";
  const std::string &attr = triple.attribute.lemma;
  const auto parts = Parts(attr);

  if (const auto *dbm_ev =
          std::get_if<std::vector<dbm::DefinitionEvidence>>(&ex.pivot_evidence)) {
    for (const auto &e : *dbm_ev) {
      if (!HasRun(normalizer.Normalize(e.text), parts)) {
        return "definition text '" + e.text + "' lacks " + attr;
      }
      if (e.path.empty() || e.path.front() != triple.pivot.lemma ||
          e.path.back() != e.term) {
        return "bad supertype path";
      }
      bool found = false;
      for (const auto &r : records) {
        if (r.term.lemma != e.term || r.sense_id != e.sense_id) continue;
        for (const auto &s : r.segments) found |= s.text == e.text && s.role == e.role;
      }
      if (!found) return "evidence segment not in the definitions";
    }
  } else if (const auto *ckg_ev = std::get_if<std::vector<ckg::AssertionEvidence>>(
                 &ex.pivot_evidence)) {
    for (const auto &e : *ckg_ev) {
      if (Negated(e.relation)) return "negated edge used as evidence";
      bool links = (e.start == triple.pivot.lemma && e.end == attr) ||
                   (e.end == triple.pivot.lemma && e.start == attr);
      if (!links) return "edge does not link pivot and attribute";
      bool found = false;
      for (const auto &a : raw_assertions) {
        found |= a.relation == e.relation && a.start.lemma == e.start &&
                 a.end.lemma == e.end;
      }
      if (!found) return "edge not in the assertions";
    }
  } else {
    for (const auto &e : std::get<std::vector<vfm::VisualEvidence>>(ex.pivot_evidence)) {
      if (e.regions.empty()) return "visual evidence without regions";
      if (!e.via && e.object != triple.pivot.lemma) return "wrong object";
      for (const auto &ref : e.regions) {
        bool found = false;
        for (const auto &r : regions) {
          if (r.image_id != ref.image_id || r.region_id != ref.region_id ||
              r.object.lemma != e.object) {
            continue;
          }
          for (const auto &a : r.attributes) found |= a.lemma == attr;
        }
        if (!found) return "region does not carry the attribute";
      }
    }
  }
  return {};
}

}  // namespace testing
}  // namespace edam

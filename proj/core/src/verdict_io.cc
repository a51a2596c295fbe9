#include "edam/verdict_io.h"

#include "edam/csv.h"
#include "edam/error.h"
#include "json.hpp"

namespace edam {
namespace {

using nlohmann::json;

json TermJson(const Term &t) { return json::array({t.surface, t.lemma}); }
Term TermFromJson(const json &j) {
  return Term{j.at(0).get<std::string>(), j.at(1).get<std::string>()};
}

json EvidenceJson(const Evidence &evidence) {
  json out = json::array();
  switch (ComponentOf(evidence)) {
    case Component::kDbm:
      for (const auto &e : std::get<0>(evidence)) {
        out.push_back({{"term", e.term},
                       {"sense", e.sense_id},
                       {"role", dbm::RoleName(e.role)},
                       {"text", e.text},
                       {"path", e.path}});
      }
      break;
    case Component::kCkg:
      for (const auto &e : std::get<1>(evidence)) {
        out.push_back({{"relation", e.relation},
                       {"start", e.start},
                       {"end", e.end},
                       {"weight", e.weight},
                       {"direction", ckg::DirectionName(e.direction)}});
      }
      break;
    case Component::kVfm:
      for (const auto &e : std::get<2>(evidence)) {
        json regions = json::array();
        for (const auto &r : e.regions) {
          regions.push_back(json::array({r.image_id, r.region_id}));
        }
        json via = nullptr;
        if (e.via) {
          via = {{"image", e.via->image_id},
                 {"subject", TermJson(e.via->subject)},
                 {"predicate", TermJson(e.via->predicate)},
                 {"object", TermJson(e.via->object)}};
        }
        out.push_back({{"object", e.object}, {"regions", regions}, {"via", via}});
      }
      break;
  }
  return out;
}

Evidence EvidenceFromJson(Component component, const json &items) {
  switch (component) {
    case Component::kDbm: {
      std::vector<dbm::DefinitionEvidence> list;
      for (const auto &j : items) {
        auto role = dbm::ParseRole(j.at("role").get<std::string>());
        if (!role) throw DataError("verdict evidence has an unknown role");
        list.push_back(dbm::DefinitionEvidence{
            j.at("term").get<std::string>(), j.at("sense").get<std::string>(),
            *role, j.at("text").get<std::string>(),
            j.at("path").get<std::vector<std::string>>()});
      }
      return list;
    }
    case Component::kCkg: {
      std::vector<ckg::AssertionEvidence> list;
      for (const auto &j : items) {
        std::string dir = j.at("direction").get<std::string>();
        list.push_back(ckg::AssertionEvidence{
            j.at("relation").get<std::string>(), j.at("start").get<std::string>(),
            j.at("end").get<std::string>(), j.at("weight").get<double>(),
            dir == "backward" ? ckg::Direction::kBackward
                              : ckg::Direction::kForward});
      }
      return list;
    }
    case Component::kVfm: {
      std::vector<vfm::VisualEvidence> list;
      for (const auto &j : items) {
        vfm::VisualEvidence e;
        e.object = j.at("object").get<std::string>();
        for (const auto &r : j.at("regions")) {
          e.regions.push_back(
              vfm::RegionRef{r.at(0).get<std::string>(), r.at(1).get<std::string>()});
        }
        const json &via = j.at("via");
        if (!via.is_null()) {
          e.via = vfm::RelationshipAnnotation{
              via.at("image").get<std::string>(), TermFromJson(via.at("subject")),
              TermFromJson(via.at("predicate")), TermFromJson(via.at("object"))};
        }
        list.push_back(std::move(e));
      }
      return list;
    }
  }
  throw DataError("unknown component");
}

}  // namespace

std::string VerdictToJson(const Triple &triple, const Verdict &verdict,
                          bool verbose) {
  json j{{"pivot", triple.pivot.surface},
         {"comparison", triple.comparison.surface},
         {"attribute", triple.attribute.surface},
         {"label", verdict.discriminative ? 1 : 0},
         {"deciding_component", nullptr},
         {"explanation", nullptr},
         {"evidence", nullptr}};
  if (verdict.discriminative) {
    if (!verdict.deciding_component || !verdict.explanation) {
      throw InvariantError("positive verdict without component or explanation");
    }
    const Explanation &e = *verdict.explanation;
    j["deciding_component"] = ComponentName(*verdict.deciding_component);
    j["explanation"] = e.rendered_text;
    j["template_id"] = e.template_id;
    j["kind"] = ExplanationKindName(e.kind);
    j["comparison_check"] = e.comparison_check;
    j["evidence"] = EvidenceJson(e.pivot_evidence);
  } else if (verbose) {
    j["note"] = "no evidence found in any component";
  }
  return j.dump();
}

StoredVerdict ParseVerdictJson(const std::string &line) {
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw DataError("verdict record is not a JSON object");
  }
  StoredVerdict v;
  try {
    v.pivot = j.at("pivot").get<std::string>();
    v.comparison = j.at("comparison").get<std::string>();
    v.attribute = j.at("attribute").get<std::string>();
    v.label = j.at("label").get<int>() == 1;
    if (v.label) {
      auto component = ParseComponent(j.at("deciding_component").get<std::string>());
      if (!component) throw DataError("verdict record has an unknown component");
      v.deciding_component = component;
      v.template_id = j.at("template_id").get<std::string>();
      v.explanation = j.at("explanation").get<std::string>();
      v.evidence = EvidenceFromJson(*component, j.at("evidence"));
    }
  } catch (const json::exception &e) {
    throw DataError(std::string("malformed verdict record: ") + e.what());
  }
  return v;
}

ExplanationInput StoredVerdict::ToExplanationInput() const {
  if (!evidence) {
    throw InvariantError("verdict for (" + pivot + ", " + comparison + ", " +
                         attribute + ") carries no evidence");
  }
  return ExplanationInput{pivot, comparison, attribute, *evidence};
}

std::string SemEvalLine(const Triple &triple, bool label) {
  return CsvField(triple.pivot.surface) + "," + CsvField(triple.comparison.surface) +
         "," + CsvField(triple.attribute.surface) + "," + (label ? "1" : "0");
}

}  // namespace edam

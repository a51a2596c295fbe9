#include "edam/explanation.h"

#include <map>

#include "edam/error.h"

namespace edam {
namespace {

using Fields = std::map<std::string, std::string>;

constexpr size_t kMaxListedRegions = 5;

struct Template {
  std::string id;
  Component component;
  std::string text;
};

const std::vector<Template> &Registry() {
  static const std::vector<Template> *registry = new std::vector<Template>{
      {"dbm.definition.v1", Component::kDbm,
       "{attribute} is a discriminative attribute of {pivot} compared to "
       "{comparison}: the definition of {owner} (sense {sense}, role: {role}) "
       "states '{text}'{inherited}{more}, while no definition of {comparison} "
       "contains '{attribute}'."},
      {"dbm.compact.v1", Component::kDbm,
       "{pivot}/{comparison}/{attribute}: DBM {owner}#{sense} {role}"},
      {"ckg.edge.v1", Component::kCkg,
       "{attribute} is a discriminative attribute of {pivot} compared to "
       "{comparison}: ConceptNet-style edge {start} -{relation}-> {end}{more}; "
       "no edge links {comparison} and {attribute}."},
      {"ckg.compact.v1", Component::kCkg,
       "{pivot}/{comparison}/{attribute}: CKG {start} {relation} {end}"},
      {"vfm.regions.v1", Component::kVfm,
       "{attribute} is a discriminative attribute of {pivot} compared to "
       "{comparison}: '{attribute}' co-occurs with '{object}' in {count} "
       "({regions}){via} and never with '{comparison}'."},
      {"vfm.compact.v1", Component::kVfm,
       "{pivot}/{comparison}/{attribute}: VFM {count} [{regions}]"},
  };
  return *registry;
}

const Template &FindTemplate(const std::string &id) {
  for (const auto &t : Registry()) {
    if (t.id == id) return t;
  }
  throw UsageError("unknown explanation template '" + id + "'");
}

std::string Substitute(const Template &tmpl, const Fields &fields) {
  std::string out;
  const std::string &text = tmpl.text;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '{') {
      out.push_back(text[i]);
      continue;
    }
    size_t close = text.find('}', i);
    std::string name = text.substr(i + 1, close - i - 1);
    auto it = fields.find(name);
    if (it == fields.end()) {
      throw InvariantError("template '" + tmpl.id + "' has unbound field '" +
                           name + "'");
    }
    out += it->second;
    i = close;
  }
  return out;
}

std::string Plural(size_t n, const std::string &noun) {
  return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

std::string JoinPath(const std::vector<std::string> &path) {
  std::string out;
  for (size_t i = 0; i < path.size(); ++i) {
    if (i > 0) out += " -> ";
    out += path[i];
  }
  return out;
}

void AddDbmFields(const ExplanationInput &input,
                  const std::vector<dbm::DefinitionEvidence> &evidence,
                  Fields &fields) {
  const auto &first = evidence.front();
  fields["owner"] = first.term;
  fields["sense"] = first.sense_id;
  fields["role"] = dbm::RoleName(first.role);
  fields["text"] = first.text;
  fields["inherited"] =
      first.path.size() > 1
          ? " (inherited by " + input.pivot + " via supertype chain " +
                JoinPath(first.path) + ")"
          : "";
  fields["more"] = evidence.size() > 1
                       ? "; " + Plural(evidence.size() - 1, "further segment") +
                             " mention it"
                       : "";
}

void AddCkgFields(const std::vector<ckg::AssertionEvidence> &evidence,
                  Fields &fields) {
  const auto &first = evidence.front();
  fields["start"] = first.start;
  fields["end"] = first.end;
  fields["relation"] = first.relation;
  fields["more"] = evidence.size() > 1
                       ? " (+" + Plural(evidence.size() - 1, "further edge") + ")"
                       : "";
}

void AddVfmFields(const std::vector<vfm::VisualEvidence> &evidence,
                  Fields &fields) {
  const auto &first = evidence.front();
  fields["object"] = first.object;
  fields["count"] = Plural(first.regions.size(), "region");
  std::string regions;
  for (size_t i = 0; i < first.regions.size() && i < kMaxListedRegions; ++i) {
    if (i > 0) regions += ", ";
    regions += "img " + first.regions[i].image_id + "/" + first.regions[i].region_id;
  }
  if (first.regions.size() > kMaxListedRegions) {
    regions += ", ... +" + std::to_string(first.regions.size() - kMaxListedRegions);
  }
  fields["regions"] = regions;
  if (first.via) {
    const auto &rel = *first.via;
    fields["via"] = " through the relationship '" + rel.subject.lemma + " " +
                    rel.predicate.lemma + " " + rel.object.lemma + "' in img " +
                    rel.image_id;
  } else {
    fields["via"] = "";
  }
}

}  // namespace

const char *ComponentName(Component component) {
  switch (component) {
    case Component::kDbm: return "DBM";
    case Component::kCkg: return "CKG";
    case Component::kVfm: return "VFM";
  }
  return "?";
}

std::optional<Component> ParseComponent(std::string_view name) {
  for (Component c : kAllComponents) {
    std::string_view canonical = ComponentName(c);
    if (name.size() != canonical.size()) continue;
    bool equal = true;
    for (size_t i = 0; i < name.size() && equal; ++i) {
      char ch = name[i];
      if (ch >= 'a' && ch <= 'z') ch = static_cast<char>(ch - 'a' + 'A');
      equal = ch == canonical[i];
    }
    if (equal) return c;
  }
  return std::nullopt;
}

const char *ExplanationKindName(ExplanationKind kind) {
  return kind == ExplanationKind::kIntensional ? "intensional" : "extensional";
}

ExplanationKind KindOf(Component component) {
  return component == Component::kVfm ? ExplanationKind::kExtensional
                                      : ExplanationKind::kIntensional;
}

Component ComponentOf(const Evidence &evidence) {
  switch (evidence.index()) {
    case 0: return Component::kDbm;
    case 1: return Component::kCkg;
    default: return Component::kVfm;
  }
}

size_t EvidenceSize(const Evidence &evidence) {
  return std::visit([](const auto &list) { return list.size(); }, evidence);
}

const std::string &DefaultTemplateId(Component component) {
  static const std::string kDbm = "dbm.definition.v1";
  static const std::string kCkg = "ckg.edge.v1";
  static const std::string kVfm = "vfm.regions.v1";
  switch (component) {
    case Component::kDbm: return kDbm;
    case Component::kCkg: return kCkg;
    case Component::kVfm: return kVfm;
  }
  return kDbm;
}

std::vector<std::string> TemplateIds() {
  std::vector<std::string> ids;
  for (const auto &t : Registry()) ids.push_back(t.id);
  return ids;
}

std::string RenderExplanation(const ExplanationInput &input,
                              const std::string &template_id) {
  const Template &tmpl = FindTemplate(template_id);
  const Component component = ComponentOf(input.evidence);
  if (tmpl.component != component) {
    throw UsageError("template '" + template_id + "' cannot render " +
                     ComponentName(component) + " evidence");
  }
  if (EvidenceSize(input.evidence) == 0) {
    throw InvariantError("cannot render an explanation without evidence for (" +
                         input.pivot + ", " + input.comparison + ", " +
                         input.attribute + ")");
  }
  Fields fields{{"pivot", input.pivot},
                {"comparison", input.comparison},
                {"attribute", input.attribute}};
  switch (component) {
    case Component::kDbm:
      AddDbmFields(input, std::get<0>(input.evidence), fields);
      break;
    case Component::kCkg:
      AddCkgFields(std::get<1>(input.evidence), fields);
      break;
    case Component::kVfm:
      AddVfmFields(std::get<2>(input.evidence), fields);
      break;
  }
  return Substitute(tmpl, fields);
}

std::string ComparisonCheck(Component component, const std::string &comparison,
                            const std::string &attribute) {
  return std::string("no ") + ComponentName(component) + " evidence links '" +
         attribute + "' to '" + comparison + "'";
}

Explanation MakeExplanation(const ExplanationInput &input) {
  const Component component = ComponentOf(input.evidence);
  Explanation e;
  e.kind = KindOf(component);
  e.template_id = DefaultTemplateId(component);
  e.pivot_evidence = input.evidence;
  e.comparison_check = ComparisonCheck(component, input.comparison, input.attribute);
  e.rendered_text = RenderExplanation(input, e.template_id);
  return e;
}

}  // namespace edam

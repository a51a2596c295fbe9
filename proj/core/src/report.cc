#include "edam/eval.h"

#include <cstdio>
#include <sstream>

#include "edam/error.h"
#include "json.hpp"

namespace edam {
namespace eval {
namespace {

using nlohmann::json;

std::string Num(std::optional<double> v) {
  if (!v) return "undef";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", *v);
  return buf;
}

std::string Percent(std::optional<double> v) {
  if (!v) return "undef";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%+.0f%%", *v * 100.0);
  return buf;
}

std::string Pad(const std::string &s, size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

json Opt(std::optional<double> v) { return v ? json(*v) : json(nullptr); }
std::optional<double> Opt(const json &j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

json KeyJson(const TripleKey &k) {
  return json::array({k.pivot, k.comparison, k.attribute});
}
TripleKey KeyFromJson(const json &j) {
  return TripleKey{j.at(0).get<std::string>(), j.at(1).get<std::string>(),
                   j.at(2).get<std::string>()};
}

json ScoresJson(const ClassScores &s) {
  return {{"precision", s.precision},
          {"recall", s.recall},
          {"f1", s.f1},
          {"degenerate", s.degenerate}};
}
ClassScores ScoresFromJson(const json &j) {
  return ClassScores{j.at("precision").get<double>(), j.at("recall").get<double>(),
                     j.at("f1").get<double>(), j.at("degenerate").get<bool>()};
}

json RowJson(const OverlapRow &row) {
  json fractions = json::array();
  for (const auto &f : row.fractions) fractions.push_back(Opt(f));
  return {{"fractions", fractions},
          {"average", Opt(row.average)},
          {"combined", row.combined}};
}
OverlapRow RowFromJson(const json &j) {
  OverlapRow row;
  for (int i = 0; i < kOverlapColumns; ++i) {
    row.fractions[i] = Opt(j.at("fractions").at(i));
  }
  row.average = Opt(j.at("average"));
  row.combined = j.at("combined").get<size_t>();
  return row;
}

Category CategoryFromName(const std::string &name) {
  auto c = ParseCategory(name);
  if (!c) throw DataError("report: unknown category '" + name + "'");
  return *c;
}

}  // namespace

std::string RenderText(const EvalReport &report) {
  std::ostringstream out;
  out << "EDAM evaluation report\n";
  out << "gold: " << report.gold_source << " (" << report.gold_size
      << " triples, " << report.gold_positives << " positive)\n\n";

  out << "== Macro F1\n";
  out << Pad("model", 6) << Pad("macroF1", 8) << Pad("P+", 8) << Pad("R+", 8)
      << Pad("F1+", 8) << Pad("P-", 8) << Pad("R-", 8) << Pad("F1-", 8)
      << "TP/FP/FN/TN\n";
  for (Model m : kAllModels) {
    const F1Report &f = report.f1[static_cast<int>(m)];
    out << Pad(ModelName(m), 6) << Pad(Num(f.macro_f1), 8)
        << Pad(Num(f.positive.precision), 8) << Pad(Num(f.positive.recall), 8)
        << Pad(Num(f.positive.f1), 8) << Pad(Num(f.negative.precision), 8)
        << Pad(Num(f.negative.recall), 8) << Pad(Num(f.negative.f1), 8)
        << f.matrix.tp << "/" << f.matrix.fp << "/" << f.matrix.fn << "/"
        << f.matrix.tn << "\n";
  }

  if (report.category_recall) {
    out << "\n== Per-category recall (" << report.annotated
        << " annotated triples)\n";
    out << Pad("model", 6);
    for (Category c : kAllCategories) out << Pad(CategoryName(c), 11);
    out << "\n";
    for (Model m : kAllModels) {
      out << Pad(ModelName(m), 6);
      for (Category c : kAllCategories) {
        const auto &cell = report.category_recall->cells.at(c)[static_cast<int>(m)];
        out << Pad(Num(cell.recall), 11);
      }
      out << "\n";
    }
    out << Pad("gain", 6);
    for (Category c : kAllCategories) {
      out << Pad(Percent(report.category_recall->gain.at(c)), 11);
    }
    out << "\n";
  }

  out << "\n== Component overlap (fraction of combined-model positives)\n";
  out << Pad("positives", 10);
  for (int col = 0; col < kOverlapColumns; ++col) {
    out << Pad(OverlapColumnName(col), 12);
  }
  out << Pad("avg", 8) << "base\n";
  auto row = [&](const std::string &label, const OverlapRow &r) {
    out << Pad(label, 10);
    for (const auto &f : r.fractions) out << Pad(Num(f), 12);
    out << Pad(Num(r.average), 8) << r.combined << "\n";
  };
  row("true", report.overlap.true_positives);
  row("false", report.overlap.false_positives);

  if (!report.overlap.by_category.empty()) {
    out << "\n== Categorical overlap (true positives)\n";
    out << Pad("category", 11);
    for (int col = 0; col < kOverlapColumns; ++col) {
      out << Pad(OverlapColumnName(col), 12);
    }
    out << Pad("avg", 8) << "base\n";
    for (const auto &[category, r] : report.overlap.by_category) {
      out << Pad(CategoryName(category), 11);
      for (const auto &f : r.fractions) out << Pad(Num(f), 12);
      out << Pad(Num(r.average), 8) << r.combined << "\n";
    }
    out << Pad("avg", 11);
    for (const auto &f : report.overlap.category_average) out << Pad(Num(f), 12);
    out << "\n";
  }

  out << "\n== Error breakdown\n";
  out << Pad("model", 6) << Pad("FN", 7) << Pad("FP", 7) << "FN share\n";
  for (Model m : kAllModels) {
    const ModelErrors &e = report.errors[static_cast<int>(m)];
    out << Pad(ModelName(m), 6) << Pad(std::to_string(e.false_negatives), 7)
        << Pad(std::to_string(e.false_positives), 7) << Num(e.fn_share) << "\n";
  }
  for (Model m : kAllModels) {
    const ModelErrors &e = report.errors[static_cast<int>(m)];
    if (e.samples.empty()) continue;
    out << ModelName(m) << " error samples:\n";
    for (const auto &s : e.samples) {
      out << "  (" << s.triple.ToString() << ") - "
          << (s.gold ? "true" : "false") << ":" << (s.predicted ? "true" : "false")
          << " [" << s.provenance << "]\n";
    }
  }

  if (!report.notes.empty()) {
    out << "\nNotes:\n";
    for (const auto &n : report.notes) out << "- " << n << "\n";
  }
  return out.str();
}

std::string ToJson(const EvalReport &report) {
  json j;
  j["format"] = "edam-report";
  j["version"] = 1;
  j["gold"] = {{"source", report.gold_source},
               {"size", report.gold_size},
               {"positives", report.gold_positives}};
  json f1 = json::object();
  for (Model m : kAllModels) {
    const F1Report &f = report.f1[static_cast<int>(m)];
    f1[ModelName(m)] = {
        {"macro_f1", f.macro_f1},
        {"confusion",
         {{"tp", f.matrix.tp}, {"fp", f.matrix.fp}, {"fn", f.matrix.fn}, {"tn", f.matrix.tn}}},
        {"positive", ScoresJson(f.positive)},
        {"negative", ScoresJson(f.negative)}};
  }
  j["f1"] = f1;

  if (report.category_recall) {
    json cats = json::object();
    for (const auto &[category, cells] : report.category_recall->cells) {
      json row = json::object();
      for (Model m : kAllModels) {
        const auto &cell = cells[static_cast<int>(m)];
        row[ModelName(m)] = {{"recall", Opt(cell.recall)},
                             {"hits", cell.hits},
                             {"positives", cell.positives}};
      }
      row["gain"] = Opt(report.category_recall->gain.at(category));
      cats[CategoryName(category)] = row;
    }
    j["category_recall"] = {{"annotated", report.annotated}, {"categories", cats}};
  } else {
    j["category_recall"] = nullptr;
  }

  json by_category = json::object();
  for (const auto &[category, row] : report.overlap.by_category) {
    by_category[CategoryName(category)] = RowJson(row);
  }
  json cat_avg = json::array();
  for (const auto &f : report.overlap.category_average) cat_avg.push_back(Opt(f));
  j["overlap"] = {{"true_positives", RowJson(report.overlap.true_positives)},
                  {"false_positives", RowJson(report.overlap.false_positives)},
                  {"by_category", by_category},
                  {"category_average", cat_avg}};

  json errors = json::object();
  for (Model m : kAllModels) {
    const ModelErrors &e = report.errors[static_cast<int>(m)];
    json samples = json::array();
    for (const auto &s : e.samples) {
      samples.push_back({{"triple", KeyJson(s.triple)},
                         {"gold", s.gold},
                         {"predicted", s.predicted},
                         {"provenance", s.provenance}});
    }
    errors[ModelName(m)] = {{"false_negatives", e.false_negatives},
                            {"false_positives", e.false_positives},
                            {"fn_share", Opt(e.fn_share)},
                            {"samples", samples}};
  }
  j["errors"] = errors;
  j["notes"] = report.notes;
  return j.dump(2) + "\n";
}

EvalReport FromJson(const std::string &text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object() || j.value("format", "") != "edam-report") {
    throw DataError("not an edam report file");
  }
  EvalReport r;
  try {
    r.gold_source = j.at("gold").at("source").get<std::string>();
    r.gold_size = j.at("gold").at("size").get<size_t>();
    r.gold_positives = j.at("gold").at("positives").get<size_t>();
    for (Model m : kAllModels) {
      const json &f = j.at("f1").at(ModelName(m));
      F1Report &out = r.f1[static_cast<int>(m)];
      out.macro_f1 = f.at("macro_f1").get<double>();
      const json &c = f.at("confusion");
      out.matrix = ConfusionMatrix{c.at("tp").get<size_t>(), c.at("fp").get<size_t>(),
                                   c.at("fn").get<size_t>(), c.at("tn").get<size_t>()};
      out.positive = ScoresFromJson(f.at("positive"));
      out.negative = ScoresFromJson(f.at("negative"));
    }
    if (!j.at("category_recall").is_null()) {
      const json &cr = j.at("category_recall");
      r.annotated = cr.at("annotated").get<size_t>();
      CategoryRecallTable table;
      for (const auto &[name, row] : cr.at("categories").items()) {
        Category category = CategoryFromName(name);
        auto &cells = table.cells[category];
        for (Model m : kAllModels) {
          const json &cell = row.at(ModelName(m));
          cells[static_cast<int>(m)] =
              RecallCell{Opt(cell.at("recall")), cell.at("hits").get<size_t>(),
                         cell.at("positives").get<size_t>()};
        }
        table.gain[category] = Opt(row.at("gain"));
      }
      r.category_recall = std::move(table);
    }
    const json &ov = j.at("overlap");
    r.overlap.true_positives = RowFromJson(ov.at("true_positives"));
    r.overlap.false_positives = RowFromJson(ov.at("false_positives"));
    for (const auto &[name, row] : ov.at("by_category").items()) {
      r.overlap.by_category[CategoryFromName(name)] = RowFromJson(row);
    }
    for (int i = 0; i < kOverlapColumns; ++i) {
      r.overlap.category_average[i] = Opt(ov.at("category_average").at(i));
    }
    for (Model m : kAllModels) {
      const json &e = j.at("errors").at(ModelName(m));
      ModelErrors &out = r.errors[static_cast<int>(m)];
      out.false_negatives = e.at("false_negatives").get<size_t>();
      out.false_positives = e.at("false_positives").get<size_t>();
      out.fn_share = Opt(e.at("fn_share"));
      for (const auto &s : e.at("samples")) {
        out.samples.push_back(ErrorSample{KeyFromJson(s.at("triple")),
                                          s.at("gold").get<bool>(),
                                          s.at("predicted").get<bool>(),
                                          s.at("provenance").get<std::string>()});
      }
    }
    r.notes = j.at("notes").get<std::vector<std::string>>();
  } catch (const json::exception &e) {
    throw DataError(std::string("malformed report file: ") + e.what());
  }
  return r;
}

}  // namespace eval
}  // namespace edam

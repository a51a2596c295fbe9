#include "edam/eval.h"

#include <algorithm>
#include <fstream>
#include <set>

#include "edam/csv.h"
#include "edam/error.h"

namespace edam {
namespace eval {
namespace {

std::string Trim(const std::string &s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool IsHeader(const std::vector<std::string> &fields) {
  return fields.size() >= 4 && Trim(fields[0]) == "pivot";
}

constexpr std::array<std::array<Component, 3>, kOverlapColumns> kColumnMembers{{
    {Component::kDbm, Component::kCkg, Component::kCkg},
    {Component::kDbm, Component::kVfm, Component::kVfm},
    {Component::kCkg, Component::kVfm, Component::kVfm},
    {Component::kDbm, Component::kCkg, Component::kVfm},
}};

bool Predicted(const ModelPredictions &p, Model m, const TripleKey &key) {
  auto it = p[m].find(key);
  return it != p[m].end() && it->second;
}

std::optional<double> Fraction(size_t num, size_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

std::optional<double> Mean(const std::array<std::optional<double>, kOverlapColumns> &v) {
  double sum = 0;
  for (const auto &x : v) {
    if (!x) return std::nullopt;
    sum += *x;
  }
  return sum / kOverlapColumns;
}

// Overlap of component positives restricted to `keys`, counting either the
// true positives (gold positive) or the false positives (gold negative).
OverlapRow Overlap(const ModelPredictions &p, const std::vector<TripleKey> &keys,
                   const std::map<TripleKey, bool> &labels, bool gold_value) {
  OverlapRow row;
  std::array<size_t, kOverlapColumns> counts{};
  for (const auto &key : keys) {
    if (labels.at(key) != gold_value) continue;
    if (!Predicted(p, Model::kEdam, key)) continue;
    ++row.combined;
    for (int col = 0; col < kOverlapColumns; ++col) {
      bool all = true;
      for (Component c : kColumnMembers[col]) all = all && Predicted(p, ModelOf(c), key);
      if (all) ++counts[col];
    }
  }
  for (int col = 0; col < kOverlapColumns; ++col) {
    row.fractions[col] = Fraction(counts[col], row.combined);
  }
  row.average = Mean(row.fractions);
  return row;
}

}  // namespace

const char *ModelName(Model model) {
  switch (model) {
    case Model::kDbm: return "DBM";
    case Model::kCkg: return "CKG";
    case Model::kVfm: return "VFM";
    case Model::kEdam: return "EDAM";
  }
  return "?";
}

Model ModelOf(Component component) {
  switch (component) {
    case Component::kDbm: return Model::kDbm;
    case Component::kCkg: return Model::kCkg;
    case Component::kVfm: return Model::kVfm;
  }
  return Model::kEdam;
}

const char *OverlapColumnName(int column) {
  static const char *kNames[kOverlapColumns] = {"DBM&CKG", "DBM&VFM", "CKG&VFM",
                                                "DBM&CKG&VFM"};
  return kNames[column];
}

GoldDataset LoadGold(const std::string &path, const Normalizer &normalizer) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open gold file " + path);
  GoldDataset gold;
  gold.source = path;
  std::map<TripleKey, bool> seen;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (Trim(line).empty()) continue;
    auto fields = SplitCsvLine(line);
    if (lineno == 1 && IsHeader(fields)) continue;
    if (fields.size() != 4) {
      throw Error(ErrorKind::kData,
                  "expected 4 comma-separated fields, got " +
                      std::to_string(fields.size()),
                  path, lineno);
    }
    std::string label = Trim(fields[3]);
    if (label != "0" && label != "1") {
      throw Error(ErrorKind::kData, "label '" + label + "' is not 0 or 1", path,
                  lineno, "label");
    }
    Triple t;
    try {
      t = MakeTriple(normalizer, fields[0], fields[1], fields[2]);
    } catch (const Error &e) {
      throw Error(ErrorKind::kData, e.what(), path, lineno);
    }
    t.gold_label = label == "1";
    auto [it, inserted] = seen.emplace(t.Key(), *t.gold_label);
    if (!inserted) {
      if (it->second != *t.gold_label) {
        throw Error(ErrorKind::kData,
                    "conflicting labels for triple " + t.Key().ToString(), path,
                    lineno);
      }
      continue;
    }
    gold.triples.push_back(std::move(t));
  }
  if (gold.triples.empty()) {
    throw Error(ErrorKind::kData, "gold file contains no triples", path, 0);
  }
  return gold;
}

CategoryAnnotations LoadAnnotations(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open annotation file " + path);
  CategoryAnnotations out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (Trim(line).empty()) continue;
    auto fields = SplitCsvLine(line);
    if (lineno == 1 && IsHeader(fields)) continue;
    if (fields.size() != 4) {
      throw Error(ErrorKind::kData, "expected 4 comma-separated fields", path,
                  lineno);
    }
    Triple probe;
    probe.pivot.surface = fields[0];
    probe.comparison.surface = fields[1];
    probe.attribute.surface = fields[2];
    TripleKey key = probe.Key();
    if (key.pivot.empty() || key.comparison.empty() || key.attribute.empty()) {
      throw Error(ErrorKind::kData, "empty triple slot", path, lineno);
    }
    CategorySet set;
    std::string list = fields[3];
    size_t start = 0;
    while (start <= list.size()) {
      size_t semi = list.find(';', start);
      if (semi == std::string::npos) semi = list.size();
      std::string name = Trim(list.substr(start, semi - start));
      if (!name.empty()) {
        auto category = ParseCategory(name);
        if (!category) {
          throw Error(ErrorKind::kData, "unknown category '" + name + "'", path,
                      lineno, "category");
        }
        set.Insert(*category);
      }
      start = semi + 1;
    }
    if (set.empty()) {
      throw Error(ErrorKind::kData, "no categories", path, lineno, "category");
    }
    auto [it, inserted] = out.emplace(key, set);
    if (!inserted && !(it->second == set)) {
      throw Error(ErrorKind::kData,
                  "conflicting annotations for triple " + key.ToString(), path,
                  lineno);
    }
  }
  return out;
}

ModelPredictions PredictionsFromBatch(const std::vector<BatchItem> &items) {
  ModelPredictions p;
  for (const auto &item : items) {
    TripleKey key = item.triple.Key();
    for (Component c : kAllComponents) p[ModelOf(c)][key] = item.components[c];
    p[Model::kEdam][key] = item.verdict.discriminative;
    if (item.verdict.discriminative) p.deciding[key] = *item.verdict.deciding_component;
  }
  return p;
}

ClassScores ScoreClass(size_t tp, size_t fp, size_t fn) {
  ClassScores s;
  const size_t predicted = tp + fp;
  const size_t actual = tp + fn;
  if (predicted == 0 && actual == 0) {
    s.precision = s.recall = s.f1 = 1.0;
    s.degenerate = true;
    return s;
  }
  s.precision = predicted == 0 ? 0.0 : static_cast<double>(tp) / predicted;
  s.recall = actual == 0 ? 0.0 : static_cast<double>(tp) / actual;
  s.f1 = s.precision + s.recall == 0
             ? 0.0
             : 2 * s.precision * s.recall / (s.precision + s.recall);
  return s;
}

ConfusionMatrix Confusion(const Predictions &predictions, const GoldDataset &gold) {
  ConfusionMatrix m;
  std::vector<std::string> missing;
  for (const auto &t : gold.triples) {
    auto it = predictions.find(t.Key());
    if (it == predictions.end()) {
      missing.push_back(t.Key().ToString());
      continue;
    }
    const bool g = t.gold_label.value_or(false);
    const bool p = it->second;
    if (g && p) ++m.tp;
    else if (!g && p) ++m.fp;
    else if (g && !p) ++m.fn;
    else ++m.tn;
  }
  if (!missing.empty()) {
    std::string list;
    for (size_t i = 0; i < missing.size(); ++i) {
      list += (i ? "; " : "") + missing[i];
    }
    throw DataError(std::to_string(missing.size()) +
                    " gold triple(s) have no prediction: " + list);
  }
  return m;
}

F1Report MacroF1(const Predictions &predictions, const GoldDataset &gold) {
  F1Report r;
  r.matrix = Confusion(predictions, gold);
  const ConfusionMatrix &m = r.matrix;
  r.positive = ScoreClass(m.tp, m.fp, m.fn);
  r.negative = ScoreClass(m.tn, m.fn, m.fp);
  r.macro_f1 = (r.positive.f1 + r.negative.f1) / 2.0;
  return r;
}

CategoryRecallTable PerCategoryRecall(const ModelPredictions &predictions,
                                      const GoldDataset &gold,
                                      const CategoryAnnotations &annotations) {
  std::map<TripleKey, bool> labels;
  for (const auto &t : gold.triples) labels[t.Key()] = t.gold_label.value_or(false);
  for (const auto &[key, cats] : annotations) {
    if (!labels.count(key)) {
      throw DataError("annotated triple " + key.ToString() + " is not in the gold set");
    }
  }

  CategoryRecallTable table;
  for (Category category : kAllCategories) {
    auto &row = table.cells[category];
    for (const auto &[key, cats] : annotations) {
      if (!cats.Contains(category) || !labels.at(key)) continue;
      for (Model m : kAllModels) {
        auto &cell = row[static_cast<int>(m)];
        ++cell.positives;
        if (Predicted(predictions, m, key)) ++cell.hits;
      }
    }
    for (auto &cell : row) cell.recall = Fraction(cell.hits, cell.positives);

    std::optional<double> best;
    for (Component c : kAllComponents) {
      const auto &cell = row[static_cast<int>(ModelOf(c))];
      if (cell.recall && (!best || *cell.recall > *best)) best = cell.recall;
    }
    const auto &combined = row[static_cast<int>(Model::kEdam)].recall;
    if (best && combined && *best > 0) {
      table.gain[category] = (*combined - *best) / *best;
    } else {
      table.gain[category] = std::nullopt;
    }
  }
  return table;
}

OverlapTables OverlapAnalysis(const ModelPredictions &predictions,
                              const GoldDataset &gold,
                              const CategoryAnnotations *annotations) {
  std::map<TripleKey, bool> labels;
  std::vector<TripleKey> keys;
  for (const auto &t : gold.triples) {
    labels[t.Key()] = t.gold_label.value_or(false);
    keys.push_back(t.Key());
  }
  OverlapTables tables;
  tables.true_positives = Overlap(predictions, keys, labels, true);
  tables.false_positives = Overlap(predictions, keys, labels, false);
  if (annotations == nullptr) return tables;

  std::array<double, kOverlapColumns> sums{};
  std::array<size_t, kOverlapColumns> defined{};
  for (Category category : kAllCategories) {
    std::vector<TripleKey> subset;
    for (const auto &[key, cats] : *annotations) {
      if (cats.Contains(category) && labels.count(key)) subset.push_back(key);
    }
    OverlapRow row = Overlap(predictions, subset, labels, true);
    for (int col = 0; col < kOverlapColumns; ++col) {
      if (row.fractions[col]) {
        sums[col] += *row.fractions[col];
        ++defined[col];
      }
    }
    tables.by_category[category] = row;
  }
  for (int col = 0; col < kOverlapColumns; ++col) {
    tables.category_average[col] =
        defined[col] ? std::optional<double>(sums[col] / defined[col]) : std::nullopt;
  }
  return tables;
}

std::array<ModelErrors, kModelCount> ErrorBreakdown(
    const ModelPredictions &predictions, const GoldDataset &gold,
    size_t max_samples) {
  std::array<ModelErrors, kModelCount> out;
  for (Model m : kAllModels) {
    ModelErrors &errors = out[static_cast<int>(m)];
    for (const auto &t : gold.triples) {
      const TripleKey key = t.Key();
      auto it = predictions[m].find(key);
      if (it == predictions[m].end()) {
        throw DataError(std::string(ModelName(m)) + " has no prediction for " +
                        key.ToString());
      }
      const bool g = t.gold_label.value_or(false);
      const bool p = it->second;
      if (g == p) continue;
      if (g) ++errors.false_negatives;
      else ++errors.false_positives;
      if (errors.samples.size() >= max_samples) continue;
      std::string provenance;
      if (!p) {
        provenance = "none";
      } else if (m == Model::kEdam) {
        auto d = predictions.deciding.find(key);
        provenance = d == predictions.deciding.end() ? "EDAM" : ComponentName(d->second);
      } else {
        provenance = ModelName(m);
      }
      errors.samples.push_back(ErrorSample{key, g, p, provenance});
    }
    errors.fn_share = Fraction(errors.false_negatives,
                               errors.false_negatives + errors.false_positives);
  }
  return out;
}

EvalReport Evaluate(const ModelPredictions &predictions, const GoldDataset &gold,
                    const CategoryAnnotations *annotations) {
  EvalReport report;
  report.gold_source = gold.source;
  report.gold_size = gold.triples.size();
  for (const auto &t : gold.triples) report.gold_positives += t.gold_label.value_or(false);
  for (Model m : kAllModels) {
    report.f1[static_cast<int>(m)] = MacroF1(predictions[m], gold);
    const F1Report &f = report.f1[static_cast<int>(m)];
    if (f.positive.degenerate || f.negative.degenerate) {
      report.notes.push_back(std::string(ModelName(m)) +
                             ": a class with no predicted and no gold members "
                             "was scored F1 = 1 by convention");
    }
  }
  if (annotations != nullptr) {
    report.annotated = annotations->size();
    report.category_recall = PerCategoryRecall(predictions, gold, *annotations);
    report.notes.push_back(
        "per-category figures are recall over gold-positive annotated triples, "
        "not F1");
  } else {
    report.notes.push_back("no category annotations given; category tables skipped");
  }
  report.overlap = OverlapAnalysis(predictions, gold, annotations);
  report.errors = ErrorBreakdown(predictions, gold);
  return report;
}

}  // namespace eval
}  // namespace edam

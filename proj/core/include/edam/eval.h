#ifndef EDAM_EVAL_H_
#define EDAM_EVAL_H_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "edam/cascade.h"
#include "edam/triple.h"

namespace edam {
namespace eval {

struct GoldDataset {
  std::vector<Triple> triples;  // gold_label always set, no duplicates
  std::string source;
};

// CSV `pivot,comparison,attribute,label` with an optional header row.
// Identical duplicate rows collapse; conflicting duplicates, labels outside
// {0,1} and empty files are errors.
GoldDataset LoadGold(const std::string &path, const Normalizer &normalizer);

using CategoryAnnotations = std::map<TripleKey, CategorySet>;

// CSV `pivot,comparison,attribute,category[;category...]`.
CategoryAnnotations LoadAnnotations(const std::string &path);

using Predictions = std::map<TripleKey, bool>;

// The three components scored standalone, plus the combined cascade.
enum class Model { kDbm, kCkg, kVfm, kEdam };
inline constexpr int kModelCount = 4;
inline constexpr Model kAllModels[] = {Model::kDbm, Model::kCkg, Model::kVfm,
                                       Model::kEdam};
const char *ModelName(Model model);
Model ModelOf(Component component);

struct ModelPredictions {
  std::array<Predictions, kModelCount> by_model;
  // Deciding component of every positive combined verdict.
  std::map<TripleKey, Component> deciding;

  const Predictions &operator[](Model m) const {
    return by_model[static_cast<int>(m)];
  }
  Predictions &operator[](Model m) { return by_model[static_cast<int>(m)]; }
};

ModelPredictions PredictionsFromBatch(const std::vector<BatchItem> &items);

struct ConfusionMatrix {
  size_t tp = 0, fp = 0, fn = 0, tn = 0;
  size_t total() const { return tp + fp + fn + tn; }
  bool operator==(const ConfusionMatrix &other) const = default;
};

struct ClassScores {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  // No predicted and no actual members: scored 1 by convention.
  bool degenerate = false;
};

struct F1Report {
  ConfusionMatrix matrix;
  ClassScores positive;
  ClassScores negative;
  double macro_f1 = 0;
};

ClassScores ScoreClass(size_t tp, size_t fp, size_t fn);

// Throws Error(kData) listing every gold triple without a prediction.
ConfusionMatrix Confusion(const Predictions &predictions, const GoldDataset &gold);

// Unweighted mean of the positive-class and negative-class F1.
F1Report MacroF1(const Predictions &predictions, const GoldDataset &gold);

struct RecallCell {
  std::optional<double> recall;  // undefined without positive gold triples
  size_t hits = 0;
  size_t positives = 0;
};

struct CategoryRecallTable {
  std::map<Category, std::array<RecallCell, kModelCount>> cells;
  // (combined - best component) / best component.
  std::map<Category, std::optional<double>> gain;
};

// Recall over gold-positive annotated triples, per category and model.
CategoryRecallTable PerCategoryRecall(const ModelPredictions &predictions,
                                      const GoldDataset &gold,
                                      const CategoryAnnotations &annotations);

// Columns: DBM&CKG, DBM&VFM, CKG&VFM, DBM&CKG&VFM.
inline constexpr int kOverlapColumns = 4;
const char *OverlapColumnName(int column);

struct OverlapRow {
  std::array<std::optional<double>, kOverlapColumns> fractions;
  std::optional<double> average;
  size_t combined = 0;  // denominator: combined-model TPs (or FPs)
};

struct OverlapTables {
  OverlapRow true_positives;
  OverlapRow false_positives;
  std::map<Category, OverlapRow> by_category;  // true positives only
  std::array<std::optional<double>, kOverlapColumns> category_average;
};

// Intersections of per-component true (false) positives as fractions of the
// combined model's true (false) positives. Category rows need annotations.
OverlapTables OverlapAnalysis(const ModelPredictions &predictions,
                              const GoldDataset &gold,
                              const CategoryAnnotations *annotations);

struct ErrorSample {
  TripleKey triple;
  bool gold = false;
  bool predicted = false;
  std::string provenance;  // component responsible for the prediction
};

struct ModelErrors {
  size_t false_negatives = 0;
  size_t false_positives = 0;
  std::optional<double> fn_share;  // undefined with zero errors
  std::vector<ErrorSample> samples;
};

std::array<ModelErrors, kModelCount> ErrorBreakdown(
    const ModelPredictions &predictions, const GoldDataset &gold,
    size_t max_samples = 10);

struct EvalReport {
  std::string gold_source;
  size_t gold_size = 0;
  size_t gold_positives = 0;
  std::array<F1Report, kModelCount> f1;
  std::optional<CategoryRecallTable> category_recall;
  size_t annotated = 0;
  OverlapTables overlap;
  std::array<ModelErrors, kModelCount> errors;
  std::vector<std::string> notes;
};

EvalReport Evaluate(const ModelPredictions &predictions, const GoldDataset &gold,
                    const CategoryAnnotations *annotations);

// Human-readable and machine-readable renderings; both deterministic.
std::string RenderText(const EvalReport &report);
std::string ToJson(const EvalReport &report);
EvalReport FromJson(const std::string &text);

}  // namespace eval
}  // namespace edam

#endif  // EDAM_EVAL_H_

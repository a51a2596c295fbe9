#include "edam/cascade.h"

#include <algorithm>
#include <exception>
#include <thread>

#include "edam/error.h"

namespace edam {
namespace {

struct StageOutcome {
  bool decides = false;
  Evidence evidence;
};

StageOutcome RunStage(Component component, const Triple &triple,
                      const KnowledgeBase &kb, const CascadeConfig &config) {
  StageOutcome out;
  ComponentMembership pivot =
      QueryComponent(component, triple.pivot, triple.attribute, kb, config);
  if (!pivot.member) return out;
  ComponentMembership comparison =
      QueryComponent(component, triple.comparison, triple.attribute, kb, config);
  if (comparison.member) return out;
  out.decides = true;
  out.evidence = std::move(pivot.evidence);
  return out;
}

Verdict Positive(Component component, const Triple &triple, Evidence evidence) {
  Verdict v;
  v.discriminative = true;
  v.deciding_component = component;
  v.explanation = MakeExplanation(ExplanationInput{
      triple.pivot.surface, triple.comparison.surface, triple.attribute.surface,
      std::move(evidence)});
  return v;
}

}  // namespace

void CascadeConfig::Validate() const {
  std::array<int, 3> seen{};
  for (Component c : stage_order) ++seen[static_cast<int>(c)];
  if (seen != std::array<int, 3>{1, 1, 1}) {
    throw UsageError("stage order must contain DBM, CKG and VFM exactly once");
  }
  if (vfm_min_count == 0) throw UsageError("vfm_min_count must be positive");
}

ComponentMembership QueryComponent(Component component, const Term &term,
                                   const Term &attribute,
                                   const KnowledgeBase &kb,
                                   const CascadeConfig &config) {
  ComponentMembership out;
  switch (component) {
    case Component::kDbm: {
      auto m = dbm::HasProperty(term, attribute, kb.dbm, config.dbm_max_depth);
      out.member = m.member;
      out.evidence = std::move(m.evidence);
      break;
    }
    case Component::kCkg: {
      auto m = ckg::HasProperty(term, attribute, kb.ckg, config.ckg_token_match);
      out.member = m.member;
      out.evidence = std::move(m.evidence);
      break;
    }
    case Component::kVfm: {
      auto m = vfm::HasProperty(term, attribute, kb.vfm, config.vfm_min_count,
                                config.vfm_use_sor);
      out.member = m.member;
      out.evidence = std::move(m.evidence);
      break;
    }
  }
  return out;
}

Verdict Classify(const Triple &triple, const KnowledgeBase &kb,
                 const CascadeConfig &config) {
  config.Validate();
  for (Component component : config.stage_order) {
    StageOutcome stage = RunStage(component, triple, kb, config);
    if (stage.decides) {
      return Positive(component, triple, std::move(stage.evidence));
    }
  }
  return Verdict{};
}

std::vector<BatchItem> ClassifyBatch(const std::vector<Triple> &triples,
                                     const KnowledgeBase &kb,
                                     const CascadeConfig &config,
                                     size_t threads) {
  config.Validate();
  std::vector<BatchItem> out(triples.size());

  auto work = [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      BatchItem &item = out[i];
      item.triple = triples[i];
      std::array<StageOutcome, 3> stages;
      for (Component c : kAllComponents) {
        stages[static_cast<int>(c)] = RunStage(c, triples[i], kb, config);
        item.components.Set(c, stages[static_cast<int>(c)].decides);
      }
      for (Component c : config.stage_order) {
        StageOutcome &stage = stages[static_cast<int>(c)];
        if (stage.decides) {
          item.verdict = Positive(c, triples[i], std::move(stage.evidence));
          break;
        }
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<size_t>(1, triples.size() / 64));
  if (threads <= 1) {
    work(0, triples.size());
    return out;
  }
  const size_t chunk = (triples.size() + threads - 1) / threads;
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    for (size_t t = 0; t * chunk < triples.size(); ++t) {
      pool.emplace_back([&, t] {
        try {
          work(t * chunk, std::min(triples.size(), (t + 1) * chunk));
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (auto &e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace edam

// Copyright 2026 The negscope Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "negscope/evaluate.h"

#include <algorithm>
#include <exception>
#include <numeric>
#include <thread>

#include "negscope/digest.h"
#include "negscope/error.h"
#include "negscope/random.h"

namespace negscope {

ConfusionMatrix &ConfusionMatrix::operator+=(const ConfusionMatrix &other) {
  tp += other.tp;
  tn += other.tn;
  fp += other.fp;
  fn += other.fn;
  return *this;
}

ConfusionMatrix confusion_matrix(std::span<const PolarityLabel> predicted,
                                 std::span<const PolarityLabel> gold) {
  if (predicted.size() != gold.size()) {
    throw DataError("confusion_matrix: " + std::to_string(predicted.size()) +
                    " predictions for " + std::to_string(gold.size()) +
                    " gold labels");
  }
  if (gold.empty()) throw DataError("confusion_matrix: no labels");
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const bool p = predicted[i] == PolarityLabel::kPositive;
    const bool g = gold[i] == PolarityLabel::kPositive;
    if (p && g) {
      ++cm.tp;
    } else if (p) {
      ++cm.fp;
    } else if (g) {
      ++cm.fn;
    } else {
      ++cm.tn;
    }
  }
  return cm;
}

Metrics compute_metrics(const ConfusionMatrix &cm) {
  if (cm.total() == 0) throw DataError("compute_metrics: empty confusion matrix");
  Metrics m;
  m.accuracy = static_cast<double>(cm.tp + cm.tn) / static_cast<double>(cm.total());
  if (cm.tp + cm.fp > 0) {
    m.precision = static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fp);
  }
  if (cm.tp + cm.fn > 0) {
    m.recall = static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fn);
  }
  return m;
}

// --- Fold plans ------------------------------------------------------------

std::optional<std::size_t> FoldPlan::fold_of(const std::string &id) const {
  const auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) return std::nullopt;
  return assignments[static_cast<std::size_t>(it - ids.begin())];
}

std::vector<std::size_t> FoldPlan::test_indices(std::size_t fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    if (assignments[i] == fold) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FoldPlan::train_indices(std::size_t fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    if (assignments[i] != fold) out.push_back(i);
  }
  return out;
}

namespace {

FoldPlan empty_plan(const LabeledCorpus &corpus, std::size_t n,
                    std::uint64_t seed, bool stratified) {
  if (n < 2) throw DataError("number of folds must be >= 2");
  FoldPlan plan;
  plan.n_folds = n;
  plan.seed = seed;
  plan.stratified = stratified;
  plan.assignments.assign(corpus.size(), 0);
  plan.ids.reserve(corpus.size());
  for (const auto &r : corpus.reviews) {
    if (!r.label) throw DataError("review '" + r.id + "' has no label");
    plan.ids.push_back(r.id);
  }
  return plan;
}

}  // namespace

FoldPlan stratified_folds(const LabeledCorpus &corpus, std::size_t n,
                          std::uint64_t seed) {
  FoldPlan plan = empty_plan(corpus, n, seed, true);
  std::array<std::vector<std::size_t>, kNumLabels> members;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    members[label_index(*corpus.reviews[i].label)].push_back(i);
  }
  for (auto label : {PolarityLabel::kNegative, PolarityLabel::kPositive}) {
    const auto size = members[label_index(label)].size();
    if (size < n) {
      throw DataError("cannot build " + std::to_string(n) + " stratified folds: class " +
                      std::string(to_string(label)) + " has only " +
                      std::to_string(size) + " reviews");
    }
  }
  Rng rng(seed);
  std::size_t next = 0;
  for (auto &group : members) {
    rng.shuffle(std::span<std::size_t>(group));
    for (std::size_t i : group) plan.assignments[i] = next++ % n;
  }
  return plan;
}

FoldPlan random_folds(const LabeledCorpus &corpus, std::size_t n,
                      std::uint64_t seed) {
  FoldPlan plan = empty_plan(corpus, n, seed, false);
  if (corpus.size() < n) {
    throw DataError("cannot build " + std::to_string(n) + " folds from " +
                    std::to_string(corpus.size()) + " reviews");
  }
  std::vector<std::size_t> order(corpus.size());
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  rng.shuffle(std::span<std::size_t>(order));
  for (std::size_t k = 0; k < order.size(); ++k) plan.assignments[order[k]] = k % n;
  return plan;
}

// --- Resources and preparation ---------------------------------------------

std::string Resources::digest() const {
  Fnv1a h;
  auto field = [&h](std::string_view s) {
    h.update(s);
    h.update(std::string_view("\x1f", 1));
  };
  field("triggers");
  for (const auto &t : negation.triggers) field(t);
  field("exceptional");
  for (const auto &t : negation.exceptional_words) field(t);
  field("superlatives");
  for (const auto &t : negation.superlatives) field(t);
  for (const auto &[trigger, ctx] : negation.context_exceptions) {
    field("context");
    field(trigger);
    for (const auto &b : ctx.before) field(b);
    field("after");
    for (const auto &seq : ctx.after) {
      for (const auto &w : seq) field(w);
      field("|");
    }
  }
  h.update(static_cast<std::uint64_t>(negation.window_length));
  h.update(static_cast<std::uint64_t>(preprocess.collapse_repeats_to));
  h.update(static_cast<std::uint64_t>(preprocess.strip_diacritics));
  for (const auto &[from, to] : preprocess.normalization_table) {
    h.update(static_cast<std::uint64_t>(from));
    h.update(static_cast<std::uint64_t>(to));
  }
  field("lexicon");
  for (const auto &[word, polarity] : lexicon.sorted_entries()) {
    field(word);
    field(to_string(polarity));
  }
  field("stopwords");
  for (const auto &w : stopwords) field(w);
  return h.hex();
}

TokenizedReview prepare_review(const Review &review, const ScopePolicy &policy,
                               const Resources &resources) {
  const auto tokenized = preprocess_review(review, resources.preprocess);
  const auto tagged =
      apply_policy(tokenized, policy, resources.negation, resources.lexicon);
  return remove_stopwords(tagged.review, resources.stopwords);
}

std::vector<TokenizedReview> prepare_reviews(const LabeledCorpus &corpus,
                                             const ScopePolicy &policy,
                                             const Resources &resources) {
  std::vector<TokenizedReview> out;
  out.reserve(corpus.size());
  for (const auto &r : corpus.reviews) out.push_back(prepare_review(r, policy, resources));
  return out;
}

FittedPipeline fit_pipeline(std::span<const TokenizedReview> training,
                            const TrainConfig &config) {
  FittedPipeline fitted{Vocabulary::build(training), {}, nullptr, NBModel{}};
  fitted.idf = compute_idf(fitted.vocabulary);
  fitted.matrix = std::make_shared<const DocumentTermMatrix>(
      build_matrix(training, fitted.vocabulary, fitted.idf));
  fitted.model = train_model(fitted.matrix, config);
  return fitted;
}

// --- Cross-validation ------------------------------------------------------

CrossValidationResult cross_validate_prepared(
    std::span<const TokenizedReview> prepared, const TrainConfig &config,
    const FoldPlan &plan) {
  if (plan.assignments.size() != prepared.size()) {
    throw DataError("fold plan covers " + std::to_string(plan.assignments.size()) +
                    " reviews but the corpus has " +
                    std::to_string(prepared.size()));
  }
  for (std::size_t i = 0; i < prepared.size(); ++i) {
    if (!prepared[i].label) {
      throw DataError("review '" + prepared[i].id + "' has no label");
    }
    if (i < plan.ids.size() && plan.ids[i] != prepared[i].id) {
      throw DataError("fold plan does not match the corpus at review '" +
                      prepared[i].id + "'");
    }
  }

  CrossValidationResult result;
  for (std::size_t fold = 0; fold < plan.n_folds; ++fold) {
    std::vector<TokenizedReview> train, test;
    for (std::size_t i = 0; i < prepared.size(); ++i) {
      (plan.assignments[i] == fold ? test : train).push_back(prepared[i]);
    }
    if (test.empty()) continue;

    std::array<std::size_t, kNumLabels> classes{};
    for (const auto &r : train) ++classes[label_index(*r.label)];
    if (classes[0] == 0 || classes[1] == 0) {
      throw DataError("fold " + std::to_string(fold) +
                      ": training partition holds a single class");
    }

    const FittedPipeline fitted = fit_pipeline(train, config);
    std::vector<PolarityLabel> predicted, gold;
    predicted.reserve(test.size());
    gold.reserve(test.size());
    for (const auto &r : test) {
      predicted.push_back(
          predict(fitted.model, vectorize(r, fitted.vocabulary, fitted.idf)));
      gold.push_back(*r.label);
    }

    FoldResult fr;
    fr.fold = fold;
    fr.n_train = train.size();
    fr.n_test = test.size();
    fr.vocabulary_size = fitted.vocabulary.size();
    fr.model_fingerprint = fingerprint(fitted.model);
    fr.confusion = confusion_matrix(predicted, gold);
    result.pooled += fr.confusion;
    result.folds.push_back(fr);
  }
  result.metrics = compute_metrics(result.pooled);
  return result;
}

CrossValidationResult cross_validate(const LabeledCorpus &corpus,
                                     const ScopePolicy &policy,
                                     const TrainConfig &config,
                                     const Resources &resources,
                                     const FoldPlan &plan) {
  const auto prepared = prepare_reviews(corpus, policy, resources);
  return cross_validate_prepared(prepared, config, plan);
}

// --- Comparison grid -------------------------------------------------------

const GridCell *ComparisonReport::cell(ScopeKind policy,
                                       ClassifierKind classifier) const {
  for (const auto &c : grid) {
    if (c.policy == policy && c.classifier == classifier) return &c;
  }
  return nullptr;
}

ComparisonReport compare_grid(const LabeledCorpus &corpus,
                              const std::vector<ScopeKind> &policies,
                              const std::vector<ClassifierKind> &classifiers,
                              const Resources &resources, std::uint64_t seed,
                              const GridOptions &options) {
  if (policies.empty() || classifiers.empty()) {
    throw DataError("compare_grid needs at least one policy and one classifier");
  }
  options.train.validate();

  ComparisonReport report;
  report.seed = seed;
  report.n_folds = options.n_folds;
  report.stratified = options.stratified;
  report.config_digest = resources.digest();
  report.stats = corpus_stats(corpus, resources.negation, resources.preprocess);

  const FoldPlan plan = options.stratified
                            ? stratified_folds(corpus, options.n_folds, seed)
                            : random_folds(corpus, options.n_folds, seed);

  std::vector<std::vector<TokenizedReview>> prepared;
  prepared.reserve(policies.size());
  for (ScopeKind kind : policies) {
    const auto policy = ScopePolicy::from_config(kind, resources.negation);
    prepared.push_back(prepare_reviews(corpus, policy, resources));
    report.vocabulary_sizes[kind] = Vocabulary::build(prepared.back()).size();
  }

  for (ClassifierKind classifier : classifiers) {
    for (ScopeKind policy : policies) {
      report.grid.push_back(GridCell{policy, classifier, {}});
    }
  }

  auto run_cell = [&](std::size_t c) {
    GridCell &cell = report.grid[c];
    TrainConfig config = options.train;
    config.classifier = cell.classifier;
    config.seed = seed;
    cell.result = cross_validate_prepared(prepared[c % policies.size()], config, plan);
  };

  const std::size_t n_cells = report.grid.size();
  const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, n_cells);
  if (jobs == 1) {
    for (std::size_t c = 0; c < n_cells; ++c) run_cell(c);
    return report;
  }

  // Each worker owns the cells c with c % jobs == w; results land in fixed
  // slots, so scheduling cannot change the report.
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t c = w; c < n_cells; c += jobs) run_cell(c);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto &t : workers) t.join();
  for (const auto &e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return report;
}

}  // namespace negscope

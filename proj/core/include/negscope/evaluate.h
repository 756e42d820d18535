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

#ifndef NEGSCOPE_EVALUATE_H_
#define NEGSCOPE_EVALUATE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "negscope/classify.h"
#include "negscope/corpus.h"
#include "negscope/features.h"
#include "negscope/negation.h"
#include "negscope/review.h"

namespace negscope {

// Positive class is PolarityLabel::kPositive.
struct ConfusionMatrix {
  std::size_t tp = 0;
  std::size_t tn = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  std::size_t total() const { return tp + tn + fp + fn; }
  ConfusionMatrix &operator+=(const ConfusionMatrix &other);
  friend bool operator==(const ConfusionMatrix &,
                         const ConfusionMatrix &) = default;
};

struct Metrics {
  double accuracy = 0.0;
  std::optional<double> precision;  // absent when tp + fp == 0
  std::optional<double> recall;     // absent when tp + fn == 0

  friend bool operator==(const Metrics &, const Metrics &) = default;
};

// Throws DataError on length mismatch or empty input.
ConfusionMatrix confusion_matrix(std::span<const PolarityLabel> predicted,
                                 std::span<const PolarityLabel> gold);

// accuracy = (tp+tn)/total, precision = tp/(tp+fp), recall = tp/(tp+fn).
// Throws DataError on an all-zero matrix.
Metrics compute_metrics(const ConfusionMatrix &cm);

struct FoldPlan {
  std::size_t n_folds = 10;
  std::uint64_t seed = 0;
  bool stratified = true;
  // assignments[i] is the fold of corpus review i.
  std::vector<std::size_t> assignments;
  std::vector<std::string> ids;

  std::optional<std::size_t> fold_of(const std::string &id) const;
  std::vector<std::size_t> test_indices(std::size_t fold) const;
  std::vector<std::size_t> train_indices(std::size_t fold) const;
};

// Per-class seeded shuffle, then round-robin over folds continuing across
// classes. Throws DataError if a class has fewer than n members, n < 2, or a
// review is unlabeled.
FoldPlan stratified_folds(const LabeledCorpus &corpus, std::size_t n,
                          std::uint64_t seed);
// Unstratified variant: one seeded shuffle of the whole corpus.
FoldPlan random_folds(const LabeledCorpus &corpus, std::size_t n,
                      std::uint64_t seed);

// Loaded resources shared by every experiment.
struct Resources {
  NegationConfig negation;
  PreprocessOptions preprocess;
  SentimentLexicon lexicon;
  StopWords stopwords;

  // Digest over the canonical contents of all four resources.
  std::string digest() const;
};

// preprocess -> apply_policy -> remove_stopwords, per review.
TokenizedReview prepare_review(const Review &review, const ScopePolicy &policy,
                               const Resources &resources);
std::vector<TokenizedReview> prepare_reviews(const LabeledCorpus &corpus,
                                             const ScopePolicy &policy,
                                             const Resources &resources);

// Vocabulary, IDF and model fitted on one set of prepared reviews.
struct FittedPipeline {
  Vocabulary vocabulary;
  std::vector<double> idf;
  std::shared_ptr<const DocumentTermMatrix> matrix;
  Model model;
};

FittedPipeline fit_pipeline(std::span<const TokenizedReview> training,
                            const TrainConfig &config);

struct FoldResult {
  std::size_t fold = 0;
  std::size_t n_train = 0;
  std::size_t n_test = 0;
  std::size_t vocabulary_size = 0;
  std::uint64_t model_fingerprint = 0;
  ConfusionMatrix confusion;
};

struct CrossValidationResult {
  ConfusionMatrix pooled;
  Metrics metrics;  // from the pooled matrix
  std::vector<FoldResult> folds;
};

// Vocabulary, IDF and model come from the training folds only. Throws
// DataError when a training partition holds a single class or the plan does
// not cover the corpus.
CrossValidationResult cross_validate(const LabeledCorpus &corpus,
                                     const ScopePolicy &policy,
                                     const TrainConfig &config,
                                     const Resources &resources,
                                     const FoldPlan &plan);
// Same, over reviews already run through prepare_reviews.
CrossValidationResult cross_validate_prepared(
    std::span<const TokenizedReview> prepared, const TrainConfig &config,
    const FoldPlan &plan);

struct GridOptions {
  std::size_t n_folds = 10;
  bool stratified = true;
  TrainConfig train;  // classifier field is overridden per cell
  unsigned jobs = 1;
};

struct GridCell {
  ScopeKind policy = ScopeKind::kNone;
  ClassifierKind classifier = ClassifierKind::kSvm;
  CrossValidationResult result;
};

struct ComparisonReport {
  // Classifier-major, policies in request order within each classifier.
  std::vector<GridCell> grid;
  std::map<ScopeKind, std::size_t> vocabulary_sizes;
  NegationStats stats;
  std::uint64_t seed = 0;
  std::size_t n_folds = 0;
  bool stratified = true;
  std::string config_digest;
  std::map<std::string, std::string> manifest;

  const GridCell *cell(ScopeKind policy, ClassifierKind classifier) const;
};

// Every (policy, classifier) pair over one shared fold plan. Vocabulary
// sizes are measured on the full prepared corpus per policy.
ComparisonReport compare_grid(const LabeledCorpus &corpus,
                              const std::vector<ScopeKind> &policies,
                              const std::vector<ClassifierKind> &classifiers,
                              const Resources &resources, std::uint64_t seed,
                              const GridOptions &options = {});

}  // namespace negscope

#endif  // NEGSCOPE_EVALUATE_H_

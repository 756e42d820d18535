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

#ifndef NEGSCOPE_CLASSIFY_H_
#define NEGSCOPE_CLASSIFY_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "negscope/features.h"
#include "negscope/review.h"

namespace negscope {

enum class ClassifierKind { kSvm, kNaiveBayes, kLogReg, kKnn };

// svm, nb, logreg, knn
std::string_view to_string(ClassifierKind kind);
std::optional<ClassifierKind> parse_classifier_kind(std::string_view name);

struct TrainConfig {
  ClassifierKind classifier = ClassifierKind::kSvm;
  std::size_t k_neighbors = 50;
  double nb_alpha = 1.0;
  double logreg_learning_rate = 0.1;
  double logreg_l2 = 1e-3;
  std::size_t epochs = 100;
  double svm_c = 1.0;
  std::uint64_t seed = 0;

  // Throws DataError on out-of-range hyperparameters.
  void validate() const;
};

struct LinearModel {
  ClassifierKind kind = ClassifierKind::kSvm;  // kSvm or kLogReg
  std::vector<double> weights;
  double bias = 0.0;
};

struct NBModel {
  std::array<double, kNumLabels> class_log_prior{};
  std::array<std::vector<double>, kNumLabels> feature_log_likelihood;

  std::size_t n_features() const { return feature_log_likelihood[0].size(); }
};

struct KNNModel {
  std::shared_ptr<const DocumentTermMatrix> training;
  std::size_t k = 1;
};

struct LinearPrediction {
  PolarityLabel label = PolarityLabel::kPositive;
  double score = 0.0;
};

struct NBPrediction {
  PolarityLabel label = PolarityLabel::kPositive;
  std::array<double, kNumLabels> posterior{};

  double posterior_of(PolarityLabel l) const {
    return posterior[label_index(l)];
  }
};

// Multinomial NB over TF-IDF weights as fractional counts, Laplace/Lidstone
// smoothing `alpha`. Throws DataError if a class has no rows.
NBModel train_nb(const DocumentTermMatrix &matrix, double alpha);
// Exact posterior ties go to positive.
NBPrediction predict_nb(const NBModel &model, const SparseVector &x);

// Mean log-loss + (l2 / 2) ||w||^2; the bias is not regularized.
double logreg_objective(const DocumentTermMatrix &matrix,
                        std::span<const double> weights, double bias,
                        double l2);
// Gradient of logreg_objective: weights first, bias last.
std::vector<double> logreg_gradient(const DocumentTermMatrix &matrix,
                                    std::span<const double> weights,
                                    double bias, double l2);
// Full-batch gradient descent from zero for config.epochs. Throws DataError
// if the loss becomes non-finite.
LinearModel train_logreg(const DocumentTermMatrix &matrix,
                         const TrainConfig &config);

// Sum of hinge losses + ||w||^2 / (2C).
double svm_objective(const DocumentTermMatrix &matrix,
                     std::span<const double> weights, double bias, double c);
// Stochastic subgradient descent over seeded per-epoch permutations. When
// `objective_trace` is given, the objective after each epoch is appended.
LinearModel train_svm_linear(const DocumentTermMatrix &matrix,
                             const TrainConfig &config,
                             std::vector<double> *objective_trace = nullptr);

// score = w.x + b; score >= 0 is positive.
LinearPrediction predict_linear(const LinearModel &model,
                                const SparseVector &x);

// k is capped at the number of training rows.
KNNModel train_knn(std::shared_ptr<const DocumentTermMatrix> training,
                   std::size_t k);
// Majority of the k most similar rows (ties in similarity broken by row
// order); vote ties go to the larger summed similarity, then to positive.
PolarityLabel knn_predict(const KNNModel &model, const SparseVector &x);

using Model = std::variant<LinearModel, NBModel, KNNModel>;

Model train_model(std::shared_ptr<const DocumentTermMatrix> matrix,
                  const TrainConfig &config);
PolarityLabel predict(const Model &model, const SparseVector &x);
ClassifierKind kind_of(const Model &model);

// Stable digest of a trained model's parameters.
std::uint64_t fingerprint(const Model &model);

// Versioned text format. KNN models are rejected (they are the training
// matrix; export that instead). `metadata` lines are written after the
// header as `meta <key> <value>` and are ignored on load.
using SerializableModel = std::variant<LinearModel, NBModel>;
void save_model(std::ostream &out, const SerializableModel &model,
                const std::map<std::string, std::string> &metadata = {});
void save_model(const std::string &path, const SerializableModel &model,
                const std::map<std::string, std::string> &metadata = {});
// Throws DataError on a bad header, version mismatch, or truncation.
SerializableModel load_model(std::istream &in);
SerializableModel load_model(const std::string &path);

}  // namespace negscope

#endif  // NEGSCOPE_CLASSIFY_H_

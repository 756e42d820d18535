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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "negscope/classify.h"
#include "negscope/error.h"
#include "negscope/random.h"

namespace negscope {
namespace {

constexpr PolarityLabel kPos = PolarityLabel::kPositive;
constexpr PolarityLabel kNeg = PolarityLabel::kNegative;

SparseVector unit(std::uint32_t index) { return SparseVector{{{index, 1.0}}}; }

SparseVector normalized(std::vector<Feature> entries) {
  double sq = 0.0;
  for (const auto &f : entries) sq += f.weight * f.weight;
  for (auto &f : entries) f.weight /= std::sqrt(sq);
  return SparseVector{std::move(entries)};
}

SparseVector random_unit_vector(Rng &rng, std::uint32_t dim) {
  std::vector<Feature> entries;
  for (std::uint32_t i = 0; i < dim; ++i) {
    if (rng.below(2) == 0) entries.push_back({i, 0.1 + rng.uniform()});
  }
  if (entries.empty()) entries.push_back({static_cast<std::uint32_t>(rng.below(dim)), 1.0});
  return normalized(std::move(entries));
}

// Two positive {حلو} rows and two negative {وسخ} rows after TF-IDF.
DocumentTermMatrix hand_corpus() {
  DocumentTermMatrix m;
  m.n_features = 2;
  m.rows = {unit(0), unit(0), unit(1), unit(1)};
  m.labels = {kPos, kPos, kNeg, kNeg};
  return m;
}

// Ten unit-norm points split by a hidden hyperplane with margin.
DocumentTermMatrix separable_instance(std::uint64_t seed) {
  Rng rng(seed);
  const std::uint32_t dim = 6;
  std::vector<double> hidden(dim);
  for (auto &w : hidden) w = rng.uniform() * 2.0 - 1.0;
  DocumentTermMatrix m;
  m.n_features = dim;
  std::size_t pos = 0, neg = 0;
  while (m.n_rows() < 10) {
    const auto x = random_unit_vector(rng, dim);
    const double s = dot(hidden, x);
    if (std::abs(s) < 0.2) continue;
    const PolarityLabel y = s > 0 ? kPos : kNeg;
    if ((y == kPos ? pos : neg) >= 5) continue;
    ++(y == kPos ? pos : neg);
    m.rows.push_back(x);
    m.labels.push_back(y);
  }
  return m;
}

// --- Naive Bayes -----------------------------------------------------------

TEST(NaiveBayes, BalancedPriors) {
  const auto model = train_nb(hand_corpus(), 1.0);
  EXPECT_DOUBLE_EQ(model.class_log_prior[0], std::log(0.5));
  EXPECT_DOUBLE_EQ(model.class_log_prior[1], std::log(0.5));
}

TEST(NaiveBayes, HandCorpusPosterior) {
  // lik(حلو|pos) = (1+2)/(1*2+2) = 3/4, lik(حلو|neg) = 1/4, equal priors.
  const auto model = train_nb(hand_corpus(), 1.0);
  const auto p = predict_nb(model, unit(0));
  EXPECT_EQ(p.label, kPos);
  EXPECT_NEAR(p.posterior_of(kPos), 0.75, 1e-9);
  EXPECT_NEAR(p.posterior_of(kNeg), 0.25, 1e-9);
}

TEST(NaiveBayes, ZeroVectorGivesPriors) {
  DocumentTermMatrix m = hand_corpus();
  m.rows.push_back(unit(0));
  m.labels.push_back(kPos);
  const auto p = predict_nb(train_nb(m, 1.0), SparseVector{});
  EXPECT_NEAR(p.posterior_of(kPos), 0.6, 1e-12);
}

TEST(NaiveBayes, LikelihoodsNormalizePerClass) {
  Rng rng(4);
  DocumentTermMatrix m;
  m.n_features = 12;
  for (int i = 0; i < 30; ++i) {
    m.rows.push_back(random_unit_vector(rng, 12));
    m.labels.push_back(i % 2 ? kPos : kNeg);
  }
  const auto model = train_nb(m, 0.5);
  for (const auto &loglik : model.feature_log_likelihood) {
    double total = 0.0;
    for (double l : loglik) total += std::exp(l);
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
  EXPECT_NEAR(std::exp(model.class_log_prior[0]) + std::exp(model.class_log_prior[1]), 1.0,
              1e-15);
}

TEST(NaiveBayes, PosteriorsSumToOne) {
  Rng rng(8);
  DocumentTermMatrix m;
  m.n_features = 20;
  for (int i = 0; i < 40; ++i) {
    m.rows.push_back(random_unit_vector(rng, 20));
    m.labels.push_back(rng.below(2) ? kPos : kNeg);
  }
  const auto model = train_nb(m, 1.0);
  for (int i = 0; i < 1000; ++i) {
    SparseVector x = random_unit_vector(rng, 20);
    for (auto &f : x.entries) f.weight *= 1.0 + 50.0 * rng.uniform();
    const auto p = predict_nb(model, x);
    EXPECT_NEAR(p.posterior[0] + p.posterior[1], 1.0, 1e-9);
  }
}

TEST(NaiveBayes, SingleClassIsAnError) {
  DocumentTermMatrix m;
  m.n_features = 1;
  m.rows = {unit(0)};
  m.labels = {kPos};
  EXPECT_THROW(train_nb(m, 1.0), DataError);
}

TEST(NaiveBayes, ExactTieIsPositive) {
  NBModel model;
  model.class_log_prior = {std::log(0.5), std::log(0.5)};
  model.feature_log_likelihood = {std::vector<double>{std::log(0.5), std::log(0.5)},
                                  std::vector<double>{std::log(0.5), std::log(0.5)}};
  EXPECT_EQ(predict_nb(model, unit(0)).label, kPos);
}

// --- Logistic regression ---------------------------------------------------

TEST(LogReg, GradientMatchesCentralDifferences) {
  Rng rng(17);
  DocumentTermMatrix m;
  m.n_features = 4;
  for (int i = 0; i < 5; ++i) {
    std::vector<Feature> entries;
    for (std::uint32_t j = 0; j < 4; ++j) entries.push_back({j, 0.05 + rng.uniform()});
    m.rows.push_back(SparseVector{entries});
    m.labels.push_back(i % 2 ? kPos : kNeg);
  }
  std::vector<double> w(4);
  for (auto &x : w) x = rng.uniform() * 2.0 - 1.0;
  const double b = rng.uniform() - 0.5;
  const double l2 = 0.1;

  const auto grad = logreg_gradient(m, w, b, l2);
  ASSERT_EQ(grad.size(), 5u);
  const double h = 1e-5;
  double worst = 0.0;
  for (std::size_t j = 0; j <= 4; ++j) {
    auto wp = w, wm = w;
    double bp = b, bm = b;
    if (j < 4) {
      wp[j] += h;
      wm[j] -= h;
    } else {
      bp += h;
      bm -= h;
    }
    const double numeric =
        (logreg_objective(m, wp, bp, l2) - logreg_objective(m, wm, bm, l2)) / (2 * h);
    const double rel = std::abs(numeric - grad[j]) /
                       std::max({std::abs(numeric), std::abs(grad[j]), 1e-8});
    worst = std::max(worst, rel);
  }
  EXPECT_LE(worst, 1e-4);
}

TEST(LogReg, SinglePointIsLearned) {
  DocumentTermMatrix m;
  m.n_features = 2;
  m.rows = {unit(0), unit(1)};
  m.labels = {kNeg, kPos};
  const auto model = train_logreg(m, TrainConfig{});
  EXPECT_EQ(predict_linear(model, unit(1)).label, kPos);
  EXPECT_EQ(predict_linear(model, unit(0)).label, kNeg);
}

TEST(LogReg, StrongerPenaltyShrinksWeights) {
  const auto m = separable_instance(3);
  TrainConfig weak, strong;
  weak.logreg_l2 = 1e-3;
  strong.logreg_l2 = 10.0;
  auto norm = [](const LinearModel &model) {
    return std::sqrt(std::inner_product(model.weights.begin(), model.weights.end(),
                                        model.weights.begin(), 0.0));
  };
  EXPECT_LT(norm(train_logreg(m, strong)), norm(train_logreg(m, weak)));
}

TEST(LogReg, DivergenceIsReported) {
  TrainConfig config;
  config.logreg_learning_rate = 1e308;
  EXPECT_THROW(train_logreg(separable_instance(1), config), DataError);
}

// --- Linear SVM ------------------------------------------------------------

TEST(Svm, TwoPointSeparable) {
  DocumentTermMatrix m;
  m.n_features = 2;
  m.rows = {unit(0), unit(1)};
  m.labels = {kPos, kNeg};
  const auto model = train_svm_linear(m, TrainConfig{});
  const auto p0 = predict_linear(model, unit(0));
  const auto p1 = predict_linear(model, unit(1));
  EXPECT_EQ(p0.label, kPos);
  EXPECT_GT(p0.score, 0.0);
  EXPECT_EQ(p1.label, kNeg);
  EXPECT_LT(p1.score, 0.0);
}

TEST(Svm, ObjectiveDoesNotIncreaseAcrossEpochs) {
  const auto m = separable_instance(12);
  std::vector<double> trace;
  const auto model = train_svm_linear(m, TrainConfig{}, &trace);
  ASSERT_EQ(trace.size(), 100u);
  EXPECT_DOUBLE_EQ(trace.back(), svm_objective(m, model.weights, model.bias, 1.0));
  EXPECT_LT(trace.back(), svm_objective(m, std::vector<double>(m.n_features, 0.0), 0.0, 1.0));
  double total_increase = 0.0;
  for (std::size_t e = 1; e < trace.size(); ++e) {
    total_increase += std::max(0.0, trace[e] - trace[e - 1]);
  }
  EXPECT_LE(total_increase / static_cast<double>(trace.size() - 1), 1e-6);
}

TEST(Svm, SameSeedSameWeights) {
  const auto m = separable_instance(5);
  TrainConfig config;
  config.seed = 99;
  const auto a = train_svm_linear(m, config);
  const auto b = train_svm_linear(m, config);
  EXPECT_EQ(a.weights, b.weights);
  EXPECT_EQ(a.bias, b.bias);
}

TEST(Svm, ObjectiveFormula) {
  DocumentTermMatrix m;
  m.n_features = 1;
  m.rows = {unit(0), unit(0)};
  m.labels = {kPos, kNeg};
  const std::vector<double> w = {0.5};
  // hinge: max(0, 1-0.5) + max(0, 1+0.5) = 2; penalty 0.25 / (2*2).
  EXPECT_DOUBLE_EQ(svm_objective(m, w, 0.0, 2.0), 2.0 + 0.0625);
}

TEST(LinearModels, SeparableTenPointInstances) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto m = separable_instance(seed);
    for (const auto &model : {train_svm_linear(m, TrainConfig{}), train_logreg(m, TrainConfig{})}) {
      for (std::size_t r = 0; r < m.n_rows(); ++r) {
        EXPECT_EQ(predict_linear(model, m.rows[r]).label, m.labels[r])
            << "seed " << seed << " kind " << to_string(model.kind);
      }
    }
  }
}

// --- predict_linear --------------------------------------------------------

TEST(PredictLinear, ZeroScoreIsPositive) {
  LinearModel model;
  model.weights = {0.0, 0.0};
  EXPECT_EQ(predict_linear(model, unit(0)).label, kPos);
  EXPECT_EQ(predict_linear(model, SparseVector{}).label, kPos);
}

TEST(PredictLinear, UnitWeight) {
  LinearModel model;
  model.weights = {1.0};
  const auto p = predict_linear(model, unit(0));
  EXPECT_EQ(p.label, kPos);
  EXPECT_EQ(p.score, 1.0);
}

TEST(PredictLinear, NegatingWeightsFlipsSign) {
  Rng rng(21);
  for (int i = 0; i < 500; ++i) {
    LinearModel model;
    for (int j = 0; j < 8; ++j) model.weights.push_back(rng.uniform() * 2.0 - 1.0);
    model.bias = rng.uniform() - 0.5;
    const auto x = random_unit_vector(rng, 8);
    const auto a = predict_linear(model, x);
    LinearModel flipped = model;
    for (auto &w : flipped.weights) w = -w;
    flipped.bias = -flipped.bias;
    const auto b = predict_linear(flipped, x);
    EXPECT_DOUBLE_EQ(a.score, -b.score);
    if (a.score != 0.0) EXPECT_NE(a.label, b.label);
  }
}

// --- KNN -------------------------------------------------------------------

// Exhaustive top-k by full sort; ties by row order.
PolarityLabel reference_knn(const DocumentTermMatrix &train, const SparseVector &x,
                            std::size_t k) {
  std::vector<std::pair<double, std::size_t>> scored;
  for (std::size_t r = 0; r < train.n_rows(); ++r) {
    double s = 0.0;
    for (const auto &a : train.rows[r].entries) {
      for (const auto &b : x.entries) {
        if (a.index == b.index) s += a.weight * b.weight;
      }
    }
    scored.push_back({-s, r});
  }
  std::sort(scored.begin(), scored.end());
  k = std::min(k, scored.size());
  int pos = 0, neg = 0;
  double pos_sim = 0.0, neg_sim = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    if (train.labels[scored[i].second] == kPos) {
      ++pos;
      pos_sim -= scored[i].first;
    } else {
      ++neg;
      neg_sim -= scored[i].first;
    }
  }
  if (pos != neg) return pos > neg ? kPos : kNeg;
  return neg_sim > pos_sim ? kNeg : kPos;
}

void expect_knn_matches_reference(std::size_t n, std::size_t k, std::uint64_t seed) {
  Rng rng(seed);
  DocumentTermMatrix all;
  all.n_features = 5;
  for (std::size_t i = 0; i < n; ++i) {
    all.rows.push_back(random_unit_vector(rng, 5));
    all.labels.push_back(rng.below(2) ? kPos : kNeg);
  }
  for (std::size_t q = 0; q < n; ++q) {
    auto train = std::make_shared<DocumentTermMatrix>();
    train->n_features = 5;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == q) continue;
      train->rows.push_back(all.rows[i]);
      train->labels.push_back(all.labels[i]);
    }
    const auto model = train_knn(train, k);
    EXPECT_EQ(knn_predict(model, all.rows[q]), reference_knn(*train, all.rows[q], k))
        << "query " << q;
  }
}

TEST(Knn, MatchesBruteForceLeaveOneOut) {
  expect_knn_matches_reference(20, 5, 31);
  expect_knn_matches_reference(60, 50, 32);
  expect_knn_matches_reference(100, 7, 33);
}

TEST(Knn, SelfMatchWithKOne) {
  auto train = std::make_shared<DocumentTermMatrix>(hand_corpus());
  const auto model = train_knn(train, 1);
  EXPECT_EQ(knn_predict(model, unit(1)), kNeg);
  EXPECT_EQ(knn_predict(model, unit(0)), kPos);
}

TEST(Knn, SymmetricTieResolvesPositive) {
  auto train = std::make_shared<DocumentTermMatrix>(hand_corpus());
  const auto model = train_knn(train, 4);
  EXPECT_EQ(knn_predict(model, normalized({{0, 1.0}, {1, 1.0}})), kPos);
  EXPECT_EQ(knn_predict(model, SparseVector{}), kPos);
  // Equal votes, larger similarity mass wins.
  EXPECT_EQ(knn_predict(model, normalized({{0, 1.0}, {1, 2.0}})), kNeg);
}

TEST(Knn, KIsCappedAtTrainingSize) {
  auto train = std::make_shared<DocumentTermMatrix>(hand_corpus());
  EXPECT_EQ(train_knn(train, 50).k, 4u);
}

// --- Configuration and dispatch -------------------------------------------

TEST(TrainConfig, Validation) {
  auto bad = [](auto mutate) {
    TrainConfig c;
    mutate(c);
    return c;
  };
  EXPECT_THROW(bad([](TrainConfig &c) { c.k_neighbors = 0; }).validate(), DataError);
  EXPECT_THROW(bad([](TrainConfig &c) { c.nb_alpha = 0; }).validate(), DataError);
  EXPECT_THROW(bad([](TrainConfig &c) { c.epochs = 0; }).validate(), DataError);
  EXPECT_THROW(bad([](TrainConfig &c) { c.logreg_learning_rate = -1; }).validate(), DataError);
  EXPECT_NO_THROW(TrainConfig{}.validate());
  EXPECT_EQ(TrainConfig{}.k_neighbors, 50u);
}

TEST(ClassifierNames, RoundTrip) {
  for (auto k : {ClassifierKind::kSvm, ClassifierKind::kNaiveBayes, ClassifierKind::kLogReg,
                 ClassifierKind::kKnn}) {
    EXPECT_EQ(parse_classifier_kind(to_string(k)), k);
  }
  EXPECT_FALSE(parse_classifier_kind("rbf"));
}

TEST(Dispatch, TrainModelPerKind) {
  auto m = std::make_shared<DocumentTermMatrix>(hand_corpus());
  for (auto kind : {ClassifierKind::kSvm, ClassifierKind::kNaiveBayes, ClassifierKind::kLogReg,
                    ClassifierKind::kKnn}) {
    TrainConfig config;
    config.classifier = kind;
    config.k_neighbors = 1;
    const auto model = train_model(m, config);
    EXPECT_EQ(kind_of(model), kind);
    EXPECT_EQ(predict(model, unit(0)), kPos) << to_string(kind);
    EXPECT_EQ(predict(model, unit(1)), kNeg) << to_string(kind);
    EXPECT_EQ(fingerprint(model), fingerprint(train_model(m, config)));
  }
}

// --- Serialization ---------------------------------------------------------

SerializableModel round_trip(const SerializableModel &model) {
  std::stringstream buffer;
  save_model(buffer, model, {{"seed", "7"}});
  return load_model(buffer);
}

TEST(ModelIo, LinearRoundTripIsBitExact) {
  Rng rng(40);
  DocumentTermMatrix m;
  m.n_features = 30;
  for (int i = 0; i < 40; ++i) {
    m.rows.push_back(random_unit_vector(rng, 30));
    m.labels.push_back(i % 2 ? kPos : kNeg);
  }
  for (const auto &model : {train_svm_linear(m, TrainConfig{}), train_logreg(m, TrainConfig{})}) {
    const auto back = std::get<LinearModel>(round_trip(model));
    EXPECT_EQ(back.kind, model.kind);
    for (int i = 0; i < 100; ++i) {
      const auto x = random_unit_vector(rng, 30);
      EXPECT_EQ(predict_linear(back, x).score, predict_linear(model, x).score);
    }
  }
}

TEST(ModelIo, NaiveBayesRoundTripIsBitExact) {
  Rng rng(41);
  DocumentTermMatrix m;
  m.n_features = 15;
  for (int i = 0; i < 30; ++i) {
    m.rows.push_back(random_unit_vector(rng, 15));
    m.labels.push_back(i % 3 ? kPos : kNeg);
  }
  const auto model = train_nb(m, 1.0);
  const auto back = std::get<NBModel>(round_trip(model));
  for (int i = 0; i < 100; ++i) {
    const auto x = random_unit_vector(rng, 15);
    EXPECT_EQ(predict_nb(back, x).posterior, predict_nb(model, x).posterior);
  }
}

TEST(ModelIo, HeaderFormat) {
  LinearModel model;
  model.weights = {1.0, -2.5};
  std::ostringstream out;
  save_model(out, model);
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "negscope-model v1 svm |V|=2");
}

TEST(ModelIo, RejectsEmptyTruncatedAndForeignFiles) {
  std::istringstream empty("");
  EXPECT_THROW(load_model(empty), DataError);

  LinearModel model;
  model.weights = {1.0, 2.0};
  std::ostringstream out;
  save_model(out, model);
  std::string text = out.str();

  std::istringstream truncated(text.substr(0, text.rfind("end")));
  EXPECT_THROW(load_model(truncated), DataError);

  std::string v2 = text;
  v2.replace(v2.find("v1"), 2, "v2");
  std::istringstream future(v2);
  EXPECT_THROW(load_model(future), DataError);

  std::string short_weights = text;
  short_weights.replace(short_weights.find("|V|=2"), 5, "|V|=3");
  std::istringstream mismatch(short_weights);
  EXPECT_THROW(load_model(mismatch), DataError);

  EXPECT_THROW(load_model(std::string("/nonexistent/model.txt")), DataError);
}

}  // namespace
}  // namespace negscope

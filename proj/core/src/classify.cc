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

#include "negscope/classify.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "negscope/config_file.h"
#include "negscope/digest.h"
#include "negscope/error.h"
#include "negscope/random.h"

namespace negscope {
namespace {

constexpr std::string_view kModelMagic = "negscope-model";
constexpr std::string_view kModelVersion = "v1";

// Bias steps are damped relative to weight steps, as in Bottou's svmsgd.
constexpr double kSvmBiasRate = 0.01;

double sign_of(PolarityLabel label) {
  return label == PolarityLabel::kPositive ? 1.0 : -1.0;
}

// log(1 + exp(-m)) without overflow.
double log_loss(double margin) {
  return margin > 0 ? std::log1p(std::exp(-margin))
                    : -margin + std::log1p(std::exp(margin));
}

// 1 / (1 + exp(m)), the derivative weight of log_loss.
double logistic_neg(double margin) {
  if (margin > 0) {
    const double e = std::exp(-margin);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(margin));
}

void require_both_classes(const DocumentTermMatrix &matrix, std::string_view who) {
  if (matrix.count(PolarityLabel::kPositive) == 0 ||
      matrix.count(PolarityLabel::kNegative) == 0) {
    throw DataError(std::string(who) + ": training data must contain both classes");
  }
}

bool all_finite(std::span<const double> values) {
  return std::all_of(values.begin(), values.end(),
                     [](double v) { return std::isfinite(v); });
}

}  // namespace

std::string_view to_string(ClassifierKind kind) {
  switch (kind) {
    case ClassifierKind::kSvm:
      return "svm";
    case ClassifierKind::kNaiveBayes:
      return "nb";
    case ClassifierKind::kLogReg:
      return "logreg";
    case ClassifierKind::kKnn:
      return "knn";
  }
  return "svm";
}

std::optional<ClassifierKind> parse_classifier_kind(std::string_view name) {
  for (auto kind : {ClassifierKind::kSvm, ClassifierKind::kNaiveBayes,
                    ClassifierKind::kLogReg, ClassifierKind::kKnn}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

void TrainConfig::validate() const {
  if (k_neighbors < 1) throw DataError("k_neighbors must be >= 1");
  if (!(nb_alpha > 0.0)) throw DataError("nb_alpha must be > 0");
  if (epochs < 1) throw DataError("epochs must be >= 1");
  if (!(logreg_learning_rate > 0.0)) throw DataError("learning rate must be > 0");
  if (!(logreg_l2 >= 0.0)) throw DataError("logreg_l2 must be >= 0");
  if (!(svm_c > 0.0)) throw DataError("svm_c must be > 0");
}

// --- Naive Bayes -----------------------------------------------------------

NBModel train_nb(const DocumentTermMatrix &matrix, double alpha) {
  if (!(alpha > 0.0)) throw DataError("nb_alpha must be > 0");
  require_both_classes(matrix, "naive bayes");
  const std::size_t v = matrix.n_features;

  std::array<std::vector<double>, kNumLabels> mass;
  std::array<double, kNumLabels> total{};
  std::array<std::size_t, kNumLabels> docs{};
  for (auto &m : mass) m.assign(v, 0.0);
  for (std::size_t r = 0; r < matrix.n_rows(); ++r) {
    const std::size_t c = label_index(matrix.labels[r]);
    ++docs[c];
    for (const auto &f : matrix.rows[r].entries) {
      mass[c][f.index] += f.weight;
      total[c] += f.weight;
    }
  }

  NBModel model;
  const auto n = static_cast<double>(matrix.n_rows());
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    model.class_log_prior[c] = std::log(static_cast<double>(docs[c]) / n);
    const double denom = std::log(alpha * static_cast<double>(v) + total[c]);
    auto &loglik = model.feature_log_likelihood[c];
    loglik.resize(v);
    for (std::size_t t = 0; t < v; ++t) {
      loglik[t] = std::log(alpha + mass[c][t]) - denom;
    }
  }
  return model;
}

NBPrediction predict_nb(const NBModel &model, const SparseVector &x) {
  std::array<double, kNumLabels> joint = model.class_log_prior;
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    const auto &loglik = model.feature_log_likelihood[c];
    for (const auto &f : x.entries) {
      if (f.index < loglik.size()) joint[c] += f.weight * loglik[f.index];
    }
  }
  const double top = std::max(joint[0], joint[1]);
  const double z = std::exp(joint[0] - top) + std::exp(joint[1] - top);

  NBPrediction p;
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    p.posterior[c] = std::exp(joint[c] - top) / z;
  }
  const std::size_t pos = label_index(PolarityLabel::kPositive);
  const std::size_t neg = label_index(PolarityLabel::kNegative);
  p.label = joint[pos] >= joint[neg] ? PolarityLabel::kPositive
                                     : PolarityLabel::kNegative;
  return p;
}

// --- Logistic regression ---------------------------------------------------

double logreg_objective(const DocumentTermMatrix &matrix,
                        std::span<const double> weights, double bias,
                        double l2) {
  double loss = 0.0;
  for (std::size_t r = 0; r < matrix.n_rows(); ++r) {
    const double margin =
        sign_of(matrix.labels[r]) * (dot(weights, matrix.rows[r]) + bias);
    loss += log_loss(margin);
  }
  const double sq = std::inner_product(weights.begin(), weights.end(),
                                       weights.begin(), 0.0);
  return loss / static_cast<double>(matrix.n_rows()) + 0.5 * l2 * sq;
}

std::vector<double> logreg_gradient(const DocumentTermMatrix &matrix,
                                    std::span<const double> weights,
                                    double bias, double l2) {
  const std::size_t v = weights.size();
  std::vector<double> grad(v + 1, 0.0);
  const auto n = static_cast<double>(matrix.n_rows());
  for (std::size_t r = 0; r < matrix.n_rows(); ++r) {
    const double y = sign_of(matrix.labels[r]);
    const double margin = y * (dot(weights, matrix.rows[r]) + bias);
    const double coef = -y * logistic_neg(margin) / n;
    for (const auto &f : matrix.rows[r].entries) grad[f.index] += coef * f.weight;
    grad[v] += coef;
  }
  for (std::size_t i = 0; i < v; ++i) grad[i] += l2 * weights[i];
  return grad;
}

LinearModel train_logreg(const DocumentTermMatrix &matrix,
                         const TrainConfig &config) {
  config.validate();
  require_both_classes(matrix, "logistic regression");
  LinearModel model;
  model.kind = ClassifierKind::kLogReg;
  model.weights.assign(matrix.n_features, 0.0);

  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    const auto grad =
        logreg_gradient(matrix, model.weights, model.bias, config.logreg_l2);
    for (std::size_t i = 0; i < model.weights.size(); ++i) {
      model.weights[i] -= config.logreg_learning_rate * grad[i];
    }
    model.bias -= config.logreg_learning_rate * grad.back();
    const double loss =
        logreg_objective(matrix, model.weights, model.bias, config.logreg_l2);
    if (!std::isfinite(loss)) {
      throw DataError("logistic regression diverged (non-finite loss); "
                      "lower the learning rate");
    }
  }
  return model;
}

// --- Linear SVM ------------------------------------------------------------

double svm_objective(const DocumentTermMatrix &matrix,
                     std::span<const double> weights, double bias, double c) {
  double hinge = 0.0;
  for (std::size_t r = 0; r < matrix.n_rows(); ++r) {
    const double margin =
        sign_of(matrix.labels[r]) * (dot(weights, matrix.rows[r]) + bias);
    hinge += std::max(0.0, 1.0 - margin);
  }
  const double sq = std::inner_product(weights.begin(), weights.end(),
                                       weights.begin(), 0.0);
  return hinge + sq / (2.0 * c);
}

LinearModel train_svm_linear(const DocumentTermMatrix &matrix,
                             const TrainConfig &config,
                             std::vector<double> *objective_trace) {
  config.validate();
  require_both_classes(matrix, "linear svm");
  const std::size_t n = matrix.n_rows();

  // Per-sample form: lambda/2 ||w||^2 + mean hinge, lambda = 1 / (C n).
  const double lambda = 1.0 / (config.svm_c * static_cast<double>(n));
  const double typical_w = std::sqrt(1.0 / std::sqrt(lambda));
  const double eta0 = typical_w;  // hinge dloss is 1 at -typical_w
  double t = 1.0 / (eta0 * lambda);

  // w = scale * v keeps the shrink step O(1).
  std::vector<double> v(matrix.n_features, 0.0);
  double scale = 1.0;
  double bias = 0.0;

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(config.seed);

  auto materialize = [&] {
    std::vector<double> w(v);
    for (auto &x : w) x *= scale;
    return w;
  };

  // An epoch whose pass raises the full objective is rolled back, so the
  // kept iterate never gets worse; the step schedule keeps shrinking.
  std::vector<double> kept_w = materialize();
  double kept_bias = bias;
  double kept_objective = svm_objective(matrix, kept_w, kept_bias, config.svm_c);

  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    rng.shuffle(std::span<std::size_t>(order));
    for (std::size_t r : order) {
      const SparseVector &x = matrix.rows[r];
      const double y = sign_of(matrix.labels[r]);
      const double eta = 1.0 / (lambda * t);
      const double margin = y * (scale * dot(v, x) + bias);

      scale *= 1.0 - eta * lambda;
      if (margin < 1.0) {
        const double step = eta * y / scale;
        for (const auto &f : x.entries) v[f.index] += step * f.weight;
        bias += eta * y * kSvmBiasRate;
      }
      if (scale < 1e-9) {
        for (auto &w : v) w *= scale;
        scale = 1.0;
      }
      t += 1.0;
    }
    auto w = materialize();
    const double objective = svm_objective(matrix, w, bias, config.svm_c);
    if (objective <= kept_objective) {
      kept_w = std::move(w);
      kept_bias = bias;
      kept_objective = objective;
    } else {
      v = kept_w;
      scale = 1.0;
      bias = kept_bias;
    }
    if (objective_trace) objective_trace->push_back(kept_objective);
  }

  LinearModel model;
  model.kind = ClassifierKind::kSvm;
  model.weights = std::move(kept_w);
  model.bias = kept_bias;
  if (!all_finite(model.weights) || !std::isfinite(model.bias)) {
    throw DataError("linear svm produced non-finite weights");
  }
  return model;
}

LinearPrediction predict_linear(const LinearModel &model,
                                const SparseVector &x) {
  const double score = dot(model.weights, x) + model.bias;
  return {score >= 0.0 ? PolarityLabel::kPositive : PolarityLabel::kNegative,
          score};
}

// --- KNN -------------------------------------------------------------------

KNNModel train_knn(std::shared_ptr<const DocumentTermMatrix> training,
                   std::size_t k) {
  if (!training || training->n_rows() == 0) {
    throw DataError("knn needs a non-empty training matrix");
  }
  if (k < 1) throw DataError("k_neighbors must be >= 1");
  KNNModel model;
  model.k = std::min(k, training->n_rows());
  model.training = std::move(training);
  return model;
}

PolarityLabel knn_predict(const KNNModel &model, const SparseVector &x) {
  const DocumentTermMatrix &train = *model.training;
  const std::size_t n = train.n_rows();
  std::vector<double> sim(n);
  for (std::size_t r = 0; r < n; ++r) sim[r] = dot(train.rows[r], x);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  const std::size_t k = std::min(model.k, n);
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k),
                    order.end(), [&](std::size_t a, std::size_t b) {
                      if (sim[a] != sim[b]) return sim[a] > sim[b];
                      return a < b;
                    });

  std::array<std::size_t, kNumLabels> votes{};
  std::array<double, kNumLabels> mass{};
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t c = label_index(train.labels[order[i]]);
    ++votes[c];
    mass[c] += sim[order[i]];
  }
  const std::size_t pos = label_index(PolarityLabel::kPositive);
  const std::size_t neg = label_index(PolarityLabel::kNegative);
  if (votes[pos] != votes[neg]) {
    return votes[pos] > votes[neg] ? PolarityLabel::kPositive
                                   : PolarityLabel::kNegative;
  }
  return mass[neg] > mass[pos] ? PolarityLabel::kNegative
                               : PolarityLabel::kPositive;
}

// --- Dispatch --------------------------------------------------------------

Model train_model(std::shared_ptr<const DocumentTermMatrix> matrix,
                  const TrainConfig &config) {
  config.validate();
  switch (config.classifier) {
    case ClassifierKind::kSvm:
      return train_svm_linear(*matrix, config);
    case ClassifierKind::kNaiveBayes:
      return train_nb(*matrix, config.nb_alpha);
    case ClassifierKind::kLogReg:
      return train_logreg(*matrix, config);
    case ClassifierKind::kKnn:
      return train_knn(std::move(matrix), config.k_neighbors);
  }
  throw std::logic_error("unknown classifier");
}

PolarityLabel predict(const Model &model, const SparseVector &x) {
  struct Visitor {
    const SparseVector &x;
    PolarityLabel operator()(const LinearModel &m) const {
      return predict_linear(m, x).label;
    }
    PolarityLabel operator()(const NBModel &m) const { return predict_nb(m, x).label; }
    PolarityLabel operator()(const KNNModel &m) const { return knn_predict(m, x); }
  };
  return std::visit(Visitor{x}, model);
}

ClassifierKind kind_of(const Model &model) {
  if (const auto *linear = std::get_if<LinearModel>(&model)) return linear->kind;
  if (std::holds_alternative<NBModel>(model)) return ClassifierKind::kNaiveBayes;
  return ClassifierKind::kKnn;
}

std::uint64_t fingerprint(const Model &model) {
  Fnv1a h;
  h.update(to_string(kind_of(model)));
  if (const auto *linear = std::get_if<LinearModel>(&model)) {
    h.update(std::span<const double>(linear->weights));
    h.update(linear->bias);
  } else if (const auto *nb = std::get_if<NBModel>(&model)) {
    for (std::size_t c = 0; c < kNumLabels; ++c) {
      h.update(nb->class_log_prior[c]);
      h.update(std::span<const double>(nb->feature_log_likelihood[c]));
    }
  } else {
    const auto &knn = std::get<KNNModel>(model);
    h.update(static_cast<std::uint64_t>(knn.k));
    h.update(static_cast<std::uint64_t>(knn.training->n_features));
    for (std::size_t r = 0; r < knn.training->n_rows(); ++r) {
      h.update(static_cast<std::uint64_t>(label_index(knn.training->labels[r])));
      for (const auto &f : knn.training->rows[r].entries) {
        h.update(static_cast<std::uint64_t>(f.index));
        h.update(f.weight);
      }
    }
  }
  return h.value();
}

// --- Serialization ---------------------------------------------------------

namespace {

void write_values(std::ostream &out, std::span<const double> values) {
  for (double v : values) out << ' ' << format_double(v);
}

std::vector<double> read_values(std::string_view rest, std::size_t expected,
                                std::string_view what) {
  std::vector<double> values;
  values.reserve(expected);
  while (!(rest = trim(rest)).empty()) {
    const auto space = rest.find(' ');
    values.push_back(parse_double(rest.substr(0, space)));
    rest = space == std::string_view::npos ? std::string_view{} : rest.substr(space);
  }
  if (values.size() != expected) {
    throw DataError("model file: " + std::string(what) + " has " +
                    std::to_string(values.size()) + " values, expected " +
                    std::to_string(expected));
  }
  return values;
}

std::pair<std::string_view, std::string_view> split_word(std::string_view line) {
  const auto space = line.find(' ');
  if (space == std::string_view::npos) return {line, {}};
  return {line.substr(0, space), line.substr(space + 1)};
}

}  // namespace

void save_model(std::ostream &out, const SerializableModel &model,
                const std::map<std::string, std::string> &metadata) {
  if (const auto *linear = std::get_if<LinearModel>(&model)) {
    out << kModelMagic << ' ' << kModelVersion << ' ' << to_string(linear->kind)
        << " |V|=" << linear->weights.size() << '\n';
    for (const auto &[k, v] : metadata) out << "meta " << k << ' ' << v << '\n';
    out << "bias " << format_double(linear->bias) << '\n';
    out << "weights";
    write_values(out, linear->weights);
    out << '\n';
  } else {
    const auto &nb = std::get<NBModel>(model);
    out << kModelMagic << ' ' << kModelVersion << " nb |V|=" << nb.n_features()
        << '\n';
    for (const auto &[k, v] : metadata) out << "meta " << k << ' ' << v << '\n';
    for (auto label : {PolarityLabel::kNegative, PolarityLabel::kPositive}) {
      out << "prior " << to_string(label) << ' '
          << format_double(nb.class_log_prior[label_index(label)]) << '\n';
    }
    for (auto label : {PolarityLabel::kNegative, PolarityLabel::kPositive}) {
      out << "loglik " << to_string(label);
      write_values(out, nb.feature_log_likelihood[label_index(label)]);
      out << '\n';
    }
  }
  out << "end\n";
}

void save_model(const std::string &path, const SerializableModel &model,
                const std::map<std::string, std::string> &metadata) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path);
  save_model(out, model, metadata);
  if (!out) throw DataError("error writing " + path);
}

SerializableModel load_model(std::istream &in) {
  std::string line;
  if (!std::getline(in, line)) throw DataError("model file is empty");

  std::istringstream header(line);
  std::string magic, version, kind_name, dim;
  header >> magic >> version >> kind_name >> dim;
  if (magic != kModelMagic) throw DataError("not a negscope model file");
  if (version != kModelVersion) {
    throw DataError("model version mismatch: file has '" + version +
                    "', expected '" + std::string(kModelVersion) + "'");
  }
  const auto kind = parse_classifier_kind(kind_name);
  if (!kind || *kind == ClassifierKind::kKnn) {
    throw DataError("unsupported model kind '" + kind_name + "'");
  }
  if (dim.rfind("|V|=", 0) != 0) throw DataError("model header lacks |V|=");
  std::size_t v = 0;
  try {
    v = std::stoul(dim.substr(4));
  } catch (const std::logic_error &) {
    throw DataError("bad |V| in model header");
  }

  LinearModel linear;
  linear.kind = *kind;
  NBModel nb;
  bool have_bias = false, have_weights = false, ended = false;
  std::array<bool, kNumLabels> have_prior{}, have_loglik{};

  while (std::getline(in, line)) {
    const auto [word, rest] = split_word(line);
    if (word == "end") {
      ended = true;
      break;
    }
    if (word == "meta") continue;
    if (*kind != ClassifierKind::kNaiveBayes) {
      if (word == "bias") {
        linear.bias = parse_double(trim(rest));
        have_bias = true;
      } else if (word == "weights") {
        linear.weights = read_values(rest, v, "weights");
        have_weights = true;
      } else {
        throw DataError("model file: unexpected line '" + std::string(word) + "'");
      }
      continue;
    }
    const auto [label_name, values] = split_word(rest);
    const auto label = parse_label(label_name);
    if (!label) throw DataError("model file: bad label in '" + line + "'");
    const std::size_t c = label_index(*label);
    if (word == "prior") {
      nb.class_log_prior[c] = parse_double(trim(values));
      have_prior[c] = true;
    } else if (word == "loglik") {
      nb.feature_log_likelihood[c] = read_values(values, v, "loglik");
      have_loglik[c] = true;
    } else {
      throw DataError("model file: unexpected line '" + std::string(word) + "'");
    }
  }
  if (!ended) throw DataError("model file is truncated (no 'end' line)");
  if (*kind == ClassifierKind::kNaiveBayes) {
    if (!have_prior[0] || !have_prior[1] || !have_loglik[0] || !have_loglik[1]) {
      throw DataError("model file is missing naive bayes parameters");
    }
    return nb;
  }
  if (!have_bias || !have_weights) {
    throw DataError("model file is missing linear parameters");
  }
  return linear;
}

SerializableModel load_model(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  try {
    return load_model(in);
  } catch (const DataError &e) {
    throw DataError(path + ": " + e.what());
  }
}

}  // namespace negscope

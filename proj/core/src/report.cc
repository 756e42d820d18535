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

#include "negscope/report.h"

#include <cstdio>
#include <sstream>

namespace negscope {
namespace {

using nlohmann::json;

json optional_number(const std::optional<double> &v) {
  return v ? json(*v) : json(nullptr);
}

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

std::string percent(const std::optional<double> &v) {
  return v ? fixed(100.0 * *v, 2) + "%" : "n/a";
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string classifier_title(ClassifierKind kind) {
  switch (kind) {
    case ClassifierKind::kSvm:
      return "SVM";
    case ClassifierKind::kNaiveBayes:
      return "NB";
    case ClassifierKind::kLogReg:
      return "Logistic Regression";
    case ClassifierKind::kKnn:
      return "K-NN";
  }
  return "";
}

}  // namespace

std::string policy_label(ScopeKind kind) {
  switch (kind) {
    case ScopeKind::kNone:
      return "Baseline 1";
    case ScopeKind::kFixedWindow:
      return "Baseline 2";
    case ScopeKind::kToSentenceEnd:
      return "Baseline 3";
    case ScopeKind::kRuleBased:
      return "Proposed";
  }
  return "";
}

json to_json(const NegationStats &stats) {
  return {
      {"total_reviews", stats.total_reviews},
      {"reviews_with_trigger", stats.reviews_with_trigger},
      {"positive_with_trigger", stats.positive_with_trigger},
      {"negative_with_trigger", stats.negative_with_trigger},
      {"prevalence", stats.prevalence},
      {"negative_share", optional_number(stats.negative_share)},
      {"positive_share", optional_number(stats.positive_share)},
  };
}

json to_json(const Metrics &metrics) {
  return {
      {"accuracy", metrics.accuracy},
      {"precision", optional_number(metrics.precision)},
      {"recall", optional_number(metrics.recall)},
  };
}

json to_json(const ConfusionMatrix &cm) {
  return {{"tp", cm.tp}, {"tn", cm.tn}, {"fp", cm.fp}, {"fn", cm.fn}};
}

json to_json(const CrossValidationResult &result) {
  json folds = json::array();
  for (const auto &f : result.folds) {
    folds.push_back({
        {"fold", f.fold},
        {"n_train", f.n_train},
        {"n_test", f.n_test},
        {"vocabulary_size", f.vocabulary_size},
        {"confusion", to_json(f.confusion)},
        {"accuracy", compute_metrics(f.confusion).accuracy},
    });
  }
  json out = to_json(result.metrics);
  out["aggregation"] = "pooled";
  out["confusion"] = to_json(result.pooled);
  out["folds"] = std::move(folds);
  return out;
}

json to_json(const ComparisonReport &report) {
  json grid = json::array();
  for (const auto &cell : report.grid) {
    json row = to_json(cell.result.metrics);
    row["policy"] = std::string(to_string(cell.policy));
    row["label"] = policy_label(cell.policy);
    row["classifier"] = std::string(to_string(cell.classifier));
    row["confusion"] = to_json(cell.result.pooled);
    grid.push_back(std::move(row));
  }
  json vocab = json::object();
  for (const auto &[kind, size] : report.vocabulary_sizes) {
    vocab[std::string(to_string(kind))] = size;
  }
  return {
      {"grid", std::move(grid)},
      {"vocab_sizes", std::move(vocab)},
      {"stats", to_json(report.stats)},
      {"seed", report.seed},
      {"folds", report.n_folds},
      {"stratified", report.stratified},
      {"aggregation", "pooled"},
      {"config_digest", report.config_digest},
      {"manifest", report.manifest},
  };
}

json to_json(const TokenizedReview &review,
             const std::optional<RuleTrace> &trace) {
  json tokens = json::array();
  for (const auto &t : review.tokens) {
    tokens.push_back({{"surface", t.surface}, {"negated", t.negated}});
  }
  json out = {
      {"id", review.id},
      {"tagged", render_tagged(review)},
      {"tokens", std::move(tokens)},
      {"sentence_breaks", review.sentence_breaks},
      {"label", review.label ? json(std::string(to_string(*review.label)))
                             : json(nullptr)},
  };
  if (trace) {
    json triggers = json::array();
    for (const auto &t : trace->triggers) {
      json skipped = json::array();
      for (const auto &s : t.skipped) {
        skipped.push_back({{"index", s.index}, {"reason", s.reason}});
      }
      triggers.push_back({
          {"trigger", t.trigger},
          {"index", t.trigger_index},
          {"case", t.fired_case ? json(case_number(*t.fired_case)) : json(nullptr)},
          {"tagged", t.tagged_indices},
          {"skipped", std::move(skipped)},
      });
    }
    out["trace"] = std::move(triggers);
  }
  return out;
}

std::string render_stats(const NegationStats &stats) {
  std::ostringstream out;
  auto share = [](const std::optional<double> &v) {
    return v ? fixed(*v, 6) : std::string("n/a");
  };
  out << "reviews             " << stats.total_reviews << '\n'
      << "with trigger        " << stats.reviews_with_trigger << '\n'
      << "prevalence          " << fixed(stats.prevalence, 6) << " ("
      << stats.reviews_with_trigger << '/' << stats.total_reviews << ")\n"
      << "positive w/ trigger " << stats.positive_with_trigger << '\n'
      << "negative w/ trigger " << stats.negative_with_trigger << '\n'
      << "negative share      " << share(stats.negative_share) << '\n'
      << "positive share      " << share(stats.positive_share) << '\n';
  return out.str();
}

std::string render_cross_validation(const CrossValidationResult &result) {
  std::ostringstream out;
  const auto &m = result.metrics;
  out << "accuracy   " << fixed(m.accuracy, 4) << '\n'
      << "precision  " << (m.precision ? fixed(*m.precision, 4) : "n/a") << '\n'
      << "recall     " << (m.recall ? fixed(*m.recall, 4) : "n/a") << '\n'
      << "aggregation pooled over " << result.folds.size() << " folds\n\n";
  out << "fold  train  test  |V|     tp    tn    fp    fn    accuracy\n";
  for (const auto &f : result.folds) {
    char line[160];
    std::snprintf(line, sizeof line,
                  "%-5zu %-6zu %-5zu %-7zu %-5zu %-5zu %-5zu %-5zu %.4f\n",
                  f.fold, f.n_train, f.n_test, f.vocabulary_size, f.confusion.tp,
                  f.confusion.tn, f.confusion.fp, f.confusion.fn,
                  compute_metrics(f.confusion).accuracy);
    out << line;
  }
  return out.str();
}

std::string render_table(const ComparisonReport &report) {
  constexpr std::size_t kClassifierWidth = 21;
  constexpr std::size_t kModelWidth = 12;
  constexpr std::size_t kColumnWidth = 11;

  std::ostringstream out;
  out << pad("Classifier", kClassifierWidth) << pad("Model", kModelWidth)
      << pad("Accuracy", kColumnWidth) << pad("Precision", kColumnWidth)
      << "Recall\n";
  std::optional<ClassifierKind> previous;
  for (const auto &cell : report.grid) {
    const bool first = !previous || *previous != cell.classifier;
    previous = cell.classifier;
    const auto &m = cell.result.metrics;
    out << pad(first ? classifier_title(cell.classifier) : "", kClassifierWidth)
        << pad(policy_label(cell.policy), kModelWidth)
        << pad(percent(m.accuracy), kColumnWidth)
        << pad(percent(m.precision), kColumnWidth) << percent(m.recall) << '\n';
  }
  out << '\n' << "features per model\n";
  for (const auto &[kind, size] : report.vocabulary_sizes) {
    out << "  "
        << pad(policy_label(kind) + " (" + std::string(to_string(kind)) + ")",
               kClassifierWidth + kModelWidth - 2)
        << size << '\n';
  }
  out << '\n'
      << "metrics pooled over " << report.n_folds << ' '
      << (report.stratified ? "stratified" : "random") << " folds, seed "
      << report.seed << '\n'
      << "reviews with a negation trigger: " << report.stats.reviews_with_trigger
      << '/' << report.stats.total_reviews << " (" << fixed(100.0 * report.stats.prevalence, 2)
      << "%)\n"
      << "config digest " << report.config_digest << '\n';
  return out.str();
}

}  // namespace negscope

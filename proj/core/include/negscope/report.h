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

#ifndef NEGSCOPE_REPORT_H_
#define NEGSCOPE_REPORT_H_

#include <string>

#include <nlohmann/json.hpp>

#include "negscope/corpus.h"
#include "negscope/evaluate.h"
#include "negscope/negation.h"

namespace negscope {

nlohmann::json to_json(const NegationStats &stats);
nlohmann::json to_json(const Metrics &metrics);
nlohmann::json to_json(const ConfusionMatrix &cm);
nlohmann::json to_json(const CrossValidationResult &result);
nlohmann::json to_json(const ComparisonReport &report);
nlohmann::json to_json(const TokenizedReview &review,
                       const std::optional<RuleTrace> &trace);

std::string render_stats(const NegationStats &stats);
// Accuracy/precision/recall plus the per-fold table.
std::string render_cross_validation(const CrossValidationResult &result);
// One block per classifier, one row per policy.
std::string render_table(const ComparisonReport &report);

// "Baseline 1" ... "Proposed".
std::string policy_label(ScopeKind kind);

}  // namespace negscope

#endif  // NEGSCOPE_REPORT_H_

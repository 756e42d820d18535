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

#ifndef NEGSCOPE_NEGATION_H_
#define NEGSCOPE_NEGATION_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "negscope/corpus.h"
#include "negscope/preprocess.h"

namespace negscope {

enum class ScopeKind { kNone, kFixedWindow, kToSentenceEnd, kRuleBased };

// CLI names: none, window, sentence, rules.
std::string_view to_string(ScopeKind kind);
std::optional<ScopeKind> parse_scope_kind(std::string_view name);

struct ScopePolicy {
  ScopeKind kind = ScopeKind::kNone;
  std::size_t window_length = 5;

  static ScopePolicy from_config(ScopeKind kind, const NegationConfig &config) {
    return {kind, config.window_length};
  }
};

enum class TriggerKind { kRaw, kValidated };

struct TriggerOccurrence {
  std::size_t token_index = 0;
  std::string trigger;
  TriggerKind kind = TriggerKind::kRaw;
};

// The six exception cases of the rule engine.
//   1: exceptional word (الا) before the first polarity word
//   2: superlative/comparative before the first polarity word
//   3: mixed polarities in scope, only the first-seen polarity is negated
//   4: non-negation sense of ما
//   5: non-negation sense of غير
//   6: non-negation sense of مش, مو, لا, لم
enum class ExceptionCase { kCase1 = 1, kCase2, kCase3, kCase4, kCase5, kCase6 };

int case_number(ExceptionCase c);

// Half-open token index range.
struct IndexRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool empty() const { return begin >= end; }
  std::size_t size() const { return empty() ? 0 : end - begin; }
  bool contains(std::size_t i) const { return i >= begin && i < end; }
  friend bool operator==(const IndexRange &, const IndexRange &) = default;
};

struct ContextVerdict {
  bool is_negation = true;
  std::optional<ExceptionCase> fired_case;
};

struct ScopeVerdict {
  bool suppress = false;
  std::optional<ExceptionCase> fired_case;
};

struct SkippedToken {
  std::size_t index = 0;
  std::string reason;
};

struct TriggerTrace {
  std::size_t trigger_index = 0;
  std::string trigger;
  std::optional<ExceptionCase> fired_case;
  std::vector<std::size_t> tagged_indices;
  std::vector<SkippedToken> skipped;
};

struct RuleTrace {
  std::vector<TriggerTrace> triggers;
};

struct TaggingResult {
  TokenizedReview review;
  std::optional<RuleTrace> trace;  // RuleBased only
};

std::vector<TriggerOccurrence> match_raw_triggers(const TokenizedReview &review,
                                                  const NegationConfig &config);

// Cases 4-6: one token of left context, up to two tokens of right context.
ContextVerdict filter_trigger_context(const TokenizedReview &review,
                                      const TriggerOccurrence &occurrence,
                                      const NegationConfig &config);

IndexRange scope_of(const TokenizedReview &review, std::size_t trigger_index,
                    const ScopePolicy &policy);

// Cases 1-2. `scope` comes from scope_of for a validated trigger.
ScopeVerdict check_scope_exceptions(const TokenizedReview &review,
                                    std::size_t trigger_index,
                                    IndexRange scope,
                                    const NegationConfig &config,
                                    const SentimentLexicon &lexicon);

TaggingResult tag_rule_based(const TokenizedReview &review,
                             const NegationConfig &config,
                             const SentimentLexicon &lexicon);

TokenizedReview tag_window(const TokenizedReview &review,
                           const NegationConfig &config);

TokenizedReview tag_to_sentence_end(const TokenizedReview &review,
                                    const NegationConfig &config);

// Dispatch. The policy's window_length overrides config.window_length.
TaggingResult apply_policy(const TokenizedReview &review,
                           const ScopePolicy &policy,
                           const NegationConfig &config,
                           const SentimentLexicon &lexicon);

// Surfaces joined by spaces, negated tokens suffixed with "_!".
std::string render_tagged(const TokenizedReview &review);

// `trigger@<idx> case=<none|1..6> tagged=[i,j]` per trigger.
std::vector<std::string> render_trace_lines(const RuleTrace &trace);

}  // namespace negscope

#endif  // NEGSCOPE_NEGATION_H_

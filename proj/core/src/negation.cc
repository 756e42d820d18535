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

#include "negscope/negation.h"

#include <algorithm>

#include "negscope/features.h"

namespace negscope {
namespace {

constexpr std::string_view kMa = "ما";
constexpr std::string_view kGhayr = "غير";

ExceptionCase context_case_for(std::string_view trigger) {
  if (trigger == kMa) return ExceptionCase::kCase4;
  if (trigger == kGhayr) return ExceptionCase::kCase5;
  return ExceptionCase::kCase6;
}

bool contains(const std::set<std::string> &set, const std::string &s) {
  return set.find(s) != set.end();
}

// First token in scope that counts as a polarity word: a lexicon word that is
// neither a superlative nor a trigger.
std::optional<std::size_t> first_polarity_index(const TokenizedReview &review,
                                                IndexRange scope,
                                                const NegationConfig &config,
                                                const SentimentLexicon &lexicon) {
  for (std::size_t i = scope.begin; i < scope.end; ++i) {
    const std::string &surface = review.tokens[i].surface;
    if (contains(config.superlatives, surface) || config.is_trigger(surface)) {
      continue;
    }
    if (lexicon.contains(surface)) return i;
  }
  return std::nullopt;
}

TokenizedReview tag_scopes(const TokenizedReview &review,
                           const NegationConfig &config,
                           const ScopePolicy &policy) {
  TokenizedReview out = review;
  for (const auto &occurrence : match_raw_triggers(review, config)) {
    const IndexRange scope = scope_of(review, occurrence.token_index, policy);
    for (std::size_t i = scope.begin; i < scope.end; ++i) {
      out.tokens[i].negated = true;
    }
  }
  return out;
}

TaggingResult tag_rules(const TokenizedReview &review,
                        const NegationConfig &config,
                        const SentimentLexicon &lexicon,
                        std::size_t window_length) {
  TaggingResult result{review, RuleTrace{}};
  TokenizedReview &out = result.review;
  const ScopePolicy policy{ScopeKind::kRuleBased, window_length};

  for (const auto &occurrence : match_raw_triggers(review, config)) {
    TriggerTrace trace;
    trace.trigger_index = occurrence.token_index;
    trace.trigger = occurrence.trigger;

    const ContextVerdict context =
        filter_trigger_context(review, occurrence, config);
    if (!context.is_negation) {
      trace.fired_case = context.fired_case;
      result.trace->triggers.push_back(std::move(trace));
      continue;
    }

    const IndexRange scope = scope_of(review, occurrence.token_index, policy);
    const ScopeVerdict verdict = check_scope_exceptions(
        review, occurrence.token_index, scope, config, lexicon);
    if (verdict.suppress) {
      trace.fired_case = verdict.fired_case;
      result.trace->triggers.push_back(std::move(trace));
      continue;
    }

    const auto first = first_polarity_index(review, scope, config, lexicon);
    if (!first) {
      result.trace->triggers.push_back(std::move(trace));
      continue;
    }
    const PolarityLabel governing = *lexicon.polarity(review.tokens[*first].surface);

    bool discarded = false;
    for (std::size_t i = scope.begin; i < scope.end; ++i) {
      const std::string &surface = review.tokens[i].surface;
      const auto polarity = lexicon.polarity(surface);
      if (!polarity) continue;
      if (config.is_trigger(surface)) {
        trace.skipped.push_back({i, "trigger token"});
        continue;
      }
      if (*polarity != governing) {
        trace.skipped.push_back({i, "opposite polarity"});
        discarded = true;
        continue;
      }
      if (out.tokens[i].negated) {
        trace.skipped.push_back({i, "already tagged"});
        continue;
      }
      out.tokens[i].negated = true;
      trace.tagged_indices.push_back(i);
    }
    if (discarded) trace.fired_case = ExceptionCase::kCase3;
    result.trace->triggers.push_back(std::move(trace));
  }
  return result;
}

}  // namespace

std::string_view to_string(ScopeKind kind) {
  switch (kind) {
    case ScopeKind::kNone:
      return "none";
    case ScopeKind::kFixedWindow:
      return "window";
    case ScopeKind::kToSentenceEnd:
      return "sentence";
    case ScopeKind::kRuleBased:
      return "rules";
  }
  return "none";
}

std::optional<ScopeKind> parse_scope_kind(std::string_view name) {
  for (auto kind : {ScopeKind::kNone, ScopeKind::kFixedWindow,
                    ScopeKind::kToSentenceEnd, ScopeKind::kRuleBased}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

int case_number(ExceptionCase c) { return static_cast<int>(c); }

std::vector<TriggerOccurrence> match_raw_triggers(const TokenizedReview &review,
                                                  const NegationConfig &config) {
  std::vector<TriggerOccurrence> out;
  for (std::size_t i = 0; i < review.tokens.size(); ++i) {
    const std::string &surface = review.tokens[i].surface;
    if (config.is_trigger(surface)) out.push_back({i, surface, TriggerKind::kRaw});
  }
  return out;
}

ContextVerdict filter_trigger_context(const TokenizedReview &review,
                                      const TriggerOccurrence &occurrence,
                                      const NegationConfig &config) {
  const auto it = config.context_exceptions.find(occurrence.trigger);
  if (it == config.context_exceptions.end()) return {true, std::nullopt};
  const ContextExceptions &exceptions = it->second;
  const auto &tokens = review.tokens;
  const std::size_t index = occurrence.token_index;

  bool matched = index > 0 && contains(exceptions.before, tokens[index - 1].surface);
  for (auto seq = exceptions.after.begin();
       !matched && seq != exceptions.after.end(); ++seq) {
    if (index + seq->size() >= tokens.size()) continue;
    matched = std::equal(seq->begin(), seq->end(), tokens.begin() + index + 1,
                         [](const std::string &want, const Token &t) {
                           return want == t.surface;
                         });
  }
  if (!matched) return {true, std::nullopt};
  return {false, context_case_for(occurrence.trigger)};
}

IndexRange scope_of(const TokenizedReview &review, std::size_t trigger_index,
                    const ScopePolicy &policy) {
  const std::size_t n = review.tokens.size();
  const std::size_t begin = trigger_index + 1;
  if (begin >= n || policy.kind == ScopeKind::kNone) return {begin, begin};

  if (policy.kind == ScopeKind::kToSentenceEnd) {
    const auto next = std::upper_bound(review.sentence_breaks.begin(),
                                       review.sentence_breaks.end(),
                                       trigger_index);
    const std::size_t end = next == review.sentence_breaks.end() ? n : *next;
    return {begin, std::max(begin, end)};
  }
  return {begin, std::min(n, begin + policy.window_length)};
}

ScopeVerdict check_scope_exceptions(const TokenizedReview &review,
                                    std::size_t /*trigger_index*/,
                                    IndexRange scope,
                                    const NegationConfig &config,
                                    const SentimentLexicon &lexicon) {
  const auto first = first_polarity_index(review, scope, config, lexicon);
  const std::size_t limit = first.value_or(scope.end);

  auto occurs_before_limit = [&](const std::set<std::string> &words) {
    for (std::size_t i = scope.begin; i < limit; ++i) {
      if (contains(words, review.tokens[i].surface)) return true;
    }
    return false;
  };
  if (occurs_before_limit(config.exceptional_words)) {
    return {true, ExceptionCase::kCase1};
  }
  if (occurs_before_limit(config.superlatives)) {
    return {true, ExceptionCase::kCase2};
  }
  return {false, std::nullopt};
}

TaggingResult tag_rule_based(const TokenizedReview &review,
                             const NegationConfig &config,
                             const SentimentLexicon &lexicon) {
  return tag_rules(review, config, lexicon, config.window_length);
}

TokenizedReview tag_window(const TokenizedReview &review,
                           const NegationConfig &config) {
  return tag_scopes(review, config,
                    {ScopeKind::kFixedWindow, config.window_length});
}

TokenizedReview tag_to_sentence_end(const TokenizedReview &review,
                                    const NegationConfig &config) {
  return tag_scopes(review, config,
                    {ScopeKind::kToSentenceEnd, config.window_length});
}

TaggingResult apply_policy(const TokenizedReview &review,
                           const ScopePolicy &policy,
                           const NegationConfig &config,
                           const SentimentLexicon &lexicon) {
  switch (policy.kind) {
    case ScopeKind::kNone:
      return {review, std::nullopt};
    case ScopeKind::kFixedWindow:
    case ScopeKind::kToSentenceEnd:
      return {tag_scopes(review, config, policy), std::nullopt};
    case ScopeKind::kRuleBased:
      return tag_rules(review, config, lexicon, policy.window_length);
  }
  return {review, std::nullopt};
}

std::string render_tagged(const TokenizedReview &review) {
  std::string out;
  for (const auto &token : review.tokens) {
    if (!out.empty()) out.push_back(' ');
    out += term_of(token);
  }
  return out;
}

std::vector<std::string> render_trace_lines(const RuleTrace &trace) {
  std::vector<std::string> lines;
  for (const auto &t : trace.triggers) {
    std::string line = t.trigger + "@" + std::to_string(t.trigger_index) +
                       " case=" +
                       (t.fired_case ? std::to_string(case_number(*t.fired_case))
                                     : std::string("none")) +
                       " tagged=[";
    for (std::size_t i = 0; i < t.tagged_indices.size(); ++i) {
      if (i) line += ",";
      line += std::to_string(t.tagged_indices[i]);
    }
    line += "]";
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace negscope

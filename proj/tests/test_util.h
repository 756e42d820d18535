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

#ifndef NEGSCOPE_TESTS_TEST_UTIL_H_
#define NEGSCOPE_TESTS_TEST_UTIL_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "negscope/corpus.h"
#include "negscope/evaluate.h"
#include "negscope/preprocess.h"

namespace negscope::testing {

inline std::string data_path(std::string_view relative) {
  return std::string(NEGSCOPE_TEST_DATA_DIR) + "/" + std::string(relative);
}

// A review built from already-normalized words, positions 0..n-1.
inline TokenizedReview review_of(const std::vector<std::string> &words,
                                 std::vector<std::size_t> breaks = {},
                                 PolarityLabel label = PolarityLabel::kPositive) {
  TokenizedReview r;
  r.id = "t";
  for (std::size_t i = 0; i < words.size(); ++i) r.tokens.push_back({words[i], i, false});
  r.sentence_breaks = std::move(breaks);
  r.label = label;
  return r;
}

inline TokenizedReview preprocess_text(std::string_view text) {
  return preprocess_review(Review{"t", std::string(text), PolarityLabel::kPositive},
                           PreprocessOptions{});
}

inline std::set<std::size_t> tagged_positions(const TokenizedReview &review) {
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < review.tokens.size(); ++i) {
    if (review.tokens[i].negated) out.insert(i);
  }
  return out;
}

inline std::vector<std::string> surfaces(const TokenizedReview &review) {
  std::vector<std::string> out;
  for (const auto &t : review.tokens) out.push_back(t.surface);
  return out;
}

inline const ConfigBundle &fixture_bundle() {
  static const ConfigBundle bundle =
      load_config_bundle(data_path("fixtures/fixture_resources.conf"));
  return bundle;
}

inline const SentimentLexicon &fixture_lexicon() {
  static const SentimentLexicon lexicon =
      load_sentiment_lexicon(*fixture_bundle().lexicon_path);
  return lexicon;
}

inline Resources fixture_resources() {
  const auto &bundle = fixture_bundle();
  return Resources{bundle.negation, bundle.preprocess, fixture_lexicon(),
                   load_stopwords(*bundle.stopwords_path)};
}

inline LabeledCorpus fixture_corpus() {
  return load_corpus(data_path("fixtures/fixture_corpus.tsv"));
}

}  // namespace negscope::testing

#endif  // NEGSCOPE_TESTS_TEST_UTIL_H_

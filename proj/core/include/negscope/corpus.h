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

#ifndef NEGSCOPE_CORPUS_H_
#define NEGSCOPE_CORPUS_H_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "negscope/preprocess.h"
#include "negscope/review.h"

namespace negscope {

enum class CorpusFormat { kTsv, kJsonl };

// `.jsonl` / `.json` -> kJsonl, everything else kTsv.
CorpusFormat format_for_path(std::string_view path);

LabeledCorpus load_corpus(const std::string &path,
                          CorpusFormat format = CorpusFormat::kTsv);
LabeledCorpus parse_corpus(std::string_view text, CorpusFormat format);
void write_corpus(std::ostream &out, const LabeledCorpus &corpus,
                  CorpusFormat format);

class SentimentLexicon {
 public:
  SentimentLexicon() = default;

  // Inserts an already-normalized word. Throws DataError when the word is
  // present with the other polarity; identical duplicates are ignored.
  void insert(std::string word, PolarityLabel polarity);

  std::optional<PolarityLabel> polarity(std::string_view word) const;
  bool contains(std::string_view word) const {
    return polarity(word).has_value();
  }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  // Sorted by word, for serialization and digests.
  std::vector<std::pair<std::string, PolarityLabel>> sorted_entries() const;

 private:
  std::unordered_map<std::string, PolarityLabel> entries_;
};

SentimentLexicon load_sentiment_lexicon(const std::string &path,
                                        const PreprocessOptions &options = {});
SentimentLexicon parse_sentiment_lexicon(std::string_view text,
                                         const PreprocessOptions &options = {});

struct ContextExceptions {
  std::set<std::string> before;
  // Each entry is a token sequence matched right after the trigger.
  std::set<std::vector<std::string>> after;
};

struct NegationConfig {
  std::set<std::string> triggers;
  std::set<std::string> exceptional_words;
  std::set<std::string> superlatives;
  std::map<std::string, ContextExceptions> context_exceptions;
  std::size_t window_length = 5;

  bool is_trigger(std::string_view token) const {
    return triggers.find(std::string(token)) != triggers.end();
  }

  // Throws DataError when triggers is empty, window_length < 1, or a
  // context exception names a non-trigger.
  void validate() const;
};

// Everything a config file carries. Resource paths are resolved against the
// config file's directory.
struct ConfigBundle {
  NegationConfig negation;
  PreprocessOptions preprocess;
  std::optional<std::string> lexicon_path;
  std::optional<std::string> stopwords_path;
};

// `base_dir` resolves relative [resources] paths.
ConfigBundle parse_config_bundle(std::string_view text,
                                 const std::string &base_dir = ".");
ConfigBundle load_config_bundle(const std::string &path);
// The compiled-in data/negation.conf.
const ConfigBundle &default_config_bundle();

NegationConfig load_negation_config(const std::string &path);
PreprocessOptions load_preprocess_options(const std::string &path);

using StopWords = std::set<std::string>;

StopWords load_stopwords(const std::string &path,
                         const PreprocessOptions &options = {});
StopWords parse_stopwords(std::string_view text,
                          const PreprocessOptions &options = {});
StopWords default_stopwords();

struct NegationStats {
  std::size_t total_reviews = 0;
  std::size_t reviews_with_trigger = 0;
  std::size_t positive_with_trigger = 0;
  std::size_t negative_with_trigger = 0;
  double prevalence = 0.0;
  // Absent when no review contains a trigger.
  std::optional<double> negative_share;
  std::optional<double> positive_share;
};

// Raw trigger matching over preprocessed tokens. Throws DataError on an
// unlabeled review.
NegationStats corpus_stats(const LabeledCorpus &corpus,
                           const NegationConfig &config,
                           const PreprocessOptions &options = {});

}  // namespace negscope

#endif  // NEGSCOPE_CORPUS_H_

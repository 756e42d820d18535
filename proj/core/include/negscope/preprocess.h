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

#ifndef NEGSCOPE_PREPROCESS_H_
#define NEGSCOPE_PREPROCESS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "negscope/review.h"

namespace negscope {

using NormalizationTable = std::map<char32_t, char32_t>;

// أ/إ/آ -> ا, ة -> ه, ى -> ي, ؤ -> و, ئ -> ي
NormalizationTable default_normalization_table();

struct PreprocessOptions {
  // Runs of one letter longer than this are cut to this length.
  int collapse_repeats_to = 2;
  NormalizationTable normalization_table = default_normalization_table();
  bool strip_diacritics = true;

  // Throws DataError if collapse_repeats_to < 1, a mapping target is not an
  // Arabic letter, or the table is not idempotent.
  void validate() const;
};

struct Token {
  std::string surface;
  std::size_t position = 0;
  bool negated = false;
};

struct TokenizedReview {
  std::string id;
  std::vector<Token> tokens;
  // Index i means a sentence boundary sits immediately before token i.
  // Sorted, unique, each within [1, tokens.size()).
  std::vector<std::size_t> sentence_breaks;
  std::optional<PolarityLabel> label;

  std::size_t size() const { return tokens.size(); }
};

// Result of noise stripping. Boundary marks are code point offsets into
// `text`; normalize_letters maps code points one to one, so they stay valid
// through normalization.
struct StrippedText {
  std::string text;
  std::vector<std::size_t> boundaries;
};

struct Tokenization {
  std::vector<Token> tokens;
  std::vector<std::size_t> sentence_breaks;
};

bool is_arabic_letter(char32_t cp);
bool is_arabic_mark(char32_t cp);
// . ! ? ؟ ، ؛
bool is_sentence_final(char32_t cp);

// Drops Arabic marks and tatweel, turns every other non-letter (digits,
// Latin, punctuation, symbols, whitespace) into a single separating space,
// records sentence-final punctuation as boundary marks, and collapses
// repeated letters. Invalid UTF-8 bytes are treated as separators.
StrippedText strip_noise(std::string_view text,
                         const PreprocessOptions &options);

std::string normalize_letters(std::string_view text,
                              const PreprocessOptions &options);

// Whitespace split; each boundary mark becomes the index of the first token
// starting at or after it.
Tokenization tokenize(std::string_view text,
                      std::span<const std::size_t> boundaries = {});

// strip_noise -> normalize_letters -> tokenize.
TokenizedReview preprocess_review(const Review &review,
                                  const PreprocessOptions &options);

// Full preprocessing of a resource entry (lexicon word, trigger, exception
// phrase) into its token surfaces.
std::vector<std::string> normalize_phrase(std::string_view text,
                                          const PreprocessOptions &options);

}  // namespace negscope

#endif  // NEGSCOPE_PREPROCESS_H_

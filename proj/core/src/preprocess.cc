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

#include "negscope/preprocess.h"

#include <algorithm>
#include <cstdio>
#include <string>

#include "negscope/error.h"
#include "negscope/utf8.h"

namespace negscope {
namespace {

constexpr char32_t kTatweel = 0x0640;

bool in(char32_t cp, char32_t lo, char32_t hi) { return cp >= lo && cp <= hi; }

}  // namespace

NormalizationTable default_normalization_table() {
  return {
      {U'أ', U'ا'},  // أ -> ا
      {U'إ', U'ا'},  // إ -> ا
      {U'آ', U'ا'},  // آ -> ا
      {U'ة', U'ه'},  // ة -> ه
      {U'ى', U'ي'},  // ى -> ي
      {U'ؤ', U'و'},  // ؤ -> و
      {U'ئ', U'ي'},  // ئ -> ي
  };
}

bool is_arabic_letter(char32_t cp) {
  return in(cp, 0x0620, 0x063F) || in(cp, 0x0641, 0x064A) ||
         in(cp, 0x066E, 0x066F) || in(cp, 0x0671, 0x06D3) || cp == 0x06D5 ||
         in(cp, 0x06EE, 0x06EF) || in(cp, 0x06FA, 0x06FC) || cp == 0x06FF ||
         in(cp, 0x0750, 0x077F);
}

bool is_arabic_mark(char32_t cp) {
  return in(cp, 0x0610, 0x061A) || in(cp, 0x064B, 0x065F) || cp == 0x0670 ||
         in(cp, 0x06D6, 0x06DC) || in(cp, 0x06DF, 0x06E4) ||
         in(cp, 0x06E7, 0x06E8) || in(cp, 0x06EA, 0x06ED);
}

bool is_sentence_final(char32_t cp) {
  switch (cp) {
    case U'.':
    case U'!':
    case U'?':
    case U'؟':  // ؟
    case U'،':  // ،
    case U'؛':  // ؛
      return true;
    default:
      return false;
  }
}

void PreprocessOptions::validate() const {
  if (collapse_repeats_to < 1) {
    throw DataError("collapse_repeats_to must be >= 1");
  }
  for (const auto &[from, to] : normalization_table) {
    if (!is_arabic_letter(to)) {
      char code[16];
      std::snprintf(code, sizeof code, "U+%04X", static_cast<unsigned>(to));
      throw DataError(std::string("normalization target ") + code +
                      " is not an Arabic letter");
    }
    auto chained = normalization_table.find(to);
    if (chained != normalization_table.end() && chained->second != to) {
      throw DataError(
          "normalization table is not idempotent: a target is also remapped");
    }
  }
}

StrippedText strip_noise(std::string_view text,
                         const PreprocessOptions &options) {
  const std::u32string input = utf8::decode_lenient(text);
  std::u32string out;
  out.reserve(input.size());
  std::vector<std::size_t> marks;

  char32_t prev = 0;
  int run = 0;
  const int keep = std::max(1, options.collapse_repeats_to);

  for (char32_t cp : input) {
    if (cp == kTatweel) continue;
    if (is_arabic_mark(cp)) {
      if (options.strip_diacritics) continue;
      out.push_back(cp);
      continue;
    }
    if (is_arabic_letter(cp)) {
      if (cp == prev) {
        if (++run > keep) continue;
      } else {
        prev = cp;
        run = 1;
      }
      out.push_back(cp);
      continue;
    }
    // Everything else separates tokens.
    if (is_sentence_final(cp)) {
      std::size_t offset = out.size();
      if (offset > 0 && out.back() == U' ') --offset;
      if (marks.empty() || marks.back() != offset) marks.push_back(offset);
    }
    if (!out.empty() && out.back() != U' ') out.push_back(U' ');
    prev = 0;
    run = 0;
  }
  if (!out.empty() && out.back() == U' ') out.pop_back();
  for (auto &m : marks) m = std::min(m, out.size());
  return {utf8::encode(out), std::move(marks)};
}

std::string normalize_letters(std::string_view text,
                              const PreprocessOptions &options) {
  const std::u32string input = utf8::decode_lenient(text);
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : input) {
    auto it = options.normalization_table.find(cp);
    utf8::append(out, it == options.normalization_table.end() ? cp : it->second);
  }
  return out;
}

Tokenization tokenize(std::string_view text,
                      std::span<const std::size_t> boundaries) {
  const std::u32string input = utf8::decode_lenient(text);
  Tokenization result;
  std::vector<std::size_t> starts;  // code point offset of each token

  auto is_space = [](char32_t cp) {
    return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' ||
           cp == U'\f' || cp == U'\v';
  };
  std::size_t i = 0;
  while (i < input.size()) {
    while (i < input.size() && is_space(input[i])) ++i;
    if (i >= input.size()) break;
    const std::size_t start = i;
    while (i < input.size() && !is_space(input[i])) ++i;
    Token token;
    token.surface = utf8::encode(input.substr(start, i - start));
    token.position = result.tokens.size();
    result.tokens.push_back(std::move(token));
    starts.push_back(start);
  }

  for (std::size_t mark : boundaries) {
    const auto it = std::lower_bound(starts.begin(), starts.end(), mark);
    const auto index = static_cast<std::size_t>(it - starts.begin());
    if (index == 0 || index >= result.tokens.size()) continue;
    result.sentence_breaks.push_back(index);
  }
  std::sort(result.sentence_breaks.begin(), result.sentence_breaks.end());
  result.sentence_breaks.erase(
      std::unique(result.sentence_breaks.begin(), result.sentence_breaks.end()),
      result.sentence_breaks.end());
  return result;
}

TokenizedReview preprocess_review(const Review &review,
                                  const PreprocessOptions &options) {
  StrippedText stripped = strip_noise(review.text, options);
  const std::string normalized = normalize_letters(stripped.text, options);
  Tokenization tokens = tokenize(normalized, stripped.boundaries);

  TokenizedReview out;
  out.id = review.id;
  out.tokens = std::move(tokens.tokens);
  out.sentence_breaks = std::move(tokens.sentence_breaks);
  out.label = review.label;
  return out;
}

std::vector<std::string> normalize_phrase(std::string_view text,
                                          const PreprocessOptions &options) {
  const StrippedText stripped = strip_noise(text, options);
  Tokenization tokens = tokenize(normalize_letters(stripped.text, options));
  std::vector<std::string> out;
  out.reserve(tokens.tokens.size());
  for (auto &t : tokens.tokens) out.push_back(std::move(t.surface));
  return out;
}

}  // namespace negscope

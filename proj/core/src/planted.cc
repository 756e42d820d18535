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

#include "negscope/planted.h"

#include <array>
#include <string_view>

#include "negscope/error.h"
#include "negscope/random.h"

namespace negscope {
namespace {

// All words are already in normalized form and avoid the default stop
// words, triggers, superlatives, the exceptional word and every context
// exception, so no rule exception can fire on a generated review.
constexpr std::array<std::string_view, 8> kPositiveWords = {
    "ممتاز", "رايع", "جميل", "نظيف", "لذيذ", "مريح", "حلو", "راقي"};
constexpr std::array<std::string_view, 8> kNegativeWords = {
    "سيء", "وسخ", "ممل", "غالي", "بارد", "مزعج", "تعبان", "خايس"};
constexpr std::array<std::string_view, 6> kTriggers = {"لا", "مش", "ما",
                                                       "مو", "لم", "مافي"};
constexpr std::array<std::string_view, 20> kFillers = {
    "المطعم", "الفندق",  "الموظف",   "الطلب",  "اليوم",
    "المكان", "الغرفه",  "الوجبه",   "الخدمه", "الاكل",
    "السعر",  "الشارع",  "الاستقبال", "المدينه", "الزباين",
    "الحجز",  "الموقع",  "الصباح",   "المسا",  "القهوه"};

template <std::size_t N>
std::string_view pick(Rng &rng, const std::array<std::string_view, N> &words) {
  return words[rng.below(N)];
}

void append_word(std::string &text, std::string_view word) {
  if (!text.empty()) text += ' ';
  text += word;
}

void append_fillers(std::string &text, Rng &rng, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) append_word(text, pick(rng, kFillers));
}

}  // namespace

std::string planted_lexicon_text() {
  std::string out;
  for (auto w : kPositiveWords) {
    out += w;
    out += "\tpositive\n";
  }
  for (auto w : kNegativeWords) {
    out += w;
    out += "\tnegative\n";
  }
  return out;
}

PlantedCorpus generate_planted_corpus(const PlantedOptions &options) {
  if (options.n_reviews == 0 || options.n_reviews % 2 != 0) {
    throw DataError("planted corpus size must be a positive even number");
  }
  if (options.max_distance < 1) throw DataError("max_distance must be >= 1");
  if (!(options.negated_fraction >= 0.0 && options.negated_fraction <= 1.0)) {
    throw DataError("negated_fraction must lie in [0, 1]");
  }
  const double planted = options.negated_fraction * static_cast<double>(options.n_reviews);
  const auto n_negated = static_cast<std::size_t>(planted);
  if (static_cast<double>(n_negated) != planted || n_negated % 2 != 0) {
    throw DataError("negated review count must be an even whole number");
  }

  // (gold label, negated) per review: half of each label, half of the
  // negated reviews in each label.
  struct Slot {
    PolarityLabel label;
    bool negated;
  };
  const std::size_t per_label = options.n_reviews / 2;
  std::vector<Slot> slots;
  slots.reserve(options.n_reviews);
  for (auto label : {PolarityLabel::kPositive, PolarityLabel::kNegative}) {
    for (std::size_t i = 0; i < per_label; ++i) {
      slots.push_back({label, i < n_negated / 2});
    }
  }
  Rng rng(options.seed);
  rng.shuffle(std::span<Slot>(slots));

  PlantedCorpus out;
  out.lexicon = parse_sentiment_lexicon(planted_lexicon_text());
  out.n_negated = n_negated;
  out.negated.reserve(slots.size());

  const std::size_t width = std::to_string(slots.size()).size();
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const Slot &slot = slots[i];
    const PolarityLabel word_polarity = slot.negated ? opposite(slot.label) : slot.label;
    const std::string_view opinion = word_polarity == PolarityLabel::kPositive
                                         ? pick(rng, kPositiveWords)
                                         : pick(rng, kNegativeWords);
    std::string text;
    append_fillers(text, rng, rng.below(4));
    if (slot.negated) {
      append_word(text, pick(rng, kTriggers));
      append_fillers(text, rng, rng.below(options.max_distance));
    }
    append_word(text, opinion);
    append_fillers(text, rng, rng.below(4));

    std::string id = std::to_string(i + 1);
    id.insert(0, width - id.size(), '0');
    out.corpus.add(Review{"p" + id, std::move(text), slot.label});
    out.negated.push_back(slot.negated);
  }
  return out;
}

}  // namespace negscope

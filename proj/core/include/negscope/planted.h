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

#ifndef NEGSCOPE_PLANTED_H_
#define NEGSCOPE_PLANTED_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "negscope/corpus.h"
#include "negscope/review.h"

namespace negscope {

// Synthetic corpus with planted negation.
//
// Every review holds exactly one opinion word from a fixed lexicon among
// neutral filler words. A `negated_fraction` of reviews additionally holds
// one trigger 1..max_distance tokens before the opinion word, and their gold
// label is the opposite of the word's polarity. Labels are exactly balanced,
// as are negated reviews across labels. Non-negated reviews contain no
// trigger, so raw trigger prevalence equals the planted rate.
//
// Untagged bag-of-words cannot separate the classes: a trigger co-occurs
// equally often with both labels and every opinion word occurs under both.
// With negation tags the opinion-word term alone determines the label.
struct PlantedOptions {
  std::size_t n_reviews = 400;
  double negated_fraction = 0.25;
  std::size_t max_distance = 5;
  std::uint64_t seed = 2020;
};

struct PlantedCorpus {
  LabeledCorpus corpus;
  SentimentLexicon lexicon;
  std::vector<bool> negated;  // per review
  std::size_t n_negated = 0;
};

// Throws DataError unless n_reviews and the negated count split evenly
// across the two labels.
PlantedCorpus generate_planted_corpus(const PlantedOptions &options = {});

// `word<TAB>polarity` lines of the generator's lexicon.
std::string planted_lexicon_text();

}  // namespace negscope

#endif  // NEGSCOPE_PLANTED_H_

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

#include <gtest/gtest.h>

#include "negscope/error.h"
#include "negscope/negation.h"
#include "negscope/planted.h"
#include "test_util.h"

namespace negscope {
namespace {

TEST(Planted, BalancedLabelsAndNegation) {
  const auto planted = generate_planted_corpus();
  EXPECT_EQ(planted.corpus.size(), 400u);
  EXPECT_EQ(planted.corpus.class_counts.positive, 200u);
  EXPECT_EQ(planted.corpus.class_counts.negative, 200u);
  EXPECT_EQ(planted.n_negated, 100u);
  std::size_t negated_pos = 0, negated_neg = 0;
  for (std::size_t i = 0; i < planted.corpus.size(); ++i) {
    if (!planted.negated[i]) continue;
    (*planted.corpus.reviews[i].label == PolarityLabel::kPositive ? negated_pos
                                                                  : negated_neg)++;
  }
  EXPECT_EQ(negated_pos, 50u);
  EXPECT_EQ(negated_neg, 50u);
}

TEST(Planted, GoldLabelFollowsConstruction) {
  const auto planted = generate_planted_corpus();
  const auto &config = default_config_bundle().negation;
  for (std::size_t i = 0; i < planted.corpus.size(); ++i) {
    const auto r = testing::preprocess_text(planted.corpus.reviews[i].text);
    std::vector<std::size_t> opinion;
    for (std::size_t k = 0; k < r.tokens.size(); ++k) {
      if (planted.lexicon.contains(r.tokens[k].surface)) opinion.push_back(k);
    }
    ASSERT_EQ(opinion.size(), 1u) << planted.corpus.reviews[i].text;
    const auto triggers = match_raw_triggers(r, config);
    const auto polarity = *planted.lexicon.polarity(r.tokens[opinion[0]].surface);
    if (planted.negated[i]) {
      ASSERT_EQ(triggers.size(), 1u);
      const std::size_t distance = opinion[0] - triggers[0].token_index;
      EXPECT_GE(distance, 1u);
      EXPECT_LE(distance, 5u);
      EXPECT_EQ(*planted.corpus.reviews[i].label, opposite(polarity));
    } else {
      EXPECT_TRUE(triggers.empty());
      EXPECT_EQ(*planted.corpus.reviews[i].label, polarity);
    }
  }
}

TEST(Planted, RulesTagExactlyTheNegatedOpinionWords) {
  const auto planted = generate_planted_corpus();
  const auto &config = default_config_bundle().negation;
  for (std::size_t i = 0; i < planted.corpus.size(); ++i) {
    const auto r = testing::preprocess_text(planted.corpus.reviews[i].text);
    const auto tagged = tag_rule_based(r, config, planted.lexicon);
    EXPECT_EQ(testing::tagged_positions(tagged.review).size(), planted.negated[i] ? 1u : 0u)
        << planted.corpus.reviews[i].text;
  }
}

TEST(Planted, DeterministicAndSeeded) {
  const auto a = generate_planted_corpus();
  const auto b = generate_planted_corpus();
  for (std::size_t i = 0; i < a.corpus.size(); ++i) {
    EXPECT_EQ(a.corpus.reviews[i].text, b.corpus.reviews[i].text);
  }
  PlantedOptions other;
  other.seed = 1;
  EXPECT_NE(generate_planted_corpus(other).corpus.reviews[0].text + 
            generate_planted_corpus(other).corpus.reviews[1].text,
            a.corpus.reviews[0].text + a.corpus.reviews[1].text);
}

TEST(Planted, RejectsUnevenSplits) {
  PlantedOptions odd;
  odd.n_reviews = 401;
  EXPECT_THROW(generate_planted_corpus(odd), DataError);
  PlantedOptions fraction;
  fraction.negated_fraction = 0.3333;
  EXPECT_THROW(generate_planted_corpus(fraction), DataError);
}

TEST(Planted, LexiconTextParses) {
  const auto lexicon = parse_sentiment_lexicon(planted_lexicon_text());
  EXPECT_EQ(lexicon.size(), 16u);
}

}  // namespace
}  // namespace negscope

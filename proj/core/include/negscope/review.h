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

#ifndef NEGSCOPE_REVIEW_H_
#define NEGSCOPE_REVIEW_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace negscope {

// Document-level polarity. There is no neutral class.
enum class PolarityLabel { kNegative = 0, kPositive = 1 };

inline constexpr std::size_t kNumLabels = 2;

inline std::size_t label_index(PolarityLabel label) {
  return static_cast<std::size_t>(label);
}

inline PolarityLabel opposite(PolarityLabel label) {
  return label == PolarityLabel::kPositive ? PolarityLabel::kNegative
                                           : PolarityLabel::kPositive;
}

// "positive" / "negative".
std::string_view to_string(PolarityLabel label);
std::optional<PolarityLabel> parse_label(std::string_view text);

struct Review {
  std::string id;
  std::string text;
  std::optional<PolarityLabel> label;
};

struct ClassCounts {
  std::size_t positive = 0;
  std::size_t negative = 0;

  std::size_t of(PolarityLabel label) const {
    return label == PolarityLabel::kPositive ? positive : negative;
  }
  std::size_t total() const { return positive + negative; }
};

struct LabeledCorpus {
  std::vector<Review> reviews;
  ClassCounts class_counts;

  std::size_t size() const { return reviews.size(); }
  bool empty() const { return reviews.empty(); }

  // Appends a review, enforcing unique non-empty ids and non-blank text.
  // Throws DataError on violation.
  void add(Review review);

 private:
  bool has_id(std::string_view id) const;
};

}  // namespace negscope

#endif  // NEGSCOPE_REVIEW_H_

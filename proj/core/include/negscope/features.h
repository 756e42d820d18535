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

#ifndef NEGSCOPE_FEATURES_H_
#define NEGSCOPE_FEATURES_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "negscope/corpus.h"
#include "negscope/preprocess.h"
#include "negscope/review.h"

namespace negscope {

// Appended to the surface of a negated token to form its feature term.
inline constexpr std::string_view kNegationSuffix = "_!";

std::string term_of(const Token &token);

// Drops stop words unless negated; positions are re-indexed densely and
// sentence breaks remapped.
TokenizedReview remove_stopwords(const TokenizedReview &review,
                                 const StopWords &stopwords);

// Term -> dense index in first-appearance order, with document frequencies.
class Vocabulary {
 public:
  Vocabulary() = default;

  // Throws DataError on an empty review set.
  static Vocabulary build(std::span<const TokenizedReview> reviews);

  // Rebuilds from serialized parts; throws DataError on inconsistent input.
  static Vocabulary from_parts(std::vector<std::string> terms,
                               std::vector<std::size_t> document_frequency,
                               std::size_t n_documents);

  std::optional<std::size_t> index_of(std::string_view term) const;
  const std::string &term(std::size_t index) const { return terms_[index]; }
  std::size_t document_frequency(std::size_t index) const {
    return document_frequency_[index];
  }
  std::size_t n_documents() const { return n_documents_; }
  std::size_t size() const { return terms_.size(); }

 private:
  std::vector<std::string> terms_;
  std::vector<std::size_t> document_frequency_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t n_documents_ = 0;
};

// idf[i] = ln(n_documents / df[i]).
std::vector<double> compute_idf(const Vocabulary &vocab);

struct Feature {
  std::uint32_t index = 0;
  double weight = 0.0;

  friend bool operator==(const Feature &, const Feature &) = default;
};

// Indices strictly increasing; weights finite and > 0.
struct SparseVector {
  std::vector<Feature> entries;

  bool empty() const { return entries.empty(); }
  std::size_t nnz() const { return entries.size(); }
  double squared_norm() const;
  bool is_valid(std::size_t dimension) const;

  friend bool operator==(const SparseVector &, const SparseVector &) = default;
};

double dot(const SparseVector &a, const SparseVector &b);
double dot(std::span<const double> dense, const SparseVector &x);

// Raw count x idf over in-vocabulary terms, then L2-normalized.
SparseVector vectorize(const TokenizedReview &review, const Vocabulary &vocab,
                       std::span<const double> idf);

struct DocumentTermMatrix {
  std::vector<SparseVector> rows;
  std::vector<PolarityLabel> labels;
  std::size_t n_features = 0;

  std::size_t n_rows() const { return rows.size(); }
  std::size_t count(PolarityLabel label) const;

  friend bool operator==(const DocumentTermMatrix &,
                         const DocumentTermMatrix &) = default;
};

// Throws DataError if any review lacks a label.
DocumentTermMatrix build_matrix(std::span<const TokenizedReview> reviews,
                                const Vocabulary &vocab,
                                std::span<const double> idf);

// `label<TAB>idx:weight idx:weight ...` per row.
void write_matrix(std::ostream &out, const DocumentTermMatrix &matrix);
DocumentTermMatrix read_matrix(std::istream &in, std::size_t n_features);

// `term<TAB>index<TAB>df` per term.
void write_vocabulary(std::ostream &out, const Vocabulary &vocab);
Vocabulary read_vocabulary(std::istream &in, std::size_t n_documents);

// Shortest decimal form that parses back to the same double.
std::string format_double(double value);
// Throws DataError on junk or trailing characters.
double parse_double(std::string_view text);

}  // namespace negscope

#endif  // NEGSCOPE_FEATURES_H_

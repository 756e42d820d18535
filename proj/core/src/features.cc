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

#include "negscope/features.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <unordered_set>

#include "negscope/config_file.h"
#include "negscope/error.h"

namespace negscope {

std::string term_of(const Token &token) {
  if (!token.negated) return token.surface;
  std::string term = token.surface;
  term += kNegationSuffix;
  return term;
}

TokenizedReview remove_stopwords(const TokenizedReview &review,
                                 const StopWords &stopwords) {
  TokenizedReview out;
  out.id = review.id;
  out.label = review.label;
  // new_index[i] = number of kept tokens before original token i.
  std::vector<std::size_t> new_index(review.tokens.size() + 1, 0);
  for (std::size_t i = 0; i < review.tokens.size(); ++i) {
    const Token &token = review.tokens[i];
    new_index[i] = out.tokens.size();
    if (!token.negated && stopwords.count(token.surface)) continue;
    Token kept = token;
    kept.position = out.tokens.size();
    out.tokens.push_back(std::move(kept));
  }
  new_index[review.tokens.size()] = out.tokens.size();
  for (std::size_t b : review.sentence_breaks) {
    const std::size_t mapped = new_index[b];
    if (mapped == 0 || mapped >= out.tokens.size()) continue;
    if (out.sentence_breaks.empty() || out.sentence_breaks.back() != mapped) {
      out.sentence_breaks.push_back(mapped);
    }
  }
  return out;
}

Vocabulary Vocabulary::build(std::span<const TokenizedReview> reviews) {
  if (reviews.empty()) throw DataError("cannot build a vocabulary from no reviews");
  Vocabulary vocab;
  vocab.n_documents_ = reviews.size();
  std::unordered_set<std::size_t> seen;
  for (const auto &review : reviews) {
    seen.clear();
    for (const auto &token : review.tokens) {
      std::string term = term_of(token);
      auto [it, inserted] = vocab.index_.emplace(term, vocab.terms_.size());
      if (inserted) {
        vocab.terms_.push_back(std::move(term));
        vocab.document_frequency_.push_back(0);
      }
      if (seen.insert(it->second).second) ++vocab.document_frequency_[it->second];
    }
  }
  return vocab;
}

Vocabulary Vocabulary::from_parts(std::vector<std::string> terms,
                                  std::vector<std::size_t> document_frequency,
                                  std::size_t n_documents) {
  if (terms.size() != document_frequency.size()) {
    throw DataError("vocabulary terms and document frequencies differ in length");
  }
  Vocabulary vocab;
  vocab.n_documents_ = n_documents;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (document_frequency[i] < 1 || document_frequency[i] > n_documents) {
      throw DataError("document frequency out of range for '" + terms[i] + "'");
    }
    if (!vocab.index_.emplace(terms[i], i).second) {
      throw DataError("duplicate vocabulary term '" + terms[i] + "'");
    }
  }
  vocab.terms_ = std::move(terms);
  vocab.document_frequency_ = std::move(document_frequency);
  return vocab;
}

std::optional<std::size_t> Vocabulary::index_of(std::string_view term) const {
  auto it = index_.find(std::string(term));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<double> compute_idf(const Vocabulary &vocab) {
  std::vector<double> idf(vocab.size());
  const auto n = static_cast<double>(vocab.n_documents());
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    idf[i] = std::log(n / static_cast<double>(vocab.document_frequency(i)));
  }
  return idf;
}

double SparseVector::squared_norm() const {
  double s = 0.0;
  for (const auto &f : entries) s += f.weight * f.weight;
  return s;
}

bool SparseVector::is_valid(std::size_t dimension) const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto &f = entries[i];
    if (f.index >= dimension) return false;
    if (i > 0 && entries[i - 1].index >= f.index) return false;
    if (!std::isfinite(f.weight) || f.weight <= 0.0) return false;
  }
  return true;
}

double dot(const SparseVector &a, const SparseVector &b) {
  double s = 0.0;
  auto i = a.entries.begin();
  auto j = b.entries.begin();
  while (i != a.entries.end() && j != b.entries.end()) {
    if (i->index < j->index) {
      ++i;
    } else if (j->index < i->index) {
      ++j;
    } else {
      s += i->weight * j->weight;
      ++i;
      ++j;
    }
  }
  return s;
}

double dot(std::span<const double> dense, const SparseVector &x) {
  double s = 0.0;
  for (const auto &f : x.entries) {
    if (f.index < dense.size()) s += dense[f.index] * f.weight;
  }
  return s;
}

SparseVector vectorize(const TokenizedReview &review, const Vocabulary &vocab,
                       std::span<const double> idf) {
  std::map<std::uint32_t, double> counts;
  for (const auto &token : review.tokens) {
    if (auto index = vocab.index_of(term_of(token))) {
      counts[static_cast<std::uint32_t>(*index)] += 1.0;
    }
  }
  SparseVector v;
  for (const auto &[index, count] : counts) {
    const double w = count * idf[index];
    if (w > 0.0) v.entries.push_back({index, w});
  }
  const double norm = std::sqrt(v.squared_norm());
  if (norm > 0.0) {
    for (auto &f : v.entries) f.weight /= norm;
  }
  return v;
}

std::size_t DocumentTermMatrix::count(PolarityLabel label) const {
  return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), label));
}

DocumentTermMatrix build_matrix(std::span<const TokenizedReview> reviews,
                                const Vocabulary &vocab,
                                std::span<const double> idf) {
  DocumentTermMatrix m;
  m.n_features = vocab.size();
  m.rows.reserve(reviews.size());
  m.labels.reserve(reviews.size());
  for (const auto &review : reviews) {
    if (!review.label) throw DataError("review '" + review.id + "' has no label");
    m.rows.push_back(vectorize(review, vocab, idf));
    m.labels.push_back(*review.label);
  }
  return m;
}

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw DataError("bad number '" + std::string(text) + "'");
  }
  return value;
}

void write_matrix(std::ostream &out, const DocumentTermMatrix &matrix) {
  for (std::size_t r = 0; r < matrix.rows.size(); ++r) {
    out << to_string(matrix.labels[r]) << '\t';
    const auto &entries = matrix.rows[r].entries;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i) out << ' ';
      out << entries[i].index << ':' << format_double(entries[i].weight);
    }
    out << '\n';
  }
}

DocumentTermMatrix read_matrix(std::istream &in, std::size_t n_features) {
  DocumentTermMatrix m;
  m.n_features = n_features;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (trim(line).empty()) continue;
    const auto where = "matrix line " + std::to_string(number) + ": ";
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw DataError(where + "missing label column");
    const auto label = parse_label(trim(std::string_view(line).substr(0, tab)));
    if (!label) throw DataError(where + "unknown label");
    SparseVector row;
    std::string_view rest = std::string_view(line).substr(tab + 1);
    while (!(rest = trim(rest)).empty()) {
      const auto space = rest.find(' ');
      const std::string_view pair = rest.substr(0, space);
      rest = space == std::string_view::npos ? std::string_view{}
                                             : rest.substr(space + 1);
      const auto colon = pair.find(':');
      if (colon == std::string_view::npos) throw DataError(where + "expected idx:weight");
      std::uint32_t index = 0;
      const auto idx = pair.substr(0, colon);
      const auto res = std::from_chars(idx.data(), idx.data() + idx.size(), index);
      if (res.ec != std::errc() || res.ptr != idx.data() + idx.size()) {
        throw DataError(where + "bad index");
      }
      row.entries.push_back({index, parse_double(pair.substr(colon + 1))});
    }
    if (!row.is_valid(n_features)) throw DataError(where + "invalid sparse row");
    m.rows.push_back(std::move(row));
    m.labels.push_back(*label);
  }
  return m;
}

void write_vocabulary(std::ostream &out, const Vocabulary &vocab) {
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    out << vocab.term(i) << '\t' << i << '\t' << vocab.document_frequency(i) << '\n';
  }
}

Vocabulary read_vocabulary(std::istream &in, std::size_t n_documents) {
  std::vector<std::string> terms;
  std::vector<std::size_t> dfs;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (trim(line).empty()) continue;
    const auto where = "vocabulary line " + std::to_string(number) + ": ";
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos) throw DataError(where + "expected term<TAB>index<TAB>df");
    try {
      const std::size_t index = std::stoul(line.substr(t1 + 1, t2 - t1 - 1));
      if (index != terms.size()) throw DataError(where + "indices must be dense and ordered");
      terms.push_back(line.substr(0, t1));
      dfs.push_back(std::stoul(line.substr(t2 + 1)));
    } catch (const std::logic_error &) {
      throw DataError(where + "bad integer");
    }
  }
  return Vocabulary::from_parts(std::move(terms), std::move(dfs), n_documents);
}

}  // namespace negscope

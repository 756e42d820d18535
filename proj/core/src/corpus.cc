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

#include "negscope/corpus.h"

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "negscope/config_file.h"
#include "negscope/defaults.h"
#include "negscope/error.h"
#include "negscope/utf8.h"

namespace negscope {
namespace {

std::string at_line(std::size_t line) {
  return "line " + std::to_string(line) + ": ";
}

// Calls fn(line_number, line) for every line, stripping a trailing '\r'.
template <typename Fn>
void for_each_line(std::string_view text, Fn &&fn) {
  std::size_t number = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(number, line);
  }
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab == std::string_view::npos
                                            ? std::string_view::npos
                                            : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

std::string single_token(std::string_view text, const PreprocessOptions &options,
                         std::size_t line, std::string_view what) {
  auto tokens = normalize_phrase(text, options);
  if (tokens.size() != 1) {
    throw DataError(at_line(line) + std::string(what) + " '" +
                    std::string(text) + "' must normalize to one token");
  }
  return std::move(tokens.front());
}

bool parse_bool(std::string_view v, std::size_t line) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw DataError(at_line(line) + "expected a boolean, got '" + std::string(v) +
                  "'");
}

long long parse_int(std::string_view v, std::size_t line) {
  try {
    std::size_t used = 0;
    const long long value = std::stoll(std::string(v), &used);
    if (used != v.size()) throw std::invalid_argument("trailing");
    return value;
  } catch (const std::exception &) {
    throw DataError(at_line(line) + "expected an integer, got '" +
                    std::string(v) + "'");
  }
}

void apply_preprocess_section(const ConfigSection &section,
                              PreprocessOptions &options) {
  NormalizationTable table;
  bool has_table = false;
  for (const auto &line : section.lines) {
    auto kv = split_key_value(line.text);
    if (!kv) throw DataError(at_line(line.number) + "expected key = value");
    const auto &[key, value] = *kv;
    if (key == "collapse_repeats_to") {
      const long long n = parse_int(value, line.number);
      if (n < 1) {
        throw DataError(at_line(line.number) + "collapse_repeats_to must be >= 1");
      }
      options.collapse_repeats_to = static_cast<int>(n);
    } else if (key == "strip_diacritics") {
      options.strip_diacritics = parse_bool(value, line.number);
    } else {
      auto from = utf8::decode(key);
      auto to = utf8::decode(value);
      if (!from || !to || from->size() != 1 || to->size() != 1) {
        throw DataError(at_line(line.number) + "unknown preprocess key '" +
                        key + "' (mappings must be single characters)");
      }
      table[(*from)[0]] = (*to)[0];
      has_table = true;
    }
  }
  if (has_table) options.normalization_table = std::move(table);
  options.validate();
}

std::string resolve(const std::string &base_dir, const std::string &path) {
  std::filesystem::path p(path);
  if (p.is_absolute()) return p.string();
  return (std::filesystem::path(base_dir) / p).lexically_normal().string();
}

}  // namespace

std::string_view to_string(PolarityLabel label) {
  return label == PolarityLabel::kPositive ? "positive" : "negative";
}

std::optional<PolarityLabel> parse_label(std::string_view text) {
  if (text == "positive") return PolarityLabel::kPositive;
  if (text == "negative") return PolarityLabel::kNegative;
  return std::nullopt;
}

bool LabeledCorpus::has_id(std::string_view id) const {
  return std::any_of(reviews.begin(), reviews.end(),
                     [&](const Review &r) { return r.id == id; });
}

void LabeledCorpus::add(Review review) {
  if (review.id.empty()) throw DataError("review id is empty");
  if (trim(review.text).empty()) {
    throw DataError("review '" + review.id + "' has empty text");
  }
  if (has_id(review.id)) throw DataError("duplicate review id '" + review.id + "'");
  if (review.label) {
    if (*review.label == PolarityLabel::kPositive) {
      ++class_counts.positive;
    } else {
      ++class_counts.negative;
    }
  }
  reviews.push_back(std::move(review));
}

CorpusFormat format_for_path(std::string_view path) {
  const auto ext = std::filesystem::path(path).extension().string();
  return ext == ".jsonl" || ext == ".json" ? CorpusFormat::kJsonl
                                           : CorpusFormat::kTsv;
}

LabeledCorpus parse_corpus(std::string_view text, CorpusFormat format) {
  LabeledCorpus corpus;
  std::unordered_set<std::string> seen;

  auto add = [&](Review review, std::size_t line) {
    if (review.id.empty()) throw DataError(at_line(line) + "empty review id");
    if (!seen.insert(review.id).second) {
      throw DataError(at_line(line) + "duplicate review id '" + review.id + "'");
    }
    if (trim(review.text).empty()) {
      throw DataError(at_line(line) + "empty review text");
    }
    if (review.label) {
      if (*review.label == PolarityLabel::kPositive) {
        ++corpus.class_counts.positive;
      } else {
        ++corpus.class_counts.negative;
      }
    }
    corpus.reviews.push_back(std::move(review));
  };

  for_each_line(text, [&](std::size_t number, std::string_view line) {
    if (trim(line).empty()) return;
    if (!utf8::is_valid(line)) throw DataError(at_line(number) + "invalid UTF-8");

    Review review;
    if (format == CorpusFormat::kTsv) {
      const auto fields = split_tabs(line);
      if (fields.size() != 3) {
        throw DataError(at_line(number) + "expected 3 tab-separated columns, got " +
                        std::to_string(fields.size()));
      }
      review.id = std::string(trim(fields[0]));
      review.text = std::string(fields[1]);
      const auto label = parse_label(trim(fields[2]));
      if (!label) {
        throw DataError(at_line(number) + "unknown label '" +
                        std::string(fields[2]) + "'");
      }
      review.label = label;
    } else {
      nlohmann::json obj;
      try {
        obj = nlohmann::json::parse(line);
      } catch (const nlohmann::json::parse_error &e) {
        throw DataError(at_line(number) + "bad JSON: " + e.what());
      }
      if (!obj.is_object() || !obj.contains("id") || !obj["id"].is_string() ||
          !obj.contains("text") || !obj["text"].is_string()) {
        throw DataError(at_line(number) +
                        "expected an object with string 'id' and 'text'");
      }
      review.id = obj["id"].get<std::string>();
      review.text = obj["text"].get<std::string>();
      if (obj.contains("label") && !obj["label"].is_null()) {
        const auto &l = obj["label"];
        const auto label =
            l.is_string() ? parse_label(l.get<std::string>()) : std::nullopt;
        if (!label) {
          throw DataError(at_line(number) + "unknown label " + l.dump());
        }
        review.label = label;
      }
    }
    add(std::move(review), number);
  });
  return corpus;
}

LabeledCorpus load_corpus(const std::string &path, CorpusFormat format) {
  try {
    return parse_corpus(read_file(path), format);
  } catch (const DataError &e) {
    throw DataError(path + ": " + e.what());
  }
}

void write_corpus(std::ostream &out, const LabeledCorpus &corpus,
                  CorpusFormat format) {
  for (const auto &r : corpus.reviews) {
    if (format == CorpusFormat::kTsv) {
      if (!r.label) {
        throw DataError("review '" + r.id + "' has no label; TSV requires one");
      }
      out << r.id << '\t' << r.text << '\t' << to_string(*r.label) << '\n';
    } else {
      nlohmann::json obj = {{"id", r.id}, {"text", r.text}};
      obj["label"] = r.label ? nlohmann::json(std::string(to_string(*r.label)))
                             : nlohmann::json(nullptr);
      out << obj.dump() << '\n';
    }
  }
}

void SentimentLexicon::insert(std::string word, PolarityLabel polarity) {
  auto [it, inserted] = entries_.emplace(std::move(word), polarity);
  if (!inserted && it->second != polarity) {
    throw DataError("conflicting polarity for '" + it->first + "'");
  }
}

std::optional<PolarityLabel> SentimentLexicon::polarity(
    std::string_view word) const {
  auto it = entries_.find(std::string(word));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<std::string, PolarityLabel>>
SentimentLexicon::sorted_entries() const {
  std::vector<std::pair<std::string, PolarityLabel>> out(entries_.begin(),
                                                         entries_.end());
  std::sort(out.begin(), out.end());
  return out;
}

SentimentLexicon parse_sentiment_lexicon(std::string_view text,
                                         const PreprocessOptions &options) {
  SentimentLexicon lexicon;
  for_each_line(text, [&](std::size_t number, std::string_view line) {
    const auto trimmed = trim(line);
    if (trimmed.empty() || trimmed.front() == '#') return;
    if (!utf8::is_valid(line)) throw DataError(at_line(number) + "invalid UTF-8");
    const auto fields = split_tabs(trimmed);
    if (fields.size() != 2) {
      throw DataError(at_line(number) + "expected word<TAB>polarity");
    }
    const auto polarity = parse_label(trim(fields[1]));
    if (!polarity) {
      throw DataError(at_line(number) + "unknown polarity '" +
                      std::string(fields[1]) + "'");
    }
    std::string word = single_token(fields[0], options, number, "lexicon word");
    try {
      lexicon.insert(std::move(word), *polarity);
    } catch (const DataError &e) {
      throw DataError(at_line(number) + e.what());
    }
  });
  return lexicon;
}

SentimentLexicon load_sentiment_lexicon(const std::string &path,
                                        const PreprocessOptions &options) {
  try {
    return parse_sentiment_lexicon(read_file(path), options);
  } catch (const DataError &e) {
    throw DataError(path + ": " + e.what());
  }
}

void NegationConfig::validate() const {
  if (triggers.empty()) throw DataError("negation config has no triggers");
  if (window_length < 1) throw DataError("window_length must be >= 1");
  for (const auto &[trigger, _] : context_exceptions) {
    if (!triggers.count(trigger)) {
      throw DataError("context exception for '" + trigger +
                      "', which is not a trigger");
    }
  }
}

ConfigBundle parse_config_bundle(std::string_view text,
                                 const std::string &base_dir) {
  const auto sections = parse_config_text(text);
  const ConfigSection &global = sections.front();

  bool inherit = false;
  std::optional<long long> window_length;
  for (const auto &line : global.lines) {
    auto kv = split_key_value(line.text);
    if (!kv) {
      throw DataError(at_line(line.number) +
                      "expected key = value before the first section");
    }
    if (kv->first == "window_length") {
      window_length = parse_int(kv->second, line.number);
    } else if (kv->first == "inherit") {
      if (kv->second != "default") {
        throw DataError(at_line(line.number) + "only 'inherit = default' is supported");
      }
      inherit = true;
    } else {
      throw DataError(at_line(line.number) + "unknown setting '" + kv->first + "'");
    }
  }

  ConfigBundle bundle;
  if (inherit) {
    bundle = default_config_bundle();
  } else {
    bundle.negation.exceptional_words = {
        normalize_phrase("إلا", bundle.preprocess).front()};
  }
  if (window_length) {
    if (*window_length < 1) throw DataError("window_length must be >= 1");
    bundle.negation.window_length = static_cast<std::size_t>(*window_length);
  }

  // Preprocess settings first: every term below is normalized with them.
  for (const auto &section : sections) {
    if (section.name == "preprocess") {
      apply_preprocess_section(section, bundle.preprocess);
    }
  }
  const PreprocessOptions &options = bundle.preprocess;

  auto token_set = [&](const ConfigSection &section, std::string_view what) {
    std::set<std::string> out;
    for (const auto &line : section.lines) {
      out.insert(single_token(line.text, options, line.number, what));
    }
    return out;
  };

  bool saw_triggers = false;
  bool replaced_context = false;
  for (std::size_t i = 1; i < sections.size(); ++i) {
    const ConfigSection &section = sections[i];
    const std::size_t header = section.header_line;
    if (section.name == "preprocess") continue;

    if (section.name == "before" || section.name == "after") {
      if (section.argument.empty()) {
        throw DataError(at_line(header) + "[" + section.name +
                        "] needs a trigger argument");
      }
      if (!replaced_context) {
        bundle.negation.context_exceptions.clear();
        replaced_context = true;
      }
      const std::string trigger =
          single_token(section.argument, options, header, "trigger");
      auto &exceptions = bundle.negation.context_exceptions[trigger];
      for (const auto &line : section.lines) {
        if (section.name == "before") {
          exceptions.before.insert(
              single_token(line.text, options, line.number, "context word"));
        } else {
          auto seq = normalize_phrase(line.text, options);
          if (seq.empty() || seq.size() > 2) {
            throw DataError(at_line(line.number) +
                            "after-context must be one or two tokens");
          }
          exceptions.after.insert(std::move(seq));
        }
      }
      continue;
    }
    if (!section.argument.empty()) {
      throw DataError(at_line(header) + "section [" + section.name +
                      "] takes no argument");
    }
    if (section.name == "triggers") {
      bundle.negation.triggers = token_set(section, "trigger");
      saw_triggers = true;
    } else if (section.name == "exceptional") {
      bundle.negation.exceptional_words = token_set(section, "exceptional word");
    } else if (section.name == "superlatives") {
      bundle.negation.superlatives = token_set(section, "superlative");
    } else if (section.name == "resources") {
      for (const auto &line : section.lines) {
        auto kv = split_key_value(line.text);
        if (!kv) throw DataError(at_line(line.number) + "expected key = value");
        if (kv->first == "lexicon") {
          bundle.lexicon_path = resolve(base_dir, kv->second);
        } else if (kv->first == "stopwords") {
          bundle.stopwords_path = resolve(base_dir, kv->second);
        } else {
          throw DataError(at_line(line.number) + "unknown resource '" +
                          kv->first + "'");
        }
      }
    } else {
      throw DataError(at_line(header) + "unknown section [" + section.name + "]");
    }
  }
  if (!inherit && !saw_triggers) {
    throw DataError("config has no [triggers] section");
  }
  bundle.negation.validate();
  return bundle;
}

ConfigBundle load_config_bundle(const std::string &path) {
  try {
    const auto dir = std::filesystem::path(path).parent_path().string();
    return parse_config_bundle(read_file(path), dir.empty() ? "." : dir);
  } catch (const DataError &e) {
    throw DataError(path + ": " + e.what());
  }
}

const ConfigBundle &default_config_bundle() {
  static const ConfigBundle bundle =
      parse_config_bundle(default_negation_config_text());
  return bundle;
}

NegationConfig load_negation_config(const std::string &path) {
  return load_config_bundle(path).negation;
}

PreprocessOptions load_preprocess_options(const std::string &path) {
  return load_config_bundle(path).preprocess;
}

StopWords parse_stopwords(std::string_view text,
                          const PreprocessOptions &options) {
  StopWords out;
  for_each_line(text, [&](std::size_t number, std::string_view line) {
    const auto trimmed = trim(line);
    if (trimmed.empty() || trimmed.front() == '#') return;
    auto tokens = normalize_phrase(trimmed, options);
    if (tokens.size() > 1) {
      throw DataError(at_line(number) + "stop word must be a single token");
    }
    // Entries that normalize to nothing (Latin, digits) can never match.
    if (!tokens.empty()) out.insert(std::move(tokens.front()));
  });
  return out;
}

StopWords load_stopwords(const std::string &path,
                         const PreprocessOptions &options) {
  try {
    return parse_stopwords(read_file(path), options);
  } catch (const DataError &e) {
    throw DataError(path + ": " + e.what());
  }
}

StopWords default_stopwords() {
  return parse_stopwords(default_stopwords_text());
}

NegationStats corpus_stats(const LabeledCorpus &corpus,
                           const NegationConfig &config,
                           const PreprocessOptions &options) {
  NegationStats stats;
  stats.total_reviews = corpus.size();
  for (const auto &review : corpus.reviews) {
    if (!review.label) {
      throw DataError("review '" + review.id + "' is unlabeled; stats need labels");
    }
    const TokenizedReview tokens = preprocess_review(review, options);
    const bool has_trigger =
        std::any_of(tokens.tokens.begin(), tokens.tokens.end(),
                    [&](const Token &t) { return config.is_trigger(t.surface); });
    if (!has_trigger) continue;
    ++stats.reviews_with_trigger;
    if (*review.label == PolarityLabel::kPositive) {
      ++stats.positive_with_trigger;
    } else {
      ++stats.negative_with_trigger;
    }
  }
  if (stats.total_reviews > 0) {
    stats.prevalence = static_cast<double>(stats.reviews_with_trigger) /
                       static_cast<double>(stats.total_reviews);
  }
  if (stats.reviews_with_trigger > 0) {
    const auto n = static_cast<double>(stats.reviews_with_trigger);
    stats.negative_share = static_cast<double>(stats.negative_with_trigger) / n;
    stats.positive_share = static_cast<double>(stats.positive_with_trigger) / n;
  }
  return stats;
}

}  // namespace negscope

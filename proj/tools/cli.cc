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

#include "cli.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "negscope/classify.h"
#include "negscope/corpus.h"
#include "negscope/defaults.h"
#include "negscope/digest.h"
#include "negscope/error.h"
#include "negscope/evaluate.h"
#include "negscope/features.h"
#include "negscope/negation.h"
#include "negscope/report.h"

#ifndef NEGSCOPE_VERSION
#define NEGSCOPE_VERSION "0.0.0"
#endif

namespace negscope::cli {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kPolicyNames = {"none", "window", "sentence",
                                               "rules"};
const std::vector<std::string> kClassifierNames = {"svm", "nb", "logreg", "knn"};

struct Options {
  // Global.
  std::string config_path;
  std::uint64_t seed = 0;
  bool json = false;

  // Per command.
  std::string corpus_path;
  std::string format;
  std::string lexicon_path;
  std::string stopwords_path;
  std::string policy = "rules";
  std::string classifier = "svm";
  std::size_t folds = 10;
  bool no_stratify = false;
  std::string out_path;
  std::string text;
  std::string export_matrix;
  bool explain = false;
  unsigned jobs = 1;
};

struct Session {
  Resources resources;
  std::map<std::string, std::string> manifest;
};

Session load_session(const Options &opt, const std::string &command,
                     bool need_lexicon) {
  Session s;
  auto &m = s.manifest;
  m["tool"] = "negscope";
  m["version"] = NEGSCOPE_VERSION;
  m["command"] = command;
  m["seed"] = std::to_string(opt.seed);

  ConfigBundle bundle;
  if (opt.config_path.empty()) {
    bundle = default_config_bundle();
    m["config"] = "builtin";
    m["config_digest"] = digest_hex(default_negation_config_text());
  } else {
    bundle = load_config_bundle(opt.config_path);
    m["config"] = opt.config_path;
    m["config_digest"] = file_digest_hex(opt.config_path);
  }
  s.resources.negation = bundle.negation;
  s.resources.preprocess = bundle.preprocess;

  const std::string lexicon =
      !opt.lexicon_path.empty() ? opt.lexicon_path : bundle.lexicon_path.value_or("");
  if (!lexicon.empty()) {
    s.resources.lexicon = load_sentiment_lexicon(lexicon, bundle.preprocess);
    m["lexicon"] = lexicon;
    m["lexicon_digest"] = file_digest_hex(lexicon);
  } else if (need_lexicon) {
    throw DataError(
        "policy 'rules' needs a sentiment lexicon; pass --lexicon or set "
        "[resources] lexicon in the config file");
  } else {
    m["lexicon"] = "none";
  }

  const std::string stopwords = !opt.stopwords_path.empty()
                                    ? opt.stopwords_path
                                    : bundle.stopwords_path.value_or("");
  if (!stopwords.empty()) {
    s.resources.stopwords = load_stopwords(stopwords, bundle.preprocess);
    m["stopwords"] = stopwords;
    m["stopwords_digest"] = file_digest_hex(stopwords);
  } else {
    s.resources.stopwords = parse_stopwords(default_stopwords_text(), bundle.preprocess);
    m["stopwords"] = "builtin";
    m["stopwords_digest"] = digest_hex(default_stopwords_text());
  }
  m["resources_digest"] = s.resources.digest();
  return s;
}

LabeledCorpus load_input_corpus(const Options &opt, Session &session) {
  if (opt.corpus_path.empty()) throw UsageError("a corpus path is required");
  CorpusFormat format = format_for_path(opt.corpus_path);
  if (opt.format == "tsv") format = CorpusFormat::kTsv;
  if (opt.format == "jsonl") format = CorpusFormat::kJsonl;
  auto corpus = load_corpus(opt.corpus_path, format);
  session.manifest["corpus"] = opt.corpus_path;
  session.manifest["corpus_digest"] = file_digest_hex(opt.corpus_path);
  return corpus;
}

ScopeKind policy_of(const Options &opt) { return *parse_scope_kind(opt.policy); }

ClassifierKind classifier_of(const Options &opt) {
  return *parse_classifier_kind(opt.classifier);
}

TrainConfig train_config_of(const Options &opt) {
  TrainConfig config;
  config.classifier = classifier_of(opt);
  config.seed = opt.seed;
  return config;
}

// Writes to --out when given, else to `out`.
class Sink {
 public:
  Sink(const std::string &path, std::ostream &fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw DataError("cannot write " + path);
      stream_ = file_.get();
    }
  }
  std::ostream &stream() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream *stream_;
};

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

void write_file(const std::string &path, const std::string &content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DataError("cannot write " + path);
  f << content;
  if (!f) throw DataError("error writing " + path);
}

// --- Commands --------------------------------------------------------------

int cmd_stats(const Options &opt, std::ostream &out) {
  Session session = load_session(opt, "stats", false);
  const auto corpus = load_input_corpus(opt, session);
  const auto stats =
      corpus_stats(corpus, session.resources.negation, session.resources.preprocess);
  if (opt.json) {
    json j = to_json(stats);
    j["manifest"] = session.manifest;
    out << j.dump(2) << '\n';
  } else {
    out << render_stats(stats);
  }
  return kExitOk;
}

int cmd_tag(const Options &opt, const std::string &command, std::ostream &out) {
  const ScopeKind kind = policy_of(opt);
  if (opt.explain && kind != ScopeKind::kRuleBased) {
    throw UsageError("--explain is only available with --policy rules");
  }
  if (!opt.text.empty() && !opt.corpus_path.empty()) {
    throw UsageError("give either a corpus path or --text, not both");
  }
  Session session = load_session(opt, command, kind == ScopeKind::kRuleBased);
  LabeledCorpus corpus;
  if (!opt.text.empty()) {
    corpus.add(Review{"text", opt.text, std::nullopt});
  } else {
    corpus = load_input_corpus(opt, session);
  }

  const auto &res = session.resources;
  const auto policy = ScopePolicy::from_config(kind, res.negation);
  Sink sink(opt.out_path, out);
  std::ostream &os = sink.stream();
  for (const auto &review : corpus.reviews) {
    const auto tokenized = preprocess_review(review, res.preprocess);
    auto tagged = apply_policy(tokenized, policy, res.negation, res.lexicon);
    if (!opt.explain) tagged.trace.reset();
    if (opt.json) {
      os << to_json(tagged.review, tagged.trace).dump() << '\n';
      continue;
    }
    os << review.id << '\t' << render_tagged(tagged.review) << '\t'
       << (review.label ? std::string(to_string(*review.label)) : "") << '\n';
    if (tagged.trace) {
      for (const auto &line : render_trace_lines(*tagged.trace)) {
        os << "  " << line << '\n';
      }
    }
  }
  return kExitOk;
}

int cmd_train(const Options &opt, std::ostream &out) {
  const ClassifierKind classifier = classifier_of(opt);
  if (classifier == ClassifierKind::kKnn) {
    throw UsageError(
        "knn models are not saved on their own (they keep the whole training "
        "matrix); run 'negscope evaluate --classifier knn' instead");
  }
  if (opt.out_path.empty()) throw UsageError("train needs --out MODEL_PATH");
  const ScopeKind kind = policy_of(opt);
  Session session = load_session(opt, "train", kind == ScopeKind::kRuleBased);
  const auto corpus = load_input_corpus(opt, session);
  session.manifest["policy"] = opt.policy;
  session.manifest["classifier"] = opt.classifier;

  const auto &res = session.resources;
  const auto prepared =
      prepare_reviews(corpus, ScopePolicy::from_config(kind, res.negation), res);
  const FittedPipeline fitted = fit_pipeline(prepared, train_config_of(opt));

  auto metadata = session.manifest;
  metadata["n_documents"] = std::to_string(fitted.vocabulary.n_documents());
  metadata["vocabulary"] = opt.out_path + ".vocab";
  const SerializableModel model =
      std::holds_alternative<NBModel>(fitted.model)
          ? SerializableModel(std::get<NBModel>(fitted.model))
          : SerializableModel(std::get<LinearModel>(fitted.model));
  save_model(opt.out_path, model, metadata);

  std::ostringstream vocab;
  write_vocabulary(vocab, fitted.vocabulary);
  write_file(opt.out_path + ".vocab", vocab.str());

  if (!opt.export_matrix.empty()) {
    std::ostringstream matrix;
    write_matrix(matrix, *fitted.matrix);
    write_file(opt.export_matrix, matrix.str());
    write_file(opt.export_matrix + ".vocab", vocab.str());
  }

  if (opt.json) {
    out << json{{"model", opt.out_path},
                {"vocabulary", opt.out_path + ".vocab"},
                {"classifier", opt.classifier},
                {"policy", opt.policy},
                {"n_documents", fitted.vocabulary.n_documents()},
                {"n_features", fitted.vocabulary.size()},
                {"fingerprint", hex64(fingerprint(fitted.model))},
                {"manifest", session.manifest}}
               .dump(2)
        << '\n';
  } else {
    out << "wrote " << opt.out_path << " (" << opt.classifier << ", policy "
        << opt.policy << ", " << fitted.vocabulary.n_documents() << " reviews, |V|="
        << fitted.vocabulary.size() << ")\n";
  }
  return kExitOk;
}

int cmd_evaluate(const Options &opt, std::ostream &out) {
  const ScopeKind kind = policy_of(opt);
  Session session = load_session(opt, "evaluate", kind == ScopeKind::kRuleBased);
  const auto corpus = load_input_corpus(opt, session);
  session.manifest["policy"] = opt.policy;
  session.manifest["classifier"] = opt.classifier;
  session.manifest["folds"] = std::to_string(opt.folds);
  session.manifest["stratified"] = opt.no_stratify ? "false" : "true";

  const auto &res = session.resources;
  const FoldPlan plan = opt.no_stratify ? random_folds(corpus, opt.folds, opt.seed)
                                        : stratified_folds(corpus, opt.folds, opt.seed);
  const auto result =
      cross_validate(corpus, ScopePolicy::from_config(kind, res.negation),
                     train_config_of(opt), res, plan);
  if (opt.json) {
    json j = to_json(result);
    j["manifest"] = session.manifest;
    out << j.dump(2) << '\n';
  } else {
    out << "policy " << opt.policy << " (" << policy_label(kind) << "), classifier "
        << opt.classifier << '\n'
        << render_cross_validation(result);
  }
  return kExitOk;
}

int cmd_compare(const Options &opt, std::ostream &out) {
  Session session = load_session(opt, "compare", true);
  const auto corpus = load_input_corpus(opt, session);
  session.manifest["policy"] = "none,window,sentence,rules";
  session.manifest["classifier"] = "svm,nb,logreg,knn";
  session.manifest["folds"] = std::to_string(opt.folds);
  session.manifest["stratified"] = opt.no_stratify ? "false" : "true";

  GridOptions grid;
  grid.n_folds = opt.folds;
  grid.stratified = !opt.no_stratify;
  grid.train.seed = opt.seed;
  grid.jobs = opt.jobs;
  auto report = compare_grid(
      corpus,
      {ScopeKind::kNone, ScopeKind::kFixedWindow, ScopeKind::kToSentenceEnd,
       ScopeKind::kRuleBased},
      {ClassifierKind::kSvm, ClassifierKind::kNaiveBayes, ClassifierKind::kLogReg,
       ClassifierKind::kKnn},
      session.resources, opt.seed, grid);
  report.manifest = session.manifest;

  const std::string table = render_table(report);
  const std::string json_text = to_json(report).dump(2) + "\n";
  if (!opt.out_path.empty()) {
    write_file(opt.out_path + ".txt", table);
    write_file(opt.out_path + ".json", json_text);
  }
  out << (opt.json ? json_text : table);
  return kExitOk;
}

void add_resource_options(CLI::App *cmd, Options &opt) {
  cmd->add_option("--lexicon", opt.lexicon_path,
                  "Sentiment lexicon (word<TAB>polarity); overrides the config");
  cmd->add_option("--stopwords", opt.stopwords_path,
                  "Stop-word list, one word per line; overrides the config");
  cmd->add_option("--format", opt.format, "Corpus format (default: by extension)")
      ->check(CLI::IsMember({"tsv", "jsonl"}));
}

CLI::Option *add_policy_option(CLI::App *cmd, Options &opt) {
  return cmd->add_option("--policy", opt.policy, "Negation scope policy")
      ->check(CLI::IsMember(kPolicyNames))
      ->capture_default_str();
}

void add_fold_options(CLI::App *cmd, Options &opt) {
  cmd->add_option("--folds", opt.folds, "Number of cross-validation folds")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}))
      ->capture_default_str();
  cmd->add_flag("--no-stratify", opt.no_stratify,
                "Assign folds by one random shuffle instead of per class");
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  Options opt;
  CLI::App app{"Rule-based negation handling for colloquial Arabic sentiment",
               "negscope"};
  app.set_version_flag("--version", NEGSCOPE_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--config", opt.config_path,
                 "Negation/preprocess config file (default: built in)");
  app.add_option("--seed", opt.seed, "Seed for fold assignment and SGD shuffles")
      ->capture_default_str();
  app.add_flag("--json", opt.json, "Emit JSON instead of text");

  auto *stats = app.add_subcommand("stats", "Report negation-trigger prevalence");
  stats->add_option("corpus", opt.corpus_path, "Labeled corpus (.tsv or .jsonl)")
      ->required();
  add_resource_options(stats, opt);

  auto *tag = app.add_subcommand("tag", "Tag negated tokens with the _! suffix");
  auto *explain = app.add_subcommand(
      "explain", "Same as 'tag --explain --policy rules'");
  for (auto *cmd : {tag, explain}) {
    cmd->add_option("corpus", opt.corpus_path, "Corpus (.tsv or .jsonl)");
    cmd->add_option("--text", opt.text, "Tag one review given inline");
    cmd->add_option("--out", opt.out_path, "Write output here instead of stdout");
    add_resource_options(cmd, opt);
  }
  add_policy_option(tag, opt);
  tag->add_flag("--explain", opt.explain,
                "Print per-trigger rule traces (policy rules only)");

  auto *train = app.add_subcommand("train", "Train on the full corpus and save");
  auto *evaluate = app.add_subcommand("evaluate", "Cross-validate one configuration");
  for (auto *cmd : {train, evaluate}) {
    cmd->add_option("corpus", opt.corpus_path, "Labeled corpus")->required();
    add_policy_option(cmd, opt);
    cmd->add_option("--classifier", opt.classifier, "Classifier")
        ->check(CLI::IsMember(kClassifierNames))
        ->capture_default_str();
    add_resource_options(cmd, opt);
  }
  train->add_option("--out", opt.out_path, "Model file; vocabulary goes to <out>.vocab")
      ->required();
  train->add_option("--export-matrix", opt.export_matrix,
                    "Also write the training matrix here (+ .vocab sidecar)");
  add_fold_options(evaluate, opt);

  auto *compare = app.add_subcommand(
      "compare", "Cross-validate every policy x classifier pair");
  compare->add_option("corpus", opt.corpus_path, "Labeled corpus")->required();
  compare->add_option("--out", opt.out_path,
                      "Write <out>.txt (table) and <out>.json (report)");
  compare->add_option("--jobs", opt.jobs, "Grid cells run in parallel")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  add_fold_options(compare, opt);
  add_resource_options(compare, opt);

  std::vector<const char *> argv;
  argv.reserve(args.size());
  for (const auto &a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (stats->parsed()) return cmd_stats(opt, out);
    if (tag->parsed()) return cmd_tag(opt, "tag", out);
    if (explain->parsed()) {
      opt.explain = true;
      opt.policy = "rules";
      return cmd_tag(opt, "explain", out);
    }
    if (train->parsed()) return cmd_train(opt, out);
    if (evaluate->parsed()) return cmd_evaluate(opt, out);
    if (compare->parsed()) return cmd_compare(opt, out);
  } catch (const UsageError &e) {
    err << "negscope: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception &e) {
    err << "negscope: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace negscope::cli

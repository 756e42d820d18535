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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.h"
#include "test_util.h"

namespace negscope {
namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "negscope");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture_config() {
  return testing::data_path("fixtures/fixture_resources.conf");
}

std::string fixture_corpus_path() {
  return testing::data_path("fixtures/fixture_corpus.tsv");
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string temp_path(const std::string &name) {
  return (std::filesystem::path(::testing::TempDir()) / name).string();
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run_cli({}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"evaluate", fixture_corpus_path(), "--folds", "0"}).code,
            cli::kExitUsage);
  EXPECT_EQ(run_cli({"evaluate", fixture_corpus_path(), "--classifier", "tree"}).code,
            cli::kExitUsage);
  EXPECT_EQ(run_cli({"--config", fixture_config(), "tag", fixture_corpus_path(),
                     "--policy", "window", "--explain"})
                .code,
            cli::kExitUsage);
}

TEST(Cli, DataErrorsExitTwo) {
  const auto missing = run_cli({"stats", "/nonexistent/corpus.tsv"});
  EXPECT_EQ(missing.code, cli::kExitData);
  EXPECT_FALSE(missing.err.empty());
  // Rules need a lexicon and the built-in configuration names none.
  EXPECT_EQ(run_cli({"evaluate", fixture_corpus_path()}).code, cli::kExitData);
}

TEST(Cli, StatsOnFixture) {
  const auto text = run_cli({"--config", fixture_config(), "stats", fixture_corpus_path()});
  ASSERT_EQ(text.code, 0) << text.err;
  EXPECT_NE(text.out.find("0.333333"), std::string::npos);

  const auto json = run_cli(
      {"--config", fixture_config(), "--json", "stats", fixture_corpus_path()});
  ASSERT_EQ(json.code, 0) << json.err;
  const auto j = nlohmann::json::parse(json.out);
  EXPECT_EQ(j.at("total_reviews"), 12);
  EXPECT_EQ(j.at("reviews_with_trigger"), 4);
  EXPECT_DOUBLE_EQ(j.at("negative_share").get<double>(), 0.75);
  EXPECT_TRUE(j.at("manifest").contains("corpus_digest"));
}

TEST(Cli, ExplainInlineText) {
  const auto r = run_cli({"--config", fixture_config(), "explain", "--text",
                          "مش حلو المكان وسخ بالمرّة"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("مش حلو_! المكان وسخ بالمره"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("case=3"), std::string::npos) << r.out;
}

TEST(Cli, TagPoliciesDiffer) {
  const std::string text = "ما في ازعاج بالعكس هاديه جدا";
  const auto window = run_cli({"tag", "--policy", "window", "--text", text});
  ASSERT_EQ(window.code, 0) << window.err;
  EXPECT_NE(window.out.find("ما في_! ازعاج_! بالعكس_! هاديه_! جدا_!"), std::string::npos)
      << window.out;
  const auto none = run_cli({"tag", "--policy", "none", "--text", text});
  ASSERT_EQ(none.code, 0);
  EXPECT_EQ(none.out.find("_!"), std::string::npos);
}

TEST(Cli, TagCorpusAsJsonl) {
  const auto r = run_cli({"--config", fixture_config(), "--json", "tag",
                          fixture_corpus_path(), "--explain"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line); ++lines) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_TRUE(j.contains("trace"));
  }
  EXPECT_EQ(lines, 12u);
}

TEST(Cli, TrainWritesReproducibleModel) {
  const auto path = temp_path("model.txt");
  std::vector<std::string> models, vocabularies;
  for (int run = 0; run < 2; ++run) {
    const auto r = run_cli({"--config", fixture_config(), "--seed", "3", "train",
                            fixture_corpus_path(), "--out", path});
    ASSERT_EQ(r.code, 0) << r.err;
    models.push_back(read_file(path));
    vocabularies.push_back(read_file(path + ".vocab"));
    std::filesystem::remove(path);
  }
  EXPECT_EQ(models[0].rfind("negscope-model v1 svm", 0), 0u) << models[0].substr(0, 60);
  EXPECT_NE(models[0].find("meta seed 3\n"), std::string::npos);
  EXPECT_EQ(models[0], models[1]);
  EXPECT_FALSE(vocabularies[0].empty());
  EXPECT_EQ(vocabularies[0], vocabularies[1]);
}

TEST(Cli, TrainRejectsKnn) {
  const auto r = run_cli({"--config", fixture_config(), "train", fixture_corpus_path(),
                          "--classifier", "knn", "--out", temp_path("knn.txt")});
  EXPECT_EQ(r.code, cli::kExitUsage);
}

TEST(Cli, EvaluateJsonMatchesText) {
  const std::vector<std::string> base = {"--config", fixture_config(), "--seed", "5"};
  auto text_args = base;
  text_args.insert(text_args.end(), {"evaluate", fixture_corpus_path(), "--folds", "3"});
  auto json_args = base;
  json_args.push_back("--json");
  json_args.insert(json_args.end(), {"evaluate", fixture_corpus_path(), "--folds", "3"});
  const auto text = run_cli(text_args);
  const auto json = run_cli(json_args);
  ASSERT_EQ(text.code, 0) << text.err;
  ASSERT_EQ(json.code, 0) << json.err;
  const auto j = nlohmann::json::parse(json.out);
  char accuracy[32];
  std::snprintf(accuracy, sizeof accuracy, "%.4f", j.at("accuracy").get<double>());
  EXPECT_NE(text.out.find(accuracy), std::string::npos) << text.out;
  EXPECT_EQ(j.at("folds").size(), 3u);
}

TEST(Cli, CompareIsDeterministic) {
  const std::vector<std::string> args = {"--config", fixture_config(), "--seed", "7",
                                         "--json",   "compare",        fixture_corpus_path(),
                                         "--folds",  "3"};
  const auto first = run_cli(args);
  const auto second = run_cli(args);
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_EQ(first.out, second.out);
  const auto j = nlohmann::json::parse(first.out);
  EXPECT_EQ(j.at("grid").size(), 16u);
  EXPECT_EQ(j.at("vocab_sizes").size(), 4u);
}

TEST(Cli, CompareWritesBothOutputs) {
  const auto prefix = temp_path("grid");
  const auto r = run_cli({"--config", fixture_config(), "compare", fixture_corpus_path(),
                          "--folds", "3", "--out", prefix});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(read_file(prefix + ".txt").find("Proposed"), std::string::npos);
  EXPECT_EQ(nlohmann::json::parse(read_file(prefix + ".json")).at("grid").size(), 16u);
}

}  // namespace
}  // namespace negscope

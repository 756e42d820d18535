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

// Writes the planted-negation corpus and its lexicon to disk.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "negscope/corpus.h"
#include "negscope/error.h"
#include "negscope/planted.h"

int main(int argc, char **argv) {
  negscope::PlantedOptions options;
  std::string corpus_path = "planted.tsv";
  std::string lexicon_path = "planted_lexicon.tsv";

  CLI::App app{"Generate a synthetic corpus with planted negation",
               "negscope-planted"};
  app.add_option("--corpus", corpus_path, "Output corpus (TSV)")->capture_default_str();
  app.add_option("--lexicon", lexicon_path, "Output lexicon")->capture_default_str();
  app.add_option("--reviews", options.n_reviews, "Number of reviews")
      ->capture_default_str();
  app.add_option("--negated-fraction", options.negated_fraction,
                 "Share of reviews with a planted trigger")
      ->capture_default_str();
  app.add_option("--max-distance", options.max_distance,
                 "Largest trigger-to-opinion distance in tokens")
      ->capture_default_str();
  app.add_option("--seed", options.seed, "Generator seed")->capture_default_str();
  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 1;
  }

  try {
    const auto planted = negscope::generate_planted_corpus(options);
    std::ofstream corpus(corpus_path, std::ios::binary);
    std::ofstream lexicon(lexicon_path, std::ios::binary);
    if (!corpus || !lexicon) throw negscope::DataError("cannot open output files");
    negscope::write_corpus(corpus, planted.corpus, negscope::CorpusFormat::kTsv);
    lexicon << negscope::planted_lexicon_text();
    std::cout << "wrote " << planted.corpus.size() << " reviews (" << planted.n_negated
              << " negated) to " << corpus_path << " and the lexicon to "
              << lexicon_path << '\n';
  } catch (const std::exception &e) {
    std::cerr << "negscope-planted: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

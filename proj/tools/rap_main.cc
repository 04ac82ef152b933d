// Copyright 2026 The RAP Resolver Authors.
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

// Command-line front end.
//
//   rap split [FILE]
//   rap resolve [--format pairs|annotated|substituted] [FILE...]
//   rap annotate [FILE...]
//   rap substitute [FILE...]
//   rap score --gold GOLD --trees TREES [PAIRS]
//
// Exit status: 0 success, 2 missing file, 3 malformed input, 64 bad usage.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "rap/lexicon.h"
#include "rap/muc.h"
#include "rap/resolver.h"
#include "rap/salience.h"
#include "rap/splitter.h"
#include "rap/tree.h"

namespace {

constexpr int kExitMissingFile = 2;
constexpr int kExitMalformed = 3;
constexpr int kExitUsage = 64;

// Carries an exit status out of a subcommand.
struct Failure {
  int status;
  std::string message;
};

std::string ReadInput(const std::string &path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitMissingFile, "cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void RequireFile(const std::string &path) {
  if (!path.empty() && !std::filesystem::exists(path)) {
    throw Failure{kExitMissingFile, "no such file: " + path};
  }
}

rap::Document ParseTrees(const std::string &text, const std::string &path) {
  try {
    return rap::ReadTrees(text);
  } catch (const rap::ParseError &e) {
    throw Failure{kExitMalformed, (path.empty() ? "<stdin>" : path) +
                                      ": offset " +
                                      std::to_string(e.offset()) + ": " +
                                      e.what()};
  }
}

struct ResolveOptions {
  std::vector<std::string> inputs;
  std::string format = "pairs";
  int window = 3;
  std::string lexicon_dir;
  std::string gendered_nouns = "off";
  std::string weights;
  bool diagnostics = false;
  int jobs = 1;
};

struct ResolvedFile {
  std::string output;
  std::string diagnostics;
  std::optional<Failure> failure;
};

ResolvedFile ResolveOne(const std::string &path, const ResolveOptions &opt,
                        const rap::Lexicons &lex,
                        const rap::ResolverConfig &cfg) {
  ResolvedFile out;
  try {
    rap::Document doc = ParseTrees(ReadInput(path), path);
    auto records = rap::ResolveDocument(doc, lex, cfg);
    if (opt.format == "annotated") {
      out.output = rap::RenderAnnotated(records, doc);
    } else if (opt.format == "substituted") {
      out.output = rap::RenderSubstituted(records, doc);
    } else {
      out.output = rap::RenderPairs(records, doc);
    }
    if (opt.diagnostics) {
      for (const auto &r : records) {
        out.diagnostics += rap::RenderDiagnostics(r, doc);
      }
    }
  } catch (const Failure &f) {
    out.failure = f;
  }
  return out;
}

int RunResolve(const ResolveOptions &opt) {
  for (const std::string &p : opt.inputs) {
    if (p != "-") RequireFile(p);
  }
  std::filesystem::path dir =
      opt.lexicon_dir.empty() ? rap::DefaultDataDir()
                              : std::filesystem::path(opt.lexicon_dir);
  if (!std::filesystem::is_directory(dir)) {
    throw Failure{kExitMissingFile, "no such lexicon directory: " +
                                        dir.string()};
  }
  rap::Lexicons lex;
  try {
    lex = rap::LoadLexicons(dir);
  } catch (const std::runtime_error &e) {
    throw Failure{kExitMissingFile, e.what()};
  }
  rap::ResolverConfig cfg;
  cfg.window_sentences = opt.window;
  cfg.gendered_nouns = opt.gendered_nouns == "on";
  if (!opt.weights.empty()) {
    RequireFile(opt.weights);
    try {
      cfg.weights = rap::LoadWeights(opt.weights);
    } catch (const std::runtime_error &e) {
      throw Failure{kExitMalformed, e.what()};
    }
  }

  std::vector<std::string> inputs = opt.inputs;
  if (inputs.empty()) inputs.push_back("-");
  std::vector<ResolvedFile> results(inputs.size());
  const int jobs = std::max(1, std::min<int>(opt.jobs, inputs.size()));
  if (jobs == 1) {
    for (size_t i = 0; i < inputs.size(); ++i) {
      results[i] = ResolveOne(inputs[i], opt, lex, cfg);
    }
  } else {
    // Documents are independent; workers pull the next index.
    std::atomic<size_t> next{0};
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (size_t i = next++; i < inputs.size(); i = next++) {
          results[i] = ResolveOne(inputs[i], opt, lex, cfg);
        }
      });
    }
    for (auto &t : workers) t.join();
  }

  for (const ResolvedFile &r : results) {
    if (r.failure) throw *r.failure;
    std::cerr << r.diagnostics;
    std::cout << r.output;
  }
  return 0;
}

int RunSplit(const std::string &input, const std::string &abbreviations) {
  if (input != "-") RequireFile(input);
  rap::SplitConfig cfg;
  try {
    if (abbreviations.empty()) {
      cfg = rap::DefaultSplitConfig();
    } else {
      RequireFile(abbreviations);
      cfg.abbreviations = rap::ReadWordList(abbreviations, false);
    }
  } catch (const std::runtime_error &e) {
    throw Failure{kExitMissingFile, e.what()};
  }
  for (const std::string &s : rap::SplitSentences(ReadInput(input), cfg)) {
    std::cout << s << '\n';
  }
  return 0;
}

int RunScore(const std::string &gold_path, const std::string &trees_path,
             const std::string &pairs_path) {
  RequireFile(gold_path);
  RequireFile(trees_path);
  if (pairs_path != "-") RequireFile(pairs_path);
  rap::GoldDocument gold;
  try {
    gold = rap::ParseGold(ReadInput(gold_path));
  } catch (const rap::ParseError &e) {
    throw Failure{kExitMalformed, gold_path + ": offset " +
                                      std::to_string(e.offset()) + ": " +
                                      e.what()};
  } catch (const rap::GoldValidationError &e) {
    throw Failure{kExitMalformed, gold_path + ": " + e.what()};
  }
  rap::Document doc = ParseTrees(ReadInput(trees_path), trees_path);
  std::vector<rap::PredictedPair> pairs;
  try {
    pairs = rap::ParsePairs(ReadInput(pairs_path));
  } catch (const rap::ParseError &e) {
    throw Failure{kExitMalformed, pairs_path + ": offset " +
                                      std::to_string(e.offset()) + ": " +
                                      e.what()};
  }
  rap::EvalReport report = rap::Score(pairs, gold, doc);
  std::string text = report.ToString();
  // Everything but the machine-readable last line goes to stderr.
  std::cerr << text.substr(0, text.size() - report.MachineLine().size() - 1);
  std::cout << report.MachineLine() << '\n';
  return 0;
}

void AddResolveFlags(CLI::App *cmd, ResolveOptions *opt, bool with_format) {
  cmd->add_option("files", opt->inputs, "Bracketed tree files ('-' = stdin)");
  if (with_format) {
    cmd->add_option("--format", opt->format, "Output format")
        ->check(CLI::IsMember({"pairs", "annotated", "substituted"}));
  }
  cmd->add_option("--window", opt->window,
                  "Preceding sentences searched for antecedents")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--lexicon-dir", opt->lexicon_dir,
                  "Directory with the word lists (default $RAP_DATA_DIR)");
  cmd->add_option("--gendered-nouns", opt->gendered_nouns,
                  "Use gendered common nouns for agreement")
      ->check(CLI::IsMember({"on", "off"}));
  cmd->add_option("--weights", opt->weights, "JSON file of salience weights");
  cmd->add_flag("--diagnostics", opt->diagnostics,
                "Write the candidates of every anaphor to stderr");
  cmd->add_option("--jobs", opt->jobs, "Documents resolved in parallel")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Pronominal anaphora resolution over bracketed parse trees"};
  app.require_subcommand(1);

  std::string split_input = "-";
  std::string split_abbrev;
  CLI::App *split = app.add_subcommand("split", "Split raw text into sentences");
  split->add_option("file", split_input, "Raw text file ('-' = stdin)");
  split->add_option("--abbreviations", split_abbrev, "Abbreviation list");

  ResolveOptions resolve_opt, annotate_opt, substitute_opt;
  CLI::App *resolve =
      app.add_subcommand("resolve", "Resolve anaphors and print pairs");
  AddResolveFlags(resolve, &resolve_opt, true);
  CLI::App *annotate =
      app.add_subcommand("annotate", "Resolve and annotate in place");
  AddResolveFlags(annotate, &annotate_opt, false);
  CLI::App *substitute =
      app.add_subcommand("substitute", "Resolve and substitute antecedents");
  AddResolveFlags(substitute, &substitute_opt, false);

  std::string gold_path, trees_path, pairs_path = "-";
  CLI::App *score =
      app.add_subcommand("score", "Score pairs against MUC-style gold");
  score->add_option("--gold", gold_path, "Gold COREF-annotated text")
      ->required();
  score->add_option("--trees", trees_path,
                    "Parse trees the pairs were computed from")
      ->required();
  score->add_option("pairs", pairs_path, "Pairs output ('-' = stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*split) return RunSplit(split_input, split_abbrev);
    if (*resolve) return RunResolve(resolve_opt);
    if (*annotate) {
      annotate_opt.format = "annotated";
      return RunResolve(annotate_opt);
    }
    if (*substitute) {
      substitute_opt.format = "substituted";
      return RunResolve(substitute_opt);
    }
    if (*score) return RunScore(gold_path, trees_path, pairs_path);
  } catch (const Failure &f) {
    std::cerr << "rap: " << f.message << '\n';
    return f.status;
  }
  return kExitUsage;
}

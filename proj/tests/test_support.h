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

// Shared fixtures for the unit tests and the acceptance suite: test corpus
// loaders, a brute-force containment oracle and a random document generator.

#ifndef RAP_TESTS_TEST_SUPPORT_H_
#define RAP_TESTS_TEST_SUPPORT_H_

#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rap/lexicon.h"
#include "rap/resolver.h"
#include "rap/tree.h"

namespace rap::testing {

std::filesystem::path TestDataPath(const std::string &name);
std::string ReadFileOrDie(const std::filesystem::path &path);

// Lexicons from the bundled data directory, loaded once.
const Lexicons &TestLexicons();

// One row of filter_examples.tsv.
struct FilterExample {
  // Expected rule id; empty when no rule decides the pair.
  std::string rule;
  bool admissible = false;
  std::string anaphor;
  std::string candidate;
  bool gendered_nouns = false;
  std::string tree;
};
std::vector<FilterExample> LoadFilterExamples();

// One row of pleonastic.tsv.
struct PleonasticExample {
  bool pleonastic = false;
  std::string note;
  std::string tree;
};
std::vector<PleonasticExample> LoadPleonasticExamples();

// Every distinct tree in the test corpus, one document each.
std::vector<std::string> AllCorpusTrees();

// Verdict the resolver records for the named pair, or a description of why
// the pair could not be found.
struct PairVerdict {
  bool found = false;
  FilterVerdict verdict;
  std::string error;
};
PairVerdict VerdictFor(const FilterExample &ex);

// Containment computed straight from the recursive definition: P is
// contained in Q iff P is immediately contained in Q, or P is immediately
// contained in some R that is contained in Q. The immediate relation is
// restated from the tree-shape rules independently of the library.
bool OracleContainedIn(const Document &doc, NodeId p, NodeId q);

// Random bracketed document of 1..max_sentences trees drawn from a small
// grammar of names, common nouns, pronouns, reflexives, possessives, PPs,
// complement clauses, coordination and pleonastic frames.
std::string RandomDocument(std::mt19937 &rng, int max_sentences = 8);

// One candidate line parsed back from RenderDiagnostics output.
struct DiagnosticLine {
  std::string label;  // "s:a-b"
  int weight = 0;
  int distance = 0;
  bool precedes = true;
  bool admissible = false;
};
struct DiagnosticBlock {
  std::string anaphor_label;
  std::vector<DiagnosticLine> candidates;
};
std::vector<DiagnosticBlock> ParseDiagnostics(const std::string &text);

// "s:a-b" for a mention.
std::string SpanLabelOf(const Mention &m);

}  // namespace rap::testing

#endif  // RAP_TESTS_TEST_SUPPORT_H_

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

// Per-anaphor accuracy against MUC-6 style coreference markup:
//
//   <COREF ID="1">John</COREF> said <COREF ID="2" REF="1">he</COREF> left.
//
// REF links are closed transitively into classes. A resolved pronoun is
// correct when its antecedent matches a mention of the pronoun's own gold
// class; an unresolved or pleonastic one is correct when the gold pronoun
// carries no REF.

#ifndef RAP_MUC_H_
#define RAP_MUC_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rap/resolver.h"
#include "rap/tree.h"

namespace rap {

// Well-formed markup whose REF graph is inconsistent.
class GoldValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GoldMention {
  std::string id;
  std::optional<std::string> ref;
  std::optional<std::string> min;
  // Character range [begin, end) in GoldDocument::text.
  size_t begin = 0;
  size_t end = 0;
  std::string text;
};

struct GoldDocument {
  // Text with all markup removed and entities decoded.
  std::string text;
  // In order of their opening tags.
  std::vector<GoldMention> mentions;
};

// Throws ParseError for unmatched or malformed tags and GoldValidationError
// for duplicate ids, dangling REFs and REF cycles.
GoldDocument ParseGold(std::string_view sgml);

// Partition of mention ids into coreference classes. Classes are ordered by
// their first mention; ids within a class keep document order.
std::vector<std::vector<std::string>> RestoreChains(
    const std::vector<GoldMention> &mentions);

// One line of resolver output, reduced to what scoring needs.
struct PredictedPair {
  int sentence = 0;
  Span anaphor;
  ResolutionStatus status = ResolutionStatus::kUnresolved;
  int antecedent_sentence = -1;
  Span antecedent;
};

std::vector<PredictedPair> PairsFromRecords(
    const std::vector<ResolutionRecord> &records);

// Parses RenderPairs output. Throws ParseError on a malformed line.
std::vector<PredictedPair> ParsePairs(std::string_view text);

struct Judgment {
  std::string gold_id;
  std::string text;
  bool aligned = false;
  bool predicted = false;
  bool correct = false;
};

struct EvalReport {
  int total = 0;
  int correct = 0;
  double accuracy = 0.0;
  // Supplementary counts.
  int resolved_correct = 0;
  int unresolved_correct = 0;
  int pleonastic_correct = 0;
  int unresolved_linked = 0;
  int pleonastic_linked = 0;
  int missing = 0;
  int alignment_failures = 0;
  std::vector<Judgment> judgments;

  // Human-readable summary; the last line is `accuracy=... correct=...
  // total=...`.
  std::string ToString() const;
  std::string MachineLine() const;
};

// Scores predictions against gold. Gold anaphors are the COREF mentions
// whose text is a third-person pronoun, reflexive or reciprocal. An
// antecedent matches a gold mention when its token span, with or without a
// final possessive marker, equals the mention's span or lies between the
// MIN span and the full span.
EvalReport Score(const std::vector<PredictedPair> &predicted,
                 const GoldDocument &gold, const Document &doc);

// COREF markup for the resolver's own output: every anaphor and antecedent
// becomes a mention, resolved anaphors REF their antecedent.
std::string RenderGold(const std::vector<ResolutionRecord> &records,
                       const Document &doc);

}  // namespace rap

#endif  // RAP_MUC_H_

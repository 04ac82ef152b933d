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

// Document-level resolution. Anaphors are visited in document order; each
// is paired with the noun phrases of its own sentence and the preceding
// window, filtered (agreement everywhere, structural rules within the
// sentence), and the most salient survivor wins. Besides the filter rules,
// a candidate is rejected as "CATAPHORA" when it is a pronoun following the
// anaphor and as "CHAIN" when it already shares the anaphor's chain. The winner's chain absorbs
// the anaphor, so later anaphors see the merged factors.

#ifndef RAP_RESOLVER_H_
#define RAP_RESOLVER_H_

#include <optional>
#include <string>
#include <vector>

#include "rap/binding.h"
#include "rap/lexicon.h"
#include "rap/mentions.h"
#include "rap/salience.h"
#include "rap/tree.h"

namespace rap {

struct ResolverConfig {
  // Preceding sentences searched besides the anaphor's own.
  int window_sentences = 3;
  bool gendered_nouns = false;
  SalienceWeights weights;
};

enum class ResolutionStatus { kResolved, kUnresolved, kPleonastic };

struct CandidateDiagnostic {
  Mention mention;
  FilterVerdict verdict;
  int weight = 0;
  // Token distance to the anaphor; see TokenDistance.
  int distance = 0;
  bool precedes = true;
};

struct ResolutionRecord {
  Anaphor anaphor;
  ResolutionStatus status = ResolutionStatus::kUnresolved;
  std::optional<Mention> antecedent;
  // Equivalence class of a resolved anaphor; -1 otherwise.
  int chain_id = -1;
  std::vector<CandidateDiagnostic> candidates;
};

// Mentions of the anaphor's sentence and the window_sentences before it,
// in document order. Excludes the anaphor itself, phrases that contain or
// are contained in it, lexical anaphors and non-referential mentions.
std::vector<Mention> CandidateSet(const Anaphor &a, const Document &doc,
                                  const std::vector<Mention> &mentions,
                                  const ResolverConfig &cfg);

// Tokens between anaphor and candidate across sentence boundaries: anaphor
// start minus candidate end for a preceding candidate, candidate start
// minus anaphor end for a following one. Sets *precedes accordingly.
int TokenDistance(const Document &doc, const Mention &anaphor,
                  const Mention &candidate, bool *precedes);

std::vector<ResolutionRecord> ResolveDocument(const Document &doc,
                                              const Lexicons &lex,
                                              const ResolverConfig &cfg = {});

// One line per anaphor:
//   <sent>:<start>-<end> "<anaphor>" <- <sent>:<start>-<end> "<antecedent>"
//   <sent>:<start>-<end> "<anaphor>" NULL
//   <sent>:<start>-<end> "<anaphor>" PLEONASTIC
std::string RenderPairs(const std::vector<ResolutionRecord> &records,
                        const Document &doc);

// Token stream, one sentence per line, with "[=antecedent]" after resolved
// anaphors, "[?]" after unresolved ones and "[pleo]" after pleonastic "it".
std::string RenderAnnotated(const std::vector<ResolutionRecord> &records,
                            const Document &doc);

// Detokenized text with every resolved anaphor replaced by its antecedent.
// A possessive pronoun replaced by a full noun phrase gets "'s".
std::string RenderSubstituted(const std::vector<ResolutionRecord> &records,
                              const Document &doc);

// Candidate table for one record, for --diagnostics.
std::string RenderDiagnostics(const ResolutionRecord &record,
                              const Document &doc);

// Surface text of a mention span, punctuation dropped.
std::string MentionText(const Document &doc, const Mention &m);

}  // namespace rap

#endif  // RAP_RESOLVER_H_

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

#ifndef RAP_MENTIONS_H_
#define RAP_MENTIONS_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rap/features.h"
#include "rap/lexicon.h"
#include "rap/pronouns.h"
#include "rap/tree.h"

namespace rap {

// A noun phrase annotated for agreement, grammatical role and the local
// salience factors. Possessive pronouns are preterminals rather than NPs;
// they are mentions too, anchored at the PRP$ node.
struct Mention {
  NodeId node = -1;
  int sentence = 0;
  Span span;
  AgreementFeatures agreement;
  RoleSet roles;
  SalienceFactorSet factors;
  bool pronoun = false;
  // Reflexive or reciprocal; such mentions never serve as antecedents.
  bool lexical_anaphor = false;
  // Expletive "there" or pleonastic "it"; never an antecedent.
  bool non_referential = false;
};

struct AnaphorKind {
  PronounType type = PronounType::kPersonal;
  // Present iff type is kPersonal.
  std::optional<Case> pronoun_case;

  bool is_lexical() const { return type != PronounType::kPersonal; }
};

struct Anaphor {
  Mention mention;
  AnaphorKind kind;
  bool pleonastic = false;
  // Lowercase surface form ("her", "each other").
  std::string form;
};

struct ExtractOptions {
  // Consult the gendered common-noun lists (woman, boy, ...).
  bool gendered_nouns = false;
};

// One mention per NP node and per possessive pronoun, in document order
// (pre-order over node ids).
std::vector<Mention> ExtractNounPhrases(const Document &doc,
                                        const Lexicons &lex,
                                        const ExtractOptions &opts = {});

// Third-person pronouns, third-person reflexives and reciprocals in
// document order, with the pleonastic flag set on non-referential "it".
std::vector<Anaphor> ExtractAnaphors(const Document &doc, const Lexicons &lex,
                                     const ExtractOptions &opts = {});

// Number of an NP: verb agreement when the NP is the agent of a VP, then
// coordination with "and", then the head tag.
Number ComputeNumber(const Document &doc, NodeId np);

// Third by default; first/second when the NP is, or is a plural NP
// containing, a first/second person nominative or accusative pronoun.
Person ComputePerson(const Document &doc, NodeId np);

std::pair<Gender, Animacy> ComputeGenderAnimacy(const Document &doc,
                                                NodeId np,
                                                const Lexicons &lex,
                                                const ExtractOptions &opts = {});

AgreementFeatures ComputeAgreement(const Document &doc, NodeId np,
                                   const Lexicons &lex,
                                   const ExtractOptions &opts = {});

RoleSet GrammaticalRoles(const Document &doc, NodeId np);

// Head of an NP: rightmost child with a nominal tag (NN, NNS, NNP, NNPS,
// PRP), else the rightmost leaf.
NodeId HeadLeaf(const Document &doc, NodeId np);

// The pronoun leaf an NP reduces to, e.g. (NP (PRP her)); nullopt for
// anything else. A pronoun preterminal returns itself.
std::optional<NodeId> PronounLeaf(const Document &doc, NodeId np);

}  // namespace rap

#endif  // RAP_MENTIONS_H_

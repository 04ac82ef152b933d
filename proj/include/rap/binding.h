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

// Intrasentential constraints on coreference: the domain predicates, the
// agreement check, the syntactic filter for pronouns and the binding
// conditions for reflexives and reciprocals.
//
// Syntactic filter. A pronoun P is not coreferential with a noun phrase N
// when (first match reported):
//   SF-1  their agreement features clash;
//   SF-2  P is in the argument domain of N;
//   SF-3  P is in the adjunct domain of N;
//   SF-4  P is an argument of a head H, N is not a pronoun and N is
//         contained in H;
//   SF-5  P is in the NP domain of N;
//   SF-6  P is the determiner of a noun Q and N is contained in Q.
//
// Binding. N is a possible antecedent of a lexical anaphor A when (first
// match reported):
//   AB-1  A is in the argument domain of N and N fills a higher slot;
//   AB-2  A is in the adjunct domain of N;
//   AB-3  A is in the NP domain of N;
//   AB-4  N is a verb argument and some NP Q without a noun determiner in
//         N's argument or adjunct domain takes A as argument, directly or
//         through a PP adjunct;
//   AB-5  A is the determiner of a noun Q, and Q is in the argument domain
//         of N with N in a higher slot, or Q is in N's adjunct domain.

#ifndef RAP_BINDING_H_
#define RAP_BINDING_H_

#include <string>

#include "rap/features.h"
#include "rap/mentions.h"
#include "rap/tree.h"

namespace rap {

struct FilterVerdict {
  bool admissible = true;
  // "SF-2", "AB-4", "MORPH", "UNBOUND" (no binding rule admits a lexical
  // anaphor), or empty when no rule decided the pair.
  std::string rule;

  bool operator==(const FilterVerdict &) const = default;
};

// One is a child of the VP chain the other is the subject of, or both are
// conjuncts of one coordination that is a sibling of a VP. Symmetric.
bool InArgumentDomain(const Document &doc, NodeId p, NodeId n);

// p is the object of a PP attached to a VP chain, and n is an argument of
// that chain or a sibling of its top.
bool InAdjunctDomain(const Document &doc, NodeId p, NodeId n);

// p is the object of a PP whose nearest preceding NP sibling (or owning NP)
// has n as its possessive determiner.
bool InNpDomain(const Document &doc, NodeId p, NodeId n);

// Transitive closure of ImmediateContainers. q may be an NP or any VP on a
// chain. Always false across sentences and for p == q.
bool ContainedIn(const Document &doc, NodeId p, NodeId q);

// Compatible unless some feature has two known, different values.
bool MorphologicallyCompatible(const AgreementFeatures &a,
                               const AgreementFeatures &b);

// Same-sentence filter for third-person pronouns.
FilterVerdict SyntacticFilter(const Document &doc, const Anaphor &p,
                              const Mention &n);

// Same-sentence binding conditions for reflexives and reciprocals. The
// caller has already checked agreement.
FilterVerdict AnaphorBinding(const Document &doc, const Anaphor &a,
                             const Mention &n);

}  // namespace rap

#endif  // RAP_BINDING_H_

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

#ifndef RAP_PLEONASTIC_H_
#define RAP_PLEONASTIC_H_

#include "rap/lexicon.h"
#include "rap/tree.h"

namespace rap {

// Which surface pattern made an "it" pleonastic.
enum class PleonasticPattern {
  kNone = 0,
  kModalThat,        // it is Modaladj that S
  kModalTo,          // it is Modaladj (for NP) to VP
  kCognitiveThat,    // it is Cogv-ed that S
  kSeemClause,       // it seems/appears/means/follows (that) S
  kMakeFindModalTo,  // NP makes/finds it Modaladj (for NP) to VP
  kTimeTo,           // it is time to VP
  kThanksToThat,     // it is thanks to NP that S
};

// Matches the sentence around an "it" leaf against the pleonastic patterns.
// Copula groups may carry negation ("is not", "isn't"), modals ("may be",
// "would be", "could be") and adverbs, and the auxiliary may precede "it"
// ("wouldn't it be useful to ...").
PleonasticPattern MatchPleonastic(const Document &doc, NodeId it_leaf,
                                  const Lexicons &lex);

// True iff it_leaf is the pronoun "it" and some pattern matches.
bool DetectPleonastic(const Document &doc, NodeId it_leaf,
                      const Lexicons &lex);

}  // namespace rap

#endif  // RAP_PLEONASTIC_H_

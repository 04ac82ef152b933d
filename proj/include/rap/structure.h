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

// Head-argument and head-adjunct relations recovered from plain
// constituency structure. Parser output carries no grammatical functions, so
// heads are approximated by VP chains:
//
//  * A VP chain is a maximal run of VPs where each inner VP is a child of
//    the one above, e.g. (VP (MD 'll) (VP (VB work) ...)). A subjectless S
//    between two VPs, as in (VP wanted (S (VP to (VP see ...)))), continues
//    the chain: the controlled clause shares the matrix subject.
//  * The topmost VP of a chain stands for the head.
//  * An NP is an argument of a chain when it is the chain's subject (the
//    chain is its following sibling) or a child of one of its VPs.
//  * An NP is an adjunct argument of a chain when it is the object of a PP
//    attached to one of its VPs.
//
// Conjuncts of a coordinated NP take the position of the whole coordination.

#ifndef RAP_STRUCTURE_H_
#define RAP_STRUCTURE_H_

#include <optional>
#include <vector>

#include "rap/tree.h"

namespace rap {

// NP constituents and pronoun preterminals (PRP, PRP$).
bool IsNominal(const Document &doc, NodeId id);

// An NP with a CC or CONJP child.
bool IsCoordination(const Document &doc, NodeId id);

// Climbs from a conjunct to the outermost coordination containing it.
NodeId ArgumentPosition(const Document &doc, NodeId np);

// The top VP of the chain vp belongs to.
NodeId VpChainTop(const Document &doc, NodeId vp);

// True if vp is on the chain whose top is `top`.
bool OnVpChain(const Document &doc, NodeId vp, NodeId top);

// Chain top of the VP np is the subject of, if any.
std::optional<NodeId> SubjectHead(const Document &doc, NodeId np);

// Chain top of the VP np is a child of, if any.
std::optional<NodeId> ObjectHead(const Document &doc, NodeId np);

// SubjectHead, else ObjectHead.
std::optional<NodeId> ArgumentHead(const Document &doc, NodeId np);

// Chain top of the VP whose PP np is the object of, if any.
std::optional<NodeId> AdjunctHead(const Document &doc, NodeId np);

// Possessive determiner of NP q: a PRP$ child, a child NP ending in POS, or
// a child NP directly followed by a POS sibling.
std::optional<NodeId> Determiner(const Document &doc, NodeId q);

// Determiner of q or, when q's first child is an NP, of that NP. This is
// the "noun determiner" of nested noun phrases like ((Bill 's portrait) of
// himself).
std::optional<NodeId> NounDeterminer(const Document &doc, NodeId q);

// The NP whose determiner p is, if any.
std::optional<NodeId> DeterminedNoun(const Document &doc, NodeId p);

// Phrases that immediately contain `phrase`. For nominals: the argument
// head, the adjunct head, an enclosing NP it is not the possessor of, and
// for a PP object the NPs that are the PP's siblings or its parent. For a
// VP chain top: the nearest NP or VP chain above it. Containment is
// upward-directed, so the relation is acyclic.
std::vector<NodeId> ImmediateContainers(const Document &doc, NodeId phrase);

// Slot rank used by "higher argument slot": 0 for a subject, 1 + index for
// the n-th NP child of a VP. Nullopt outside argument positions.
std::optional<int> ArgumentSlot(const Document &doc, NodeId np);

}  // namespace rap

#endif  // RAP_STRUCTURE_H_

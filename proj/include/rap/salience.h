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

#ifndef RAP_SALIENCE_H_
#define RAP_SALIENCE_H_

#include <filesystem>
#include <vector>

#include "rap/features.h"
#include "rap/mentions.h"

namespace rap {

// Initial factor weights.
struct SalienceWeights {
  int sentence_recency = 100;
  int subject = 80;
  int existential = 70;
  int accusative = 50;
  int indirect_object = 40;
  int head_noun = 80;
  int non_adverbial = 50;

  int Of(Factor f) const;
  bool operator==(const SalienceWeights &) const = default;
};

// Reads overrides from a JSON object keyed by factor name
// ("sentence_recency", "subject", ...). Unlisted factors keep their
// defaults; unknown keys throw std::runtime_error.
SalienceWeights LoadWeights(const std::filesystem::path &path);

// Weight of a factor set seen from a mention in anaphor_sentence. With
// d = anaphor_sentence - anchor, sentence recency contributes only at d = 0
// and every stored factor contributes weight >> d (floor halving per
// sentence). Requires d >= 0.
int WeightOf(const SalienceFactorSet &f, int anaphor_sentence,
             const SalienceWeights &w = {});

// Mentions in one anaphoric chain with the union of their factors, anchored
// at the latest member's sentence.
struct EquivalenceClass {
  int id = -1;
  std::vector<Mention> members;
  SalienceFactorSet factors;
};

// Appends new_member, unions its factors into the class and moves the
// anchor to its sentence. An empty class takes the member's factors.
EquivalenceClass MergeChain(EquivalenceClass cls, const Mention &new_member);

}  // namespace rap

#endif  // RAP_SALIENCE_H_

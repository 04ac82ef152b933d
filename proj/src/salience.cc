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

#include "rap/salience.h"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace rap {

std::string_view Name(Number v) {
  switch (v) {
    case Number::kSingular: return "singular";
    case Number::kPlural: return "plural";
    case Number::kUnknown: return "unknown";
  }
  return "?";
}

std::string_view Name(Person v) {
  switch (v) {
    case Person::kFirst: return "first";
    case Person::kSecond: return "second";
    case Person::kThird: return "third";
  }
  return "?";
}

std::string_view Name(Gender v) {
  switch (v) {
    case Gender::kMasculine: return "masculine";
    case Gender::kFeminine: return "feminine";
    case Gender::kUnknown: return "unknown";
  }
  return "?";
}

std::string_view Name(Animacy v) {
  switch (v) {
    case Animacy::kAnimate: return "animate";
    case Animacy::kInanimate: return "inanimate";
    case Animacy::kUnknown: return "unknown";
  }
  return "?";
}

std::string_view Name(Factor f) {
  switch (f) {
    case Factor::kSubject: return "subject";
    case Factor::kExistential: return "existential";
    case Factor::kAccusative: return "accusative";
    case Factor::kIndirectObject: return "indirect_object";
    case Factor::kHeadNoun: return "head_noun";
    case Factor::kNonAdverbial: return "non_adverbial";
  }
  return "?";
}

int SalienceWeights::Of(Factor f) const {
  switch (f) {
    case Factor::kSubject: return subject;
    case Factor::kExistential: return existential;
    case Factor::kAccusative: return accusative;
    case Factor::kIndirectObject: return indirect_object;
    case Factor::kHeadNoun: return head_noun;
    case Factor::kNonAdverbial: return non_adverbial;
  }
  return 0;
}

SalienceWeights LoadWeights(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open weights " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception &e) {
    throw std::runtime_error("bad weights file " + path.string() + ": " +
                             e.what());
  }
  if (!j.is_object()) {
    throw std::runtime_error("weights file must hold a JSON object");
  }
  SalienceWeights w;
  for (const auto &[key, value] : j.items()) {
    int *slot = nullptr;
    if (key == "sentence_recency") slot = &w.sentence_recency;
    else if (key == "subject") slot = &w.subject;
    else if (key == "existential") slot = &w.existential;
    else if (key == "accusative") slot = &w.accusative;
    else if (key == "indirect_object") slot = &w.indirect_object;
    else if (key == "head_noun") slot = &w.head_noun;
    else if (key == "non_adverbial") slot = &w.non_adverbial;
    if (!slot || !value.is_number_integer()) {
      throw std::runtime_error("bad weight entry '" + key + "'");
    }
    *slot = value.get<int>();
  }
  return w;
}

int WeightOf(const SalienceFactorSet &f, int anaphor_sentence,
             const SalienceWeights &w) {
  const int d = anaphor_sentence - f.anchor_sentence;
  assert(d >= 0);
  int total = d == 0 ? w.sentence_recency : 0;
  for (int i = 0; i < kNumFactors; ++i) {
    Factor factor = static_cast<Factor>(i);
    if (!f.factors.Has(factor)) continue;
    // Past 30 halvings every int weight is 0.
    total += d >= 31 ? 0 : (w.Of(factor) >> d);
  }
  return total;
}

EquivalenceClass MergeChain(EquivalenceClass cls, const Mention &new_member) {
  if (cls.members.empty()) {
    cls.factors = new_member.factors;
  } else {
    cls.factors.factors = cls.factors.factors.Union(new_member.factors.factors);
    cls.factors.anchor_sentence =
        std::max(cls.factors.anchor_sentence, new_member.sentence);
  }
  cls.members.push_back(new_member);
  std::stable_sort(cls.members.begin(), cls.members.end(),
                   [](const Mention &a, const Mention &b) {
                     if (a.sentence != b.sentence) return a.sentence < b.sentence;
                     return a.span.first < b.span.first;
                   });
  return cls;
}

}  // namespace rap

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

#ifndef RAP_PRONOUNS_H_
#define RAP_PRONOUNS_H_

#include <optional>
#include <string_view>

#include "rap/features.h"

namespace rap {

enum class PronounType {
  kPersonal,    // he, them, its, ...
  kReflexive,   // himself, myself, ...
  kReciprocal,  // each other, one another
};

enum class Case { kNominative, kAccusative, kPossessive };

struct PronounInfo {
  PronounType type;
  AgreementFeatures agreement;
  // Case fixed by the form itself; nullopt for forms whose case depends on
  // position (it, her).
  std::optional<Case> fixed_case;
};

// Looks up a lowercase single-token pronoun. Reciprocals are multi-token
// and handled by IsReciprocal.
std::optional<PronounInfo> LookupPronoun(std::string_view lower);

// True for "each other" / "one another" (lowercase, single-space joined).
bool IsReciprocal(std::string_view lower);

// Features shared by both reciprocal forms.
AgreementFeatures ReciprocalAgreement();

// True if the pronoun is resolvable: third person, or a reciprocal.
bool IsResolvable(const PronounInfo &info);

}  // namespace rap

#endif  // RAP_PRONOUNS_H_

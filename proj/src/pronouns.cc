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

#include "rap/pronouns.h"

#include <array>

namespace rap {

namespace {

constexpr auto S = Number::kSingular;
constexpr auto P = Number::kPlural;
constexpr auto NU = Number::kUnknown;
constexpr auto M = Gender::kMasculine;
constexpr auto F = Gender::kFeminine;
constexpr auto GU = Gender::kUnknown;
constexpr auto A = Animacy::kAnimate;
constexpr auto I = Animacy::kInanimate;
constexpr auto AU = Animacy::kUnknown;

struct Entry {
  std::string_view form;
  PronounType type;
  Number number;
  Person person;
  Gender gender;
  Animacy animacy;
  std::optional<Case> fixed_case;
};

constexpr auto kNom = Case::kNominative;
constexpr auto kAcc = Case::kAccusative;
constexpr auto kPos = Case::kPossessive;
constexpr auto kPers = PronounType::kPersonal;
constexpr auto kRefl = PronounType::kReflexive;
constexpr auto k1 = Person::kFirst;
constexpr auto k2 = Person::kSecond;
constexpr auto k3 = Person::kThird;

// "it" is animacy-inanimate with unknown gender; "they" forms carry no
// gender or animacy.
const std::array kPronouns = {
    Entry{"he", kPers, S, k3, M, A, kNom},
    Entry{"him", kPers, S, k3, M, A, kAcc},
    Entry{"his", kPers, S, k3, M, A, kPos},
    Entry{"she", kPers, S, k3, F, A, kNom},
    Entry{"her", kPers, S, k3, F, A, std::nullopt},
    Entry{"hers", kPers, S, k3, F, A, kPos},
    Entry{"it", kPers, S, k3, GU, I, std::nullopt},
    Entry{"its", kPers, S, k3, GU, I, kPos},
    Entry{"they", kPers, P, k3, GU, AU, kNom},
    Entry{"them", kPers, P, k3, GU, AU, kAcc},
    Entry{"their", kPers, P, k3, GU, AU, kPos},
    Entry{"theirs", kPers, P, k3, GU, AU, kPos},
    Entry{"himself", kRefl, S, k3, M, A, std::nullopt},
    Entry{"herself", kRefl, S, k3, F, A, std::nullopt},
    Entry{"itself", kRefl, S, k3, GU, I, std::nullopt},
    Entry{"themselves", kRefl, P, k3, GU, AU, std::nullopt},
    Entry{"i", kPers, S, k1, GU, A, kNom},
    Entry{"me", kPers, S, k1, GU, A, kAcc},
    Entry{"my", kPers, S, k1, GU, A, kPos},
    Entry{"mine", kPers, S, k1, GU, A, kPos},
    Entry{"we", kPers, P, k1, GU, A, kNom},
    Entry{"us", kPers, P, k1, GU, A, kAcc},
    Entry{"our", kPers, P, k1, GU, A, kPos},
    Entry{"ours", kPers, P, k1, GU, A, kPos},
    Entry{"you", kPers, NU, k2, GU, A, std::nullopt},
    Entry{"your", kPers, NU, k2, GU, A, kPos},
    Entry{"yours", kPers, NU, k2, GU, A, kPos},
    Entry{"myself", kRefl, S, k1, GU, A, std::nullopt},
    Entry{"ourselves", kRefl, P, k1, GU, A, std::nullopt},
    Entry{"yourself", kRefl, S, k2, GU, A, std::nullopt},
    Entry{"yourselves", kRefl, P, k2, GU, A, std::nullopt},
};

}  // namespace

std::optional<PronounInfo> LookupPronoun(std::string_view lower) {
  for (const Entry &e : kPronouns) {
    if (e.form == lower) {
      return PronounInfo{e.type, {e.number, e.person, e.gender, e.animacy},
                         e.fixed_case};
    }
  }
  return std::nullopt;
}

bool IsReciprocal(std::string_view lower) {
  return lower == "each other" || lower == "one another";
}

AgreementFeatures ReciprocalAgreement() {
  return {Number::kPlural, Person::kThird, Gender::kUnknown, Animacy::kUnknown};
}

bool IsResolvable(const PronounInfo &info) {
  return info.type == PronounType::kReciprocal ||
         info.agreement.person == Person::kThird;
}

}  // namespace rap

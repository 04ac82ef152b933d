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

// Value types shared by mention extraction, the filters and salience.

#ifndef RAP_FEATURES_H_
#define RAP_FEATURES_H_

#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace rap {

enum class Number { kSingular, kPlural, kUnknown };
enum class Person { kFirst, kSecond, kThird };
enum class Gender { kMasculine, kFeminine, kUnknown };
enum class Animacy { kAnimate, kInanimate, kUnknown };

struct AgreementFeatures {
  Number number = Number::kUnknown;
  Person person = Person::kThird;
  Gender gender = Gender::kUnknown;
  Animacy animacy = Animacy::kUnknown;

  bool operator==(const AgreementFeatures &) const = default;
};

std::string_view Name(Number v);
std::string_view Name(Person v);
std::string_view Name(Gender v);
std::string_view Name(Animacy v);

// The six structural salience factors. Sentence recency is positional and
// never stored. Grammatical roles map one-to-one onto these factors, so the
// same enum serves as the role type.
enum class Factor : uint8_t {
  kSubject = 0,
  kExistential,
  kAccusative,
  kIndirectObject,
  kHeadNoun,
  kNonAdverbial,
};
inline constexpr int kNumFactors = 6;

using Role = Factor;

std::string_view Name(Factor f);

// A small bit set of factors.
class FactorBits {
 public:
  constexpr FactorBits() = default;
  constexpr FactorBits(std::initializer_list<Factor> factors) {
    for (Factor f : factors) Add(f);
  }

  constexpr void Add(Factor f) { bits_ |= Bit(f); }
  constexpr bool Has(Factor f) const { return bits_ & Bit(f); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr uint8_t bits() const { return bits_; }
  constexpr bool IsSupersetOf(FactorBits other) const {
    return (bits_ & other.bits_) == other.bits_;
  }
  constexpr FactorBits Union(FactorBits other) const {
    FactorBits r;
    r.bits_ = bits_ | other.bits_;
    return r;
  }
  constexpr bool operator==(const FactorBits &) const = default;

 private:
  static constexpr uint8_t Bit(Factor f) {
    return static_cast<uint8_t>(1u << static_cast<int>(f));
  }
  uint8_t bits_ = 0;
};

using RoleSet = FactorBits;

// Active structural factors plus the sentence the degradation distance is
// measured from.
struct SalienceFactorSet {
  FactorBits factors;
  int anchor_sentence = 0;

  bool operator==(const SalienceFactorSet &) const = default;
};

}  // namespace rap

#endif  // RAP_FEATURES_H_

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

#include "rap/pleonastic.h"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

namespace rap {

namespace {

template <size_t N>
bool OneOf(std::string_view w, const std::array<std::string_view, N> &set) {
  return std::find(set.begin(), set.end(), w) != set.end();
}

constexpr std::array<std::string_view, 9> kBe = {
    "is", "was", "'s", "be", "been", "being", "are", "were", "am"};
constexpr std::array<std::string_view, 13> kModal = {
    "may", "might", "would", "could", "should", "will", "can",
    "must", "shall", "'ll", "'d", "wo", "ca"};
constexpr std::array<std::string_view, 4> kHave = {"has", "have", "had", "'ve"};
constexpr std::array<std::string_view, 3> kDo = {"does", "did", "do"};
constexpr std::array<std::string_view, 12> kSeem = {
    "seems", "seemed", "seem", "appears", "appeared", "appear",
    "means", "meant",  "mean", "follows", "followed", "follow"};
constexpr std::array<std::string_view, 8> kMakeFind = {
    "make", "makes", "made", "making", "find", "finds", "found", "finding"};

struct Irregular {
  std::string_view base;
  std::string_view participle;
};
constexpr std::array<Irregular, 8> kIrregular = {{
    {"think", "thought"},
    {"know", "known"},
    {"understand", "understood"},
    {"feel", "felt"},
    {"hold", "held"},
    {"say", "said"},
    {"see", "seen"},
    {"foresee", "foreseen"},
}};

// Lowercase tokens and tags of one sentence.
struct Clause {
  std::vector<std::string> words;
  std::vector<std::string_view> tags;

  size_t size() const { return words.size(); }
  std::string_view word(size_t i) const {
    return i < words.size() ? std::string_view(words[i]) : std::string_view();
  }
  bool IsAdverb(size_t i) const {
    return i < tags.size() &&
           (tags[i] == "RB" || tags[i] == "RBR" || tags[i] == "RBS");
  }
  bool IsBe(size_t i) const {
    return i < size() && OneOf(word(i), kBe) && tags[i] != "POS";
  }
  bool IsAux(size_t i) const {
    std::string_view w = word(i);
    return OneOf(w, kModal) || OneOf(w, kHave) || OneOf(w, kDo) ||
           w == "not" || w == "n't";
  }
};

bool IsParticipleOf(std::string_view word, std::string_view base) {
  for (const Irregular &ir : kIrregular) {
    if (ir.base == base) return word == ir.participle;
  }
  std::string b(base);
  if (word == b + "ed") return true;
  return !b.empty() && b.back() == 'e' && word == b + "d";
}

bool IsCognitiveParticiple(std::string_view word, const Lexicons &lex) {
  return std::any_of(
      lex.cognitive_verbs.begin(), lex.cognitive_verbs.end(),
      [&](const std::string &base) { return IsParticipleOf(word, base); });
}

// "for NP to": a "to" within a few tokens after "for".
bool ForNpTo(const Clause &c, size_t i) {
  if (c.word(i) != "for") return false;
  for (size_t j = i + 1; j < c.size() && j <= i + 6; ++j) {
    if (c.word(j) == "to") return true;
    if (c.word(j) == "that" || IsPunctuationTag(c.tags[j])) return false;
  }
  return false;
}

bool ToVp(const Clause &c, size_t i) {
  return c.word(i) == "to" || ForNpTo(c, i);
}

// The verb at leaf heads a clausal complement: "that", or an S/SBAR sibling
// with an overt subject.
bool TakesClause(const Document &doc, NodeId verb, const Clause &c,
                 size_t verb_index) {
  if (c.word(verb_index + 1) == "that") return true;
  // "it seems to me that ..."
  if (c.word(verb_index + 1) == "to" && c.word(verb_index + 3) == "that") {
    return true;
  }
  auto vp = doc.parent(verb);
  if (!vp) return false;
  const auto &kids = doc.node(*vp).children;
  auto it = std::find(kids.begin(), kids.end(), verb);
  for (++it; it != kids.end(); ++it) {
    if (doc.HasLabel(*it, "SBAR")) return true;
    if (doc.HasLabel(*it, "S")) {
      for (NodeId g : doc.node(*it).children) {
        if (doc.HasLabel(g, "NP")) return true;
      }
    }
  }
  return false;
}

}  // namespace

PleonasticPattern MatchPleonastic(const Document &doc, NodeId it_leaf,
                                  const Lexicons &lex) {
  const TreeNode &it = doc.node(it_leaf);
  if (!it.is_leaf() || ToLower(*it.token) != "it") {
    return PleonasticPattern::kNone;
  }
  Clause c;
  for (NodeId leaf : doc.leaves(it.sentence)) {
    c.words.push_back(ToLower(*doc.node(leaf).token));
    c.tags.push_back(doc.label(leaf));
  }
  const size_t k = static_cast<size_t>(it.span.first);
  auto leaves = doc.leaves(it.sentence);

  // NP makes/finds it Modaladj (for NP) to VP
  if (k > 0 && OneOf(c.word(k - 1), kMakeFind)) {
    size_t j = k + 1;
    while (c.IsAdverb(j)) ++j;
    if (lex.modal_adjectives.contains(c.word(j)) && ToVp(c, j + 1)) {
      return PleonasticPattern::kMakeFindModalTo;
    }
  }

  // Copula group after "it", or an inverted auxiliary before it.
  size_t j = k + 1;
  bool has_be = false;
  while (j < c.size()) {
    if (c.IsBe(j)) {
      has_be = true;
    } else if (!c.IsAux(j) && !c.IsAdverb(j)) {
      break;
    }
    ++j;
  }
  bool inverted = k > 0 && (c.IsBe(k - 1) || c.IsAux(k - 1));
  if (has_be || (inverted && j == k + 1)) {
    std::string_view w = c.word(j);
    if (lex.modal_adjectives.contains(w)) {
      if (c.word(j + 1) == "that") return PleonasticPattern::kModalThat;
      if (ToVp(c, j + 1)) return PleonasticPattern::kModalTo;
    }
    if (IsCognitiveParticiple(w, lex) && c.word(j + 1) == "that") {
      return PleonasticPattern::kCognitiveThat;
    }
    if (w == "time" && c.word(j + 1) == "to") return PleonasticPattern::kTimeTo;
    if (w == "thanks" && c.word(j + 1) == "to") {
      for (size_t t = j + 2; t < c.size(); ++t) {
        if (c.word(t) == "that") return PleonasticPattern::kThanksToThat;
      }
    }
  }

  // it seems / appears / means / follows (that) S
  if (!has_be && j < c.size() && OneOf(c.word(j), kSeem) &&
      TakesClause(doc, leaves[j], c, j)) {
    return PleonasticPattern::kSeemClause;
  }
  return PleonasticPattern::kNone;
}

bool DetectPleonastic(const Document &doc, NodeId it_leaf,
                      const Lexicons &lex) {
  return MatchPleonastic(doc, it_leaf, lex) != PleonasticPattern::kNone;
}

}  // namespace rap

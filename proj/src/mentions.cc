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

#include "rap/mentions.h"

#include <algorithm>

#include "rap/pleonastic.h"
#include "rap/structure.h"

namespace rap {

namespace {

bool IsNominalTag(std::string_view tag) {
  return tag == "NN" || tag == "NNS" || tag == "NNP" || tag == "NNPS" ||
         tag == "PRP";
}

std::string LowerToken(const Document &doc, NodeId leaf) {
  return ToLower(*doc.node(leaf).token);
}

// Lowercase tokens of an NP, possessive markers dropped.
std::vector<NodeId> ContentLeaves(const Document &doc, NodeId np) {
  std::vector<NodeId> out;
  for (NodeId leaf : doc.LeavesUnder(np)) {
    if (doc.HasLabel(leaf, "POS") || IsPunctuationTag(doc.label(leaf))) {
      continue;
    }
    out.push_back(leaf);
  }
  return out;
}

std::string JoinLower(const Document &doc, const std::vector<NodeId> &leaves) {
  std::string s;
  for (NodeId l : leaves) {
    if (!s.empty()) s.push_back(' ');
    s += LowerToken(doc, l);
  }
  return s;
}

// An NP reading "each other" or "one another", possibly with 's.
bool IsReciprocalNp(const Document &doc, NodeId np) {
  if (!doc.HasLabel(np, "NP")) return false;
  return IsReciprocal(JoinLower(doc, ContentLeaves(doc, np)));
}

std::optional<PronounInfo> PronounOf(const Document &doc, NodeId np) {
  if (auto leaf = PronounLeaf(doc, np)) {
    return LookupPronoun(LowerToken(doc, *leaf));
  }
  return std::nullopt;
}

// Gender of a lexicon hit; names on both lists give unknown gender.
std::optional<Gender> LookupGender(
    std::string_view key, const std::set<std::string, std::less<>> &male,
    const std::set<std::string, std::less<>> &female) {
  bool m = male.contains(key);
  bool f = female.contains(key);
  if (m && f) return Gender::kUnknown;
  if (m) return Gender::kMasculine;
  if (f) return Gender::kFeminine;
  return std::nullopt;
}

// Whether a pronoun leaf stands for a mention on its own (PRP$ inside a
// larger NP) rather than through a wrapping (NP (PRP ...)).
bool IsBarePronounMention(const Document &doc, NodeId id) {
  std::string_view l = doc.label(id);
  if ((l != "PRP" && l != "PRP$") || !doc.node(id).is_leaf()) return false;
  auto p = doc.parent(id);
  if (p && doc.HasLabel(*p, "NP") && doc.node(*p).children.size() == 1) {
    return false;
  }
  return true;
}

Mention MakeMention(const Document &doc, NodeId id, const Lexicons &lex,
                    const ExtractOptions &opts) {
  Mention m;
  m.node = id;
  m.sentence = doc.node(id).sentence;
  m.span = doc.node(id).span;
  m.agreement = ComputeAgreement(doc, id, lex, opts);
  m.roles = GrammaticalRoles(doc, id);
  m.factors = {m.roles, m.sentence};
  if (auto info = PronounOf(doc, id)) {
    m.pronoun = true;
    m.lexical_anaphor = info->type == PronounType::kReflexive;
  } else if (IsReciprocalNp(doc, id)) {
    m.pronoun = true;
    m.lexical_anaphor = true;
    auto leaves = ContentLeaves(doc, id);
    m.span = {doc.node(leaves.front()).span.first,
              doc.node(leaves.back()).span.last};
  }
  const auto &kids = doc.node(id).children;
  if (kids.size() == 1 && doc.HasLabel(kids[0], "EX")) {
    m.non_referential = true;
  } else if (auto leaf = PronounLeaf(doc, id);
             leaf && LowerToken(doc, *leaf) == "it") {
    m.non_referential = DetectPleonastic(doc, *leaf, lex);
  }
  return m;
}

}  // namespace

std::optional<NodeId> PronounLeaf(const Document &doc, NodeId np) {
  std::string_view l = doc.label(np);
  if ((l == "PRP" || l == "PRP$") && doc.node(np).is_leaf()) return np;
  if (l != "NP") return std::nullopt;
  const auto &kids = doc.node(np).children;
  if (kids.size() != 1) return std::nullopt;
  std::string_view kl = doc.label(kids[0]);
  if ((kl == "PRP" || kl == "PRP$") && doc.node(kids[0]).is_leaf()) {
    return kids[0];
  }
  return std::nullopt;
}

NodeId HeadLeaf(const Document &doc, NodeId np) {
  const TreeNode &n = doc.node(np);
  if (n.is_leaf()) return np;
  for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) {
    if (doc.node(*it).is_leaf() && IsNominalTag(doc.label(*it))) return *it;
  }
  for (NodeId c : n.children) {
    if (doc.HasLabel(c, "NP")) return HeadLeaf(doc, c);
  }
  return doc.LeavesUnder(np).back();
}

Number ComputeNumber(const Document &doc, NodeId np) {
  if (auto info = PronounOf(doc, np);
      info && info->agreement.number != Number::kUnknown) {
    return info->agreement.number;
  }
  auto content = ContentLeaves(doc, np);
  if (content.size() == 1) {
    std::string_view tag = doc.label(content[0]);
    if (tag == "NN" || tag == "NNP") return Number::kSingular;
    if (tag == "NNS" || tag == "NNPS") return Number::kPlural;
  }

  // Agent of a verb phrase: the verb's agreement tag decides.
  if (auto vp = doc.FollowingSibling(np, "VP")) {
    for (NodeId c : doc.node(*vp).children) {
      std::string_view tag = doc.label(c);
      if (!doc.node(c).is_leaf()) continue;
      if (tag == "VBZ") return Number::kSingular;
      if (tag == "VBP") return Number::kPlural;
      if (tag.starts_with("VB") || tag == "MD") break;
    }
  }

  if (doc.HasLabel(np, "NP")) {
    for (NodeId c : doc.node(np).children) {
      if (doc.node(c).is_leaf() && LowerToken(doc, c) == "and") {
        return Number::kPlural;
      }
    }
  }

  NodeId head = HeadLeaf(doc, np);
  std::string_view tag = doc.label(head);
  if (tag == "NN" || tag == "NNP") return Number::kSingular;
  if (tag == "NNS" || tag == "NNPS") return Number::kPlural;
  if (tag == "PRP") {
    if (auto info = LookupPronoun(LowerToken(doc, head))) {
      return info->agreement.number;
    }
  }
  return Number::kUnknown;
}

Person ComputePerson(const Document &doc, NodeId np) {
  if (auto info = PronounOf(doc, np)) return info->agreement.person;
  if (ComputeNumber(doc, np) != Number::kPlural) return Person::kThird;
  bool second = false;
  for (NodeId leaf : doc.LeavesUnder(np)) {
    if (!doc.HasLabel(leaf, "PRP")) continue;
    std::string w = LowerToken(doc, leaf);
    if (w == "i" || w == "me" || w == "we" || w == "us") return Person::kFirst;
    if (w == "you") second = true;
  }
  return second ? Person::kSecond : Person::kThird;
}

std::pair<Gender, Animacy> ComputeGenderAnimacy(const Document &doc,
                                                NodeId np,
                                                const Lexicons &lex,
                                                const ExtractOptions &opts) {
  if (auto info = PronounOf(doc, np)) {
    return {info->agreement.gender, info->agreement.animacy};
  }
  if (IsReciprocalNp(doc, np)) return {Gender::kUnknown, Animacy::kUnknown};
  if (IsCoordination(doc, np)) return {Gender::kUnknown, Animacy::kUnknown};

  NodeId head = HeadLeaf(doc, np);
  std::string head_word = LowerToken(doc, head);
  auto hit = LookupGender(head_word, lex.male_names, lex.female_names);
  if (!hit) {
    hit = LookupGender(JoinLower(doc, ContentLeaves(doc, np)), lex.male_names,
                       lex.female_names);
  }
  std::string_view head_tag = doc.label(head);
  if (!hit && (head_tag == "NNP" || head_tag == "NNPS") &&
      doc.HasLabel(np, "NP")) {
    // "Mr. John Smith": the first listed given name among the proper nouns.
    for (NodeId c : doc.node(np).children) {
      if (!doc.node(c).is_leaf() || !doc.HasLabel(c, "NNP")) continue;
      hit = LookupGender(LowerToken(doc, c), lex.male_names, lex.female_names);
      if (hit) break;
    }
  }
  if (!hit && opts.gendered_nouns) {
    hit = LookupGender(head_word, lex.male_nouns, lex.female_nouns);
  }
  if (hit) return {*hit, Animacy::kAnimate};
  return {Gender::kUnknown, Animacy::kUnknown};
}

AgreementFeatures ComputeAgreement(const Document &doc, NodeId np,
                                   const Lexicons &lex,
                                   const ExtractOptions &opts) {
  AgreementFeatures a;
  if (IsReciprocalNp(doc, np)) return ReciprocalAgreement();
  a.number = ComputeNumber(doc, np);
  a.person = ComputePerson(doc, np);
  std::tie(a.gender, a.animacy) = ComputeGenderAnimacy(doc, np, lex, opts);
  return a;
}

RoleSet GrammaticalRoles(const Document &doc, NodeId np) {
  RoleSet roles;
  auto parent = doc.parent(np);
  if (parent && doc.HasLabel(*parent, "S")) roles.Add(Role::kSubject);

  if (parent && doc.HasLabel(*parent, "VP")) {
    if (doc.ChildIndex(np) == 1) {
      auto before = doc.PrecedingSibling(*parent, "NP");
      if (before) {
        const auto &kids = doc.node(*before).children;
        if (!kids.empty() && doc.HasLabel(kids.front(), "EX")) {
          roles.Add(Role::kExistential);
        }
      }
    }
    std::vector<NodeId> objects;
    for (NodeId c : doc.node(*parent).children) {
      if (doc.HasLabel(c, "NP")) objects.push_back(c);
    }
    if (objects.size() == 1) {
      roles.Add(Role::kAccusative);
    } else if (objects.size() >= 2) {
      if (objects[0] == np) roles.Add(Role::kIndirectObject);
      if (objects[1] == np) roles.Add(Role::kAccusative);
    }
  }

  bool under_np = false;
  bool under_advp = false;
  for (NodeId a : doc.Ancestors(np)) {
    if (doc.HasLabel(a, "NP")) under_np = true;
    if (doc.HasLabel(a, "ADVP")) under_advp = true;
  }
  if (!under_np) roles.Add(Role::kHeadNoun);
  if (!under_advp) roles.Add(Role::kNonAdverbial);
  return roles;
}

std::vector<Mention> ExtractNounPhrases(const Document &doc,
                                        const Lexicons &lex,
                                        const ExtractOptions &opts) {
  std::vector<Mention> out;
  for (const TreeNode &n : doc.nodes()) {
    if (doc.HasLabel(n.id, "NP") || IsBarePronounMention(doc, n.id)) {
      out.push_back(MakeMention(doc, n.id, lex, opts));
    }
  }
  return out;
}

std::vector<Anaphor> ExtractAnaphors(const Document &doc, const Lexicons &lex,
                                     const ExtractOptions &opts) {
  std::vector<Anaphor> out;
  for (const TreeNode &n : doc.nodes()) {
    if (IsReciprocalNp(doc, n.id)) {
      Anaphor a;
      a.mention = MakeMention(doc, n.id, lex, opts);
      a.kind.type = PronounType::kReciprocal;
      a.form = JoinLower(doc, ContentLeaves(doc, n.id));
      out.push_back(std::move(a));
      continue;
    }
    if (!n.is_leaf()) continue;
    std::string_view tag = doc.label(n.id);
    if (tag != "PRP" && tag != "PRP$") continue;
    std::string form = LowerToken(doc, n.id);
    auto info = LookupPronoun(form);
    if (!info || !IsResolvable(*info)) continue;

    NodeId node = n.id;
    if (auto p = doc.parent(n.id); p && PronounLeaf(doc, *p) == n.id) {
      node = *p;
    }
    Anaphor a;
    a.mention = MakeMention(doc, node, lex, opts);
    a.kind.type = info->type;
    a.form = form;
    if (info->type == PronounType::kPersonal) {
      if (info->fixed_case) {
        a.kind.pronoun_case = info->fixed_case;
      } else if (tag == "PRP$") {
        a.kind.pronoun_case = Case::kPossessive;
      } else if (form == "it" && (a.mention.roles.Has(Role::kSubject) ||
                                  SubjectHead(doc, node))) {
        a.kind.pronoun_case = Case::kNominative;
      } else {
        a.kind.pronoun_case = Case::kAccusative;
      }
    }
    a.pleonastic = form == "it" && DetectPleonastic(doc, n.id, lex);
    out.push_back(std::move(a));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Anaphor &x, const Anaphor &y) {
                     if (x.mention.sentence != y.mention.sentence) {
                       return x.mention.sentence < y.mention.sentence;
                     }
                     return x.mention.span.first < y.mention.span.first;
                   });
  return out;
}

}  // namespace rap

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

#include "rap/binding.h"

#include <deque>
#include <set>

#include "rap/structure.h"

namespace rap {

namespace {

bool SameSentence(const Document &doc, NodeId a, NodeId b) {
  return doc.node(a).sentence == doc.node(b).sentence;
}

// x is an argument child of the chain y is the subject of.
bool ObjectOfSubjectsChain(const Document &doc, NodeId x, NodeId y) {
  auto top = SubjectHead(doc, y);
  if (!top) return false;
  NodeId ax = ArgumentPosition(doc, x);
  if (!doc.HasLabel(ax, "NP")) return false;
  auto par = doc.parent(ax);
  return par && OnVpChain(doc, *par, *top);
}

bool HasSiblingVp(const Document &doc, NodeId x) {
  auto p = doc.parent(x);
  if (!p) return false;
  for (NodeId c : doc.node(*p).children) {
    if (c != x && doc.HasLabel(c, "VP")) return true;
  }
  return false;
}

// n fills a higher argument slot than x.
bool HigherSlot(const Document &doc, NodeId n, NodeId x) {
  auto sn = ArgumentSlot(doc, n);
  auto sx = ArgumentSlot(doc, x);
  return sn && sx && *sn < *sx;
}

FilterVerdict Reject(const char *rule) { return {false, rule}; }
FilterVerdict Admit(const char *rule) { return {true, rule}; }

}  // namespace

bool InArgumentDomain(const Document &doc, NodeId p, NodeId n) {
  if (p == n || !SameSentence(doc, p, n)) return false;
  if (ObjectOfSubjectsChain(doc, p, n) || ObjectOfSubjectsChain(doc, n, p)) {
    return true;
  }
  NodeId ap = ArgumentPosition(doc, p);
  NodeId an = ArgumentPosition(doc, n);
  return ap == an && ap != p && ap != n && HasSiblingVp(doc, ap);
}

bool InAdjunctDomain(const Document &doc, NodeId p, NodeId n) {
  if (p == n || !SameSentence(doc, p, n)) return false;
  auto top = AdjunctHead(doc, p);
  if (!top) return false;
  NodeId an = ArgumentPosition(doc, n);
  if (!doc.HasLabel(an, "NP") || an == ArgumentPosition(doc, p)) return false;
  auto par = doc.parent(an);
  if (!par) return false;
  if (OnVpChain(doc, *par, *top)) return true;
  return par == doc.parent(*top);
}

bool InNpDomain(const Document &doc, NodeId p, NodeId n) {
  if (p == n || !SameSentence(doc, p, n)) return false;
  auto pp = doc.parent(ArgumentPosition(doc, p));
  if (!pp || !doc.HasLabel(*pp, "PP")) return false;
  if (auto x = doc.PrecedingSibling(*pp, "NP")) {
    const auto &kids = doc.node(*x).children;
    if (n == *x && !kids.empty() && doc.HasLabel(kids.back(), "POS")) {
      return true;
    }
    if (Determiner(doc, *x) == n) return true;
  }
  auto owner = doc.parent(*pp);
  return owner && doc.HasLabel(*owner, "NP") && Determiner(doc, *owner) == n;
}

bool ContainedIn(const Document &doc, NodeId p, NodeId q) {
  if (p == q || !SameSentence(doc, p, q)) return false;
  if (doc.HasLabel(q, "VP")) q = VpChainTop(doc, q);
  std::set<NodeId> seen;
  std::deque<NodeId> frontier = {p};
  while (!frontier.empty()) {
    NodeId x = frontier.front();
    frontier.pop_front();
    for (NodeId c : ImmediateContainers(doc, x)) {
      if (c == q) return true;
      if (seen.insert(c).second) frontier.push_back(c);
    }
  }
  return false;
}

bool MorphologicallyCompatible(const AgreementFeatures &a,
                               const AgreementFeatures &b) {
  auto clash = [](auto x, auto y, auto unknown) {
    return x != unknown && y != unknown && x != y;
  };
  if (clash(a.number, b.number, Number::kUnknown)) return false;
  if (a.person != b.person) return false;
  if (clash(a.gender, b.gender, Gender::kUnknown)) return false;
  if (clash(a.animacy, b.animacy, Animacy::kUnknown)) return false;
  return true;
}

FilterVerdict SyntacticFilter(const Document &doc, const Anaphor &p,
                              const Mention &n) {
  if (!MorphologicallyCompatible(p.mention.agreement, n.agreement)) {
    return Reject("SF-1");
  }
  NodeId pn = p.mention.node;
  NodeId nn = n.node;
  if (!SameSentence(doc, pn, nn)) return {};
  if (InArgumentDomain(doc, pn, nn)) return Reject("SF-2");
  if (InAdjunctDomain(doc, pn, nn)) return Reject("SF-3");
  if (auto head = ArgumentHead(doc, pn);
      head && !n.pronoun && ContainedIn(doc, nn, *head)) {
    return Reject("SF-4");
  }
  if (InNpDomain(doc, pn, nn)) return Reject("SF-5");
  if (auto q = DeterminedNoun(doc, pn); q && ContainedIn(doc, nn, *q)) {
    return Reject("SF-6");
  }
  return {};
}

FilterVerdict AnaphorBinding(const Document &doc, const Anaphor &a,
                             const Mention &n) {
  NodeId an = a.mention.node;
  NodeId nn = n.node;
  if (!SameSentence(doc, an, nn) || an == nn) return Reject("UNBOUND");

  if (InArgumentDomain(doc, an, nn) && HigherSlot(doc, nn, an)) {
    return Admit("AB-1");
  }
  if (InAdjunctDomain(doc, an, nn)) return Admit("AB-2");
  if (InNpDomain(doc, an, nn)) return Admit("AB-3");

  if (ArgumentHead(doc, nn)) {
    // Nouns that take the anaphor as argument: its parent NP, or the NP a
    // PP containing it attaches to.
    std::vector<NodeId> nouns;
    NodeId pos = ArgumentPosition(doc, an);
    if (auto par = doc.parent(pos)) {
      if (doc.HasLabel(*par, "NP") && Determiner(doc, *par) != pos) {
        nouns.push_back(*par);
      } else if (doc.HasLabel(*par, "PP")) {
        if (auto owner = doc.parent(*par);
            owner && doc.HasLabel(*owner, "NP")) {
          nouns.push_back(*owner);
        }
        if (auto before = doc.PrecedingSibling(*par, "NP")) {
          nouns.push_back(*before);
        }
      }
    }
    for (NodeId q : nouns) {
      if (q == nn || doc.Dominates(q, nn) || NounDeterminer(doc, q)) continue;
      if (InArgumentDomain(doc, q, nn) || InAdjunctDomain(doc, q, nn)) {
        return Admit("AB-4");
      }
    }
  }

  if (auto q = DeterminedNoun(doc, an)) {
    if ((InArgumentDomain(doc, *q, nn) && HigherSlot(doc, nn, *q)) ||
        InAdjunctDomain(doc, *q, nn)) {
      return Admit("AB-5");
    }
  }
  return Reject("UNBOUND");
}

}  // namespace rap

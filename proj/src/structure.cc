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

#include "rap/structure.h"

#include <algorithm>

namespace rap {

namespace {

// A clause with no NP child before its VP: the understood subject comes
// from the governing verb.
bool IsSubjectlessClause(const Document &doc, NodeId s) {
  if (!doc.HasLabel(s, "S")) return false;
  for (NodeId c : doc.node(s).children) {
    if (doc.HasLabel(c, "NP")) return false;
    if (doc.HasLabel(c, "VP")) return true;
  }
  return false;
}

// The VP directly above vp on the same chain, if any.
std::optional<NodeId> ChainParent(const Document &doc, NodeId vp) {
  auto p = doc.parent(vp);
  if (!p) return std::nullopt;
  if (doc.HasLabel(*p, "VP")) return p;
  if (IsSubjectlessClause(doc, *p)) {
    auto gp = doc.parent(*p);
    if (gp && doc.HasLabel(*gp, "VP")) return gp;
  }
  return std::nullopt;
}

}  // namespace

bool IsNominal(const Document &doc, NodeId id) {
  std::string_view l = doc.label(id);
  return l == "NP" || ((l == "PRP" || l == "PRP$") && doc.node(id).is_leaf());
}

bool IsCoordination(const Document &doc, NodeId id) {
  if (!doc.HasLabel(id, "NP")) return false;
  for (NodeId c : doc.node(id).children) {
    if (doc.HasLabel(c, "CC") || doc.HasLabel(c, "CONJP")) return true;
  }
  return false;
}

NodeId ArgumentPosition(const Document &doc, NodeId np) {
  NodeId x = np;
  while (true) {
    auto p = doc.parent(x);
    if (!p || !IsCoordination(doc, *p) || !doc.HasLabel(x, "NP")) return x;
    x = *p;
  }
}

NodeId VpChainTop(const Document &doc, NodeId vp) {
  NodeId top = vp;
  while (auto up = ChainParent(doc, top)) top = *up;
  return top;
}

bool OnVpChain(const Document &doc, NodeId vp, NodeId top) {
  return doc.HasLabel(vp, "VP") && VpChainTop(doc, vp) == top;
}

std::optional<NodeId> SubjectHead(const Document &doc, NodeId np) {
  NodeId x = ArgumentPosition(doc, np);
  if (!doc.HasLabel(x, "NP")) return std::nullopt;
  auto vp = doc.FollowingSibling(x, "VP");
  if (!vp) return std::nullopt;
  return VpChainTop(doc, *vp);
}

std::optional<NodeId> ObjectHead(const Document &doc, NodeId np) {
  NodeId x = ArgumentPosition(doc, np);
  if (!doc.HasLabel(x, "NP")) return std::nullopt;
  auto p = doc.parent(x);
  if (!p || !doc.HasLabel(*p, "VP")) return std::nullopt;
  return VpChainTop(doc, *p);
}

std::optional<NodeId> ArgumentHead(const Document &doc, NodeId np) {
  if (auto h = SubjectHead(doc, np)) return h;
  return ObjectHead(doc, np);
}

std::optional<NodeId> AdjunctHead(const Document &doc, NodeId np) {
  NodeId x = ArgumentPosition(doc, np);
  if (!doc.HasLabel(x, "NP")) return std::nullopt;
  auto pp = doc.parent(x);
  if (!pp || !doc.HasLabel(*pp, "PP")) return std::nullopt;
  auto vp = doc.parent(*pp);
  if (!vp || !doc.HasLabel(*vp, "VP")) return std::nullopt;
  return VpChainTop(doc, *vp);
}

std::optional<NodeId> Determiner(const Document &doc, NodeId q) {
  if (!doc.HasLabel(q, "NP")) return std::nullopt;
  const auto &kids = doc.node(q).children;
  for (size_t i = 0; i < kids.size(); ++i) {
    NodeId c = kids[i];
    if (doc.HasLabel(c, "PRP$")) return c;
    if (!doc.HasLabel(c, "NP")) continue;
    const auto &ck = doc.node(c).children;
    if (!ck.empty() && doc.HasLabel(ck.back(), "POS")) return c;
    if (i + 1 < kids.size() && doc.HasLabel(kids[i + 1], "POS")) return c;
  }
  return std::nullopt;
}

std::optional<NodeId> NounDeterminer(const Document &doc, NodeId q) {
  if (auto d = Determiner(doc, q)) return d;
  if (!doc.HasLabel(q, "NP")) return std::nullopt;
  const auto &kids = doc.node(q).children;
  if (!kids.empty() && doc.HasLabel(kids.front(), "NP")) {
    return Determiner(doc, kids.front());
  }
  return std::nullopt;
}

std::optional<NodeId> DeterminedNoun(const Document &doc, NodeId p) {
  auto q = doc.parent(p);
  if (!q) return std::nullopt;
  auto d = Determiner(doc, *q);
  if (d && *d == p) return q;
  return std::nullopt;
}

std::vector<NodeId> ImmediateContainers(const Document &doc, NodeId phrase) {
  std::vector<NodeId> out;
  auto add = [&](std::optional<NodeId> id) {
    if (id && std::find(out.begin(), out.end(), *id) == out.end()) {
      out.push_back(*id);
    }
  };

  if (doc.HasLabel(phrase, "VP")) {
    NodeId top = VpChainTop(doc, phrase);
    for (auto p = doc.parent(top); p; p = doc.parent(*p)) {
      if (doc.HasLabel(*p, "NP")) {
        add(*p);
        break;
      }
      if (doc.HasLabel(*p, "VP")) {
        add(VpChainTop(doc, *p));
        break;
      }
    }
    return out;
  }

  if (!IsNominal(doc, phrase)) return out;
  add(ArgumentHead(doc, phrase));
  add(AdjunctHead(doc, phrase));

  // The head or a conjunct of a complex NP lies inside it; a possessor is
  // its determiner, not an argument.
  if (auto p = doc.parent(phrase);
      p && doc.HasLabel(*p, "NP") && Determiner(doc, *p) != phrase) {
    add(*p);
  }

  NodeId x = ArgumentPosition(doc, phrase);
  auto pp = doc.parent(x);
  if (pp && doc.HasLabel(*pp, "PP")) {
    auto owner = doc.parent(*pp);
    if (owner && doc.HasLabel(*owner, "NP")) {
      for (NodeId sib : doc.node(*owner).children) {
        if (sib != *pp && doc.HasLabel(sib, "NP")) add(sib);
      }
      add(*owner);
    }
  }
  return out;
}

std::optional<int> ArgumentSlot(const Document &doc, NodeId np) {
  if (SubjectHead(doc, np)) return 0;
  NodeId x = ArgumentPosition(doc, np);
  auto p = doc.parent(x);
  if (!p || !doc.HasLabel(*p, "VP") || !doc.HasLabel(x, "NP")) {
    return std::nullopt;
  }
  int index = 0;
  for (NodeId c : doc.node(*p).children) {
    if (c == x) return 1 + index;
    if (doc.HasLabel(c, "NP")) ++index;
  }
  return std::nullopt;
}

}  // namespace rap

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

#include "rap/resolver.h"

#include <algorithm>
#include <unordered_map>

namespace rap {

namespace {

// Chains under construction. Classes may be folded into one another when a
// cataphoric antecedent is later resolved itself; Find follows the folds.
class ChainTable {
 public:
  int Find(int id) const {
    while (forward_[id] != id) id = forward_[id];
    return id;
  }

  // Class of a mention node, or -1.
  int ClassOf(NodeId node) const {
    auto it = class_of_.find(node);
    return it == class_of_.end() ? -1 : Find(it->second);
  }

  const EquivalenceClass &Get(int id) const { return classes_[Find(id)]; }

  int Create(const Mention &first) {
    int id = static_cast<int>(classes_.size());
    EquivalenceClass cls;
    cls.id = id;
    classes_.push_back(MergeChain(std::move(cls), first));
    forward_.push_back(id);
    class_of_[first.node] = id;
    return id;
  }

  void Add(int id, const Mention &m) {
    id = Find(id);
    classes_[id] = MergeChain(std::move(classes_[id]), m);
    class_of_[m.node] = id;
  }

  // Folds class `from` into class `into`.
  void Fold(int from, int into) {
    from = Find(from);
    into = Find(into);
    if (from == into) return;
    for (const Mention &m : classes_[from].members) Add(into, m);
    classes_[from].members.clear();
    forward_[from] = into;
  }

 private:
  std::vector<EquivalenceClass> classes_;
  std::vector<int> forward_;
  std::unordered_map<NodeId, int> class_of_;
};

// Higher weight, then nearer, then preceding, then the narrower span, then
// the earlier node.
bool Better(const CandidateDiagnostic &a, const CandidateDiagnostic &b) {
  if (a.weight != b.weight) return a.weight > b.weight;
  if (a.distance != b.distance) return a.distance < b.distance;
  if (a.precedes != b.precedes) return a.precedes;
  int wa = a.mention.span.last - a.mention.span.first;
  int wb = b.mention.span.last - b.mention.span.first;
  if (wa != wb) return wa < wb;
  return a.mention.node < b.mention.node;
}

}  // namespace

std::vector<Mention> CandidateSet(const Anaphor &a, const Document &doc,
                                  const std::vector<Mention> &mentions,
                                  const ResolverConfig &cfg) {
  const int s = a.mention.sentence;
  const int lo = std::max(0, s - std::max(0, cfg.window_sentences));
  const NodeId self = a.mention.node;
  std::vector<Mention> out;
  for (const Mention &m : mentions) {
    if (m.sentence < lo || m.sentence > s) continue;
    if (m.node == self || m.lexical_anaphor || m.non_referential) continue;
    if (m.sentence == s &&
        (doc.Dominates(m.node, self) || doc.Dominates(self, m.node))) {
      continue;
    }
    out.push_back(m);
  }
  return out;
}

int TokenDistance(const Document &doc, const Mention &anaphor,
                  const Mention &candidate, bool *precedes) {
  const int a_first = doc.sentence_offset(anaphor.sentence) + anaphor.span.first;
  const int a_last = doc.sentence_offset(anaphor.sentence) + anaphor.span.last;
  const int c_first =
      doc.sentence_offset(candidate.sentence) + candidate.span.first;
  const int c_last =
      doc.sentence_offset(candidate.sentence) + candidate.span.last;
  if (c_last < a_first) {
    *precedes = true;
    return a_first - c_last;
  }
  *precedes = false;
  return c_first - a_last;
}

std::vector<ResolutionRecord> ResolveDocument(const Document &doc,
                                              const Lexicons &lex,
                                              const ResolverConfig &cfg) {
  ExtractOptions opts;
  opts.gendered_nouns = cfg.gendered_nouns;
  const std::vector<Mention> mentions = ExtractNounPhrases(doc, lex, opts);
  const std::vector<Anaphor> anaphors = ExtractAnaphors(doc, lex, opts);

  std::unordered_map<NodeId, const Anaphor *> anaphor_at;
  for (const Anaphor &a : anaphors) anaphor_at[a.mention.node] = &a;

  ChainTable chains;
  std::vector<ResolutionRecord> records;
  records.reserve(anaphors.size());

  for (const Anaphor &a : anaphors) {
    ResolutionRecord rec;
    rec.anaphor = a;
    if (a.pleonastic) {
      rec.status = ResolutionStatus::kPleonastic;
      records.push_back(std::move(rec));
      continue;
    }

    const int own_class = chains.ClassOf(a.mention.node);
    for (const Mention &m : CandidateSet(a, doc, mentions, cfg)) {
      CandidateDiagnostic d;
      d.mention = m;
      d.distance = TokenDistance(doc, a.mention, m, &d.precedes);
      const int cls = chains.ClassOf(m.node);
      const SalienceFactorSet &factors =
          cls >= 0 ? chains.Get(cls).factors : m.factors;
      d.weight = WeightOf(factors, a.mention.sentence, cfg.weights);

      if (a.kind.is_lexical()) {
        if (!MorphologicallyCompatible(a.mention.agreement, m.agreement)) {
          d.verdict = {false, "MORPH"};
        } else {
          d.verdict = AnaphorBinding(doc, a, m);
        }
      } else {
        d.verdict = SyntacticFilter(doc, a, m);
        // Non-coreference is symmetric: a pronoun candidate must also
        // survive the filter with the roles swapped.
        auto other = anaphor_at.find(m.node);
        if (d.verdict.admissible && other != anaphor_at.end() &&
            !other->second->kind.is_lexical()) {
          FilterVerdict back = SyntacticFilter(doc, *other->second, a.mention);
          if (!back.admissible) d.verdict = back;
        }
      }
      // A later pronoun cannot introduce the referent of an earlier one.
      if (d.verdict.admissible && !d.precedes && m.pronoun) {
        d.verdict = {false, "CATAPHORA"};
      }
      if (d.verdict.admissible && cls >= 0 && cls == own_class) {
        d.verdict = {false, "CHAIN"};
      }
      rec.candidates.push_back(std::move(d));
    }

    const CandidateDiagnostic *best = nullptr;
    for (const CandidateDiagnostic &d : rec.candidates) {
      if (!d.verdict.admissible) continue;
      if (!best || Better(d, *best)) best = &d;
    }
    if (!best) {
      rec.status = ResolutionStatus::kUnresolved;
      records.push_back(std::move(rec));
      continue;
    }

    int cls = chains.ClassOf(best->mention.node);
    if (cls < 0) cls = chains.Create(best->mention);
    if (own_class >= 0) {
      chains.Fold(own_class, cls);
    } else {
      chains.Add(cls, a.mention);
    }
    rec.status = ResolutionStatus::kResolved;
    rec.antecedent = best->mention;
    rec.chain_id = chains.Find(cls);
    records.push_back(std::move(rec));
  }

  for (ResolutionRecord &r : records) {
    if (r.chain_id >= 0) r.chain_id = chains.Find(r.chain_id);
  }
  return records;
}

}  // namespace rap

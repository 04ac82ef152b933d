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

// Output renderers for resolution records.

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "rap/resolver.h"

namespace rap {

namespace {

bool IsPunctuationLeaf(const Document &doc, int sentence, int i) {
  return IsPunctuationTag(doc.label(doc.leaves(sentence)[i]));
}

std::string SpanLabel(const Mention &m) {
  return std::to_string(m.sentence) + ":" + std::to_string(m.span.first) +
         "-" + std::to_string(m.span.last);
}

// Antecedent tokens used in place of an anaphor, punctuation dropped.
// A trailing possessive marker is removed; the caller re-adds it if needed.
std::vector<std::string> AntecedentTokens(const Document &doc,
                                          const Mention &m) {
  std::vector<std::string> out;
  auto tokens = doc.tokens(m.sentence);
  int last = m.span.last;
  if (last > m.span.first && doc.label(doc.leaves(m.sentence)[last]) == "POS") {
    --last;
  }
  for (int i = m.span.first; i <= last; ++i) {
    if (IsPunctuationLeaf(doc, m.sentence, i)) continue;
    out.push_back(tokens[i]);
  }
  return out;
}

// Records keyed by (sentence, first token) of the anaphor.
std::map<std::pair<int, int>, const ResolutionRecord *> IndexRecords(
    const std::vector<ResolutionRecord> &records) {
  std::map<std::pair<int, int>, const ResolutionRecord *> index;
  for (const ResolutionRecord &r : records) {
    const Mention &m = r.anaphor.mention;
    index[{m.sentence, m.span.first}] = &r;
  }
  return index;
}

bool AttachesLeft(const std::string &t) {
  static const char *const kLeft[] = {".", ",", ";", ":", "!", "?", "%",
                                      "'s", "'S", "'", "n't", "N'T", "'re",
                                      "'ve", "'ll", "'d", "'m", "-RRB-",
                                      "''", ")"};
  for (const char *s : kLeft) {
    if (t == s) return true;
  }
  return false;
}

std::string Detokenize(const std::vector<std::string> &tokens) {
  std::string out;
  bool glue_next = false;
  for (const std::string &raw : tokens) {
    std::string t = raw;
    if (t == "-LRB-") t = "(";
    else if (t == "-RRB-") t = ")";
    else if (t == "``" || t == "''") t = "\"";
    if (!out.empty() && !glue_next && !AttachesLeft(raw)) out += ' ';
    out += t;
    glue_next = raw == "-LRB-" || raw == "``" || raw == "$";
  }
  return out;
}

}  // namespace

std::string MentionText(const Document &doc, const Mention &m) {
  std::string out;
  auto tokens = doc.tokens(m.sentence);
  for (int i = m.span.first; i <= m.span.last; ++i) {
    if (IsPunctuationLeaf(doc, m.sentence, i)) continue;
    if (!out.empty()) out += ' ';
    out += tokens[i];
  }
  return out;
}

std::string RenderPairs(const std::vector<ResolutionRecord> &records,
                        const Document &doc) {
  std::string out;
  for (const ResolutionRecord &r : records) {
    const Mention &a = r.anaphor.mention;
    out += SpanLabel(a) + " \"" + MentionText(doc, a) + "\" ";
    switch (r.status) {
      case ResolutionStatus::kResolved:
        out += "<- " + SpanLabel(*r.antecedent) + " \"" +
               MentionText(doc, *r.antecedent) + "\"";
        break;
      case ResolutionStatus::kUnresolved:
        out += "NULL";
        break;
      case ResolutionStatus::kPleonastic:
        out += "PLEONASTIC";
        break;
    }
    out += '\n';
  }
  return out;
}

std::string RenderAnnotated(const std::vector<ResolutionRecord> &records,
                            const Document &doc) {
  auto index = IndexRecords(records);
  std::string out;
  for (int s = 0; s < doc.num_sentences(); ++s) {
    auto tokens = doc.tokens(s);
    std::string line;
    // Marker waiting for the end of the current anaphor span.
    int pending_end = -1;
    std::string pending;
    for (int i = 0; i < static_cast<int>(tokens.size()); ++i) {
      auto it = index.find({s, i});
      if (it != index.end()) {
        const ResolutionRecord &r = *it->second;
        pending_end = r.anaphor.mention.span.last;
        switch (r.status) {
          case ResolutionStatus::kResolved:
            pending = "[=" + MentionText(doc, *r.antecedent) + "]";
            break;
          case ResolutionStatus::kUnresolved:
            pending = "[?]";
            break;
          case ResolutionStatus::kPleonastic:
            pending = "[pleo]";
            break;
        }
      }
      if (!line.empty()) line += ' ';
      line += tokens[i];
      if (i == pending_end) {
        line += ' ' + pending;
        pending_end = -1;
      }
    }
    out += line + '\n';
  }
  return out;
}

std::string RenderSubstituted(const std::vector<ResolutionRecord> &records,
                              const Document &doc) {
  auto index = IndexRecords(records);
  std::string out;
  for (int s = 0; s < doc.num_sentences(); ++s) {
    auto tokens = doc.tokens(s);
    std::vector<std::string> words;
    const int n = static_cast<int>(tokens.size());
    for (int i = 0; i < n; ++i) {
      auto it = index.find({s, i});
      if (it == index.end() ||
          it->second->status != ResolutionStatus::kResolved) {
        words.push_back(tokens[i]);
        continue;
      }
      const ResolutionRecord &r = *it->second;
      const Mention &ant = *r.antecedent;
      const size_t start = words.size();
      for (std::string &t : AntecedentTokens(doc, ant)) {
        words.push_back(std::move(t));
      }
      const bool possessive =
          r.anaphor.kind.pronoun_case == Case::kPossessive;
      if (possessive && !ant.pronoun) words.push_back("'s");
      if (start < words.size() && !words[start].empty()) {
        // Capitals follow the new position: sentence-initial replacements
        // are raised, and a sentence-initial antecedent is lowered unless
        // it starts with a proper noun or "I".
        std::string &w = words[start];
        const std::string_view tag =
            doc.label(doc.leaves(ant.sentence)[ant.span.first]);
        if (i == 0) {
          if (w[0] >= 'a' && w[0] <= 'z') w[0] = static_cast<char>(w[0] - 32);
        } else if (ant.span.first == 0 && tag != "NNP" && tag != "NNPS" &&
                   w != "I" && w[0] >= 'A' && w[0] <= 'Z') {
          w[0] = static_cast<char>(w[0] + 32);
        }
      }
      i = r.anaphor.mention.span.last;
    }
    if (!out.empty()) out += ' ';
    out += Detokenize(words);
  }
  if (!out.empty()) out += '\n';
  return out;
}

std::string RenderDiagnostics(const ResolutionRecord &record,
                              const Document &doc) {
  std::ostringstream os;
  const Mention &a = record.anaphor.mention;
  os << "# " << SpanLabel(a) << " \"" << MentionText(doc, a) << "\"";
  if (record.status == ResolutionStatus::kPleonastic) os << " pleonastic";
  os << '\n';
  for (const CandidateDiagnostic &c : record.candidates) {
    os << "#   " << SpanLabel(c.mention) << " \""
       << MentionText(doc, c.mention) << "\" weight=" << c.weight
       << " distance=" << c.distance << (c.precedes ? " before" : " after")
       << ' '
       << (c.verdict.admissible ? "ok" : "rejected");
    if (!c.verdict.rule.empty()) os << ':' << c.verdict.rule;
    os << '\n';
  }
  return os.str();
}

}  // namespace rap

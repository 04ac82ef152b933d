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

#include "rap/muc.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "rap/lexicon.h"
#include "rap/pronouns.h"

namespace rap {

namespace {

std::string Upper(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

// Decodes &amp; &lt; &gt; &quot; &apos; and numeric references below 128.
// Anything else is copied verbatim.
size_t DecodeEntity(std::string_view s, size_t i, std::string *out) {
  size_t semi = s.find(';', i);
  if (semi == std::string_view::npos || semi - i > 8) {
    *out += '&';
    return i + 1;
  }
  std::string_view name = s.substr(i + 1, semi - i - 1);
  char c = 0;
  if (name == "amp") c = '&';
  else if (name == "lt") c = '<';
  else if (name == "gt") c = '>';
  else if (name == "quot") c = '"';
  else if (name == "apos") c = '\'';
  else if (name.size() > 1 && name[0] == '#') {
    int v = std::atoi(std::string(name.substr(1)).c_str());
    if (v > 0 && v < 128) c = static_cast<char>(v);
  }
  if (c == 0) {
    *out += '&';
    return i + 1;
  }
  *out += c;
  return semi + 1;
}

// Attributes of a tag body such as `COREF ID="1" REF="0"`.
std::map<std::string, std::string> ParseAttributes(std::string_view body,
                                                   size_t offset) {
  std::map<std::string, std::string> attrs;
  size_t i = 0;
  while (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i])))
    ++i;
  while (i < body.size()) {
    while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i])))
      ++i;
    if (i >= body.size() || body[i] == '/') break;
    size_t k = i;
    while (i < body.size() && body[i] != '=' &&
           !std::isspace(static_cast<unsigned char>(body[i])))
      ++i;
    std::string key = Upper(body.substr(k, i - k));
    if (i >= body.size() || body[i] != '=') {
      attrs[key] = "";
      continue;
    }
    ++i;
    std::string value;
    if (i < body.size() && (body[i] == '"' || body[i] == '\'')) {
      char q = body[i++];
      size_t close = body.find(q, i);
      if (close == std::string_view::npos) {
        throw ParseError("unterminated attribute value", offset + i);
      }
      value = std::string(body.substr(i, close - i));
      i = close + 1;
    } else {
      size_t v = i;
      while (i < body.size() &&
             !std::isspace(static_cast<unsigned char>(body[i])))
        ++i;
      value = std::string(body.substr(v, i - v));
    }
    std::string decoded;
    for (size_t j = 0; j < value.size();) {
      if (value[j] == '&') {
        j = DecodeEntity(value, j, &decoded);
      } else {
        decoded += value[j++];
      }
    }
    attrs[key] = decoded;
  }
  return attrs;
}

void Validate(const std::vector<GoldMention> &mentions) {
  std::unordered_map<std::string, size_t> index;
  for (size_t i = 0; i < mentions.size(); ++i) {
    if (!index.emplace(mentions[i].id, i).second) {
      throw GoldValidationError("duplicate COREF ID \"" + mentions[i].id +
                                "\"");
    }
  }
  for (const GoldMention &m : mentions) {
    if (m.ref && !index.count(*m.ref)) {
      throw GoldValidationError("COREF ID \"" + m.id +
                                "\" refers to unknown ID \"" + *m.ref + "\"");
    }
  }
  // Each mention has at most one REF, so a cycle shows up as a walk that
  // returns to a mention already on it.
  std::vector<int> state(mentions.size(), 0);  // 0 new, 1 on walk, 2 done
  for (size_t start = 0; start < mentions.size(); ++start) {
    std::vector<size_t> walk;
    for (size_t i = start; state[i] != 2;) {
      if (state[i] == 1) {
        throw GoldValidationError("REF cycle through COREF ID \"" +
                                  mentions[i].id + "\"");
      }
      state[i] = 1;
      walk.push_back(i);
      if (!mentions[i].ref) break;
      i = index.at(*mentions[i].ref);
    }
    for (size_t w : walk) state[w] = 2;
  }
}

class UnionFind {
 public:
  explicit UnionFind(size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  size_t Find(size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void Union(size_t a, size_t b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<size_t> parent_;
};

std::string NormalizeToken(std::string_view t) {
  if (t == "-LRB-") return "(";
  if (t == "-RRB-") return ")";
  if (t == "-LSB-") return "[";
  if (t == "-RSB-") return "]";
  if (t == "-LCB-") return "{";
  if (t == "-RCB-") return "}";
  if (t == "``" || t == "''") return "\"";
  return std::string(t);
}

// Whitespace-free view of a text with `` and '' folded to a double quote;
// pos[k] is the offset in the original text of stripped character k.
struct Stripped {
  std::string chars;
  std::vector<size_t> pos;
};

Stripped Strip(std::string_view text, size_t base = 0) {
  Stripped s;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if ((c == '`' || c == '\'') && i + 1 < text.size() && text[i + 1] == c) {
      s.chars += '"';
      s.pos.push_back(base + i);
      ++i;
      continue;
    }
    s.chars += c;
    s.pos.push_back(base + i);
  }
  return s;
}

struct TokenRef {
  int sentence;
  int index;
  size_t begin;  // stripped coordinates, [begin, end)
  size_t end;
};

// Left-anchored greedy alignment of document tokens onto the gold text.
// Unmatched tokens are dropped; the cursor never moves backwards.
std::vector<TokenRef> AlignTokens(const Document &doc, const Stripped &g) {
  constexpr size_t kLookahead = 400;
  std::vector<TokenRef> out;
  size_t p = 0;
  bool first = true;
  for (int s = 0; s < doc.num_sentences(); ++s) {
    auto tokens = doc.tokens(s);
    for (int i = 0; i < static_cast<int>(tokens.size()); ++i) {
      std::string t = NormalizeToken(tokens[i]);
      t.erase(std::remove_if(t.begin(), t.end(),
                             [](char c) {
                               return std::isspace(
                                   static_cast<unsigned char>(c));
                             }),
              t.end());
      if (t.empty()) continue;
      size_t at = g.chars.find(t, p);
      if (at == std::string::npos || (!first && at - p > kLookahead)) continue;
      out.push_back({s, i, at, at + t.size()});
      p = at + t.size();
      first = false;
    }
  }
  return out;
}

struct TokenSpan {
  int sentence = -1;
  Span span;
};

// Tokens inside stripped range [b, e); falls back to overlapping tokens.
std::optional<TokenSpan> TokensIn(const std::vector<TokenRef> &tokens,
                                  size_t b, size_t e) {
  const TokenRef *lo = nullptr, *hi = nullptr;
  for (const TokenRef &t : tokens) {
    if (t.begin >= b && t.end <= e) {
      if (!lo) lo = &t;
      hi = &t;
    }
  }
  if (!lo) {
    for (const TokenRef &t : tokens) {
      if (t.begin < e && t.end > b) {
        if (!lo) lo = &t;
        hi = &t;
      }
    }
  }
  if (!lo || lo->sentence != hi->sentence) return std::nullopt;
  return TokenSpan{lo->sentence, {lo->index, hi->index}};
}

struct AlignedMention {
  std::optional<TokenSpan> full;
  std::optional<TokenSpan> min;
};

AlignedMention AlignMention(const GoldMention &m, const Stripped &g,
                            const std::vector<TokenRef> &tokens) {
  AlignedMention out;
  const size_t b =
      std::lower_bound(g.pos.begin(), g.pos.end(), m.begin) - g.pos.begin();
  const size_t e =
      std::lower_bound(g.pos.begin(), g.pos.end(), m.end) - g.pos.begin();
  if (b >= e) return out;
  out.full = TokensIn(tokens, b, e);
  if (m.min && out.full) {
    Stripped mn = Strip(*m.min);
    size_t at = g.chars.substr(b, e - b).find(mn.chars);
    if (!mn.chars.empty() && at != std::string::npos) {
      out.min = TokensIn(tokens, b + at, b + at + mn.chars.size());
    }
  }
  return out;
}

bool IsGoldAnaphor(std::string_view text) {
  std::string lower;
  bool space = false;
  for (char c : ToLower(text)) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      space = !lower.empty();
      continue;
    }
    if (space) lower += ' ';
    space = false;
    lower += c;
  }
  if (IsReciprocal(lower)) return true;
  auto info = LookupPronoun(lower);
  return info && IsResolvable(*info);
}

bool Matches(int sentence, const Span &ant, const AlignedMention &m) {
  if (!m.full || m.full->sentence != sentence) return false;
  if (ant == m.full->span) return true;
  if (m.min && m.min->sentence == sentence) {
    return m.full->span.Contains(ant) && ant.Contains(m.min->span);
  }
  return false;
}

std::string Escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '&') out += "&amp;";
    else if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else out += c;
  }
  return out;
}

}  // namespace

GoldDocument ParseGold(std::string_view sgml) {
  GoldDocument doc;
  struct Open {
    size_t tag_offset;
    size_t mention;
  };
  std::vector<Open> stack;
  size_t i = 0;
  while (i < sgml.size()) {
    const char c = sgml[i];
    if (c == '&') {
      i = DecodeEntity(sgml, i, &doc.text);
      continue;
    }
    if (c != '<') {
      doc.text += c;
      ++i;
      continue;
    }
    const size_t close = sgml.find('>', i);
    if (close == std::string_view::npos) {
      throw ParseError("unterminated tag", i);
    }
    std::string_view body = sgml.substr(i + 1, close - i - 1);
    const bool closing = !body.empty() && body[0] == '/';
    std::string_view rest = closing ? body.substr(1) : body;
    size_t name_end = 0;
    while (name_end < rest.size() &&
           std::isalnum(static_cast<unsigned char>(rest[name_end])))
      ++name_end;
    const std::string name = Upper(rest.substr(0, name_end));
    if (name == "COREF") {
      if (closing) {
        if (stack.empty()) throw ParseError("unmatched </COREF>", i);
        GoldMention &m = doc.mentions[stack.back().mention];
        m.end = doc.text.size();
        m.text = doc.text.substr(m.begin, m.end - m.begin);
        stack.pop_back();
      } else {
        auto attrs = ParseAttributes(body, i + 1);
        auto id = attrs.find("ID");
        if (id == attrs.end() || id->second.empty()) {
          throw ParseError("COREF without ID", i);
        }
        GoldMention m;
        m.id = id->second;
        if (auto r = attrs.find("REF"); r != attrs.end()) m.ref = r->second;
        if (auto r = attrs.find("MIN"); r != attrs.end()) m.min = r->second;
        m.begin = doc.text.size();
        doc.mentions.push_back(std::move(m));
        if (body.empty() || body.back() != '/') {
          stack.push_back({i, doc.mentions.size() - 1});
        } else {
          doc.mentions.back().end = doc.mentions.back().begin;
        }
      }
    }
    i = close + 1;
  }
  if (!stack.empty()) {
    throw ParseError("unclosed <COREF>", stack.back().tag_offset);
  }
  Validate(doc.mentions);
  return doc;
}

std::vector<std::vector<std::string>> RestoreChains(
    const std::vector<GoldMention> &mentions) {
  std::unordered_map<std::string, size_t> index;
  for (size_t i = 0; i < mentions.size(); ++i) index.emplace(mentions[i].id, i);
  UnionFind uf(mentions.size());
  for (size_t i = 0; i < mentions.size(); ++i) {
    if (!mentions[i].ref) continue;
    auto it = index.find(*mentions[i].ref);
    if (it != index.end()) uf.Union(i, it->second);
  }
  std::map<size_t, std::vector<std::string>> by_root;
  for (size_t i = 0; i < mentions.size(); ++i) {
    by_root[uf.Find(i)].push_back(mentions[i].id);
  }
  std::vector<std::vector<std::string>> out;
  for (auto &[root, ids] : by_root) out.push_back(std::move(ids));
  return out;
}

std::vector<PredictedPair> PairsFromRecords(
    const std::vector<ResolutionRecord> &records) {
  std::vector<PredictedPair> out;
  for (const ResolutionRecord &r : records) {
    PredictedPair p;
    p.sentence = r.anaphor.mention.sentence;
    p.anaphor = r.anaphor.mention.span;
    p.status = r.status;
    if (r.antecedent) {
      p.antecedent_sentence = r.antecedent->sentence;
      p.antecedent = r.antecedent->span;
    }
    out.push_back(p);
  }
  return out;
}

std::vector<PredictedPair> ParsePairs(std::string_view text) {
  static const std::regex kLine(
      R"re(^(\d+):(\d+)-(\d+) "(.*)" (NULL|PLEONASTIC|<- (\d+):(\d+)-(\d+) "(.*)")$)re");
  std::vector<PredictedPair> out;
  std::istringstream in{std::string(text)};
  std::string line;
  size_t offset = 0;
  while (std::getline(in, line)) {
    const size_t line_offset = offset;
    offset += line.size() + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::smatch m;
    if (!std::regex_match(line, m, kLine)) {
      throw ParseError("malformed pairs line: " + line, line_offset);
    }
    PredictedPair p;
    p.sentence = std::stoi(m[1]);
    p.anaphor = {std::stoi(m[2]), std::stoi(m[3])};
    if (m[5] == "NULL") {
      p.status = ResolutionStatus::kUnresolved;
    } else if (m[5] == "PLEONASTIC") {
      p.status = ResolutionStatus::kPleonastic;
    } else {
      p.status = ResolutionStatus::kResolved;
      p.antecedent_sentence = std::stoi(m[6]);
      p.antecedent = {std::stoi(m[7]), std::stoi(m[8])};
    }
    out.push_back(p);
  }
  return out;
}

std::string EvalReport::MachineLine() const {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "accuracy=%.3f correct=%d total=%d",
                accuracy, correct, total);
  return buf;
}

std::string EvalReport::ToString() const {
  std::ostringstream os;
  for (const Judgment &j : judgments) {
    os << (j.correct ? "correct  " : "wrong    ") << j.gold_id << " \""
       << j.text << "\"";
    if (!j.aligned) os << " (alignment failed)";
    else if (!j.predicted) os << " (no prediction)";
    os << '\n';
  }
  os << "resolved_correct=" << resolved_correct
     << " unresolved_correct=" << unresolved_correct
     << " pleonastic_correct=" << pleonastic_correct
     << " unresolved_linked=" << unresolved_linked
     << " pleonastic_linked=" << pleonastic_linked << " missing=" << missing
     << " alignment_failures=" << alignment_failures << '\n';
  os << "antecedents match gold mentions by full span or MIN-bounded span\n";
  os << MachineLine() << '\n';
  return os.str();
}

EvalReport Score(const std::vector<PredictedPair> &predicted,
                 const GoldDocument &gold, const Document &doc) {
  const Stripped g = Strip(gold.text);
  const std::vector<TokenRef> tokens = AlignTokens(doc, g);

  std::vector<AlignedMention> aligned;
  aligned.reserve(gold.mentions.size());
  for (const GoldMention &m : gold.mentions) {
    aligned.push_back(AlignMention(m, g, tokens));
  }

  std::unordered_map<std::string, size_t> index;
  for (size_t i = 0; i < gold.mentions.size(); ++i) {
    index.emplace(gold.mentions[i].id, i);
  }
  std::unordered_map<std::string, size_t> class_of;
  std::vector<std::vector<std::string>> chains = RestoreChains(gold.mentions);
  for (size_t c = 0; c < chains.size(); ++c) {
    for (const std::string &id : chains[c]) class_of[id] = c;
  }

  EvalReport report;
  for (size_t i = 0; i < gold.mentions.size(); ++i) {
    const GoldMention &gm = gold.mentions[i];
    if (!IsGoldAnaphor(gm.text)) continue;
    ++report.total;
    Judgment j;
    j.gold_id = gm.id;
    j.text = gm.text;
    const AlignedMention &am = aligned[i];
    if (!am.full) {
      ++report.alignment_failures;
      report.judgments.push_back(j);
      continue;
    }
    j.aligned = true;
    const PredictedPair *pred = nullptr;
    for (const PredictedPair &p : predicted) {
      if (p.sentence != am.full->sentence) continue;
      const Span &s = am.full->span;
      if (p.anaphor.first <= s.last && s.first <= p.anaphor.last) {
        pred = &p;
        break;
      }
    }
    if (!pred) {
      ++report.missing;
      report.judgments.push_back(j);
      continue;
    }
    j.predicted = true;
    const bool linked = gm.ref.has_value();
    switch (pred->status) {
      case ResolutionStatus::kResolved: {
        // Gold possessors usually stop before the possessive marker.
        std::vector<Span> forms = {pred->antecedent};
        const int as = pred->antecedent_sentence;
        if (as >= 0 && as < doc.num_sentences() &&
            pred->antecedent.last > pred->antecedent.first &&
            pred->antecedent.last < static_cast<int>(doc.leaves(as).size()) &&
            doc.label(doc.leaves(as)[pred->antecedent.last]) == "POS") {
          forms.push_back({pred->antecedent.first, pred->antecedent.last - 1});
        }
        const std::vector<std::string> &cls = chains[class_of.at(gm.id)];
        for (const std::string &id : cls) {
          if (id == gm.id || j.correct) continue;
          for (const Span &form : forms) {
            if (Matches(as, form, aligned[index.at(id)])) j.correct = true;
          }
        }
        if (j.correct) ++report.resolved_correct;
        break;
      }
      case ResolutionStatus::kUnresolved:
        j.correct = !linked;
        if (j.correct) ++report.unresolved_correct;
        else ++report.unresolved_linked;
        break;
      case ResolutionStatus::kPleonastic:
        j.correct = !linked;
        if (j.correct) ++report.pleonastic_correct;
        else ++report.pleonastic_linked;
        break;
    }
    if (j.correct) ++report.correct;
    report.judgments.push_back(j);
  }
  report.accuracy =
      report.total == 0 ? 0.0
                        : static_cast<double>(report.correct) / report.total;
  return report;
}

std::string RenderGold(const std::vector<ResolutionRecord> &records,
                       const Document &doc) {
  using Key = std::tuple<int, int, int>;  // sentence, first, last
  auto key_of = [](const Mention &m) {
    return Key{m.sentence, m.span.first, m.span.last};
  };
  std::set<Key> spans;
  for (const ResolutionRecord &r : records) {
    spans.insert(key_of(r.anaphor.mention));
    if (r.antecedent) spans.insert(key_of(*r.antecedent));
  }
  std::map<Key, int> ids;
  for (const Key &k : spans) ids.emplace(k, static_cast<int>(ids.size()) + 1);

  std::map<int, int> ref;  // id -> referent id
  auto reaches = [&](int from, int target) {
    for (int cur = from, steps = 0; steps <= static_cast<int>(ids.size());
         ++steps) {
      if (cur == target) return true;
      auto it = ref.find(cur);
      if (it == ref.end()) return false;
      cur = it->second;
    }
    return true;
  };
  for (const ResolutionRecord &r : records) {
    if (!r.antecedent) continue;
    int a = ids.at(key_of(r.anaphor.mention));
    int b = ids.at(key_of(*r.antecedent));
    if (ref.count(a) || reaches(b, a)) continue;
    ref[a] = b;
  }

  std::string out;
  for (int s = 0; s < doc.num_sentences(); ++s) {
    auto tokens = doc.tokens(s);
    const int n = static_cast<int>(tokens.size());
    // Spans of this sentence, outermost first at each start.
    std::vector<std::pair<Span, int>> local;
    for (const auto &[k, id] : ids) {
      if (std::get<0>(k) == s) {
        local.push_back({{std::get<1>(k), std::get<2>(k)}, id});
      }
    }
    std::string line;
    for (int i = 0; i < n; ++i) {
      std::vector<std::pair<Span, int>> opening;
      for (const auto &e : local) {
        if (e.first.first == i) opening.push_back(e);
      }
      std::sort(opening.begin(), opening.end(), [](const auto &x, const auto &y) {
        return x.first.last > y.first.last;
      });
      if (!line.empty()) line += ' ';
      for (const auto &[span, id] : opening) {
        line += "<COREF ID=\"" + std::to_string(id) + "\"";
        if (auto it = ref.find(id); it != ref.end()) {
          line += " REF=\"" + std::to_string(it->second) + "\"";
        }
        line += ">";
      }
      line += Escape(tokens[i]);
      std::vector<std::pair<Span, int>> closing;
      for (const auto &e : local) {
        if (e.first.last == i) closing.push_back(e);
      }
      std::sort(closing.begin(), closing.end(), [](const auto &x, const auto &y) {
        return x.first.first > y.first.first;
      });
      for (size_t c = 0; c < closing.size(); ++c) line += "</COREF>";
    }
    out += line + '\n';
  }
  return out;
}

}  // namespace rap

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

#include "rap/splitter.h"

#include <cctype>

#include "rap/lexicon.h"

namespace rap {

namespace {

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)); }

// Whitespace runs (newlines included) become one space; ends are trimmed.
std::string Collapse(std::string_view text) {
  std::string out;
  bool space = false;
  for (char c : text) {
    if (IsSpace(c)) {
      space = !out.empty();
      continue;
    }
    if (space) out += ' ';
    space = false;
    out += c;
  }
  return out;
}

bool IsQuote(char c) { return c == '"' || c == '\''; }

}  // namespace

SplitConfig DefaultSplitConfig() {
  SplitConfig cfg;
  cfg.abbreviations =
      ReadWordList(DefaultDataDir() / kAbbreviationsFile, false);
  return cfg;
}

std::vector<std::string> SplitSentences(std::string_view text,
                                        const SplitConfig &cfg) {
  const std::string c = Collapse(text);
  const size_t n = c.size();
  auto is_boundary = [&](char ch) {
    return cfg.boundary_chars.find(ch) != std::string::npos;
  };

  std::vector<std::string> out;
  size_t start = 0;
  size_t i = 0;
  while (i < n) {
    if (!is_boundary(c[i])) {
      ++i;
      continue;
    }
    // A run such as "?!" or ." is one candidate; closing quotes stay with it.
    size_t j = i;
    while (j < n && (is_boundary(c[j]) || IsQuote(c[j]))) ++j;
    if (j < n && c[j] != ' ') {
      i = j;
      continue;
    }
    size_t k = j;
    while (k < n && (c[k] == ' ' || IsQuote(c[k]))) ++k;
    const bool next_ok =
        k == n || std::isupper(static_cast<unsigned char>(c[k])) ||
        std::isdigit(static_cast<unsigned char>(c[k]));
    bool abbreviation = false;
    if (c[i] == '.') {
      size_t tok = c.rfind(' ', i);
      tok = tok == std::string::npos ? 0 : tok + 1;
      abbreviation =
          cfg.abbreviations.count(std::string_view(c).substr(tok, i + 1 - tok));
    }
    if (next_ok && !abbreviation) {
      out.push_back(c.substr(start, j - start));
      start = j < n ? j + 1 : j;
    }
    i = j;
  }
  if (start < n) out.push_back(c.substr(start));
  return out;
}

}  // namespace rap

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

// Rule-based sentence splitter used to prepare raw text for a parser.
//
// Known, intentional failure modes: a heading without final punctuation is
// glued onto the next sentence; a sentence ending in a listed abbreviation
// runs on into the next one; a boundary followed by a lowercase word is not
// split.

#ifndef RAP_SPLITTER_H_
#define RAP_SPLITTER_H_

#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace rap {

struct SplitConfig {
  // Tokens such as "Mr." after which a period never ends a sentence.
  // Matching is exact and case-sensitive.
  std::set<std::string, std::less<>> abbreviations;
  std::string boundary_chars = ".?!\"";
};

// Default configuration with the abbreviation list from the data directory.
SplitConfig DefaultSplitConfig();

// Splits text into sentences with whitespace runs collapsed to one space.
// Empty input yields no sentences.
std::vector<std::string> SplitSentences(std::string_view text,
                                        const SplitConfig &cfg);

}  // namespace rap

#endif  // RAP_SPLITTER_H_

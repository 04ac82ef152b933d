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

#ifndef RAP_LEXICON_H_
#define RAP_LEXICON_H_

#include <filesystem>
#include <set>
#include <string>
#include <string_view>

namespace rap {

// Word lists consulted by agreement, pleonastic detection and the sentence
// splitter. Name, adjective, verb and noun entries are stored lowercase.
// Abbreviations keep their case because the splitter matches them exactly.
struct Lexicons {
  std::set<std::string, std::less<>> male_names;
  std::set<std::string, std::less<>> female_names;
  std::set<std::string, std::less<>> modal_adjectives;
  std::set<std::string, std::less<>> cognitive_verbs;
  std::set<std::string, std::less<>> abbreviations;

  // Optional gendered common nouns (woman, boy, ...). Consulted only when
  // agreement extraction is asked to.
  std::set<std::string, std::less<>> male_nouns;
  std::set<std::string, std::less<>> female_nouns;
};

// File names inside a lexicon directory.
inline constexpr std::string_view kMaleNamesFile = "male_names.txt";
inline constexpr std::string_view kFemaleNamesFile = "female_names.txt";
inline constexpr std::string_view kModalAdjectivesFile = "modal_adjectives.txt";
inline constexpr std::string_view kCognitiveVerbsFile = "cognitive_verbs.txt";
inline constexpr std::string_view kAbbreviationsFile = "abbreviations.txt";
inline constexpr std::string_view kMaleNounsFile = "male_nouns.txt";
inline constexpr std::string_view kFemaleNounsFile = "female_nouns.txt";

// Reads one entry per line. Blank lines and '#' comments are skipped and
// surrounding whitespace trimmed. Throws std::runtime_error if the file
// cannot be opened.
std::set<std::string, std::less<>> ReadWordList(const std::filesystem::path &path,
                                                bool lowercase);

// Loads every list from a directory. The four required lists must exist and
// be non-empty; the gendered-noun files are optional.
Lexicons LoadLexicons(const std::filesystem::path &dir);

// Directory holding the bundled lists: $RAP_DATA_DIR if set, otherwise the
// data directory of the source tree.
std::filesystem::path DefaultDataDir();

std::string ToLower(std::string_view s);

}  // namespace rap

#endif  // RAP_LEXICON_H_

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

#include "rap/lexicon.h"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rap {

std::string ToLower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::set<std::string, std::less<>> ReadWordList(
    const std::filesystem::path &path, bool lowercase) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lexicon " + path.string());
  std::set<std::string, std::less<>> words;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    size_t e = line.find_first_of(" \t\r", b);
    std::string word = line.substr(b, e == std::string::npos ? e : e - b);
    words.insert(lowercase ? ToLower(word) : word);
  }
  return words;
}

namespace {

// Census-format list: NAME [frequency ...]. Missing frequencies read as 0.
std::map<std::string, double> ReadNameList(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lexicon " + path.string());
  std::map<std::string, double> names;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string name;
    if (!(fields >> name)) continue;
    double freq = 0;
    if (!(fields >> freq)) freq = 0;
    names[ToLower(name)] = freq;
  }
  return names;
}

}  // namespace

Lexicons LoadLexicons(const std::filesystem::path &dir) {
  auto required = [&](std::string_view name, bool lowercase) {
    auto words = ReadWordList(dir / name, lowercase);
    if (words.empty()) {
      throw std::runtime_error("lexicon " + (dir / name).string() +
                               " is empty");
    }
    return words;
  };
  auto optional = [&](std::string_view name, bool lowercase) {
    std::filesystem::path p = dir / name;
    if (!std::filesystem::exists(p)) return std::set<std::string, std::less<>>{};
    return ReadWordList(p, lowercase);
  };

  Lexicons lex;
  // A name on both lists goes to the gender with the higher Census
  // frequency; equal frequencies keep it on both, leaving gender unknown.
  auto male = ReadNameList(dir / kMaleNamesFile);
  auto female = ReadNameList(dir / kFemaleNamesFile);
  for (const auto &[name, freq] : male) {
    auto other = female.find(name);
    if (other == female.end() || freq >= other->second) {
      lex.male_names.insert(name);
    }
  }
  for (const auto &[name, freq] : female) {
    auto other = male.find(name);
    if (other == male.end() || freq >= other->second) {
      lex.female_names.insert(name);
    }
  }
  if (lex.male_names.empty() || lex.female_names.empty()) {
    throw std::runtime_error("name lists in " + dir.string() + " are empty");
  }
  lex.modal_adjectives = required(kModalAdjectivesFile, true);
  lex.cognitive_verbs = required(kCognitiveVerbsFile, true);
  lex.abbreviations = optional(kAbbreviationsFile, false);
  lex.male_nouns = optional(kMaleNounsFile, true);
  lex.female_nouns = optional(kFemaleNounsFile, true);
  return lex;
}

std::filesystem::path DefaultDataDir() {
  if (const char *env = std::getenv("RAP_DATA_DIR"); env && *env) return env;
  return RAP_DEFAULT_DATA_DIR;
}

}  // namespace rap

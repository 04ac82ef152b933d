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

#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace rap {
namespace {

using Sentences = std::vector<std::string>;

Sentences Split(std::string_view text) {
  return SplitSentences(text, DefaultSplitConfig());
}

std::string Collapse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string word, out;
  while (in >> word) out += (out.empty() ? "" : " ") + word;
  return out;
}

TEST(SplitterTest, AbbreviationDoesNotEndSentence) {
  EXPECT_EQ(Split("Mr. Smith left. He was tired."),
            (Sentences{"Mr. Smith left.", "He was tired."}));
}

TEST(SplitterTest, PlainBoundaries) {
  EXPECT_EQ(Split("Is it done? Yes!"), (Sentences{"Is it done?", "Yes!"}));
}

TEST(SplitterTest, EmptyInput) {
  EXPECT_TRUE(Split("").empty());
  EXPECT_TRUE(Split(" \n\t ").empty());
}

TEST(SplitterTest, TitleIsGluedToFirstSentence) {
  EXPECT_EQ(Split("THE TITLE\nThe story begins here."),
            (Sentences{"THE TITLE The story begins here."}));
}

TEST(SplitterTest, TrailingAbbreviationJoinsSentences) {
  EXPECT_EQ(Split("He works for Acme Co. The firm is small."),
            (Sentences{"He works for Acme Co. The firm is small."}));
}

TEST(SplitterTest, LowercaseTextIsNotSplit) {
  EXPECT_EQ(Split("he left. she stayed. they waited."),
            (Sentences{"he left. she stayed. they waited."}));
}

TEST(SplitterTest, UppercaseTextDefeatsAbbreviations) {
  // Abbreviations are case-sensitive: "MR." is not "Mr.".
  EXPECT_EQ(Split("MR. SMITH LEFT. HE WAS TIRED."),
            (Sentences{"MR.", "SMITH LEFT.", "HE WAS TIRED."}));
}

TEST(SplitterTest, ClosingQuoteStaysWithSentence) {
  EXPECT_EQ(Split("He said \"Stop.\" Then he left."),
            (Sentences{"He said \"Stop.\"", "Then he left."}));
}

TEST(SplitterTest, PunctuationRunIsOneBoundary) {
  EXPECT_EQ(Split("Really?! Yes... Fine."),
            (Sentences{"Really?!", "Yes...", "Fine."}));
}

TEST(SplitterTest, DigitsStartSentences) {
  EXPECT_EQ(Split("It ended. 42 people left."),
            (Sentences{"It ended.", "42 people left."}));
}

TEST(SplitterTest, NoBoundaryInsideNumbers) {
  EXPECT_EQ(Split("It cost 3.5 dollars. Fine."),
            (Sentences{"It cost 3.5 dollars.", "Fine."}));
}

TEST(SplitterTest, CustomAbbreviations) {
  SplitConfig cfg;
  cfg.abbreviations = {"Zz."};
  EXPECT_EQ(SplitSentences("Ask Zz. Smith. Ok.", cfg),
            (Sentences{"Ask Zz. Smith.", "Ok."}));
  EXPECT_EQ(SplitSentences("Ask Mr. Smith. Ok.", cfg),
            (Sentences{"Ask Mr.", "Smith.", "Ok."}));
}

TEST(SplitterTest, ConservesCharacters) {
  std::mt19937 rng(11);
  const char *words[] = {"Mr.", "Smith", "left.", "he", "It", "was", "Co.",
                         "THE", "end!", "Why?", "\"Yes.\"", "3.5", "ok",
                         "\n", "  "};
  for (int i = 0; i < 500; ++i) {
    std::string text;
    int n = std::uniform_int_distribution<int>(0, 20)(rng);
    for (int k = 0; k < n; ++k) {
      text += words[std::uniform_int_distribution<int>(0, 14)(rng)];
      text += ' ';
    }
    Sentences out = Split(text);
    std::string joined;
    for (const std::string &s : out) {
      EXPECT_FALSE(s.empty());
      joined += (joined.empty() ? "" : " ") + s;
    }
    EXPECT_EQ(Collapse(joined), Collapse(text)) << text;
  }
}

}  // namespace
}  // namespace rap

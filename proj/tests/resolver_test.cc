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

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>

#include "test_support.h"

namespace rap {
namespace {

using testing::TestLexicons;

std::string Pairs(const std::string &trees, const ResolverConfig &cfg = {}) {
  Document doc = ReadTrees(trees);
  return RenderPairs(ResolveDocument(doc, TestLexicons(), cfg), doc);
}

std::string Annotated(const std::string &trees) {
  Document doc = ReadTrees(trees);
  return RenderAnnotated(ResolveDocument(doc, TestLexicons()), doc);
}

std::string Substituted(const std::string &trees) {
  Document doc = ReadTrees(trees);
  return RenderSubstituted(ResolveDocument(doc, TestLexicons()), doc);
}

constexpr char kWorkTree[] =
    "(S1 (S (NP (PRP He)) (VP (MD 'll) (VP (VB work) (PP (IN at) "
    "(NP (DT the) (NN factory))))) (. .)))";
constexpr char kHimselfTree[] =
    "(S1 (S (NP (PRP He)) (VP (VBD worked) (PP (IN by) (NP (PRP himself)))) "
    "(. .)))";

std::string Filler(const std::string &name) {
  return "(S1 (S (NP (NNP " + name + ")) (VP (VBD left)) (. .)))\n";
}

TEST(ResolverTest, WorkAtFactoryHeIsUnresolved) {
  EXPECT_EQ(Pairs(kWorkTree), "0:0-0 \"He\" NULL\n");
}

TEST(ResolverTest, ReflexiveBindsToSubject) {
  EXPECT_EQ(Pairs(kHimselfTree),
            "0:0-0 \"He\" NULL\n0:3-3 \"himself\" <- 0:0-0 \"He\"\n");
}

TEST(ResolverTest, PleonasticRecord) {
  EXPECT_EQ(Pairs(Filler("John") +
                  "(S1 (S (NP (PRP It)) (VP (VBZ seems) (SBAR (IN that) (S "
                  "(NP (NNP John)) (VP (VBD left))))) (. .)))"),
            "1:0-0 \"It\" PLEONASTIC\n");
}

TEST(ResolverTest, CandidateWindow) {
  std::string trees;
  const char *names[] = {"John", "Bill", "Tom", "Sam", "Jim"};
  for (const char *n : names) trees += Filler(n);
  trees += "(S1 (S (NP (PRP He)) (VP (VBD saw) (NP (DT the) (NN dog))) (. .)))";
  Document doc = ReadTrees(trees);
  auto mentions = ExtractNounPhrases(doc, TestLexicons());
  auto anaphors = ExtractAnaphors(doc, TestLexicons());
  ASSERT_EQ(anaphors.size(), 1u);

  auto sentences = [&](int window) {
    ResolverConfig cfg;
    cfg.window_sentences = window;
    std::set<int> out;
    for (const Mention &m : CandidateSet(anaphors[0], doc, mentions, cfg)) {
      out.insert(m.sentence);
    }
    return out;
  };
  EXPECT_EQ(sentences(3), (std::set<int>{2, 3, 4, 5}));
  EXPECT_EQ(sentences(0), (std::set<int>{5}));
  EXPECT_EQ(sentences(10), (std::set<int>{0, 1, 2, 3, 4, 5}));
}

TEST(ResolverTest, WindowClippedAtDocumentStart) {
  Document doc = ReadTrees(
      "(S1 (S (NP (NNP John)) (VP (VBD told) (NP (PRP him)) (PP (IN about) "
      "(NP (DT the) (NN dog)))) (. .)))");
  auto mentions = ExtractNounPhrases(doc, TestLexicons());
  auto anaphors = ExtractAnaphors(doc, TestLexicons());
  ASSERT_EQ(anaphors.size(), 1u);
  auto cands = CandidateSet(anaphors[0], doc, mentions, {});
  EXPECT_EQ(cands.size(), 2u);
}

TEST(ResolverTest, TieGoesToNearerCandidate) {
  const std::string trees =
      "(S1 (S (NP (NNP John)) (VP (VBD saw) (NP (NNP Bill))) (. .)))\n"
      "(S1 (S (NP (PRP He)) (VP (VBD smiled)) (. .)))";
  EXPECT_EQ(Pairs(trees), "1:0-0 \"He\" <- 0:0-0 \"John\"\n");
  // With every weight zeroed all candidates tie.
  ResolverConfig flat;
  flat.weights = {0, 0, 0, 0, 0, 0, 0};
  EXPECT_EQ(Pairs(trees, flat), "1:0-0 \"He\" <- 0:2-2 \"Bill\"\n");
}

TEST(ResolverTest, PronounNeverTakesLaterPronoun) {
  EXPECT_EQ(Pairs("(S1 (S (NP (PRP She)) (VP (VBD found) (NP (DT a) (NN key)) "
                  "(PP (IN in) (NP (PRP$ her) (NN bag)))) (. .)))"),
            "0:0-0 \"She\" NULL\n0:5-5 \"her\" <- 0:0-0 \"She\"\n");
}

TEST(ResolverTest, AnnotatedRendering) {
  EXPECT_EQ(Annotated(kHimselfTree), "He [?] worked by himself [=He] .\n");
  EXPECT_EQ(Annotated("(S1 (S (NP (NNP John)) (VP (VBD left)) (. .)))"),
            "John left .\n");
  EXPECT_EQ(Annotated("(S1 (S (NP (PRP It)) (VP (VBZ is) (NP (NN time) (S "
                      "(VP (TO to) (VP (VB go)))))) (. .)))"),
            "It [pleo] is time to go .\n");
}

TEST(ResolverTest, SubstitutedRendering) {
  EXPECT_EQ(Substituted("(S1 (S (NP (NNP John)) (VP (VBD said) (SBAR (S "
                        "(NP (PRP he)) (VP (VBD left))))) (. .)))"),
            "John said John left.\n");
  EXPECT_EQ(Substituted("(S1 (S (NP (NNP John)) (VP (VBD lost) (NP (PRP$ his) "
                        "(NN dog))) (. .)))"),
            "John lost John's dog.\n");
  EXPECT_EQ(Substituted(kWorkTree), "He'll work at the factory.\n");
}

TEST(ResolverTest, MiniCorpusGoldenFiles) {
  Document doc = ReadTrees(
      testing::ReadFileOrDie(testing::TestDataPath("mini_corpus.mrg")));
  auto records = ResolveDocument(doc, TestLexicons());
  EXPECT_EQ(RenderPairs(records, doc),
            testing::ReadFileOrDie(testing::TestDataPath("mini_corpus.pairs")));
  EXPECT_EQ(
      RenderAnnotated(records, doc),
      testing::ReadFileOrDie(testing::TestDataPath("mini_corpus.annotated")));
  EXPECT_EQ(
      RenderSubstituted(records, doc),
      testing::ReadFileOrDie(testing::TestDataPath("mini_corpus.substituted")));
}

TEST(ResolverTest, RandomDocumentInvariants) {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Document doc = ReadTrees(testing::RandomDocument(rng));
    ResolverConfig cfg;
    cfg.window_sentences = i % 4;
    auto records = ResolveDocument(doc, TestLexicons(), cfg);
    EXPECT_EQ(RenderPairs(records, doc),
              RenderPairs(ResolveDocument(doc, TestLexicons(), cfg), doc));
    for (const ResolutionRecord &r : records) {
      const int s = r.anaphor.mention.sentence;
      if (r.status == ResolutionStatus::kPleonastic) {
        EXPECT_TRUE(r.candidates.empty());
      }
      if (r.status != ResolutionStatus::kResolved) continue;
      ASSERT_TRUE(r.antecedent);
      EXPECT_LE(r.antecedent->sentence, s);
      EXPECT_GE(r.antecedent->sentence, s - cfg.window_sentences);
      EXPECT_FALSE(r.antecedent->lexical_anaphor);
      EXPECT_FALSE(r.antecedent->non_referential);
      EXPECT_TRUE(MorphologicallyCompatible(r.anaphor.mention.agreement,
                                            r.antecedent->agreement));
    }
  }
}

}  // namespace
}  // namespace rap

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

#include "rap/binding.h"

#include <gtest/gtest.h>

#include <string>

#include "rap/resolver.h"
#include "rap/structure.h"
#include "test_support.h"

namespace rap {
namespace {

using testing::TestLexicons;

NodeId NodeOf(const Document &doc, const std::string &text,
              std::string_view label = "NP") {
  for (const TreeNode &n : doc.nodes()) {
    if (doc.label(n.id) == label && doc.SurfaceText(n.id) == text) return n.id;
  }
  ADD_FAILURE() << "no " << label << " \"" << text << "\"";
  return -1;
}

TEST(BindingTest, FilterExamples) {
  auto examples = testing::LoadFilterExamples();
  ASSERT_GE(examples.size(), 11u);
  for (const auto &ex : examples) {
    SCOPED_TRACE(ex.rule + ": " + ex.anaphor + " / " + ex.candidate);
    auto got = testing::VerdictFor(ex);
    ASSERT_TRUE(got.found) << got.error;
    EXPECT_EQ(got.verdict.admissible, ex.admissible);
    EXPECT_EQ(got.verdict.rule, ex.rule);
  }
}

TEST(BindingTest, ArgumentDomain) {
  Document doc = ReadTrees(
      "(S (NP (PRP She)) (VP (VBZ likes) (NP (PRP her))))");
  EXPECT_TRUE(InArgumentDomain(doc, NodeOf(doc, "her"), NodeOf(doc, "She")));
  EXPECT_TRUE(InArgumentDomain(doc, NodeOf(doc, "She"), NodeOf(doc, "her")));
}

TEST(BindingTest, CoordinatedSubjectsShareArgumentHead) {
  Document doc = ReadTrees(
      "(S (NP (NP (NNP John)) (CC and) (NP (NNP Mary))) (VP (VBD left)))");
  EXPECT_EQ(ArgumentHead(doc, NodeOf(doc, "John")),
            ArgumentHead(doc, NodeOf(doc, "Mary")));
  EXPECT_TRUE(InArgumentDomain(doc, NodeOf(doc, "John"), NodeOf(doc, "Mary")));
}

TEST(BindingTest, AdjunctDomain) {
  Document doc = ReadTrees(
      "(S (NP (PRP She)) (VP (VBD sat) (PP (IN near) (NP (PRP her)))))");
  EXPECT_TRUE(InAdjunctDomain(doc, NodeOf(doc, "her"), NodeOf(doc, "She")));
  EXPECT_FALSE(InArgumentDomain(doc, NodeOf(doc, "her"), NodeOf(doc, "She")));
}

TEST(BindingTest, NpDomain) {
  Document doc = ReadTrees(
      "(S (NP (NP (NNP John) (POS 's)) (NN portrait) (PP (IN of) "
      "(NP (PRP him)))) (VP (VBZ is) (ADJP (JJ interesting))))");
  EXPECT_TRUE(InNpDomain(doc, NodeOf(doc, "him"), NodeOf(doc, "John 's")));
}

TEST(BindingTest, EmbeddedClauseContainment) {
  Document doc = ReadTrees(
      "(S (NP (PRP He)) (VP (VBZ believes) (SBAR (IN that) (S (NP (DT the) "
      "(NN man)) (VP (VBZ is) (ADJP (JJ amusing)))))))");
  NodeId man = NodeOf(doc, "the man");
  auto head = ArgumentHead(doc, NodeOf(doc, "He"));
  ASSERT_TRUE(head);
  EXPECT_TRUE(ContainedIn(doc, man, *head));
  EXPECT_FALSE(ContainedIn(doc, *head, man));
}

TEST(BindingTest, PossessorIsNotContainedInItsNoun) {
  Document doc = ReadTrees(
      "(S (NP (NP (NNP Mary) (POS 's)) (NN mother)) (VP (VBD saw) "
      "(NP (PRP her))))");
  EXPECT_FALSE(ContainedIn(doc, NodeOf(doc, "Mary 's"),
                           NodeOf(doc, "Mary 's mother")));
}

TEST(BindingTest, ContainmentMatchesOracleOnCorpus) {
  int pairs = 0;
  for (const std::string &text : testing::AllCorpusTrees()) {
    Document doc = ReadTrees(text);
    std::vector<NodeId> phrases;
    for (const TreeNode &n : doc.nodes()) {
      if (doc.HasLabel(n.id, "NP") || doc.HasLabel(n.id, "VP")) {
        phrases.push_back(n.id);
      }
    }
    for (NodeId p : phrases) {
      for (NodeId q : phrases) {
        ++pairs;
        EXPECT_EQ(ContainedIn(doc, p, q), testing::OracleContainedIn(doc, p, q))
            << text << "\n  p=" << doc.SurfaceText(p) << " q=" << doc.label(q)
            << " " << doc.SurfaceText(q);
      }
    }
  }
  EXPECT_GT(pairs, 1000);
}

TEST(BindingTest, MorphologicalCompatibility) {
  AgreementFeatures he{Number::kSingular, Person::kThird, Gender::kMasculine,
                       Animacy::kAnimate};
  AgreementFeatures she{Number::kSingular, Person::kThird, Gender::kFeminine,
                        Animacy::kAnimate};
  AgreementFeatures unknown;
  AgreementFeatures they{Number::kPlural, Person::kThird, Gender::kUnknown,
                         Animacy::kUnknown};
  AgreementFeatures it{Number::kSingular, Person::kThird, Gender::kUnknown,
                       Animacy::kInanimate};
  AgreementFeatures me{Number::kSingular, Person::kFirst, Gender::kUnknown,
                       Animacy::kAnimate};
  EXPECT_TRUE(MorphologicallyCompatible(he, unknown));
  EXPECT_FALSE(MorphologicallyCompatible(he, she));
  EXPECT_FALSE(MorphologicallyCompatible(he, they));
  EXPECT_FALSE(MorphologicallyCompatible(he, it));
  EXPECT_FALSE(MorphologicallyCompatible(he, me));
  EXPECT_TRUE(MorphologicallyCompatible(they, unknown));
}

}  // namespace
}  // namespace rap

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

#include "rap/pleonastic.h"

#include <gtest/gtest.h>

#include <string>

#include "rap/mentions.h"
#include "rap/resolver.h"
#include "test_support.h"

namespace rap {
namespace {

using testing::TestLexicons;

NodeId ItLeaf(const Document &doc) {
  for (const TreeNode &n : doc.nodes()) {
    if (n.token && ToLower(*n.token) == "it") return n.id;
  }
  ADD_FAILURE() << "no it";
  return -1;
}

PleonasticPattern PatternOf(const std::string &tree) {
  Document doc = ReadTrees(tree);
  return MatchPleonastic(doc, ItLeaf(doc), TestLexicons());
}

TEST(PleonasticTest, CorpusExamples) {
  auto examples = testing::LoadPleonasticExamples();
  int positive = 0, negative = 0;
  for (const auto &ex : examples) {
    Document doc = ReadTrees(ex.tree);
    EXPECT_EQ(DetectPleonastic(doc, ItLeaf(doc), TestLexicons()), ex.pleonastic)
        << ex.note << ": " << ex.tree;
    (ex.pleonastic ? positive : negative)++;
  }
  EXPECT_GE(positive, 10);
  EXPECT_GE(negative, 5);
}

TEST(PleonasticTest, PatternsAreDistinguished) {
  EXPECT_EQ(PatternOf("(S (NP (PRP It)) (VP (VBZ is) (ADJP (JJ necessary)) "
                      "(SBAR (IN that) (S (NP (PRP we)) (VP (VBP leave))))))"),
            PleonasticPattern::kModalThat);
  EXPECT_EQ(PatternOf("(S (NP (PRP It)) (VP (VBZ seems) (SBAR (IN that) "
                      "(S (NP (NN nobody)) (VP (VBZ cares))))))"),
            PleonasticPattern::kSeemClause);
  EXPECT_EQ(PatternOf("(S (NP (PRP It)) (VP (VBZ is) (NP (NN time) "
                      "(S (VP (TO to) (VP (VB go)))))))"),
            PleonasticPattern::kTimeTo);
  EXPECT_EQ(PatternOf("(S (NP (PRP It)) (VP (VBZ is) (ADJP (JJ old))))"),
            PleonasticPattern::kNone);
}

TEST(PleonasticTest, PleonasticItIsNeverAnAntecedent) {
  Document doc = ReadTrees(
      "(S1 (S (NP (PRP It)) (VP (VBZ is) (ADJP (JJ important)) (SBAR (IN that) "
      "(S (NP (PRP we)) (VP (VBP leave))))) (. .)))\n"
      "(S1 (S (NP (PRP It)) (VP (VBZ is) (ADJP (JJ old))) (. .)))");
  auto records = ResolveDocument(doc, TestLexicons());
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].status, ResolutionStatus::kPleonastic);
  EXPECT_TRUE(records[0].candidates.empty());
  EXPECT_NE(records[1].status, ResolutionStatus::kResolved);
  for (const auto &c : records[1].candidates) {
    EXPECT_NE(c.mention.node, records[0].anaphor.mention.node);
  }
}

}  // namespace
}  // namespace rap

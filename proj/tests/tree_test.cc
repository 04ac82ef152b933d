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

#include "rap/tree.h"

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "test_support.h"

namespace rap {
namespace {

constexpr char kWorkTree[] =
    "(S1 (S (NP (PRP He)) (VP (MD 'll) (VP (VB work) (PP (IN at) "
    "(NP (DT the) (NN factory)))))))";

NodeId FindLeaf(const Document &doc, const std::string &token) {
  for (const TreeNode &n : doc.nodes()) {
    if (n.token == token) return n.id;
  }
  ADD_FAILURE() << "no leaf " << token;
  return -1;
}

// First node with the label, in pre-order.
NodeId FindLabel(const Document &doc, std::string_view label, int nth = 0) {
  for (const TreeNode &n : doc.nodes()) {
    if (doc.label(n.id) == label && nth-- == 0) return n.id;
  }
  ADD_FAILURE() << "no node " << label;
  return -1;
}

std::vector<std::string> Labels(const Document &doc,
                                const std::vector<NodeId> &ids) {
  std::vector<std::string> out;
  for (NodeId id : ids) out.emplace_back(doc.label(id));
  return out;
}

TEST(TreeTest, ReadsWorkAtFactoryTree) {
  Document doc = ReadTrees(kWorkTree);
  ASSERT_EQ(doc.num_sentences(), 1);
  auto tokens = doc.tokens(0);
  EXPECT_EQ(std::vector<std::string>(tokens.begin(), tokens.end()),
            (std::vector<std::string>{"He", "'ll", "work", "at", "the",
                                      "factory"}));
  int nps = 0;
  for (const TreeNode &n : doc.nodes()) nps += doc.label(n.id) == "NP";
  EXPECT_EQ(nps, 2);
}

TEST(TreeTest, ReadsMinimalTree) {
  Document doc = ReadTrees("(X (Y a))");
  ASSERT_EQ(doc.num_sentences(), 1);
  ASSERT_EQ(doc.tokens(0).size(), 1u);
  EXPECT_EQ(doc.tokens(0)[0], "a");
}

TEST(TreeTest, UnbalancedInputReportsOffset) {
  // The input has 15 characters; the missing brackets are found at its end.
  try {
    ReadTrees("(S (NP (PRP He)");
    FAIL() << "expected ParseError";
  } catch (const ParseError &e) {
    EXPECT_EQ(e.offset(), 15u);
  }
}

TEST(TreeTest, EmptyInputIsAnError) {
  EXPECT_THROW(ReadTrees(""), ParseError);
  EXPECT_THROW(ReadTrees("   \n"), ParseError);
}

TEST(TreeTest, StrayCloseBracketIsAnError) {
  EXPECT_THROW(ReadTrees("(S (NP (PRP He))))"), ParseError);
}

TEST(TreeTest, TreesSpanLinesAndShareLines) {
  Document doc = ReadTrees("(S (NP (NNP A)) (VP (VBD b))) (S (NP (NNP C))\n"
                           "  (VP (VBD d)))");
  ASSERT_EQ(doc.num_sentences(), 2);
  EXPECT_EQ(doc.sentence_offset(1), 2);
  EXPECT_EQ(doc.num_tokens(), 4);
}

TEST(TreeTest, AncestorsOfPronounLeaf) {
  Document doc = ReadTrees(kWorkTree);
  EXPECT_EQ(Labels(doc, doc.Ancestors(FindLeaf(doc, "He"))),
            (std::vector<std::string>{"NP", "S", "S1"}));
}

TEST(TreeTest, AncestorsOfNounLeaf) {
  Document doc = ReadTrees(kWorkTree);
  EXPECT_EQ(Labels(doc, doc.Ancestors(FindLeaf(doc, "factory"))),
            (std::vector<std::string>{"NP", "PP", "VP", "VP", "S", "S1"}));
}

TEST(TreeTest, RootHasNoAncestors) {
  Document doc = ReadTrees(kWorkTree);
  EXPECT_TRUE(doc.Ancestors(doc.root(0)).empty());
}

TEST(TreeTest, FollowingSibling) {
  Document doc = ReadTrees("(S (NP (NNP John)) (VP (VBD left)))");
  NodeId np = FindLabel(doc, "NP");
  NodeId vp = FindLabel(doc, "VP");
  EXPECT_EQ(doc.FollowingSibling(np, "VP"), vp);
  EXPECT_EQ(doc.FollowingSibling(vp, "NP"), std::nullopt);

  Document adv =
      ReadTrees("(S (NP (NNP John)) (ADVP (RB then)) (VP (VBD left)))");
  EXPECT_EQ(adv.FollowingSibling(FindLabel(adv, "NP"), "VP"),
            FindLabel(adv, "VP"));
}

TEST(TreeTest, PrecedingSiblingIsNearest) {
  Document doc = ReadTrees(
      "(S (NP (NP (NP (NNP John) (POS 's)) (NN portrait) (PP (IN of) "
      "(NP (PRP him))))))");
  NodeId pp = FindLabel(doc, "PP");
  NodeId possessor = FindLabel(doc, "NP", 2);
  EXPECT_EQ(doc.PrecedingSibling(pp, "NP"), possessor);
  EXPECT_EQ(doc.PrecedingSibling(possessor, "NN"), std::nullopt);

  Document two = ReadTrees(
      "(S (NP (NP (DT a)) (NP (DT b)) (PP (IN of) (NP (DT c)))))");
  auto b = two.PrecedingSibling(FindLabel(two, "PP"), "NP");
  ASSERT_TRUE(b);
  EXPECT_EQ(two.SurfaceText(*b), "b");
}

TEST(TreeTest, BaseLabelStripsFunctionTags) {
  EXPECT_EQ(BaseLabel("NP-SBJ-1"), "NP");
  EXPECT_EQ(BaseLabel("PP=2"), "PP");
  EXPECT_EQ(BaseLabel("-LRB-"), "-LRB-");
  EXPECT_EQ(BaseLabel("-NONE-"), "-NONE-");
}

TEST(TreeTest, PunctuationSkippedInSurfaceText) {
  Document doc = ReadTrees("(S (NP (NNP John) (, ,) (NNP Jr.)) (. .))");
  EXPECT_EQ(doc.SurfaceText(FindLabel(doc, "NP")), "John Jr.");
}

TEST(TreeTest, CorpusInvariantsAndRoundTrip) {
  for (const std::string &text : testing::AllCorpusTrees()) {
    Document doc = ReadTrees(text);
    for (const TreeNode &n : doc.nodes()) {
      EXPECT_EQ(n.token.has_value(), n.is_leaf()) << text;
      for (NodeId a : doc.Ancestors(n.id)) {
        EXPECT_TRUE(doc.node(a).span.Contains(n.span)) << text;
      }
      for (NodeId c : n.children) EXPECT_EQ(doc.parent(c), n.id);
    }
    for (int s = 0; s < doc.num_sentences(); ++s) {
      auto leaves = doc.leaves(s);
      auto tokens = doc.tokens(s);
      ASSERT_EQ(leaves.size(), tokens.size());
      for (size_t i = 0; i < leaves.size(); ++i) {
        EXPECT_EQ(doc.node(leaves[i]).token, tokens[i]);
      }
    }
    Document again = ReadTrees(doc.ToBracketed());
    ASSERT_EQ(again.nodes().size(), doc.nodes().size()) << text;
    for (size_t i = 0; i < doc.nodes().size(); ++i) {
      EXPECT_EQ(again.nodes()[i].label, doc.nodes()[i].label);
      EXPECT_EQ(again.nodes()[i].token, doc.nodes()[i].token);
      EXPECT_EQ(again.nodes()[i].children, doc.nodes()[i].children);
    }
  }
}

}  // namespace
}  // namespace rap

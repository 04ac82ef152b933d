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

#ifndef RAP_TREE_H_
#define RAP_TREE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rap {

using NodeId = int;

// Inclusive token range within one sentence.
struct Span {
  int first = 0;
  int last = 0;

  bool Contains(const Span &other) const {
    return first <= other.first && other.last <= last;
  }
  bool operator==(const Span &other) const = default;
};

// One constituent or preterminal of a bracketed parse tree. Preterminals
// such as (NN factory) are single nodes carrying the token; they are the
// leaves of the tree.
struct TreeNode {
  NodeId id = -1;
  std::string label;
  std::optional<std::string> token;
  std::vector<NodeId> children;
  std::optional<NodeId> parent;
  Span span;
  int sentence = 0;

  bool is_leaf() const { return children.empty(); }
};

// Raised for malformed bracketed input. The offset is a byte offset into
// the text handed to ReadTrees.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string &what, size_t offset)
      : std::runtime_error(what), offset_(offset) {}

  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

// Returns the syntactic category of a label with any function tags or
// co-index suffixes removed ("NP-SBJ-1" -> "NP"). Bracket tokens such as
// "-LRB-" are returned unchanged.
std::string_view BaseLabel(std::string_view label);

// True for leaves whose tag marks punctuation (., ,, :, ``, '', -LRB-, ...).
bool IsPunctuationTag(std::string_view tag);

// An immutable collection of parsed sentences. Node ids index into one
// table shared by all sentences and increase in pre-order.
class Document {
 public:
  Document() = default;

  int num_sentences() const { return static_cast<int>(roots_.size()); }
  bool empty() const { return roots_.empty(); }

  NodeId root(int sentence) const { return roots_.at(sentence); }
  const TreeNode &node(NodeId id) const { return nodes_.at(id); }
  const std::vector<TreeNode> &nodes() const { return nodes_; }

  // Leaves of a sentence in surface order; leaves(s)[i] holds token i.
  std::span<const NodeId> leaves(int sentence) const {
    return leaves_.at(sentence);
  }
  std::span<const std::string> tokens(int sentence) const {
    return tokens_.at(sentence);
  }

  // Index of the first token of a sentence within the whole document.
  int sentence_offset(int sentence) const { return offsets_.at(sentence); }
  int num_tokens() const;

  std::string_view label(NodeId id) const { return BaseLabel(node(id).label); }
  bool HasLabel(NodeId id, std::string_view label) const {
    return this->label(id) == label;
  }
  std::optional<NodeId> parent(NodeId id) const { return node(id).parent; }

  // First sibling after n with the given category.
  std::optional<NodeId> FollowingSibling(NodeId n,
                                         std::string_view label) const;

  // Nearest sibling before n with the given category. Earlier siblings with
  // other labels may lie in between.
  std::optional<NodeId> PrecedingSibling(NodeId n,
                                         std::string_view label) const;

  // Parent chain from the immediate parent up to the sentence root.
  std::vector<NodeId> Ancestors(NodeId n) const;

  // True if a is a proper ancestor of d.
  bool Dominates(NodeId a, NodeId d) const;

  // Index of n among its parent's children, or 0 for a root.
  int ChildIndex(NodeId n) const;

  // Leaves covered by n in surface order.
  std::vector<NodeId> LeavesUnder(NodeId n) const;

  // Tokens under n joined by single spaces, punctuation leaves skipped.
  std::string SurfaceText(NodeId n) const;

  // Renders sentences back to bracketed notation, one tree per line.
  std::string ToBracketed() const;
  std::string ToBracketed(int sentence) const;

 private:
  friend Document ReadTrees(std::string_view text);

  std::vector<TreeNode> nodes_;
  std::vector<NodeId> roots_;
  std::vector<std::vector<NodeId>> leaves_;
  std::vector<std::vector<std::string>> tokens_;
  std::vector<int> offsets_;
};

// Reads one or more bracketed trees. Trees may share a line or span several
// lines; boundaries come from parenthesis balance alone. Throws ParseError on
// unbalanced or structurally invalid input, and on input without any tree.
Document ReadTrees(std::string_view text);

}  // namespace rap

#endif  // RAP_TREE_H_

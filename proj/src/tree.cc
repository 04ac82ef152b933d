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

#include <algorithm>
#include <cctype>

namespace rap {

std::string_view BaseLabel(std::string_view label) {
  if (label.empty() || label.front() == '-') return label;
  size_t cut = label.find_first_of("-=");
  if (cut == std::string_view::npos) return label;
  return label.substr(0, cut);
}

bool IsPunctuationTag(std::string_view tag) {
  static constexpr std::string_view kTags[] = {
      ".", ",", ":", "``", "''", "\"", "-LRB-", "-RRB-", "-LCB-", "-RCB-",
      "#", "$", "-NONE-"};
  return std::find(std::begin(kTags), std::end(kTags), tag) != std::end(kTags);
}

namespace {

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)); }

// Recursive-descent reader producing nodes in pre-order.
class TreeReader {
 public:
  TreeReader(std::string_view text, std::vector<TreeNode> *nodes)
      : text_(text), nodes_(nodes) {}

  bool AtEnd() {
    SkipSpace();
    return pos_ >= text_.size();
  }

  // Reads one complete tree starting at the next '('.
  NodeId ReadTree(int sentence) {
    SkipSpace();
    if (text_[pos_] != '(') {
      if (text_[pos_] == ')') {
        throw ParseError("unbalanced ')' at offset " + std::to_string(pos_),
                         pos_);
      }
      throw ParseError(
          "expected '(' at offset " + std::to_string(pos_), pos_);
    }
    return ReadNode(std::nullopt, sentence);
  }

 private:
  void SkipSpace() {
    while (pos_ < text_.size() && IsSpace(text_[pos_])) ++pos_;
  }

  [[noreturn]] void Unbalanced() {
    throw ParseError("unbalanced at offset " + std::to_string(text_.size()),
                     text_.size());
  }

  std::string ReadAtom() {
    size_t start = pos_;
    while (pos_ < text_.size() && !IsSpace(text_[pos_]) &&
           text_[pos_] != '(' && text_[pos_] != ')') {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  NodeId ReadNode(std::optional<NodeId> parent, int sentence) {
    size_t open = pos_;
    ++pos_;  // '('
    NodeId id = static_cast<NodeId>(nodes_->size());
    nodes_->emplace_back();
    (*nodes_)[id].id = id;
    (*nodes_)[id].parent = parent;
    (*nodes_)[id].sentence = sentence;

    SkipSpace();
    if (pos_ >= text_.size()) Unbalanced();
    std::string label;
    if (text_[pos_] != '(' && text_[pos_] != ')') label = ReadAtom();

    std::optional<std::string> token;
    std::vector<NodeId> children;
    while (true) {
      SkipSpace();
      if (pos_ >= text_.size()) Unbalanced();
      char c = text_[pos_];
      if (c == ')') {
        ++pos_;
        break;
      }
      if (c == '(') {
        if (token) {
          throw ParseError("leaf '" + *token + "' at offset " +
                               std::to_string(open) + " has children",
                           pos_);
        }
        children.push_back(ReadNode(id, sentence));
        continue;
      }
      size_t atom_at = pos_;
      std::string atom = ReadAtom();
      if (token || !children.empty()) {
        throw ParseError("unexpected token '" + atom + "' at offset " +
                             std::to_string(atom_at),
                         atom_at);
      }
      token = std::move(atom);
    }
    if (!token && children.empty()) {
      throw ParseError("empty constituent at offset " + std::to_string(open),
                       open);
    }
    TreeNode &node = (*nodes_)[id];
    node.label = std::move(label);
    node.token = std::move(token);
    node.children = std::move(children);
    return id;
  }

  std::string_view text_;
  std::vector<TreeNode> *nodes_;
  size_t pos_ = 0;
};

void AssignSpans(std::vector<TreeNode> &nodes, NodeId id, int *next_token,
                 std::vector<NodeId> *leaves,
                 std::vector<std::string> *tokens) {
  TreeNode &n = nodes[id];
  if (n.is_leaf()) {
    n.span = {*next_token, *next_token};
    ++*next_token;
    leaves->push_back(id);
    tokens->push_back(*n.token);
    return;
  }
  int first = *next_token;
  for (NodeId c : n.children) {
    AssignSpans(nodes, c, next_token, leaves, tokens);
  }
  nodes[id].span = {first, *next_token - 1};
}

void Render(const Document &doc, NodeId id, std::string *out) {
  const TreeNode &n = doc.node(id);
  out->push_back('(');
  out->append(n.label);
  if (n.is_leaf()) {
    out->push_back(' ');
    out->append(*n.token);
  } else {
    for (NodeId c : n.children) {
      out->push_back(' ');
      Render(doc, c, out);
    }
  }
  out->push_back(')');
}

}  // namespace

Document ReadTrees(std::string_view text) {
  Document doc;
  TreeReader reader(text, &doc.nodes_);
  int offset = 0;
  while (!reader.AtEnd()) {
    int sentence = doc.num_sentences();
    NodeId root = reader.ReadTree(sentence);
    if (doc.nodes_[root].label.empty()) doc.nodes_[root].label = "ROOT";
    doc.roots_.push_back(root);
    doc.leaves_.emplace_back();
    doc.tokens_.emplace_back();
    int next_token = 0;
    AssignSpans(doc.nodes_, root, &next_token, &doc.leaves_.back(),
                &doc.tokens_.back());
    doc.offsets_.push_back(offset);
    offset += next_token;
  }
  if (doc.roots_.empty()) throw ParseError("empty input", 0);
  return doc;
}

int Document::num_tokens() const {
  if (offsets_.empty()) return 0;
  return offsets_.back() + static_cast<int>(tokens_.back().size());
}

std::optional<NodeId> Document::FollowingSibling(
    NodeId n, std::string_view label) const {
  auto p = parent(n);
  if (!p) return std::nullopt;
  const auto &sibs = node(*p).children;
  auto it = std::find(sibs.begin(), sibs.end(), n);
  for (++it; it != sibs.end(); ++it) {
    if (HasLabel(*it, label)) return *it;
  }
  return std::nullopt;
}

std::optional<NodeId> Document::PrecedingSibling(
    NodeId n, std::string_view label) const {
  auto p = parent(n);
  if (!p) return std::nullopt;
  const auto &sibs = node(*p).children;
  auto it = std::find(sibs.begin(), sibs.end(), n);
  while (it != sibs.begin()) {
    --it;
    if (HasLabel(*it, label)) return *it;
  }
  return std::nullopt;
}

std::vector<NodeId> Document::Ancestors(NodeId n) const {
  std::vector<NodeId> result;
  for (auto p = parent(n); p; p = parent(*p)) result.push_back(*p);
  return result;
}

bool Document::Dominates(NodeId a, NodeId d) const {
  for (auto p = parent(d); p; p = parent(*p)) {
    if (*p == a) return true;
  }
  return false;
}

int Document::ChildIndex(NodeId n) const {
  auto p = parent(n);
  if (!p) return 0;
  const auto &sibs = node(*p).children;
  return static_cast<int>(std::find(sibs.begin(), sibs.end(), n) -
                          sibs.begin());
}

std::vector<NodeId> Document::LeavesUnder(NodeId n) const {
  const TreeNode &t = node(n);
  auto all = leaves(t.sentence);
  return {all.begin() + t.span.first, all.begin() + t.span.last + 1};
}

std::string Document::SurfaceText(NodeId n) const {
  std::string out;
  for (NodeId leaf : LeavesUnder(n)) {
    if (IsPunctuationTag(label(leaf))) continue;
    if (!out.empty()) out.push_back(' ');
    out.append(*node(leaf).token);
  }
  return out;
}

std::string Document::ToBracketed(int sentence) const {
  std::string out;
  Render(*this, root(sentence), &out);
  return out;
}

std::string Document::ToBracketed() const {
  std::string out;
  for (int s = 0; s < num_sentences(); ++s) {
    out += ToBracketed(s);
    out.push_back('\n');
  }
  return out;
}

}  // namespace rap

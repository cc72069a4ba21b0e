#pragma once

// Series-parallel decomposition trees with K2 leaves and n-ary internal nodes.

#include "graph.hpp"
#include "param_vec.hpp"

#include <algorithm>
#include <cctype>
#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mwsp {

enum class NodeKind { Leaf = 0, Series = 1, Parallel = 2 };

class DecompTree {
 public:
  DecompTree() = default;  // a K2 leaf

  static DecompTree leaf() { return {}; }
  static DecompTree series(std::vector<DecompTree> children) {
    return {NodeKind::Series, std::move(children)};
  }
  static DecompTree parallel(std::vector<DecompTree> children) {
    return {NodeKind::Parallel, std::move(children)};
  }
  static DecompTree node(NodeKind kind, std::vector<DecompTree> children) {
    if (kind == NodeKind::Leaf) return leaf();
    return {kind, std::move(children)};
  }

  NodeKind kind() const { return kind_; }
  bool is_leaf() const { return kind_ == NodeKind::Leaf; }
  const std::vector<DecompTree>& children() const { return children_; }

  int leaf_count() const {
    if (is_leaf()) return 1;
    int n = 0;
    for (const auto& c : children_) n += c.leaf_count();
    return n;
  }

  // Leaf < Series < Parallel; same kinds by child count, then children.
  friend std::strong_ordering operator<=>(const DecompTree& a,
                                          const DecompTree& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    if (auto c = a.children_.size() <=> b.children_.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.children_.size(); ++i) {
      if (auto c = a.children_[i] <=> b.children_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }
  friend bool operator==(const DecompTree& a, const DecompTree& b) {
    return (a <=> b) == 0;
  }

 private:
  DecompTree(NodeKind kind, std::vector<DecompTree> children)
      : kind_(kind), children_(std::move(children)) {
    if (children_.size() < 2) {
      throw std::invalid_argument("internal tree node needs two children");
    }
  }

  NodeKind kind_ = NodeKind::Leaf;
  std::vector<DecompTree> children_;
};

inline NodeKind dual_kind(NodeKind k) {
  switch (k) {
    case NodeKind::Series: return NodeKind::Parallel;
    case NodeKind::Parallel: return NodeKind::Series;
    default: return NodeKind::Leaf;
  }
}

/// Folds ser/par over the tree (left to right), K2 at the leaves.
inline ParamVec eval_tree(const DecompTree& t) {
  if (t.is_leaf()) return k2_params();
  const auto& ch = t.children();
  ParamVec acc = eval_tree(ch.front());
  for (std::size_t i = 1; i < ch.size(); ++i) {
    acc = t.kind() == NodeKind::Series ? ser(acc, eval_tree(ch[i]))
                                       : par(acc, eval_tree(ch[i]));
  }
  return acc;
}

inline DecompTree dual_tree(const DecompTree& t) {
  if (t.is_leaf()) return t;
  std::vector<DecompTree> ch;
  ch.reserve(t.children().size());
  for (const auto& c : t.children()) ch.push_back(dual_tree(c));
  return DecompTree::node(dual_kind(t.kind()), std::move(ch));
}

/// The same graph with source and sink exchanged.
inline DecompTree reverse_tree(const DecompTree& t) {
  if (t.is_leaf()) return t;
  std::vector<DecompTree> ch;
  for (const auto& c : t.children()) ch.push_back(reverse_tree(c));
  if (t.kind() == NodeKind::Series) std::reverse(ch.begin(), ch.end());
  return DecompTree::node(t.kind(), std::move(ch));
}

/// Builds the graph: source is vertex 0, sink is vertex 1, and edges appear
/// in left-to-right leaf order.
inline TwoTerminalGraph realize(const DecompTree& t) {
  Multigraph g(2);
  auto build = [&g](auto&& self, const DecompTree& node, VertexId s,
                    VertexId e) -> void {
    if (node.is_leaf()) {
      g.add_edge(s, e);
      return;
    }
    const auto& ch = node.children();
    if (node.kind() == NodeKind::Parallel) {
      for (const auto& c : ch) self(self, c, s, e);
      return;
    }
    VertexId cur = s;
    for (std::size_t i = 0; i < ch.size(); ++i) {
      const VertexId next = i + 1 == ch.size() ? e : g.add_vertex();
      self(self, ch[i], cur, next);
      cur = next;
    }
  };
  build(build, t, 0, 1);
  return {std::move(g), 0, 1};
}

/// Flattens nested same-kind nodes and sorts parallel children. Series
/// children keep their order, so the source/sink orientation is preserved.
inline DecompTree oriented_canonical(const DecompTree& t) {
  if (t.is_leaf()) return t;
  std::vector<DecompTree> flat;
  for (const auto& c : t.children()) {
    DecompTree cc = oriented_canonical(c);
    if (cc.kind() == t.kind()) {
      for (const auto& g : cc.children()) flat.push_back(g);
    } else {
      flat.push_back(std::move(cc));
    }
  }
  if (t.kind() == NodeKind::Parallel) std::sort(flat.begin(), flat.end());
  return DecompTree::node(t.kind(), std::move(flat));
}

/// Canonical form up to associativity, commutativity of parallel connection
/// and reversal of the whole graph. Equal forms realize isomorphic
/// two-terminal graphs (terminals possibly swapped).
inline DecompTree canonical(const DecompTree& t) {
  DecompTree a = oriented_canonical(t);
  DecompTree b = oriented_canonical(reverse_tree(t));
  return b < a ? b : a;
}

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  DecompTree parse() {
    DecompTree t = expr();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    return text_[pos_];
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  DecompTree expr() {
    const char c = peek();
    if (c == 'K') {
      ++pos_;
      return DecompTree::leaf();
    }
    if (c != 'S' && c != 'P') fail("expected 'K', 'S' or 'P'");
    const std::size_t start = pos_;
    ++pos_;
    expect('(');
    std::vector<DecompTree> ch;
    ch.push_back(expr());
    while (peek() == ',') {
      ++pos_;
      ch.push_back(expr());
    }
    expect(')');
    if (ch.size() < 2) {
      throw ParseError("node needs at least two children", start);
    }
    return DecompTree::node(c == 'S' ? NodeKind::Series : NodeKind::Parallel,
                            std::move(ch));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// expr := "K" | "S(" expr ("," expr)+ ")" | "P(" expr ("," expr)+ ")"
inline DecompTree parse_expr(std::string_view text) {
  return detail::ExprParser(text).parse();
}

inline std::string to_expr(const DecompTree& t) {
  if (t.is_leaf()) return "K";
  std::string out = t.kind() == NodeKind::Series ? "S(" : "P(";
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    if (i) out += ",";
    out += to_expr(t.children()[i]);
  }
  return out + ")";
}

namespace detail {

class TreeEnumerator {
 public:
  // Oriented canonical trees with n leaves whose root is not of kind `not_root`.
  const std::vector<DecompTree>& trees(int n, NodeKind not_root) {
    auto key = std::make_pair(n, not_root);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<DecompTree> out;
    if (n == 1) {
      out.push_back(DecompTree::leaf());
    } else {
      for (NodeKind k : {NodeKind::Series, NodeKind::Parallel}) {
        if (k == not_root) continue;
        std::vector<DecompTree> prefix;
        sequences(n, k, prefix, out);
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  // Children of a `kind` node summing to `remaining` leaves. Parallel children
  // are generated in nondecreasing order.
  void sequences(int remaining, NodeKind kind, std::vector<DecompTree>& prefix,
                 std::vector<DecompTree>& out) {
    if (remaining == 0) {
      if (prefix.size() >= 2) out.push_back(DecompTree::node(kind, prefix));
      return;
    }
    for (int size = 1; size <= remaining; ++size) {
      if (prefix.empty() && size == remaining) continue;  // needs 2 children
      const std::vector<DecompTree> options = trees(size, kind);
      for (const auto& c : options) {
        if (kind == NodeKind::Parallel && !prefix.empty() && c < prefix.back()) {
          continue;
        }
        prefix.push_back(c);
        sequences(remaining - size, kind, prefix, out);
        prefix.pop_back();
      }
    }
  }

  std::map<std::pair<int, NodeKind>, std::vector<DecompTree>> memo_;
};

}  // namespace detail

/// Every two-terminal series-parallel graph with exactly n edges, once per
/// isomorphism class up to terminal reversal, as canonical trees.
inline std::vector<DecompTree> enumerate_trees(int n) {
  if (n < 1) return {};
  detail::TreeEnumerator gen;
  std::set<DecompTree> seen;
  for (const auto& t : gen.trees(n, NodeKind::Leaf)) seen.insert(canonical(t));
  return {seen.begin(), seen.end()};
}

}  // namespace mwsp

#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cogmean/error.hpp"
#include "cogmean/graph.hpp"

namespace cogmean {

enum class NodeKind : char { Leaf = 'L', Union = 'U', Join = 'J' };

/// Rooted tree whose leaves are the vertices of a cograph. A Union node is the
/// disjoint union of its children, a Join node their join.
///
/// Trees built through `node`, `parse_cotree` and the family constructors are
/// canonical: kinds alternate along every root-to-leaf path and children are
/// sorted by printed form. `raw` keeps whatever shape it is given.
class Cotree {
 public:
  static Cotree leaf() { return Cotree(NodeKind::Leaf, {}); }

  static Cotree raw(NodeKind kind, std::vector<Cotree> children) {
    if (kind == NodeKind::Leaf) {
      if (!children.empty()) throw Error(Errc::ArityError, "leaf with children");
      return leaf();
    }
    if (children.size() < 2)
      throw Error(Errc::ArityError, std::string(1, static_cast<char>(kind)) + " node needs at least 2 children");
    return Cotree(kind, std::move(children));
  }

  /// Canonical node: nested same-kind children are flattened, then sorted.
  static Cotree node(NodeKind kind, std::vector<Cotree> children);

  NodeKind kind() const { return kind_; }
  bool is_leaf() const { return kind_ == NodeKind::Leaf; }
  const std::vector<Cotree>& children() const { return children_; }
  int leaf_count() const { return leaves_; }

  friend bool operator==(const Cotree& a, const Cotree& b) {
    return a.kind_ == b.kind_ && a.leaves_ == b.leaves_ && a.children_ == b.children_;
  }

 private:
  Cotree(NodeKind kind, std::vector<Cotree> children) : kind_(kind), children_(std::move(children)) {
    leaves_ = 0;
    for (const Cotree& c : children_) leaves_ += c.leaves_;
    if (kind_ == NodeKind::Leaf) leaves_ = 1;
  }

  NodeKind kind_;
  std::vector<Cotree> children_;
  int leaves_ = 1;
};

inline void format_cotree(const Cotree& t, std::string& out) {
  out.push_back(static_cast<char>(t.kind()));
  if (t.is_leaf()) return;
  out.push_back('(');
  bool first = true;
  for (const Cotree& c : t.children()) {
    if (!first) out.push_back(',');
    first = false;
    format_cotree(c, out);
  }
  out.push_back(')');
}

inline std::string format_cotree(const Cotree& t) {
  std::string out;
  format_cotree(t, out);
  return out;
}

namespace detail {

struct Keyed {
  Cotree tree;
  std::string key;
};

inline Keyed canonical_keyed(const Cotree& t) {
  if (t.is_leaf()) return {t, "L"};
  std::vector<Keyed> kids;
  for (const Cotree& c : t.children()) {
    Keyed k = canonical_keyed(c);
    if (k.tree.kind() == t.kind()) {
      for (const Cotree& g : k.tree.children()) kids.push_back({g, format_cotree(g)});
    } else {
      kids.push_back(std::move(k));
    }
  }
  std::sort(kids.begin(), kids.end(), [](const Keyed& a, const Keyed& b) { return a.key < b.key; });
  std::vector<Cotree> children;
  std::string key(1, static_cast<char>(t.kind()));
  key.push_back('(');
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (i) key.push_back(',');
    key += kids[i].key;
    children.push_back(std::move(kids[i].tree));
  }
  key.push_back(')');
  return {Cotree::raw(t.kind(), std::move(children)), std::move(key)};
}

}  // namespace detail

/// Flattens same-kind nesting and sorts children by printed form
/// ('J' < 'L' < 'U'). Equal results <=> isomorphic cographs.
inline Cotree canonicalize(const Cotree& t) { return detail::canonical_keyed(t).tree; }

inline Cotree Cotree::node(NodeKind kind, std::vector<Cotree> children) {
  if (kind == NodeKind::Leaf) return raw(kind, std::move(children));
  return canonicalize(raw(kind, std::move(children)));
}

// ------------------------------------------------------------- parsing

namespace detail {

class CotreeParser {
 public:
  explicit CotreeParser(std::string_view text) : text_(text) {}

  Cotree parse() {
    Cotree t = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::SyntaxError, what + " at position " + std::to_string(pos_), pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Cotree expr() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == 'L') {
      ++pos_;
      return Cotree::leaf();
    }
    if (c != 'U' && c != 'J') fail(std::string("expected L, U or J, found '") + c + "'");
    const std::size_t start = pos_;
    ++pos_;
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '(') fail("expected '('");
    ++pos_;
    std::vector<Cotree> kids;
    kids.push_back(expr());
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size()) fail("unterminated node");
      if (text_[pos_] == ',') {
        ++pos_;
        kids.push_back(expr());
      } else if (text_[pos_] == ')') {
        ++pos_;
        break;
      } else {
        fail("expected ',' or ')'");
      }
    }
    if (kids.size() < 2)
      throw Error(Errc::ArityError,
                  std::string(1, c) + " node at position " + std::to_string(start) + " has a single child", start);
    return Cotree::raw(static_cast<NodeKind>(c), std::move(kids));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Grammar: expr := "L" | "U(" expr {"," expr} ")" | "J(" expr {"," expr} ")",
/// at least two arguments per U/J, whitespace ignored. Result is canonical.
inline Cotree parse_cotree(std::string_view text) {
  return canonicalize(detail::CotreeParser(text).parse());
}

// ------------------------------------------------------ graph conversion

namespace detail {

inline Mask build_graph(const Cotree& t, std::vector<Mask>& adj, int& next) {
  if (t.is_leaf()) return bit(next++);
  std::vector<Mask> blocks;
  Mask all = 0;
  for (const Cotree& c : t.children()) {
    blocks.push_back(build_graph(c, adj, next));
    all |= blocks.back();
  }
  if (t.kind() == NodeKind::Join)
    for (Mask b : blocks) for_each_bit(b, [&](int v) { adj[v] |= all & ~b; });
  return all;
}

}  // namespace detail

/// Leaves become vertices 0..n-1 in left-to-right order.
inline Graph cotree_to_graph(const Cotree& t) {
  if (t.leaf_count() > kMaxOrder)
    throw Error(Errc::OrderOutOfRange, "cotree has " + std::to_string(t.leaf_count()) + " leaves");
  std::vector<Mask> adj(static_cast<std::size_t>(t.leaf_count()), 0);
  int next = 0;
  detail::build_graph(t, adj, next);
  return Graph::from_adjacency(std::move(adj));
}

/// Canonical cotree plus, for each leaf in left-to-right order, the vertex of
/// the source graph it stands for.
struct LabeledCotree {
  Cotree tree;
  std::vector<int> leaf_vertex;
};

namespace detail {

struct LabeledNode {
  NodeKind kind;
  int vertex = -1;
  std::vector<LabeledNode> children;
  std::string key;
};

inline std::vector<Mask> components_within(const Graph& g, Mask within) {
  std::vector<Mask> out;
  Mask left = within;
  while (left) {
    const Mask comp = flood_fill(g, left & (~left + 1), within);
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

inline LabeledNode decompose(const Graph& g, const Graph& co, Mask within) {
  if (popcount(within) == 1) return {NodeKind::Leaf, lowest(within), {}, "L"};
  NodeKind kind = NodeKind::Union;
  std::vector<Mask> parts = components_within(g, within);
  if (parts.size() == 1) {
    kind = NodeKind::Join;
    parts = components_within(co, within);
    if (parts.size() == 1)
      throw Error(Errc::NotACograph, "vertex set is connected in both the graph and its complement");
  }
  LabeledNode node{kind, -1, {}, {}};
  for (Mask p : parts) node.children.push_back(decompose(g, co, p));
  std::sort(node.children.begin(), node.children.end(),
            [](const LabeledNode& a, const LabeledNode& b) { return a.key < b.key; });
  node.key = std::string(1, static_cast<char>(kind)) + "(";
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (i) node.key.push_back(',');
    node.key += node.children[i].key;
  }
  node.key.push_back(')');
  return node;
}

inline Cotree to_cotree(const LabeledNode& n, std::vector<int>& leaf_vertex) {
  if (n.kind == NodeKind::Leaf) {
    leaf_vertex.push_back(n.vertex);
    return Cotree::leaf();
  }
  std::vector<Cotree> kids;
  for (const LabeledNode& c : n.children) kids.push_back(to_cotree(c, leaf_vertex));
  return Cotree::raw(n.kind, std::move(kids));
}

}  // namespace detail

/// Cotree recognition by the components / co-components recursion.
/// Throws NotACograph when some vertex subset is connected in both the graph
/// and its complement, which happens exactly when there is an induced P4.
inline LabeledCotree recognize_cograph(const Graph& g) {
  const Graph co = complement(g);
  const detail::LabeledNode root = detail::decompose(g, co, g.vertices());
  LabeledCotree out{Cotree::leaf(), {}};
  out.tree = detail::to_cotree(root, out.leaf_vertex);
  return out;
}

inline Cotree graph_to_cotree(const Graph& g) { return recognize_cograph(g).tree; }

inline bool is_cograph(const Graph& g) {
  try {
    recognize_cograph(g);
    return true;
  } catch (const Error& e) {
    if (e.code() == Errc::NotACograph) return false;
    throw;
  }
}

namespace detail {

inline Cotree swap_kinds(const Cotree& t) {
  if (t.is_leaf()) return t;
  std::vector<Cotree> kids;
  for (const Cotree& c : t.children()) kids.push_back(swap_kinds(c));
  return Cotree::raw(t.kind() == NodeKind::Union ? NodeKind::Join : NodeKind::Union, std::move(kids));
}

}  // namespace detail

inline Cotree complement_cotree(const Cotree& t) { return canonicalize(detail::swap_kinds(t)); }

/// Connected iff the root is a Join or the tree is a single leaf.
inline bool is_connected_cotree(const Cotree& t) { return t.kind() != NodeKind::Union; }

// --------------------------------------------------------- named families

namespace families {

namespace detail {
inline void check(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::OrderOutOfRange, what);
}
inline Cotree leaves_under(NodeKind kind, int n) {
  if (n == 1) return Cotree::leaf();
  return Cotree::raw(kind, std::vector<Cotree>(static_cast<std::size_t>(n), Cotree::leaf()));
}
}  // namespace detail

inline Cotree complete(int n) {
  detail::check(n >= 1 && n <= kMaxOrder, "complete graph needs 1 <= n <= 64");
  return detail::leaves_under(NodeKind::Join, n);
}

inline Cotree edgeless(int n) {
  detail::check(n >= 1 && n <= kMaxOrder, "edgeless graph needs 1 <= n <= 64");
  return detail::leaves_under(NodeKind::Union, n);
}

inline Cotree complete_bipartite(int s, int t) {
  detail::check(s >= 1 && t >= 1 && s + t <= kMaxOrder, "K_{s,t} needs s, t >= 1 and s + t <= 64");
  return Cotree::node(NodeKind::Join, {edgeless(s), edgeless(t)});
}

/// K_{1,n-1}; star(1) is K_1 and star(2) is K_2.
inline Cotree star(int n) {
  detail::check(n >= 1 && n <= kMaxOrder, "star needs 1 <= n <= 64");
  if (n == 1) return Cotree::leaf();
  return complete_bipartite(1, n - 1);
}

/// K_1 + (K_1 u K_{n-2}).
inline Cotree skillet(int n) {
  detail::check(n >= 3 && n <= kMaxOrder, "skillet needs 3 <= n <= 64");
  return Cotree::node(NodeKind::Join,
                      {Cotree::leaf(), Cotree::node(NodeKind::Union, {Cotree::leaf(), complete(n - 2)})});
}

inline Cotree disjoint_union(const Cotree& a, const Cotree& b) { return Cotree::node(NodeKind::Union, {a, b}); }
inline Cotree join(const Cotree& a, const Cotree& b) { return Cotree::node(NodeKind::Join, {a, b}); }

}  // namespace families

}  // namespace cogmean

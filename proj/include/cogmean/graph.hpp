#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cogmean/error.hpp"

namespace cogmean {

using Mask = std::uint64_t;

inline constexpr int kMaxOrder = 64;

constexpr Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
constexpr Mask bit(int v) { return Mask{1} << v; }
constexpr int popcount(Mask m) { return std::popcount(m); }
constexpr int lowest(Mask m) { return std::countr_zero(m); }

/// Calls f(v) for every set bit v of m, ascending.
template <class F>
constexpr void for_each_bit(Mask m, F&& f) {
  while (m) {
    f(lowest(m));
    m &= m - 1;
  }
}

/// A set of vertex positions of some host graph.
struct VertexSubset {
  Mask mask = 0;

  int size() const { return popcount(mask); }
  bool empty() const { return mask == 0; }
  bool contains(int v) const { return (mask >> v) & 1U; }
  friend bool operator==(VertexSubset, VertexSubset) = default;
};

/// Simple undirected graph on vertices 0..n-1 (1 <= n <= 64), adjacency as
/// per-vertex bitmasks. Always symmetric and loop-free.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  static Graph from_edge_list(int n, std::span<const Edge> edges) {
    check_order(n);
    Graph g(n);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw Error(Errc::VertexOutOfRange,
                    "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
      if (u == v) throw Error(Errc::LoopEdge, "loop at vertex " + std::to_string(u));
      g.adj_[u] |= bit(v);
      g.adj_[v] |= bit(u);
    }
    return g;
  }

  static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Adjacency given directly; validated against the class invariants.
  static Graph from_adjacency(std::vector<Mask> adj) {
    const int n = static_cast<int>(adj.size());
    check_order(n);
    for (int v = 0; v < n; ++v) {
      if (adj[v] & ~full_mask(n)) throw Error(Errc::VertexOutOfRange, "neighbor beyond order");
      if (adj[v] & bit(v)) throw Error(Errc::LoopEdge, "loop at vertex " + std::to_string(v));
      for_each_bit(adj[v], [&](int u) {
        if (!(adj[u] & bit(v))) throw Error(Errc::VertexOutOfRange, "asymmetric adjacency");
      });
    }
    Graph g(n);
    g.adj_ = std::move(adj);
    return g;
  }

  static Graph edgeless(int n) {
    check_order(n);
    return Graph(n);
  }

  int order() const { return static_cast<int>(adj_.size()); }
  Mask vertices() const { return full_mask(order()); }
  Mask neighbors(int v) const { return adj_[v]; }
  const std::vector<Mask>& adjacency() const { return adj_; }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  int degree(int v) const { return popcount(adj_[v]); }

  int edge_count() const {
    int twice = 0;
    for (Mask m : adj_) twice += popcount(m);
    return twice / 2;
  }

  /// Edges (u, v) with u < v, ordered by u then v.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u)
      for_each_bit(adj_[u] & ~full_mask(u + 1), [&](int v) { out.emplace_back(u, v); });
    return out;
  }

  std::vector<int> degree_sequence() const {
    std::vector<int> d;
    for (int v = 0; v < order(); ++v) d.push_back(degree(v));
    std::sort(d.begin(), d.end());
    return d;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n), 0) {}

  static void check_order(int n) {
    if (n < 1 || n > kMaxOrder)
      throw Error(Errc::OrderOutOfRange, "order " + std::to_string(n) + " outside 1..64");
  }

  std::vector<Mask> adj_;
};

inline Graph complement(const Graph& g) {
  std::vector<Mask> adj(g.adjacency());
  const Mask all = g.vertices();
  for (int v = 0; v < g.order(); ++v) adj[v] = ~adj[v] & all & ~bit(v);
  return Graph::from_adjacency(std::move(adj));
}

/// Vertices of `within` reachable from `start` inside the subgraph induced by
/// `within`. `start` must be a subset of `within`.
inline Mask flood_fill(const Graph& g, Mask start, Mask within) {
  Mask reach = start;
  Mask frontier = start;
  while (frontier) {
    Mask next = 0;
    for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
    frontier = next & within & ~reach;
    reach |= frontier;
  }
  return reach;
}

inline bool is_connected_subset(const Graph& g, VertexSubset s) {
  if (s.empty()) throw Error(Errc::EmptySubset, "connectivity of the empty set");
  if (s.mask & ~g.vertices()) throw Error(Errc::VertexOutOfRange, "subset exceeds host order");
  return flood_fill(g, s.mask & (~s.mask + 1), s.mask) == s.mask;
}

inline bool is_connected(const Graph& g) { return is_connected_subset(g, {g.vertices()}); }

/// Components ordered by smallest contained vertex.
inline std::vector<VertexSubset> connected_components(const Graph& g) {
  std::vector<VertexSubset> out;
  Mask left = g.vertices();
  while (left) {
    const Mask comp = flood_fill(g, left & (~left + 1), left);
    out.push_back({comp});
    left &= ~comp;
  }
  return out;
}

/// Subgraph induced by `s`, vertices renumbered in increasing original order.
inline Graph induced_subgraph(const Graph& g, VertexSubset s) {
  if (s.empty()) throw Error(Errc::EmptySubset, "induced subgraph on the empty set");
  std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
  int k = 0;
  for_each_bit(s.mask, [&](int v) { pos[v] = k++; });
  std::vector<Mask> adj(static_cast<std::size_t>(k), 0);
  for_each_bit(s.mask, [&](int v) {
    for_each_bit(g.neighbors(v) & s.mask, [&](int u) { adj[pos[v]] |= bit(pos[u]); });
  });
  return Graph::from_adjacency(std::move(adj));
}

inline Graph remove_vertex(const Graph& g, int v) {
  return induced_subgraph(g, {g.vertices() & ~bit(v)});
}

/// Vertex `v` of g becomes vertex `perm[v]` of the result.
inline Graph relabel(const Graph& g, std::span<const int> perm) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
  for (int v = 0; v < g.order(); ++v)
    for_each_bit(g.neighbors(v), [&](int u) { adj[perm[v]] |= bit(perm[u]); });
  return Graph::from_adjacency(std::move(adj));
}

/// True iff some 4 vertices induce a path P4 (exhaustive 4-subset scan).
inline bool has_induced_p4(const Graph& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          const int q[4] = {a, b, c, d};
          int edges = 0;
          int deg[4] = {0, 0, 0, 0};
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (g.adjacent(q[i], q[j])) {
                ++edges;
                ++deg[i];
                ++deg[j];
              }
          if (edges != 3) continue;
          // three edges: P4 (degrees 1,1,2,2), star K_{1,3}, or K_3 + K_1
          int ones = 0;
          for (int x : deg) ones += x == 1;
          if (ones == 2 && std::count(deg, deg + 4, 2) == 2) return true;
        }
  return false;
}

// ---------------------------------------------------------------- graph6

inline std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  auto sextet = [&](std::size_t pos) -> int {
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
      throw Error(Errc::MalformedHeader, "byte outside graph6 range", pos);
    return c - 63;
  };
  if (text.empty()) throw Error(Errc::MalformedHeader, "empty graph6 string");
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw Error(Errc::MalformedHeader, "empty graph6 string");
  std::size_t pos = 0;
  int n = 0;
  if (text[0] == 126) {
    if (text.size() < 4 || text[1] == 126)
      throw Error(Errc::MalformedHeader, "unsupported or truncated long header");
    n = (sextet(1) << 12) | (sextet(2) << 6) | sextet(3);
    if (n <= 62) throw Error(Errc::MalformedHeader, "non-minimal long header");
    pos = 4;
  } else {
    n = sextet(0);
    pos = 1;
  }
  if (n < 1 || n > kMaxOrder)
    throw Error(Errc::OrderOutOfRange, "graph6 order " + std::to_string(n));

  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() - pos < nbytes)
    throw Error(Errc::TruncatedBits, "expected " + std::to_string(nbytes) + " data bytes", text.size());
  if (text.size() - pos > nbytes)
    throw Error(Errc::TrailingGarbage, "extra bytes after adjacency data", pos + nbytes);

  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sextet(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) {
        adj[i] |= bit(j);
        adj[j] |= bit(i);
      }
    }
  if (nbits % 6 != 0) {
    const int last = sextet(pos + nbytes - 1);
    if (last & ((1 << (6 - nbits % 6)) - 1))
      throw Error(Errc::TrailingGarbage, "nonzero padding bits", pos + nbytes - 1);
  }
  return Graph::from_adjacency(std::move(adj));
}

// ------------------------------------------------------- edge-list text

/// First line "n", then one "u v" pair per line. Blank lines are skipped.
inline Graph parse_edge_list(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<Graph::Edge> edges;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n)) throw Error(Errc::ParseError, "expected vertex count, got '" + line + "'");
      continue;
    }
    int u = 0;
    int v = 0;
    if (!(ls >> u >> v)) throw Error(Errc::ParseError, "expected 'u v', got '" + line + "'");
    std::string rest;
    if (ls >> rest) throw Error(Errc::ParseError, "trailing text on edge line '" + line + "'");
    edges.emplace_back(u, v);
  }
  if (n < 0) throw Error(Errc::ParseError, "empty edge list");
  return Graph::from_edge_list(n, edges);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace cogmean

#pragma once

#include <string>
#include <vector>

#include "cogmean/graph.hpp"

namespace cogmean::graphs {

inline Graph path(int n) {
  std::vector<Graph::Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, e);
}

inline Graph cycle(int n) {
  if (n < 3) throw Error(Errc::OrderOutOfRange, "cycle needs n >= 3");
  std::vector<Graph::Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, e);
}

inline Graph complete(int n) {
  std::vector<Graph::Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edge_list(n, e);
}

/// Two terminals (0 and 1) joined by three internally disjoint paths with
/// i, j and k internal vertices. At most one of i, j, k may be zero.
inline Graph theta(int i, int j, int k) {
  if (i < 0 || j < 0 || k < 0 || (i == 0) + (j == 0) + (k == 0) > 1)
    throw Error(Errc::RangeError, "theta graph needs nonnegative lengths with at most one zero");
  std::vector<Graph::Edge> e;
  int next = 2;
  for (int len : {i, j, k}) {
    int prev = 0;
    for (int t = 0; t < len; ++t) {
      e.emplace_back(prev, next);
      prev = next++;
    }
    e.emplace_back(prev, 1);
  }
  return Graph::from_edge_list(next, e);
}

/// Vertex (u, v) of a □ b is numbered u * |b| + v.
inline Graph cartesian_product(const Graph& a, const Graph& b) {
  const int m = b.order();
  std::vector<Graph::Edge> e;
  for (int u = 0; u < a.order(); ++u)
    for (int v = 0; v < m; ++v) {
      for (int w = v + 1; w < m; ++w)
        if (b.adjacent(v, w)) e.emplace_back(u * m + v, u * m + w);
      for (int x = u + 1; x < a.order(); ++x)
        if (a.adjacent(u, x)) e.emplace_back(u * m + v, x * m + v);
    }
  return Graph::from_edge_list(a.order() * m, e);
}

/// a + b: disjoint union plus every edge between the two vertex sets.
/// Vertices of b follow those of a.
inline Graph graph_join(const Graph& a, const Graph& b) {
  std::vector<Graph::Edge> e = a.edges();
  const int off = a.order();
  for (auto [u, v] : b.edges()) e.emplace_back(u + off, v + off);
  for (int u = 0; u < off; ++u)
    for (int v = 0; v < b.order(); ++v) e.emplace_back(u, v + off);
  return Graph::from_edge_list(off + b.order(), e);
}

inline Graph graph_union(const Graph& a, const Graph& b) {
  std::vector<Graph::Edge> e = a.edges();
  const int off = a.order();
  for (auto [u, v] : b.edges()) e.emplace_back(u + off, v + off);
  return Graph::from_edge_list(off + b.order(), e);
}

}  // namespace cogmean::graphs

#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cogmean/canonical.hpp"
#include "cogmean/cotree.hpp"
#include "cogmean/error.hpp"
#include "cogmean/graph.hpp"

namespace cogmean {

enum class GenFamily { Cographs, ConnectedCographs, DisconnectedCographs, ConnectedGraphs, Caterpillars };

inline constexpr std::pair<GenFamily, std::string_view> kGenFamilyNames[] = {
    {GenFamily::Cographs, "cographs"},
    {GenFamily::ConnectedCographs, "connected-cographs"},
    {GenFamily::DisconnectedCographs, "disconnected-cographs"},
    {GenFamily::ConnectedGraphs, "connected-graphs"},
    {GenFamily::Caterpillars, "caterpillars"},
};

inline std::string_view gen_family_name(GenFamily f) {
  for (auto [g, s] : kGenFamilyNames)
    if (g == f) return s;
  return "?";
}

inline GenFamily parse_gen_family(std::string_view name) {
  for (auto [g, s] : kGenFamilyNames)
    if (s == name) return g;
  throw Error(Errc::UnknownFamily, "unknown generator family '" + std::string(name) + "'");
}

struct Shard {
  int index = 0;
  int count = 1;

  void validate() const {
    if (count < 1 || index < 0 || index >= count)
      throw Error(Errc::RangeError, "shard " + std::to_string(index) + "/" + std::to_string(count));
  }
  bool keeps(std::size_t position) const { return position % static_cast<std::size_t>(count) == static_cast<std::size_t>(index); }
};

struct GeneratorSpec {
  GenFamily family = GenFamily::ConnectedCographs;
  int order = 1;
  Shard shard{};
};

inline constexpr int kCotreeEnumerationCap = 20;
inline constexpr int kGraphEnumerationCap = 8;
inline constexpr int kCaterpillarCap = 20;

enum class Connectivity { Any, Connected, Disconnected };

template <class T>
std::vector<T> take_shard(std::vector<T> all, Shard shard) {
  shard.validate();
  if (shard.count == 1) return all;
  std::vector<T> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (shard.keeps(i)) out.push_back(std::move(all[i]));
  return out;
}

/// Canonical cotrees by direct composition. Join-rooted trees of order n take
/// a multiset of >= 2 children from {leaf} and the Union-rooted trees of
/// smaller order (and symmetrically), so each cograph appears once.
/// Pools are memoized per instance.
class CotreeEnumerator {
 public:
  struct Entry {
    Cotree tree;
    std::string key;
  };

  /// All canonical cotrees with n leaves passing `filter`, sorted by printed form.
  std::vector<Entry> entries(int n, Connectivity filter = Connectivity::Any) {
    if (n < 1 || n > kCotreeEnumerationCap)
      throw Error(Errc::OrderOutOfRange, "cotree enumeration needs 1 <= n <= " + std::to_string(kCotreeEnumerationCap));
    if (n == 1) {
      if (filter == Connectivity::Disconnected) return {};
      return {{Cotree::leaf(), "L"}};
    }
    grow(n);
    std::vector<Entry> out;
    if (filter != Connectivity::Disconnected) out = join_[static_cast<std::size_t>(n)];
    if (filter != Connectivity::Connected) {
      const auto& u = union_[static_cast<std::size_t>(n)];
      out.insert(out.end(), u.begin(), u.end());
    }
    std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.key < b.key; });
    return out;
  }

  std::vector<Cotree> trees(int n, Connectivity filter = Connectivity::Any, Shard shard = {}) {
    std::vector<Cotree> out;
    for (Entry& e : take_shard(entries(n, filter), shard)) out.push_back(std::move(e.tree));
    return out;
  }

 private:
  void grow(int n) {
    if (join_.empty()) {
      join_.resize(2);
      union_.resize(2);
      join_[1] = union_[1] = {{Cotree::leaf(), "L"}};
    }
    while (static_cast<int>(join_.size()) <= n) {
      const int k = static_cast<int>(join_.size());
      join_.push_back(compose(k, NodeKind::Join, union_));
      union_.push_back(compose(k, NodeKind::Union, join_));
    }
  }

  /// Trees of order n with root `kind`, children drawn from `pool` (by size).
  static std::vector<Entry> compose(int n, NodeKind kind, const std::vector<std::vector<Entry>>& pool) {
    std::vector<Entry> out;
    std::vector<int> parts;
    std::vector<const Entry*> chosen;
    // Partitions of n into >= 2 parts, non-increasing.
    auto partitions = [&](auto&& self, int remaining, int max_part) -> void {
      if (remaining == 0) {
        if (parts.size() >= 2) fill_sizes(parts, 0, kind, pool, chosen, out);
        return;
      }
      for (int p = std::min(remaining, max_part); p >= 1; --p) {
        parts.push_back(p);
        self(self, remaining - p, p);
        parts.pop_back();
      }
    };
    partitions(partitions, n, n - 1);
    return out;
  }

  /// For the run of equal part sizes starting at `at`, choose a multiset from
  /// pool[size] (non-decreasing indices), then continue with the next run.
  static void fill_sizes(const std::vector<int>& parts, std::size_t at, NodeKind kind,
                         const std::vector<std::vector<Entry>>& pool, std::vector<const Entry*>& chosen,
                         std::vector<Entry>& out) {
    if (at == parts.size()) {
      std::vector<const Entry*> kids = chosen;
      std::sort(kids.begin(), kids.end(), [](const Entry* a, const Entry* b) { return a->key < b->key; });
      std::vector<Cotree> children;
      std::string key(1, static_cast<char>(kind));
      key.push_back('(');
      for (std::size_t i = 0; i < kids.size(); ++i) {
        if (i) key.push_back(',');
        key += kids[i]->key;
        children.push_back(kids[i]->tree);
      }
      key.push_back(')');
      out.push_back({Cotree::raw(kind, std::move(children)), std::move(key)});
      return;
    }
    const int size = parts[at];
    std::size_t run_end = at;
    while (run_end < parts.size() && parts[run_end] == size) ++run_end;
    const auto& candidates = pool[static_cast<std::size_t>(size)];
    const std::size_t run = run_end - at;
    auto pick = [&](auto&& self, std::size_t left, std::size_t from) -> void {
      if (left == 0) {
        fill_sizes(parts, run_end, kind, pool, chosen, out);
        return;
      }
      for (std::size_t i = from; i < candidates.size(); ++i) {
        chosen.push_back(&candidates[i]);
        self(self, left - 1, i);
        chosen.pop_back();
      }
    };
    pick(pick, run, 0);
  }

  std::vector<std::vector<Entry>> join_;
  std::vector<std::vector<Entry>> union_;
};

inline std::vector<Cotree> enumerate_cotrees(int n, Connectivity filter = Connectivity::Any, Shard shard = {}) {
  CotreeEnumerator e;
  return e.trees(n, filter, shard);
}

/// Uniform random composition at every level, kinds alternating, then
/// canonicalized. Not uniform over cographs.
template <class Rng>
Cotree random_cotree(int n, Rng& rng, NodeKind root = NodeKind::Leaf) {
  if (n < 1 || n > kMaxOrder) throw Error(Errc::OrderOutOfRange, "random cotree order");
  if (n == 1) return Cotree::leaf();
  if (root == NodeKind::Leaf) root = std::bernoulli_distribution(0.5)(rng) ? NodeKind::Join : NodeKind::Union;
  std::vector<int> sizes;
  std::bernoulli_distribution cut(0.5);
  do {
    sizes.assign(1, 1);
    for (int i = 1; i < n; ++i) {
      if (cut(rng)) sizes.push_back(1);
      else ++sizes.back();
    }
  } while (sizes.size() < 2);
  const NodeKind child = root == NodeKind::Join ? NodeKind::Union : NodeKind::Join;
  std::vector<Cotree> kids;
  for (int s : sizes) kids.push_back(random_cotree(s, rng, child));
  return Cotree::node(root, std::move(kids));
}

// ----------------------------------------------------------- all graphs

/// Non-isomorphic graphs by vertex augmentation: every graph of order k is a
/// graph of order k-1 plus one vertex, so extending each canonical graph of
/// order k-1 by every neighbourhood and canonicalizing covers all classes.
/// Output ordered by graph6 of the canonical representative.
class GraphEnumerator {
 public:
  const std::vector<Graph>& all(int n) {
    if (n < 1 || n > kGraphEnumerationCap)
      throw Error(Errc::OrderOutOfRange, "graph enumeration needs 1 <= n <= " + std::to_string(kGraphEnumerationCap));
    if (levels_.empty()) levels_.push_back({Graph::edgeless(1)});
    while (static_cast<int>(levels_.size()) < n) extend();
    return levels_[static_cast<std::size_t>(n - 1)];
  }

  std::vector<Graph> connected(int n, Shard shard = {}) {
    std::vector<Graph> out;
    for (const Graph& g : all(n))
      if (is_connected(g)) out.push_back(g);
    return take_shard(std::move(out), shard);
  }

 private:
  void extend() {
    const int k = static_cast<int>(levels_.size());
    std::map<std::string, Graph> seen;
    for (const Graph& h : levels_.back()) {
      for (Mask nb = 0; nb < bit(k); ++nb) {
        std::vector<Mask> adj = h.adjacency();
        adj.push_back(nb);
        for_each_bit(nb, [&](int u) { adj[static_cast<std::size_t>(u)] |= bit(k); });
        Graph canon = canonical_form(Graph::from_adjacency(std::move(adj))).graph;
        seen.try_emplace(emit_graph6(canon), std::move(canon));
      }
    }
    std::vector<Graph> level;
    for (auto& [key, g] : seen) level.push_back(std::move(g));
    levels_.push_back(std::move(level));
  }

  std::vector<std::vector<Graph>> levels_;
};

inline std::vector<Graph> enumerate_connected_graphs(int n, Shard shard = {}) {
  GraphEnumerator e;
  return e.connected(n, shard);
}

// ---------------------------------------------------------- caterpillars

/// A caterpillar as its spine (the non-leaf vertices, in path order) with the
/// number of leaves hanging off each spine vertex. Empty for K_1 and K_2.
struct Caterpillar {
  int order = 0;
  std::vector<int> leaves;
};

inline Graph caterpillar_graph(const Caterpillar& c) {
  if (c.leaves.empty()) {
    if (c.order == 1) return Graph::edgeless(1);
    return Graph::from_edge_list(2, {{0, 1}});
  }
  const int spine = static_cast<int>(c.leaves.size());
  std::vector<Graph::Edge> edges;
  for (int i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
  int next = spine;
  for (int i = 0; i < spine; ++i)
    for (int j = 0; j < c.leaves[static_cast<std::size_t>(i)]; ++j) edges.emplace_back(i, next++);
  return Graph::from_edge_list(next, edges);
}

/// One caterpillar per isomorphism class. A spine of length 1 carries n-1 >= 2
/// leaves; longer spines need >= 1 leaf at each end. A leaf sequence and its
/// reversal describe the same tree; the lexicographically smaller one is kept.
/// Ordered by spine length, then leaf sequence.
inline std::vector<Caterpillar> enumerate_caterpillar_specs(int n) {
  if (n < 2 || n > kCaterpillarCap)
    throw Error(Errc::OrderOutOfRange, "caterpillar enumeration needs 2 <= n <= " + std::to_string(kCaterpillarCap));
  if (n == 2) return {{2, {}}};
  std::vector<Caterpillar> out;
  for (int spine = 1; spine <= n - 2; ++spine) {
    const int leaves = n - spine;
    if (spine == 1) {
      out.push_back({n, {leaves}});
      continue;
    }
    std::vector<int> seq(static_cast<std::size_t>(spine), 0);
    auto place = [&](auto&& self, int i, int left) -> void {
      if (i == spine - 1) {
        if (left < 1) return;
        seq[static_cast<std::size_t>(i)] = left;
        std::vector<int> rev(seq.rbegin(), seq.rend());
        if (seq <= rev) out.push_back({n, seq});
        return;
      }
      const int lo = i == 0 ? 1 : 0;
      for (int x = lo; x <= left - 1; ++x) {
        seq[static_cast<std::size_t>(i)] = x;
        self(self, i + 1, left - x);
      }
    };
    place(place, 0, leaves);
  }
  return out;
}

inline std::vector<Graph> enumerate_caterpillars(int n) {
  std::vector<Graph> out;
  for (const Caterpillar& c : enumerate_caterpillar_specs(n)) out.push_back(caterpillar_graph(c));
  return out;
}

}  // namespace cogmean

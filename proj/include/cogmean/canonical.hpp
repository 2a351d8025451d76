#pragma once

#include <cstdint>
#include <vector>

#include "cogmean/graph.hpp"

namespace cogmean {

/// Largest order accepted by canonical_form; the tie frontier can reach n!.
inline constexpr int kCanonicalMaxOrder = 10;

struct CanonicalForm {
  Graph graph;                  // relabelled representative
  std::vector<int> order;       // order[i] = original vertex placed at position i
  std::vector<std::uint32_t> columns;  // column j holds bits (0,j)..(j-1,j), (0,j) most significant
};

/// Representative whose upper-triangle bitstring, in graph6 column-major
/// order, is lexicographically minimal over all vertex permutations.
///
/// Positions are filled one at a time. Placing position j fixes column j,
/// which follows columns 1..j-1 in the bitstring, so only the extensions
/// that achieve the smallest column survive to the next level.
inline CanonicalForm canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > kCanonicalMaxOrder)
    throw Error(Errc::OrderOutOfRange, "canonical form limited to order " + std::to_string(kCanonicalMaxOrder));

  struct Partial {
    std::vector<int> placed;
    Mask used = 0;
  };
  std::vector<Partial> frontier;
  for (int v = 0; v < n; ++v) frontier.push_back({{v}, bit(v)});

  std::vector<std::uint32_t> columns;
  for (int j = 1; j < n; ++j) {
    std::uint32_t best = UINT32_MAX;
    std::vector<Partial> next;
    for (const Partial& p : frontier) {
      for_each_bit(g.vertices() & ~p.used, [&](int cand) {
        std::uint32_t col = 0;
        for (int i = 0; i < j; ++i) col = (col << 1) | (g.adjacent(p.placed[i], cand) ? 1U : 0U);
        if (col > best) return;
        if (col < best) {
          best = col;
          next.clear();
        }
        Partial q = p;
        q.placed.push_back(cand);
        q.used |= bit(cand);
        next.push_back(std::move(q));
      });
    }
    columns.push_back(best);
    frontier = std::move(next);
  }

  const std::vector<int>& order = frontier.front().placed;
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  return {relabel(g, position), order, std::move(columns)};
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  return canonical_form(a).graph == canonical_form(b).graph;
}

}  // namespace cogmean

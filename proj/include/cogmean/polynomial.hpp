#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "cogmean/cotree.hpp"
#include "cogmean/error.hpp"
#include "cogmean/graph.hpp"
#include "cogmean/numeric.hpp"

namespace cogmean {

/// a_1..a_n of a connected-induced-subgraph generating polynomial (global or
/// local) of a graph of order n. a_0 is implicitly zero.
class SubgraphPolynomial {
 public:
  SubgraphPolynomial() = default;
  SubgraphPolynomial(int order, std::vector<BigInt> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
    if (order_ < 0) throw Error(Errc::OrderOutOfRange, "negative polynomial order");
    if (coeffs_.size() > static_cast<std::size_t>(order_))
      throw Error(Errc::RangeError, "more coefficients than the order allows");
    coeffs_.resize(static_cast<std::size_t>(order_), 0);
  }

  /// Graph order n; the polynomial has degree at most n.
  int order() const { return order_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  /// a_k for 1 <= k <= n, zero otherwise.
  BigInt coefficient(int k) const {
    if (k < 1 || k > order_) return 0;
    return coeffs_[static_cast<std::size_t>(k - 1)];
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
  }

  BigInt value_at_one() const {
    BigInt s = 0;
    for (const BigInt& c : coeffs_) s += c;
    return s;
  }

  BigInt derivative_at_one() const {
    BigInt s = 0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) s += coeffs_[k] * static_cast<unsigned>(k + 1);
    return s;
  }

  Rational evaluate(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = (acc + Rational(coeffs_[k])) * x;
    return acc;
  }

  /// Phi* view: the same polynomial with a_1 zeroed.
  SubgraphPolynomial nontrivial_part() const {
    SubgraphPolynomial p = *this;
    if (!p.coeffs_.empty()) p.coeffs_[0] = 0;
    return p;
  }

  SubgraphPolynomial& operator+=(const SubgraphPolynomial& o) {
    if (o.order_ > order_) {
      order_ = o.order_;
      coeffs_.resize(static_cast<std::size_t>(order_), 0);
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }

  friend bool operator==(const SubgraphPolynomial&, const SubgraphPolynomial&) = default;

 private:
  int order_ = 0;
  std::vector<BigInt> coeffs_;
};

namespace poly {

/// Dense coefficients, index = degree.
using Dense = std::vector<BigInt>;

inline Dense one_plus_x_pow(int m) {
  Dense row{1};
  for (int i = 0; i < m; ++i) {
    Dense next(row.size() + 1, 0);
    for (std::size_t k = 0; k < row.size(); ++k) {
      next[k] += row[k];
      next[k + 1] += row[k];
    }
    row = std::move(next);
  }
  return row;
}

inline SubgraphPolynomial from_dense(int order, const Dense& d) {
  std::vector<BigInt> coeffs(static_cast<std::size_t>(order), 0);
  for (std::size_t k = 1; k < d.size(); ++k) {
    if (k > static_cast<std::size_t>(order)) {
      if (d[k] != 0) throw Error(Errc::RangeError, "degree exceeds order");
      continue;
    }
    coeffs[k - 1] = d[k];
  }
  return SubgraphPolynomial(order, std::move(coeffs));
}

}  // namespace poly

/// psi_{s,t}(x) = ((1+x)^s - 1)((1+x)^t - 1): connected induced subgraphs of
/// K_{s,t} with at least one vertex on each side.
inline SubgraphPolynomial psi(int s, int t) {
  if (s < 1 || t < 1) throw Error(Errc::RangeError, "psi needs s, t >= 1");
  poly::Dense a = poly::one_plus_x_pow(s);
  poly::Dense b = poly::one_plus_x_pow(t);
  a[0] -= 1;
  b[0] -= 1;
  poly::Dense prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
  return poly::from_dense(s + t, prod);
}

/// Phi of a disjoint union: coefficientwise sum.
inline SubgraphPolynomial union_polynomial(const SubgraphPolynomial& a, const SubgraphPolynomial& b) {
  SubgraphPolynomial r(a.order() + b.order(), a.coeffs());
  r += b;
  return r;
}

/// Phi of a join: Phi_a + Phi_b + psi_{|a|,|b|}.
inline SubgraphPolynomial join_polynomial(const SubgraphPolynomial& a, const SubgraphPolynomial& b) {
  SubgraphPolynomial r = union_polynomial(a, b);
  r += psi(a.order(), b.order());
  return r;
}

inline SubgraphPolynomial single_vertex_polynomial() { return SubgraphPolynomial(1, {1}); }

/// Phi_G from the cotree. Multi-way joins fold left to right.
inline SubgraphPolynomial phi_cotree(const Cotree& t) {
  if (t.leaf_count() > kMaxOrder) throw Error(Errc::OrderOutOfRange, "cotree larger than 64 leaves");
  if (t.is_leaf()) return single_vertex_polynomial();
  const auto& kids = t.children();
  SubgraphPolynomial acc = phi_cotree(kids.front());
  for (std::size_t i = 1; i < kids.size(); ++i) {
    const SubgraphPolynomial next = phi_cotree(kids[i]);
    acc = t.kind() == NodeKind::Join ? join_polynomial(acc, next) : union_polynomial(acc, next);
  }
  return acc;
}

namespace detail {

/// Local polynomial of the subtree rooted at t, padded to `order` coefficients.
inline SubgraphPolynomial phi_local(const Cotree& t, int leaf, int order) {
  if (t.is_leaf()) return SubgraphPolynomial(order, {1});
  int offset = 0;
  for (const Cotree& c : t.children()) {
    if (leaf < offset + c.leaf_count()) {
      SubgraphPolynomial inner = phi_local(c, leaf - offset, order);
      if (t.kind() == NodeKind::Union) return inner;
      // v lies in a part of size s inside a join of total size n:
      // add x[(1+x)^{n-1} - (1+x)^{s-1}].
      const int n = t.leaf_count();
      const int s = c.leaf_count();
      poly::Dense big = poly::one_plus_x_pow(n - 1);
      const poly::Dense small = poly::one_plus_x_pow(s - 1);
      for (std::size_t k = 0; k < small.size(); ++k) big[k] -= small[k];
      big.insert(big.begin(), BigInt(0));
      inner += poly::from_dense(order, big);
      return inner;
    }
    offset += c.leaf_count();
  }
  throw Error(Errc::LeafOutOfRange, "leaf index beyond subtree");
}

}  // namespace detail

/// Phi_{G,v} where v is the leaf at `leaf_index` in left-to-right order.
inline SubgraphPolynomial phi_local_cotree(const Cotree& t, int leaf_index) {
  if (leaf_index < 0 || leaf_index >= t.leaf_count())
    throw Error(Errc::LeafOutOfRange,
                "leaf " + std::to_string(leaf_index) + " of a tree with " + std::to_string(t.leaf_count()));
  if (t.leaf_count() > kMaxOrder) throw Error(Errc::OrderOutOfRange, "cotree larger than 64 leaves");
  return detail::phi_local(t, leaf_index, t.leaf_count());
}

// -------------------------------------------------------- brute force

inline constexpr int kDefaultBruteForceCap = 24;
/// Orders from which the subset scan is split across threads.
inline constexpr int kParallelScanFrom = 18;

/// Counts connected induced subgraphs over the subset range [first, last),
/// where subset number m is mapped through `expand`. counts[k] = a_k.
template <class Expand>
void count_connected_range(const Graph& g, std::uint64_t first, std::uint64_t last, Expand expand,
                           std::vector<std::uint64_t>& counts) {
  for (std::uint64_t m = first; m < last; ++m) {
    const Mask s = expand(m);
    if (s == 0) continue;
    if (flood_fill(g, s & (~s + 1), s) == s) ++counts[static_cast<std::size_t>(popcount(s))];
  }
}

namespace detail {

template <class Expand>
SubgraphPolynomial scan(const Graph& g, std::uint64_t total, Expand expand, unsigned workers) {
  const int n = g.order();
  if (workers == 0)
    workers = n >= kParallelScanFrom ? std::max(1U, std::thread::hardware_concurrency()) : 1U;
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
  if (workers == 1) {
    count_connected_range(g, 0, total, expand, partial[0]);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = std::min<std::uint64_t>(total, w * chunk);
      const std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
      pool.emplace_back([&, w, lo, hi] { count_connected_range(g, lo, hi, expand, partial[w]); });
    }
  }
  std::vector<BigInt> coeffs(static_cast<std::size_t>(n), 0);
  for (const auto& p : partial)
    for (int k = 1; k <= n; ++k) coeffs[static_cast<std::size_t>(k - 1)] += p[static_cast<std::size_t>(k)];
  return SubgraphPolynomial(n, std::move(coeffs));
}

inline void check_cap(const Graph& g, int cap) {
  if (g.order() > cap || cap > 40)
    throw Error(Errc::OrderOutOfRange,
                "brute force over order " + std::to_string(g.order()) + " exceeds cap " + std::to_string(cap));
}

}  // namespace detail

/// a_k by scanning all 2^n vertex subsets. `workers` = 0 picks a default; the
/// result does not depend on the partition.
inline SubgraphPolynomial phi_bruteforce(const Graph& g, int cap = kDefaultBruteForceCap, unsigned workers = 0) {
  detail::check_cap(g, cap);
  const std::uint64_t total = std::uint64_t{1} << g.order();
  return detail::scan(g, total, [](std::uint64_t m) { return Mask{m}; }, workers);
}

/// a_k(G; v) by scanning the 2^(n-1) subsets that contain v.
inline SubgraphPolynomial phi_local_bruteforce(const Graph& g, int v, int cap = kDefaultBruteForceCap,
                                               unsigned workers = 0) {
  detail::check_cap(g, cap);
  if (v < 0 || v >= g.order())
    throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " of order " + std::to_string(g.order()));
  const std::uint64_t total = std::uint64_t{1} << (g.order() - 1);
  const Mask low = bit(v) - 1;
  return detail::scan(
      g, total, [v, low](std::uint64_t m) { return ((Mask{m} & ~low) << 1) | (Mask{m} & low) | bit(v); }, workers);
}

/// Subtree polynomial of a tree: rooted DP f(v) = x * prod_c (1 + f(c)),
/// Phi = sum_v f(v). Polynomial time; throws RangeError on non-trees.
inline SubgraphPolynomial phi_tree(const Graph& g) {
  const int n = g.order();
  if (g.edge_count() != n - 1 || !is_connected(g)) throw Error(Errc::RangeError, "phi_tree needs a tree");
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> order{0};
  Mask seen = bit(0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int v = order[i];
    for_each_bit(g.neighbors(v) & ~seen, [&](int c) {
      parent[static_cast<std::size_t>(c)] = v;
      seen |= bit(c);
      order.push_back(c);
    });
  }
  std::vector<poly::Dense> rooted(static_cast<std::size_t>(n), poly::Dense{0, 1});
  poly::Dense total(static_cast<std::size_t>(n) + 1, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const poly::Dense& f = rooted[static_cast<std::size_t>(*it)];
    for (std::size_t k = 0; k < f.size(); ++k) total[k] += f[k];
    const int p = parent[static_cast<std::size_t>(*it)];
    if (p < 0) continue;
    poly::Dense& fp = rooted[static_cast<std::size_t>(p)];
    poly::Dense prod(fp.size() + f.size() - 1, 0);
    for (std::size_t a = 0; a < fp.size(); ++a) {
      if (fp[a] == 0) continue;
      prod[a] += fp[a];
      for (std::size_t b = 0; b < f.size(); ++b) prod[a + b] += fp[a] * f[b];
    }
    fp = std::move(prod);
  }
  return poly::from_dense(n, total);
}

// ---------------------------------------------------------------- means

/// Phi'(1) / Phi(1).
inline Rational global_mean(const SubgraphPolynomial& p) {
  const BigInt total = p.value_at_one();
  if (total == 0) throw Error(Errc::ZeroPolynomial, "mean of the zero polynomial");
  return Rational(p.derivative_at_one(), total);
}

/// Mean order of the nontrivial connected induced subgraphs; 0 when there are none.
inline Rational mstar_mean(const SubgraphPolynomial& p) {
  const SubgraphPolynomial star = p.nontrivial_part();
  const BigInt total = star.value_at_one();
  if (total == 0) return Rational(0);
  return Rational(star.derivative_at_one(), total);
}

inline Rational density(const SubgraphPolynomial& p) {
  if (p.order() == 0) throw Error(Errc::ZeroPolynomial, "density of an order-0 polynomial");
  return global_mean(p) / p.order();
}

/// R_G(p) = sum_k a_k p^k (1-p)^(n-k), 0 < p < 1.
inline Rational node_reliability(const SubgraphPolynomial& poly, const Rational& prob) {
  if (prob <= 0 || prob >= 1) throw Error(Errc::ProbabilityOutOfRange, "p = " + to_string(prob) + " not in (0,1)");
  const int n = poly.order();
  const Rational q = 1 - prob;
  std::vector<Rational> ppow(static_cast<std::size_t>(n) + 1, Rational(1));
  std::vector<Rational> qpow(static_cast<std::size_t>(n) + 1, Rational(1));
  for (int k = 1; k <= n; ++k) {
    ppow[static_cast<std::size_t>(k)] = ppow[static_cast<std::size_t>(k - 1)] * prob;
    qpow[static_cast<std::size_t>(k)] = qpow[static_cast<std::size_t>(k - 1)] * q;
  }
  Rational r = 0;
  for (int k = 1; k <= n; ++k)
    r += Rational(poly.coefficient(k)) * ppow[static_cast<std::size_t>(k)] * qpow[static_cast<std::size_t>(n - k)];
  return r;
}

// ---------------------------------------------------------- closed forms

/// (psi_{s,n-s}(1), psi'_{s,n-s}(1)) = (2^n - 2^{n-s} - 2^s + 1,
/// n 2^{n-1} - s 2^{s-1} - (n-s) 2^{n-s-1}).
inline std::pair<BigInt, BigInt> closed_form_psi(int s, int n) {
  if (s < 1 || s > n - 1) throw Error(Errc::RangeError, "closed_form_psi needs 1 <= s <= n-1");
  const auto un = static_cast<unsigned>(n);
  const auto us = static_cast<unsigned>(s);
  BigInt value = pow2(un) - pow2(un - us) - pow2(us) + 1;
  BigInt deriv = BigInt(n) * pow2(un - 1) - BigInt(s) * pow2(us - 1) - BigInt(n - s) * pow2(un - us - 1);
  return {std::move(value), std::move(deriv)};
}

enum class Family {
  Star,                        // M_{K_{1,n-1}}, n >= 1
  Skillet,                     // M_{S_n}, n >= 3
  Complete,                    // M_{K_n}, n >= 1
  CompleteBipartite,           // M_{K_{s,n-s}}, 1 <= s <= n-1
  CompleteBipartiteMstar,      // M*_{K_{s,n-s}} = psi'(1)/psi(1)
  StarMstarFull,               // M*_{K_{1,n-1}}, n >= 2
  K1UnionStar,                 // M_{K_1 u K_{1,n-2}}, n >= 3
  StarMstar,                   // M*_{K_{1,n-3}}, n >= 4
  K2N3,                        // M_{K_{2,n-3}}, n >= 4
  StarN3,                      // M_{K_{1,n-3}}, n >= 4
};

inline constexpr std::pair<Family, std::string_view> kFamilyNames[] = {
    {Family::Star, "STAR"},
    {Family::Skillet, "SKILLET"},
    {Family::Complete, "COMPLETE"},
    {Family::CompleteBipartite, "COMPLETE_BIPARTITE"},
    {Family::CompleteBipartiteMstar, "COMPLETE_BIPARTITE_MSTAR"},
    {Family::StarMstarFull, "STAR_MSTAR_FULL"},
    {Family::K1UnionStar, "K1_UNION_STAR"},
    {Family::StarMstar, "STAR_MSTAR"},
    {Family::K2N3, "K_2_N3"},
    {Family::StarN3, "STAR_N3"},
};

inline Family parse_family(std::string_view name) {
  for (auto [f, s] : kFamilyNames)
    if (s == name) return f;
  throw Error(Errc::UnknownFamily, "unknown closed-form family '" + std::string(name) + "'");
}

inline std::string_view family_name(Family f) {
  for (auto [g, s] : kFamilyNames)
    if (g == f) return s;
  return "?";
}

inline bool family_takes_part_size(Family f) {
  return f == Family::CompleteBipartite || f == Family::CompleteBipartiteMstar;
}

/// Exact closed-form means, written exactly as the published formulas.
/// `s` is used only by the complete-bipartite families.
inline Rational closed_form_mean(Family family, int n, int s = 0) {
  auto need = [&](bool ok) {
    if (!ok)
      throw Error(Errc::RangeError, std::string(family_name(family)) + " outside its range at n=" + std::to_string(n) +
                                        (family_takes_part_size(family) ? ", s=" + std::to_string(s) : ""));
  };
  need(n >= 1 && n <= 4096);
  const auto un = static_cast<unsigned>(n);
  const BigInt N = n;
  switch (family) {
    case Family::Star:
      // (n+1)/2 - (n-1)^2 / (2(2^{n-1} + n - 1))
      return Rational(N + 1, 2) - Rational((N - 1) * (N - 1), 2 * (pow2(un - 1) + N - 1));
    case Family::Skillet:
      need(n >= 3);
      return Rational(N, 2) + Rational(1, 3 * pow2(un - 2));
    case Family::Complete:
      return Rational(N, 2) + Rational(N, pow2(un + 1) - 2);
    case Family::CompleteBipartite: {
      need(s >= 1 && s <= n - 1);
      auto [v, d] = closed_form_psi(s, n);
      return Rational(N + d, N + v);
    }
    case Family::CompleteBipartiteMstar: {
      need(s >= 1 && s <= n - 1);
      auto [v, d] = closed_form_psi(s, n);
      return Rational(d, v);
    }
    case Family::StarMstarFull:
      need(n >= 2);
      // (2^{n-2}(n+1) - 1) / (2^{n-1} - 1)
      return Rational(pow2(un - 2) * (N + 1) - 1, pow2(un - 1) - 1);
    case Family::K1UnionStar:
      need(n >= 3);
      return Rational((N - 1) + N * pow2(un - 3), (N - 1) + pow2(un - 2));
    case Family::StarMstar:
      need(n >= 4);
      return Rational((N - 1) * pow2(un - 4) - 1, pow2(un - 3) - 1);
    case Family::K2N3:
      need(n >= 4);
      return Rational(3 * N * pow2(un - 4) - pow2(un - 4) + N - 5, 3 * pow2(un - 3) + N - 4);
    case Family::StarN3:
      need(n >= 4);
      return Rational((N - 3) + (N - 1) * pow2(un - 4), (N - 3) + pow2(un - 3));
  }
  throw Error(Errc::UnknownFamily, "unhandled family");
}

}  // namespace cogmean

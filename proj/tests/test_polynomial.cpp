#include <random>

#include "catch_amalgamated.hpp"

#include "cogmean/enumerate.hpp"
#include "cogmean/graph_families.hpp"
#include "cogmean/polynomial.hpp"
#include "oracles.hpp"

using namespace cogmean;
using families::complete;
using families::skillet;
using families::star;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> v) {
  std::vector<BigInt> out;
  for (long long x : v) out.emplace_back(x);
  return out;
}

std::vector<BigInt> big(const std::vector<long long>& v) {
  std::vector<BigInt> out;
  for (long long x : v) out.emplace_back(x);
  return out;
}

Rational q(const char* s) { return parse_rational(s); }

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::ParseError;
}

std::vector<Graph> all_graphs(int n) {
  std::vector<Graph> out;
  for (auto& [key, g] : oracle::all_classes(n)) out.push_back(g);
  return out;
}

}  // namespace

TEST_CASE("phi_cotree on named families") {
  CHECK(phi_cotree(star(4)).coeffs() == big({4, 3, 3, 1}));
  CHECK(phi_cotree(complete(4)).coeffs() == big({4, 6, 4, 1}));
  CHECK(phi_cotree(skillet(4)).coeffs() == big({4, 4, 3, 1}));
  CHECK(phi_cotree(Cotree::leaf()).coeffs() == big({1}));
  for (int n = 2; n <= 20; ++n) {
    // x(1+x)^{n-1} + (n-1)x
    poly::Dense d = poly::one_plus_x_pow(n - 1);
    d.insert(d.begin(), BigInt(0));
    d[1] += n - 1;
    CHECK(phi_cotree(star(n)) == poly::from_dense(n, d));
    poly::Dense k = poly::one_plus_x_pow(n);
    k[0] = 0;
    CHECK(phi_cotree(complete(n)) == poly::from_dense(n, k));
  }
}

TEST_CASE("the printed skillet polynomial is not what the recursion gives") {
  // (1+x)^{n-1} - 1 + x + x^2 (1+x)^{n-3} at n = 4 sums to 10; the graph has 12.
  const int n = 4;
  const BigInt printed = pow2(n - 1) - 1 + 1 + pow2(n - 3);
  CHECK(printed == 10);
  CHECK(phi_cotree(skillet(n)).value_at_one() == 12);
  CHECK(phi_bruteforce(cotree_to_graph(skillet(n))).value_at_one() == 12);
  CHECK(global_mean(phi_cotree(skillet(n))) == q("25/12"));
}

TEST_CASE("phi_bruteforce") {
  CHECK(phi_bruteforce(graphs::cycle(4)).coeffs() == big({4, 4, 4, 1}));
  CHECK(phi_bruteforce(graphs::path(4)).coeffs() == big({4, 3, 2, 1}));
  CHECK(phi_bruteforce(Graph::edgeless(5)).coeffs() == big({5, 0, 0, 0, 0}));
  CHECK(code_of([] { phi_bruteforce(Graph::edgeless(25)); }) == Errc::OrderOutOfRange);
  CHECK(code_of([] { phi_bruteforce(Graph::edgeless(5), 41); }) == Errc::OrderOutOfRange);
}

TEST_CASE("phi_bruteforce agrees with the subset-listing oracle") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : all_graphs(n)) {
      REQUIRE(phi_bruteforce(g).coeffs() == big(oracle::phi(g)));
      for (int v = 0; v < n; ++v) REQUIRE(phi_local_bruteforce(g, v).coeffs() == big(oracle::phi(g, v)));
    }
}

TEST_CASE("brute force does not depend on the worker split") {
  const Graph g = graphs::cartesian_product(graphs::path(3), graphs::cycle(6));
  const SubgraphPolynomial one = phi_bruteforce(g, 24, 1);
  CHECK(one == phi_bruteforce(g, 24, 3));
  CHECK(one == phi_bruteforce(g, 24, 8));
  CHECK(phi_local_bruteforce(g, 5, 24, 1) == phi_local_bruteforce(g, 5, 24, 4));
}

TEST_CASE("phi_local_cotree") {
  for (int n = 1; n <= 12; ++n) {
    poly::Dense d = poly::one_plus_x_pow(n - 1);
    d.insert(d.begin(), BigInt(0));
    CHECK(phi_local_cotree(star(n), 0) == poly::from_dense(n, d));
    CHECK(global_mean(phi_local_cotree(star(n), 0)) == Rational(BigInt(n + 1), BigInt(2)));
  }
  const SubgraphPolynomial p3_leaf = phi_local_cotree(star(3), 1);
  CHECK(p3_leaf.coeffs() == big({1, 1, 1}));
  CHECK(global_mean(p3_leaf) == 2);
  CHECK(phi_local_cotree(Cotree::leaf(), 0).coeffs() == big({1}));
  CHECK(code_of([] { phi_local_cotree(star(3), 3); }) == Errc::LeafOutOfRange);
  CHECK(code_of([] { phi_local_cotree(star(3), -1); }) == Errc::LeafOutOfRange);
}

TEST_CASE("phi_local_bruteforce") {
  CHECK(phi_local_bruteforce(cotree_to_graph(star(5)), 0).coeffs() == big({1, 4, 6, 4, 1}));
  CHECK(phi_local_bruteforce(graphs::path(4), 0).coeffs() == big({1, 1, 1, 1}));
  CHECK(code_of([] { phi_local_bruteforce(graphs::path(4), 4); }) == Errc::VertexOutOfRange);
}

TEST_CASE("handshake: local polynomials sum to x Phi'(x) on every graph of order <= 8") {
  GraphEnumerator en;
  for (int n = 1; n <= 8; ++n)
    for (const Graph& g : en.all(n)) {
      SubgraphPolynomial sum(n, {});
      for (int v = 0; v < n; ++v) sum += phi_local_bruteforce(g, v);
      const SubgraphPolynomial phi = phi_bruteforce(g);
      for (int k = 1; k <= n; ++k) REQUIRE(sum.coefficient(k) == phi.coefficient(k) * k);
    }
}

TEST_CASE("coefficient invariants") {
  CotreeEnumerator en;
  for (int n = 1; n <= 8; ++n)
    for (const Cotree& t : en.trees(n)) {
      const SubgraphPolynomial p = phi_cotree(t);
      REQUIRE(p.coefficient(1) == n);
      REQUIRE(p.coefficient(n) == (is_connected_cotree(t) ? 1 : 0));
      for (const BigInt& c : p.coeffs()) REQUIRE(c >= 0);
    }
}

TEST_CASE("join folding does not depend on grouping") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const SubgraphPolynomial a = phi_cotree(random_cotree(1 + static_cast<int>(rng() % 6), rng));
    const SubgraphPolynomial b = phi_cotree(random_cotree(1 + static_cast<int>(rng() % 6), rng));
    const SubgraphPolynomial c = phi_cotree(random_cotree(1 + static_cast<int>(rng() % 6), rng));
    REQUIRE(join_polynomial(join_polynomial(a, b), c) == join_polynomial(a, join_polynomial(b, c)));
    REQUIRE(join_polynomial(a, b) == join_polynomial(b, a));
  }
}

TEST_CASE("global_mean, mstar_mean, density") {
  CHECK(global_mean(phi_cotree(families::complete_bipartite(2, 2))) == q("28/13"));
  CHECK(global_mean(phi_cotree(complete(3))) == q("12/7"));
  CHECK(global_mean(phi_cotree(Cotree::leaf())) == 1);
  CHECK(code_of([] { global_mean(SubgraphPolynomial(3, {})); }) == Errc::ZeroPolynomial);

  for (int n = 1; n <= 6; ++n) CHECK(mstar_mean(phi_cotree(families::edgeless(n))) == 0);
  CHECK(mstar_mean(phi_cotree(star(3))) == q("7/3"));
  CHECK(mstar_mean(phi_cotree(complete(2))) == 2);

  CHECK(density(phi_cotree(Cotree::leaf())) == 1);
  CHECK(density(phi_cotree(families::complete_bipartite(2, 2))) == q("7/13"));
  CHECK(density(phi_cotree(skillet(10))) == closed_form_mean(Family::Skillet, 10) / 10);
  CHECK(density(phi_cotree(skillet(10))) == q("1/2") + Rational(BigInt(1), BigInt(30) * pow2(8)));
}

TEST_CASE("mean of a sum lies between the summands' means") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coef(0, 1000);
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + static_cast<int>(rng() % 10);
    std::vector<BigInt> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      a[static_cast<std::size_t>(k)] = coef(rng) * (rng() % 3 ? 1 : 0);
      b[static_cast<std::size_t>(k)] = coef(rng);
    }
    a[0] += 1;
    b[0] += 1;
    const SubgraphPolynomial pa(n, a), pb(n, b);
    SubgraphPolynomial sum = pa;
    sum += pb;
    const Rational ma = global_mean(pa), mb = global_mean(pb), ms = global_mean(sum);
    REQUIRE(ms >= std::min(ma, mb));
    REQUIRE(ms <= std::max(ma, mb));
  }
}

TEST_CASE("node reliability") {
  CHECK(node_reliability(phi_cotree(Cotree::leaf()), q("1/2")) == q("1/2"));
  CHECK(node_reliability(phi_cotree(Cotree::leaf()), q("1/3")) == q("1/3"));
  CHECK(node_reliability(phi_cotree(complete(3)), q("1/2")) * 8 == 7);
  CHECK(node_reliability(phi_cotree(families::edgeless(2)), q("1/2")) == q("1/2"));
  CHECK(code_of([] { node_reliability(phi_cotree(complete(3)), q("0")); }) == Errc::ProbabilityOutOfRange);
  CHECK(code_of([] { node_reliability(phi_cotree(complete(3)), q("1")); }) == Errc::ProbabilityOutOfRange);
  CHECK(code_of([] { node_reliability(phi_cotree(complete(3)), q("-1/2")); }) == Errc::ProbabilityOutOfRange);
}

TEST_CASE("reliability transform on every graph of order <= 8") {
  GraphEnumerator en;
  std::mt19937_64 rng(9);
  for (int n = 1; n <= 8; ++n)
    for (const Graph& g : en.all(n)) {
      const SubgraphPolynomial phi = phi_bruteforce(g);
      REQUIRE(node_reliability(phi, q("1/2")) * Rational(pow2(static_cast<unsigned>(n))) == Rational(phi.value_at_one()));
      for (int i = 0; i < 5; ++i) {
        const Rational x(BigInt(1 + rng() % 50), BigInt(1 + rng() % 50));
        Rational scale = 1;
        for (int k = 0; k < n; ++k) scale *= 1 + x;
        REQUIRE(scale * node_reliability(phi, x / (1 + x)) == phi.evaluate(x));
      }
    }
}

TEST_CASE("closed_form_psi") {
  CHECK(closed_form_psi(1, 3) == std::pair<BigInt, BigInt>{3, 7});
  CHECK(closed_form_psi(2, 4) == std::pair<BigInt, BigInt>{9, 24});
  CHECK(closed_form_psi(1, 2) == std::pair<BigInt, BigInt>{1, 2});
  CHECK(mstar_mean(phi_cotree(star(3))) == Rational(BigInt(7), BigInt(3)));
  CHECK(code_of([] { closed_form_psi(0, 3); }) == Errc::RangeError);
  CHECK(code_of([] { closed_form_psi(3, 3); }) == Errc::RangeError);
  for (int n = 2; n <= 30; ++n)
    for (int s = 1; s < n; ++s) {
      const SubgraphPolynomial p = psi(s, n - s);
      REQUIRE(closed_form_psi(s, n) == std::pair<BigInt, BigInt>{p.value_at_one(), p.derivative_at_one()});
    }
  // both sides of K_{2,2} are independent, so every nontrivial connected set meets both
  CHECK(psi(2, 2) == phi_bruteforce(graphs::cycle(4)).nontrivial_part());
}

TEST_CASE("closed-form means") {
  CHECK(closed_form_mean(Family::Star, 4) == q("23/11"));
  CHECK(closed_form_mean(Family::Skillet, 4) == q("25/12"));
  CHECK(closed_form_mean(Family::Complete, 4) == q("32/15"));
  CHECK(closed_form_mean(parse_family("STAR"), 4) == q("23/11"));
  CHECK(code_of([] { parse_family("WHEEL"); }) == Errc::UnknownFamily);
  CHECK(code_of([] { closed_form_mean(Family::Skillet, 2); }) == Errc::RangeError);
  CHECK(code_of([] { closed_form_mean(Family::CompleteBipartite, 5, 5); }) == Errc::RangeError);
  CHECK(code_of([] { closed_form_mean(Family::K1UnionStar, 2); }) == Errc::RangeError);
  for (int n = 3; n <= 30; ++n) {
    CHECK(global_mean(phi_cotree(skillet(n))) == closed_form_mean(Family::Skillet, n));
    CHECK(global_mean(phi_cotree(star(n))) == closed_form_mean(Family::Star, n));
    CHECK(global_mean(phi_cotree(complete(n))) == closed_form_mean(Family::Complete, n));
    for (int s = 1; s < n; ++s)
      CHECK(mstar_mean(phi_cotree(families::complete_bipartite(s, n - s))) ==
            closed_form_mean(Family::CompleteBipartiteMstar, n, s));
  }
}

TEST_CASE("closed forms match brute force on small orders") {
  for (int n = 4; n <= 12; ++n) {
    const Graph k1_star = cotree_to_graph(families::disjoint_union(Cotree::leaf(), star(n - 1)));
    CHECK(global_mean(phi_bruteforce(k1_star)) == closed_form_mean(Family::K1UnionStar, n));
    CHECK(mstar_mean(phi_bruteforce(cotree_to_graph(star(n - 2)))) == closed_form_mean(Family::StarMstar, n));
    CHECK(global_mean(phi_bruteforce(cotree_to_graph(families::complete_bipartite(2, n - 3)))) ==
          closed_form_mean(Family::K2N3, n));
    CHECK(global_mean(phi_bruteforce(cotree_to_graph(star(n - 2)))) == closed_form_mean(Family::StarN3, n));
  }
}

TEST_CASE("phi_tree") {
  for (int n = 2; n <= 12; ++n)
    for (const Graph& t : enumerate_caterpillars(n)) REQUIRE(phi_tree(t) == phi_bruteforce(t));
  CHECK(phi_tree(Graph::edgeless(1)).coeffs() == big({1}));
  CHECK(code_of([] { phi_tree(graphs::cycle(4)); }) == Errc::RangeError);
  CHECK(code_of([] { phi_tree(Graph::edgeless(3)); }) == Errc::RangeError);
}

TEST_CASE("polynomial value type") {
  SubgraphPolynomial a(2, big({1, 1}));
  a += SubgraphPolynomial(3, big({1, 0, 1}));
  CHECK(a.order() == 3);
  CHECK(a.coeffs() == big({2, 1, 1}));
  CHECK(a.evaluate(q("1/2")) == q("1") + q("1/4") + q("1/8"));
  CHECK(a.nontrivial_part().coeffs() == big({0, 1, 1}));
  CHECK(code_of([] { SubgraphPolynomial(1, big({1, 1})); }) == Errc::RangeError);
}

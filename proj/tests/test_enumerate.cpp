#include <random>
#include <set>

#include "catch_amalgamated.hpp"

#include "cogmean/canonical.hpp"
#include "cogmean/enumerate.hpp"
#include "cogmean/graph_families.hpp"
#include "oracles.hpp"

using namespace cogmean;

namespace {

std::set<std::string> keys_of(const std::vector<Graph>& gs) {
  std::set<std::string> out;
  for (const Graph& g : gs) out.insert(oracle::iso_key(g));
  return out;
}

std::set<std::string> oracle_keys(int n, bool (*keep)(const Graph&)) {
  std::set<std::string> out;
  for (const auto& [key, g] : oracle::all_classes(n))
    if (keep(g)) out.insert(key);
  return out;
}

bool p4_free(const Graph& g) { return !oracle::has_induced_p4(g); }
bool connected_p4_free(const Graph& g) { return p4_free(g) && oracle::is_connected(g); }
bool disconnected_p4_free(const Graph& g) { return p4_free(g) && !oracle::is_connected(g); }
bool connected(const Graph& g) { return oracle::is_connected(g); }

/// A tree is a caterpillar iff deleting its leaves leaves a path (or nothing).
bool is_caterpillar(const Graph& g) {
  if (g.edge_count() != g.order() - 1 || !oracle::is_connected(g)) return false;
  std::vector<int> inner;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > 1) inner.push_back(v);
  if (inner.empty()) return true;
  Mask m = 0;
  for (int v : inner) m |= bit(v);
  const Graph spine = induced_subgraph(g, {m});
  for (int v = 0; v < spine.order(); ++v)
    if (spine.degree(v) > 2) return false;
  return true;
}

std::vector<Graph> graphs_of(const std::vector<Cotree>& ts) {
  std::vector<Graph> out;
  for (const Cotree& t : ts) out.push_back(cotree_to_graph(t));
  return out;
}

}  // namespace

TEST_CASE("cotree counts match the P4-free oracle for n <= 7") {
  const int total[] = {1, 2, 4, 10, 24, 66, 180};
  const int conn[] = {1, 1, 2, 5, 12, 33, 90};
  CotreeEnumerator en;
  for (int n = 1; n <= 7; ++n) {
    const auto all = en.trees(n);
    const auto c = en.trees(n, Connectivity::Connected);
    const auto d = en.trees(n, Connectivity::Disconnected);
    CHECK(static_cast<int>(all.size()) == total[n - 1]);
    CHECK(static_cast<int>(c.size()) == conn[n - 1]);
    CHECK(all.size() == c.size() + d.size());
    CHECK(keys_of(graphs_of(all)) == oracle_keys(n, p4_free));
    CHECK(keys_of(graphs_of(c)) == oracle_keys(n, connected_p4_free));
    CHECK(keys_of(graphs_of(d)) == oracle_keys(n, disconnected_p4_free));
  }
}

TEST_CASE("cotree counts continue the known sequence") {
  const int total[] = {522, 1532, 4624, 14136, 43930};
  CotreeEnumerator en;
  for (int n = 8; n <= 12; ++n) {
    CHECK(static_cast<int>(en.entries(n).size()) == total[n - 8]);
    CHECK(static_cast<int>(en.entries(n, Connectivity::Connected).size()) == total[n - 8] / 2);
  }
}

TEST_CASE("cotree stream is sorted, duplicate-free and round-trips") {
  CotreeEnumerator en;
  CHECK(en.entries(2).size() == 2);
  CHECK(en.entries(2)[0].key == "J(L,L)");
  CHECK(en.entries(2)[1].key == "U(L,L)");
  CHECK(en.entries(1, Connectivity::Disconnected).empty());
  for (int n = 1; n <= 9; ++n) {
    const auto es = en.entries(n);
    std::set<std::string> seen;
    for (std::size_t i = 0; i < es.size(); ++i) {
      REQUIRE(es[i].key == format_cotree(es[i].tree));
      REQUIRE(seen.insert(es[i].key).second);
      if (i > 0) REQUIRE(es[i - 1].key < es[i].key);
      REQUIRE(graph_to_cotree(cotree_to_graph(es[i].tree)) == es[i].tree);
    }
  }
}

TEST_CASE("sharded cotree streams cover the full stream exactly once") {
  for (int k : {1, 2, 3, 7}) {
    std::multiset<std::string> merged;
    for (int i = 0; i < k; ++i)
      for (const Cotree& t : enumerate_cotrees(8, Connectivity::Any, {i, k})) merged.insert(format_cotree(t));
    std::multiset<std::string> full;
    for (const Cotree& t : enumerate_cotrees(8)) full.insert(format_cotree(t));
    CHECK(merged == full);
  }
  CHECK_THROWS_AS(enumerate_cotrees(4, Connectivity::Any, {3, 3}), Error);
  CHECK_THROWS_AS(enumerate_cotrees(4, Connectivity::Any, {0, 0}), Error);
}

TEST_CASE("cotree enumeration limits") {
  CHECK_THROWS_AS(enumerate_cotrees(0), Error);
  CHECK_THROWS_AS(enumerate_cotrees(21), Error);
}

TEST_CASE("connected graphs") {
  CHECK(enumerate_connected_graphs(1).size() == 1);
  CHECK(enumerate_connected_graphs(4).size() == 6);
  CHECK(enumerate_connected_graphs(5).size() == 21);
  for (int n = 1; n <= 6; ++n) CHECK(keys_of(enumerate_connected_graphs(n)) == oracle_keys(n, connected));
  CHECK_THROWS_AS(enumerate_connected_graphs(9), Error);
  CHECK_THROWS_AS(enumerate_connected_graphs(0), Error);
}

TEST_CASE("all graphs of order 7 and 8") {
  GraphEnumerator en;
  CHECK(en.all(7).size() == 1044);
  CHECK(en.connected(7).size() == 853);
  CHECK(keys_of(en.all(7)) == keys_of([] {
          std::vector<Graph> v;
          for (auto& [k, g] : oracle::all_classes(7)) v.push_back(g);
          return v;
        }()));
  CHECK(en.all(8).size() == 12346);
  CHECK(en.connected(8).size() == 11117);
  for (const Graph& g : en.all(6)) REQUIRE(canonical_form(g).graph == g);
}

TEST_CASE("sharded graph streams cover the full stream exactly once") {
  GraphEnumerator en;
  const auto full = en.connected(6);
  std::vector<std::string> merged;
  for (int i = 0; i < 4; ++i)
    for (const Graph& g : en.connected(6, {i, 4})) merged.push_back(emit_graph6(g));
  std::vector<std::string> expected;
  for (const Graph& g : full) expected.push_back(emit_graph6(g));
  std::sort(merged.begin(), merged.end());
  std::sort(expected.begin(), expected.end());
  CHECK(merged == expected);
}

TEST_CASE("caterpillars") {
  CHECK(enumerate_caterpillars(2) == std::vector<Graph>{graphs::path(2)});
  const auto four = enumerate_caterpillars(4);
  REQUIRE(four.size() == 2);
  CHECK(keys_of(four) == keys_of({graphs::path(4), cotree_to_graph(families::star(4))}));
  CHECK(enumerate_caterpillars(5).size() == 3);
  for (int n = 2; n <= 7; ++n) CHECK(keys_of(enumerate_caterpillars(n)) == oracle_keys(n, is_caterpillar));
  for (int n = 3; n <= 20; ++n) {
    const std::size_t expected = (std::size_t{1} << (n - 4 >= 0 ? n - 4 : 0)) + (std::size_t{1} << ((n - 4) / 2));
    if (n >= 4) CHECK(enumerate_caterpillar_specs(n).size() == expected);
  }
  CHECK(enumerate_caterpillar_specs(3).size() == 1);
  for (int n = 2; n <= 10; ++n) {
    std::set<std::string> forms;
    for (const Graph& g : enumerate_caterpillars(n)) {
      REQUIRE(is_caterpillar(g));
      REQUIRE(forms.insert(emit_graph6(canonical_form(g).graph)).second);
    }
  }
  CHECK_THROWS_AS(enumerate_caterpillars(1), Error);
  CHECK_THROWS_AS(enumerate_caterpillars(21), Error);
}

TEST_CASE("random cotrees are canonical") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + static_cast<int>(rng() % 14);
    const Cotree t = random_cotree(n, rng);
    REQUIRE(t.leaf_count() == n);
    REQUIRE(canonicalize(t) == t);
    REQUIRE(parse_cotree(format_cotree(t)) == t);
  }
}

TEST_CASE("family names") {
  for (auto f : {GenFamily::Cographs, GenFamily::ConnectedCographs, GenFamily::DisconnectedCographs,
                 GenFamily::ConnectedGraphs, GenFamily::Caterpillars})
    CHECK(parse_gen_family(gen_family_name(f)) == f);
  CHECK(parse_gen_family("connected-cographs") == GenFamily::ConnectedCographs);
  CHECK_THROWS_AS(parse_gen_family("trees"), Error);
}

#include "catch_amalgamated.hpp"

#include "cogmean/verify.hpp"
#include "oracles.hpp"

using namespace cogmean;

namespace {

Rational oracle_mean(const Graph& g, int must_contain = -1) {
  const auto a = oracle::phi(g, must_contain);
  BigInt num = 0;
  BigInt den = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    num += BigInt(a[k]) * BigInt(k + 1);
    den += BigInt(a[k]);
  }
  return Rational(num, den);
}

const TheoremVerdict& by_id(const std::vector<TheoremVerdict>& vs, const std::string& id) {
  for (const auto& v : vs)
    if (v.id == id) return v;
  FAIL("missing verdict " << id);
  return vs.front();
}

std::string failures(const std::vector<TheoremVerdict>& vs) {
  std::string out;
  for (const auto& v : vs)
    if (!v.pass) out += v.id + " " + v.witness.dump() + "\n";
  return out;
}

}  // namespace

TEST_CASE("extremal search agrees with an exhaustive oracle over connected cographs") {
  SearchContext ctx;
  for (int n = 2; n <= 7; ++n) {
    std::optional<Rational> hi, lo;
    std::set<std::string> argmax;
    for (const auto& [key, g] : oracle::all_classes(n)) {
      if (oracle::has_induced_p4(g) || !oracle::is_connected(g)) continue;
      const Rational m = oracle_mean(g);
      if (!hi || m > *hi) {
        hi = m;
        argmax.clear();
      }
      if (m == *hi) argmax.insert(key);
      if (!lo || m < *lo) lo = m;
    }
    const auto max = extremal_search({GenFamily::ConnectedCographs, n}, Objective::GlobalMeanMax, ctx);
    const auto min = extremal_search({GenFamily::ConnectedCographs, n}, Objective::GlobalMeanMin, ctx);
    CHECK(max.winners.front().mean == *hi);
    CHECK(min.winners.front().mean == *lo);
    std::set<std::string> got;
    for (const Winner& w : max.winners) got.insert(oracle::iso_key(cotree_to_graph(parse_cotree(w.form))));
    CHECK(got == argmax);
    CHECK(max.candidates == ctx.cotrees.entries(n, Connectivity::Connected).size());
  }
}

TEST_CASE("extremal search over connected graphs and caterpillars") {
  SearchContext ctx;
  const auto k = extremal_search({GenFamily::ConnectedGraphs, 4}, Objective::GlobalMeanMax, ctx);
  REQUIRE(k.unique());
  CHECK(k.winners.front().form == "C]");
  CHECK(to_string(k.winners.front().mean) == "28/13");
  CHECK(k.candidates == 6);
  const auto p = extremal_search({GenFamily::ConnectedGraphs, 5}, Objective::GlobalMeanMin, ctx);
  REQUIRE(p.unique());
  CHECK(is_isomorphic(parse_graph6(p.winners.front().form), graphs::path(5)));
  CHECK(p.winners.front().mean == oracle_mean(graphs::path(5)));
  const auto c = extremal_search({GenFamily::Caterpillars, 6}, Objective::GlobalMeanMin);
  CHECK(c.candidates == 6);
  CHECK(is_isomorphic(parse_graph6(c.winners.front().form), graphs::path(6)));
}

TEST_CASE("report with ties and runner-up gap") {
  SearchContext ctx;
  const auto r = extremal_search({GenFamily::Cographs, 2}, Objective::GlobalMeanMax, ctx);
  REQUIRE(r.unique());
  CHECK(r.winners.front().form == "J(L,L)");
  CHECK(to_string(r.winners.front().mean) == "4/3");
  CHECK(r.runner_up_gap() == Rational(1, 3));
  const auto one = extremal_search({GenFamily::Cographs, 1}, Objective::GlobalMeanMax, ctx);
  CHECK_FALSE(one.runner_up_gap().has_value());
  const Json j = report_json(r);
  CHECK(j.dump() ==
        R"j({"family":"cographs","order":2,"objective":"GLOBAL_MEAN_MAX","candidates":2,)j"
        R"j("winners":[{"form":"J(L,L)","mean":"4/3"}],"runner_up_gap":"1/3"})j");
}

TEST_CASE("merging shard reports equals the unsharded report in any grouping") {
  SearchContext ctx;
  for (auto obj : {Objective::GlobalMeanMax, Objective::GlobalMeanMin}) {
    const auto whole = extremal_search({GenFamily::Cographs, 7}, obj, ctx);
    std::vector<ExtremalReport> parts;
    for (int i = 0; i < 5; ++i) parts.push_back(extremal_search({GenFamily::Cographs, 7, {i, 5}}, obj, ctx));
    const auto left = merge_reports(merge_reports(merge_reports(merge_reports(parts[0], parts[1]), parts[2]), parts[3]),
                                    parts[4]);
    const auto right = merge_reports(parts[4], merge_reports(parts[3], merge_reports(parts[2], merge_reports(parts[1], parts[0]))));
    for (const auto& m : {left, right}) {
      CHECK(m.winners == whole.winners);
      CHECK(m.runner_up == whole.runner_up);
      CHECK(m.candidates == whole.candidates);
    }
  }
}

TEST_CASE("table rows") {
  SearchContext ctx;
  const TheoremVerdict t1 = verify_table1(ctx);
  CHECK(t1.pass);
  for (const TableRow& row : table1_rows())
    CHECK(row.mean == oracle_mean(cotree_to_graph(parse_cotree(row.form))));
  for (const TableRow& row : table2_rows()) {
    if (row.order > 6) continue;
    CHECK(row.mean == oracle_mean(parse_graph6(row.form)));
  }
  const TheoremVerdict t2 = verify_table2(6, ctx);
  CHECK(t2.pass);
  CHECK_THROWS_AS(verify_table2(9, ctx), Error);
  CHECK(table_tsv(table1_rows()).rfind("order\tgraph\tform\tmean\n", 0) == 0);
}

TEST_CASE("the 3x3 grid mean differs from the tabulated value") {
  const Graph grid = graphs::cartesian_product(graphs::path(3), graphs::path(3));
  CHECK(oracle::phi(grid) == std::vector<long long>{9, 12, 22, 36, 49, 48, 32, 9, 1});
  CHECK(oracle_mean(grid) == Rational(1081, 218));
  const TheoremVerdict v = verify_grid_mean();
  CHECK_FALSE(v.pass);
  CHECK(v.details["mean"] == "1081/218");
  CHECK(to_string(grid3x3_mean()) == "996/197");
}

TEST_CASE("extremal cographs") {
  SearchContext ctx;
  const auto star = verify_star_max(7, 9, ctx);
  CHECK(star.pass);
  const auto skillet = verify_skillet_min(3, 9, ctx);
  CHECK(skillet.pass);
  const auto disc = verify_disconnected_max(9, ctx);
  CHECK(disc.pass);
  const auto path = verify_path_min_conjecture(6, ctx);
  CHECK(path.pass);
  for (int n = 2; n <= 7; ++n) {
    const Rational m = global_mean(phi_cotree(max_connected_cograph(n)));
    CHECK(m == oracle_mean(cotree_to_graph(max_connected_cograph(n))));
  }
}

TEST_CASE("local mean checks") {
  SearchContext ctx;
  const auto vs = verify_local_mean(7, ctx);
  INFO(failures(vs));
  CHECK(by_id(vs, "local-mean-lower-bound").pass);
  CHECK(by_id(vs, "local-above-global").pass);
  const Graph p3 = graphs::path(3);
  CHECK(oracle_mean(p3, 0) == 2);
}

TEST_CASE("structural checks") {
  SearchContext ctx;
  const auto vs = verify_structural_theorems(9, ctx);
  INFO(failures(vs));
  CHECK(vs.size() == 8);
  for (const auto& v : vs) CHECK(v.pass);
}

TEST_CASE("inequality sweeps hold from their thresholds and log what happens below") {
  const auto vs = verify_inequality_sweeps(64);
  INFO(failures(vs));
  CHECK(vs.size() == 15);
  for (const auto& v : vs) CHECK(v.pass);
  CHECK(vs.back().id == "closed-form-agreement");
  const auto& k2 = by_id(vs, "disconnected-k2");
  CHECK(std::find(k2.log.begin(), k2.log.end(), "below threshold n=8: fails") != k2.log.end());
}

TEST_CASE("local-mean counterexample") {
  const LocalCounterexample c = find_local_counterexample(14);
  CHECK(c.host.leaves == std::vector<int>{4, 0, 1, 4});
  CHECK(c.vertex == 13);
  CHECK(emit_graph6(c.graph) == "MhaCC?_C?_A?C?~~_");
  CHECK(c.host_mean == Rational(2513, 335));
  CHECK(c.global == oracle_mean(c.graph));
  CHECK(c.local == oracle_mean(c.graph, c.vertex));
  CHECK(c.local == Rational(15, 2));
  CHECK(c.global == Rational(33233, 4431));
  CHECK(c.global > c.local);
  CHECK(verify_counterexample(14).pass);
  const LocalCounterexample big = find_local_counterexample(18);
  CHECK(big.global > big.local);
  CHECK_THROWS_AS(find_local_counterexample(13), Error);
}

TEST_CASE("density, oracle agreement and complement identity") {
  SearchContext ctx;
  const auto d = verify_density(8, ctx);
  INFO(failures(d));
  for (const auto& v : d) CHECK(v.pass);
  CHECK(verify_oracle_equivalence(6, 5, 50, ctx).pass);
  CHECK(verify_complement_identity(6, ctx).pass);
}

TEST_CASE("suites") {
  SearchContext ctx;
  CHECK(is_suite("all"));
  CHECK(is_suite("table1"));
  CHECK_FALSE(is_suite("table3"));
  try {
    run_suite("table3", std::nullopt, ctx);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownSuite);
  }
  const auto a = run_suite("structural", 7, ctx);
  const auto b = run_suite("structural", 7, ctx);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(verdict_json(a[i]).dump() == verdict_json(b[i]).dump());
  const Json fail = verdict_json(verify_grid_mean());
  CHECK(fail["status"] == "FAIL");
  CHECK(fail.contains("witness"));
  CHECK_FALSE(verdict_json(verify_table1(ctx)).contains("witness"));
}

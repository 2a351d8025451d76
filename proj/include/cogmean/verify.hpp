#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cogmean/canonical.hpp"
#include "cogmean/cotree.hpp"
#include "cogmean/enumerate.hpp"
#include "cogmean/graph.hpp"
#include "cogmean/graph_families.hpp"
#include "cogmean/numeric.hpp"
#include "cogmean/polynomial.hpp"

namespace cogmean {

using Json = nlohmann::ordered_json;

enum class Objective { GlobalMeanMax, GlobalMeanMin };

inline std::string_view objective_name(Objective o) {
  return o == Objective::GlobalMeanMax ? "GLOBAL_MEAN_MAX" : "GLOBAL_MEAN_MIN";
}

struct Winner {
  std::string form;
  Rational mean;
  friend bool operator==(const Winner&, const Winner&) = default;
};

/// Exact argmax/argmin of the global mean over one generated family.
/// Winners share one value and are sorted by canonical form; `runner_up` is
/// the best value among the non-winners, absent when everything tied.
struct ExtremalReport {
  GenFamily family = GenFamily::ConnectedCographs;
  int order = 0;
  Objective objective = Objective::GlobalMeanMax;
  std::size_t candidates = 0;
  std::vector<Winner> winners;
  std::optional<Rational> runner_up;

  std::optional<Rational> runner_up_gap() const {
    if (!runner_up || winners.empty()) return std::nullopt;
    const Rational d = winners.front().mean - *runner_up;
    return d < 0 ? Rational(-d) : d;
  }
  bool unique() const { return winners.size() == 1; }
};

/// Memoized enumerators plus the brute-force cap, shared by a run of checks.
struct SearchContext {
  CotreeEnumerator cotrees;
  GraphEnumerator graphs;
  int brute_force_cap = kDefaultBruteForceCap;
};

namespace detail {

inline bool better(const Rational& a, const Rational& b, Objective o) {
  return o == Objective::GlobalMeanMax ? a > b : a < b;
}

class ExtremalAccumulator {
 public:
  explicit ExtremalAccumulator(Objective o) : objective_(o) {}

  void offer(std::string form, const Rational& mean) {
    ++seen_;
    if (winners_.empty() || better(mean, winners_.front().mean, objective_)) {
      if (!winners_.empty()) runner_up_ = winners_.front().mean;
      winners_.clear();
      winners_.push_back({std::move(form), mean});
    } else if (mean == winners_.front().mean) {
      winners_.push_back({std::move(form), mean});
    } else if (!runner_up_ || better(mean, *runner_up_, objective_)) {
      runner_up_ = mean;
    }
  }

  ExtremalReport finish(GenFamily family, int order) {
    std::sort(winners_.begin(), winners_.end(), [](const Winner& a, const Winner& b) { return a.form < b.form; });
    return {family, order, objective_, seen_, std::move(winners_), runner_up_};
  }

 private:
  Objective objective_;
  std::size_t seen_ = 0;
  std::vector<Winner> winners_;
  std::optional<Rational> runner_up_;
};

}  // namespace detail

/// Combines reports of disjoint shards of one family. Associative and
/// independent of shard order.
inline ExtremalReport merge_reports(const ExtremalReport& a, const ExtremalReport& b) {
  detail::ExtremalAccumulator acc(a.objective);
  for (const ExtremalReport* r : {&a, &b}) {
    for (const Winner& w : r->winners) acc.offer(w.form, w.mean);
    if (r->runner_up) acc.offer("", *r->runner_up);
  }
  ExtremalReport out = acc.finish(a.family, a.order);
  out.candidates = a.candidates + b.candidates;
  return out;
}

/// Calls f(form, cotree) for each cograph of the spec.
inline void for_each_cograph(const GeneratorSpec& spec, SearchContext& ctx,
                             const std::function<void(const std::string&, const Cotree&)>& f) {
  Connectivity c = Connectivity::Any;
  if (spec.family == GenFamily::ConnectedCographs) c = Connectivity::Connected;
  if (spec.family == GenFamily::DisconnectedCographs) c = Connectivity::Disconnected;
  const auto entries = take_shard(ctx.cotrees.entries(spec.order, c), spec.shard);
  for (const auto& e : entries) f(e.key, e.tree);
}

inline ExtremalReport extremal_search(const GeneratorSpec& spec, Objective objective, SearchContext& ctx) {
  detail::ExtremalAccumulator acc(objective);
  switch (spec.family) {
    case GenFamily::Cographs:
    case GenFamily::ConnectedCographs:
    case GenFamily::DisconnectedCographs:
      for_each_cograph(spec, ctx, [&](const std::string& form, const Cotree& t) {
        acc.offer(form, global_mean(phi_cotree(t)));
      });
      break;
    case GenFamily::ConnectedGraphs:
      for (const Graph& g : ctx.graphs.connected(spec.order, spec.shard))
        acc.offer(emit_graph6(g), global_mean(phi_bruteforce(g, ctx.brute_force_cap)));
      break;
    case GenFamily::Caterpillars:
      for (const Graph& g : take_shard(enumerate_caterpillars(spec.order), spec.shard))
        acc.offer(emit_graph6(g), global_mean(phi_tree(g)));
      break;
  }
  return acc.finish(spec.family, spec.order);
}

inline ExtremalReport extremal_search(const GeneratorSpec& spec, Objective objective) {
  SearchContext ctx;
  return extremal_search(spec, objective, ctx);
}

// ------------------------------------------------------------- verdicts

/// Outcome of checking one claim over a parameter range. A failure keeps the
/// first counterexample found as `witness`; `log` records observations such
/// as behaviour below a stated threshold.
struct TheoremVerdict {
  TheoremVerdict(std::string id_, std::string claim_, std::string range_)
      : id(std::move(id_)), claim(std::move(claim_)), range(std::move(range_)) {}

  std::string id;
  std::string claim;
  std::string range;
  bool pass = true;
  Json witness;
  Json details = Json::object();
  std::vector<std::string> log;

  void fail(Json w) {
    if (pass) witness = std::move(w);
    pass = false;
  }
  void require(bool ok, const std::function<Json()>& w) {
    if (!ok) fail(w());
  }
};

inline Json report_json(const ExtremalReport& r) {
  Json winners = Json::array();
  for (const Winner& w : r.winners) winners.push_back({{"form", w.form}, {"mean", to_string(w.mean)}});
  const auto gap = r.runner_up_gap();
  return Json{{"family", gen_family_name(r.family)},
              {"order", r.order},
              {"objective", objective_name(r.objective)},
              {"candidates", r.candidates},
              {"winners", winners},
              {"runner_up_gap", gap ? Json(to_string(*gap)) : Json(nullptr)}};
}

inline Json verdict_json(const TheoremVerdict& v) {
  Json j{{"id", v.id}, {"claim", v.claim}, {"range", v.range}, {"status", v.pass ? "PASS" : "FAIL"}};
  if (!v.pass) j["witness"] = v.witness;
  if (!v.details.empty()) j["details"] = v.details;
  if (!v.log.empty()) j["log"] = v.log;
  return j;
}

inline std::string range_str(int lo, int hi) { return "n=" + std::to_string(lo) + ".." + std::to_string(hi); }

inline Rational half(int k) { return Rational(BigInt(k), BigInt(2)); }

// --------------------------------------------------------- golden tables

struct TableRow {
  int order;
  std::string name;
  std::string form;  // canonical cotree (table1) or canonical graph6 (table2)
  Rational mean;
};

inline std::vector<TableRow> table1_rows() {
  using namespace families;
  return {
      {1, "K_1", format_cotree(complete(1)), Rational(1)},
      {2, "K_2", format_cotree(complete(2)), parse_rational("4/3")},
      {3, "K_3", format_cotree(complete(3)), parse_rational("12/7")},
      {4, "K_{2,2}", format_cotree(complete_bipartite(2, 2)), parse_rational("28/13")},
      {5, "K_{2,3}", format_cotree(complete_bipartite(2, 3)), parse_rational("69/26")},
      {6, "K_{2,4}", format_cotree(complete_bipartite(2, 4)), parse_rational("54/17")},
  };
}

inline std::string canonical_graph6(const Graph& g) { return emit_graph6(canonical_form(g).graph); }

/// Maximum-mean connected graphs, orders 3..8. The order-9 row is kept apart:
/// its maximality is beyond the graph enumeration cap.
inline std::vector<TableRow> table2_rows() {
  using namespace graphs;
  return {
      {3, "K_3", canonical_graph6(complete(3)), parse_rational("12/7")},
      {4, "K_{2,2}", canonical_graph6(cycle(4)), parse_rational("28/13")},
      {5, "Theta_{1,1,1}", canonical_graph6(theta(1, 1, 1)), parse_rational("69/26")},
      {6, "Theta_{2,1,1}", canonical_graph6(theta(2, 1, 1)), parse_rational("67/21")},
      {7, "Theta_{2,2,1}", canonical_graph6(theta(2, 2, 1)), parse_rational("83/22")},
      {8, "Theta_{2,2,2}", canonical_graph6(theta(2, 2, 2)), parse_rational("22/5")},
  };
}

inline const Rational& grid3x3_mean() {
  static const Rational m = parse_rational("996/197");
  return m;
}

inline std::string table_tsv(const std::vector<TableRow>& rows) {
  std::string out = "order\tgraph\tform\tmean\n";
  for (const TableRow& r : rows)
    out += std::to_string(r.order) + "\t" + r.name + "\t" + r.form + "\t" + to_string(r.mean) + "\n";
  return out;
}

namespace detail {

inline TheoremVerdict table_verdict(std::string id, std::string claim, GenFamily family,
                                    const std::vector<TableRow>& rows, int lo, int hi, SearchContext& ctx) {
  TheoremVerdict v{std::move(id), std::move(claim), range_str(lo, hi)};
  Json found = Json::array();
  std::vector<TableRow> reproduced;
  for (const TableRow& row : rows) {
    if (row.order < lo || row.order > hi) continue;
    const ExtremalReport r = extremal_search({family, row.order}, Objective::GlobalMeanMax, ctx);
    const bool ok = r.unique() && r.winners[0].form == row.form && r.winners[0].mean == row.mean;
    found.push_back({{"order", row.order}, {"expected", row.name}, {"report", report_json(r)}, {"match", ok}});
    if (ok) reproduced.push_back(row);
    v.require(ok, [&] { return Json{{"order", row.order}, {"expected_form", row.form},
                                    {"expected_mean", to_string(row.mean)}, {"report", report_json(r)}}; });
  }
  v.details["rows"] = found;
  v.details["matched"] = reproduced.size();
  v.details["tsv"] = table_tsv(reproduced);
  return v;
}

}  // namespace detail

/// Maximum-mean connected cographs of orders 1..6.
inline TheoremVerdict verify_table1(SearchContext& ctx) {
  return detail::table_verdict("table1", "unique maximum-mean connected cographs of order 1..6",
                               GenFamily::ConnectedCographs, table1_rows(), 1, 6, ctx);
}

/// Maximum-mean connected graphs of order 3..n_max (n_max <= 8).
inline TheoremVerdict verify_table2(int n_max, SearchContext& ctx) {
  if (n_max < 3 || n_max > kGraphEnumerationCap) throw Error(Errc::OrderOutOfRange, "table2 needs 3 <= n_max <= 8");
  return detail::table_verdict("table2", "unique maximum-mean connected graphs of order 3..n_max",
                               GenFamily::ConnectedGraphs, table2_rows(), 3, n_max, ctx);
}

/// The tabulated order-9 value against the 3x3 grid itself. Maximality at
/// order 9 is beyond the graph enumeration cap and is not checked.
inline TheoremVerdict verify_grid_mean(int brute_force_cap = kDefaultBruteForceCap) {
  TheoremVerdict v{"grid-3x3-mean", "P3 x P3 has mean 996/197", "n=9"};
  const Graph grid = graphs::cartesian_product(graphs::path(3), graphs::path(3));
  const SubgraphPolynomial p = phi_bruteforce(grid, brute_force_cap);
  Json coeffs = Json::array();
  for (const BigInt& c : p.coeffs()) coeffs.push_back(to_string(c));
  v.details = {{"graph6", emit_graph6(grid)}, {"coeffs", coeffs}, {"mean", to_string(global_mean(p))},
               {"expected", to_string(grid3x3_mean())}};
  v.require(global_mean(p) == grid3x3_mean(), [&] { return Json{{"mean", to_string(global_mean(p))}}; });
  return v;
}

// ---------------------------------------------------- extremal families

inline TheoremVerdict verify_star_max(int lo, int hi, SearchContext& ctx) {
  TheoremVerdict v{"star-max", "the star is the unique maximum-mean connected cograph", range_str(lo, hi)};
  Json rows = Json::array();
  for (int n = lo; n <= hi; ++n) {
    const ExtremalReport r = extremal_search({GenFamily::ConnectedCographs, n}, Objective::GlobalMeanMax, ctx);
    const Rational expected = closed_form_mean(Family::Star, n);
    rows.push_back(report_json(r));
    v.require(r.unique() && r.winners[0].form == format_cotree(families::star(n)) && r.winners[0].mean == expected,
              [&] { return Json{{"order", n}, {"report", report_json(r)}, {"expected", to_string(expected)}}; });
  }
  v.details["reports"] = rows;
  return v;
}

inline TheoremVerdict verify_skillet_min(int lo, int hi, SearchContext& ctx) {
  TheoremVerdict v{"skillet-min", "the skillet is the unique minimum-mean connected cograph", range_str(lo, hi)};
  Json rows = Json::array();
  for (int n = lo; n <= hi; ++n) {
    const ExtremalReport r = extremal_search({GenFamily::ConnectedCographs, n}, Objective::GlobalMeanMin, ctx);
    const Rational expected = closed_form_mean(Family::Skillet, n);
    rows.push_back(report_json(r));
    v.require(r.unique() && r.winners[0].form == format_cotree(families::skillet(n)) &&
                  r.winners[0].mean == expected,
              [&] { return Json{{"order", n}, {"report", report_json(r)}, {"expected", to_string(expected)}}; });
  }
  v.details["reports"] = rows;
  return v;
}

/// Maximum-mean connected cograph of order n: table rows up to 6, the star beyond.
inline Cotree max_connected_cograph(int n) {
  if (n <= 6) return parse_cotree(table1_rows()[static_cast<std::size_t>(n - 1)].form);
  return families::star(n);
}

inline TheoremVerdict verify_disconnected_max(int n_max, SearchContext& ctx) {
  if (n_max < 2 || n_max > 14) throw Error(Errc::OrderOutOfRange, "disconnected-max needs 2 <= n_max <= 14");
  TheoremVerdict v{"disconnected-max", "K_1 u Q_{n-1} is the unique maximum-mean disconnected cograph",
                   range_str(2, n_max)};
  Json rows = Json::array();
  for (int n = 2; n <= n_max; ++n) {
    const ExtremalReport r = extremal_search({GenFamily::DisconnectedCographs, n}, Objective::GlobalMeanMax, ctx);
    const Cotree expected = families::disjoint_union(Cotree::leaf(), max_connected_cograph(n - 1));
    const Rational expected_mean = global_mean(phi_cotree(expected));
    rows.push_back(report_json(r));
    bool ok = r.unique() && r.winners[0].form == format_cotree(expected) && r.winners[0].mean == expected_mean;
    if (n >= 8) ok = ok && expected_mean == closed_form_mean(Family::K1UnionStar, n);
    v.require(ok, [&] { return Json{{"order", n}, {"expected", format_cotree(expected)}, {"report", report_json(r)}}; });
  }
  v.details["reports"] = rows;
  return v;
}

inline TheoremVerdict verify_path_min_conjecture(int n_max, SearchContext& ctx) {
  if (n_max < 3 || n_max > kGraphEnumerationCap)
    throw Error(Errc::OrderOutOfRange, "path-conjecture needs 3 <= n_max <= 8");
  TheoremVerdict v{"path-conjecture", "the path is the unique minimum-mean connected graph", range_str(3, n_max)};
  Json rows = Json::array();
  for (int n = 3; n <= n_max; ++n) {
    const ExtremalReport r = extremal_search({GenFamily::ConnectedGraphs, n}, Objective::GlobalMeanMin, ctx);
    rows.push_back(report_json(r));
    v.require(r.unique() && r.winners[0].form == canonical_graph6(graphs::path(n)),
              [&] { return Json{{"order", n}, {"report", report_json(r)}}; });
  }
  v.details["reports"] = rows;
  return v;
}

// -------------------------------------------------- local mean theorems

/// Over connected cographs of order 1..n_max and every vertex:
/// local mean >= (n+1)/2 >= global mean, local > global unless n = 1.
inline std::vector<TheoremVerdict> verify_local_mean(int n_max, SearchContext& ctx) {
  TheoremVerdict lower{"local-mean-lower-bound", "every local mean of a connected cograph is at least (n+1)/2",
                       range_str(1, n_max)};
  TheoremVerdict above{"local-above-global",
                       "every local mean of a connected cograph is at least its global mean, equal only for K_1",
                       range_str(1, n_max)};
  Json equality = Json::array();
  std::size_t checked = 0;
  for (int n = 1; n <= n_max; ++n) {
    for_each_cograph({GenFamily::ConnectedCographs, n}, ctx, [&](const std::string& form, const Cotree& t) {
      const Rational global = global_mean(phi_cotree(t));
      const Rational bound = half(n + 1);
      above.require(global <= bound, [&] { return Json{{"form", form}, {"global", to_string(global)}}; });
      for (int leaf = 0; leaf < n; ++leaf) {
        ++checked;
        const Rational local = global_mean(phi_local_cotree(t, leaf));
        lower.require(local >= bound, [&] {
          return Json{{"form", form}, {"leaf", leaf}, {"local", to_string(local)}, {"bound", to_string(bound)}};
        });
        if (local == bound && n >= 2 && equality.size() < 16) equality.push_back({{"form", form}, {"leaf", leaf}});
        const bool strict_ok = n == 1 ? local == global : local > global;
        above.require(strict_ok, [&] {
          return Json{{"form", form}, {"leaf", leaf}, {"local", to_string(local)}, {"global", to_string(global)}};
        });
      }
    });
  }
  lower.details["vertices_checked"] = checked;
  lower.details["equality_examples"] = equality;
  // the bound is attained, e.g. at a leaf of P3
  const Rational p3_leaf = global_mean(phi_local_cotree(families::star(3), 1));
  lower.details["p3_leaf_local_mean"] = to_string(p3_leaf);
  lower.require(n_max < 3 || p3_leaf == 2, [&] { return Json{{"p3_leaf_local_mean", to_string(p3_leaf)}}; });
  lower.require(n_max < 2 || !equality.empty(), [] { return Json{{"equality", "never attained"}}; });
  above.details["vertices_checked"] = checked;
  return {lower, above};
}

// ------------------------------------------------- structural theorems

namespace detail {

inline bool has_cut_vertex(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (int v = 0; v < g.order(); ++v)
    if (!is_connected(remove_vertex(g, v))) return true;
  return false;
}

inline bool is_two_connected(const Graph& g) {
  return g.order() >= 3 && is_connected(g) && !has_cut_vertex(g);
}

/// Children of a Join root split into two nonempty groups, each joined back
/// into a cograph. Calls f(G1, G2) once per unordered split.
inline void for_each_join_split(const Cotree& t, const std::function<void(const Cotree&, const Cotree&)>& f) {
  const auto& kids = t.children();
  const std::size_t m = kids.size();
  for (std::uint64_t sel = 1; sel + 1 < (std::uint64_t{1} << m); ++sel) {
    if (!(sel & 1U)) continue;  // first child always on the left
    std::vector<Cotree> a;
    std::vector<Cotree> b;
    for (std::size_t i = 0; i < m; ++i) ((sel >> i) & 1U ? a : b).push_back(kids[i]);
    auto pack = [](std::vector<Cotree> v) {
      return v.size() == 1 ? v.front() : Cotree::node(NodeKind::Join, std::move(v));
    };
    f(pack(std::move(a)), pack(std::move(b)));
  }
}

inline int largest_component(const Cotree& t) {
  if (t.kind() != NodeKind::Union) return t.leaf_count();
  int best = 0;
  for (const Cotree& c : t.children()) best = std::max(best, c.leaf_count());
  return best;
}

}  // namespace detail

inline std::vector<TheoremVerdict> verify_structural_theorems(int n_max, SearchContext& ctx) {
  if (n_max < 1 || n_max > 12) throw Error(Errc::OrderOutOfRange, "structural checks need 1 <= n_max <= 12");

  TheoremVerdict star_dom{"mstar-star-dominates",
                          "every cograph has M* at most that of the star, with equality only for the star",
                          range_str(1, n_max)};
  TheoremVerdict join_mean{"join-below-bipartite",
                           "G1 + G2 of order n >= 6 has mean at most that of K_{s,n-s}, equality only for K_{s,n-s}",
                           range_str(6, n_max)};
  TheoremVerdict join_mstar{"join-mstar-below-bipartite",
                            "G1 + G2 with 2 <= s <= n-2 has M* at most that of K_{s,n-s}, equality only for K_{s,n-s}",
                            range_str(4, n_max)};
  TheoremVerdict small_mstar{"small-cograph-mstar-below-bipartite-mean",
                             "for n >= 6, cographs of order <= n-2 have M* below every M_{K_{s,n-s}}; order n-1 "
                             "cographs have M* below M_{K_{1,n-1}}",
                             range_str(6, n_max + 2)};
  TheoremVerdict cut{"cut-vertex-above-skillet",
                     "a connected cograph with a cut vertex has mean at least the skillet's, equality only for it",
                     range_str(3, n_max)};
  TheoremVerdict good{"good-vertex-in-2-connected",
                      "every 2-connected cograph of order >= 4 has v with Phi_{G-v}(1) < Phi_{G,v}(1)",
                      range_str(4, n_max)};
  TheoremVerdict order{"mean-increases-with-order",
                       "a connected cograph of order n1 >= 2 beats every cograph of smaller order",
                       range_str(2, n_max)};
  TheoremVerdict comp{"component-bound",
                      "a cograph whose components have order <= s has mean <= (s+1)/2, equality only for s = 1",
                      range_str(1, n_max)};

  std::vector<Rational> max_any(static_cast<std::size_t>(n_max) + 1);
  std::vector<Rational> min_connected(static_cast<std::size_t>(n_max) + 1);
  std::size_t two_connected = 0;
  std::size_t with_cut = 0;
  std::size_t splits = 0;

  for (int n = 1; n <= n_max; ++n) {
    const std::string star_form = format_cotree(families::star(n));
    const Rational star_mstar = n == 1 ? Rational(0) : closed_form_mean(Family::StarMstarFull, n);
    bool first_any = true;
    bool first_conn = true;
    for_each_cograph({GenFamily::Cographs, n}, ctx, [&](const std::string& form, const Cotree& t) {
      const SubgraphPolynomial phi = phi_cotree(t);
      const Rational mean = global_mean(phi);
      const Rational mstar = mstar_mean(phi);

      star_dom.require(form == star_form ? mstar == star_mstar : mstar < star_mstar,
                       [&] { return Json{{"form", form}, {"mstar", to_string(mstar)}}; });

      // order n cographs feed the small-M* check for orders n+1 and n+2
      for (int big = std::max(6, n + 1); big <= n + 2; ++big) {
        if (big == n + 2) {
          for (int s = 1; s < big; ++s) {
            const Rational bound = closed_form_mean(Family::CompleteBipartite, big, s);
            small_mstar.require(mstar < bound, [&] {
              return Json{{"form", form}, {"n", big}, {"s", s}, {"mstar", to_string(mstar)}};
            });
          }
        } else {
          const Rational bound = closed_form_mean(Family::Star, big);
          small_mstar.require(mstar < bound, [&] { return Json{{"form", form}, {"n", big}, {"mstar", to_string(mstar)}}; });
        }
      }

      const int s = detail::largest_component(t);
      const Rational cap = half(s + 1);
      comp.require(s == 1 ? mean == cap : mean < cap,
                   [&] { return Json{{"form", form}, {"largest_component", s}, {"mean", to_string(mean)}}; });

      if (first_any || mean > max_any[static_cast<std::size_t>(n)]) max_any[static_cast<std::size_t>(n)] = mean;
      first_any = false;

      if (t.kind() != NodeKind::Join) return;
      if (first_conn || mean < min_connected[static_cast<std::size_t>(n)]) min_connected[static_cast<std::size_t>(n)] = mean;
      first_conn = false;

      detail::for_each_join_split(t, [&](const Cotree& g1, const Cotree& g2) {
        ++splits;
        const int s1 = g1.leaf_count();
        const bool bipartite = form == format_cotree(families::complete_bipartite(s1, n - s1));
        if (n >= 6) {
          const Rational bound = closed_form_mean(Family::CompleteBipartite, n, s1);
          join_mean.require(bipartite ? mean == bound : mean < bound, [&] {
            return Json{{"form", form}, {"split", format_cotree(g1) + " + " + format_cotree(g2)}, {"mean", to_string(mean)}};
          });
        }
        if (n >= 4 && s1 >= 2 && s1 <= n - 2) {
          const Rational bound = closed_form_mean(Family::CompleteBipartiteMstar, n, s1);
          join_mstar.require(bipartite ? mstar == bound : mstar < bound, [&] {
            return Json{{"form", form}, {"split", format_cotree(g1) + " + " + format_cotree(g2)}, {"mstar", to_string(mstar)}};
          });
        }
      });

      const Graph g = cotree_to_graph(t);
      if (n >= 3 && detail::has_cut_vertex(g)) {
        ++with_cut;
        const Rational skillet = closed_form_mean(Family::Skillet, n);
        const bool is_skillet = form == format_cotree(families::skillet(n));
        cut.require(is_skillet ? mean == skillet : mean > skillet,
                    [&] { return Json{{"form", form}, {"mean", to_string(mean)}}; });
      }
      if (n >= 4 && detail::is_two_connected(g)) {
        ++two_connected;
        bool found = false;
        for (int v = 0; v < n && !found; ++v) {
          const BigInt without = phi_cotree(graph_to_cotree(remove_vertex(g, v))).value_at_one();
          const BigInt with = phi_local_cotree(t, v).value_at_one();
          found = without < with;
        }
        good.require(found, [&] { return Json{{"form", form}}; });
      }
    });
  }

  for (int n1 = 2; n1 <= n_max; ++n1)
    for (int n2 = 1; n2 < n1; ++n2)
      order.require(min_connected[static_cast<std::size_t>(n1)] > max_any[static_cast<std::size_t>(n2)], [&] {
        return Json{{"n1", n1}, {"n2", n2}, {"min_connected", to_string(min_connected[static_cast<std::size_t>(n1)])},
                    {"max_any", to_string(max_any[static_cast<std::size_t>(n2)])}};
      });

  join_mean.details["splits_checked"] = splits;
  cut.details["graphs_with_cut_vertex"] = with_cut;
  good.details["two_connected_graphs"] = two_connected;
  if (n_max < 6) join_mean.log.push_back("no order >= 6 in range; nothing checked");
  return {star_dom, join_mean, join_mstar, small_mstar, cut, good, order, comp};
}

// ------------------------------------------------- closed-form sweeps

namespace detail {

/// Checks `holds(n)` for n in [defined_from, n_max]. Failures at or above
/// `threshold` fail the verdict; rows below it are logged either way.
inline void sweep(TheoremVerdict& v, int defined_from, int threshold, int n_max,
                  const std::function<std::optional<Json>(int)>& holds) {
  for (int n = defined_from; n <= n_max; ++n) {
    const std::optional<Json> bad = holds(n);
    if (n < threshold) {
      v.log.push_back("below threshold n=" + std::to_string(n) + ": " + (bad ? "fails" : "holds"));
    } else if (bad) {
      v.fail(*bad);
    }
  }
}

}  // namespace detail

inline std::vector<TheoremVerdict> verify_inequality_sweeps(int n_max = 64) {
  if (n_max < 9 || n_max > 1024) throw Error(Errc::OrderOutOfRange, "inequality sweeps need 9 <= n_max <= 1024");
  using F = Family;
  auto cf = [](F f, int n, int s = 0) { return closed_form_mean(f, n, s); };
  auto mstar_bip = [&](int s, int n) { return cf(F::CompleteBipartiteMstar, n, s); };
  auto mean_bip = [&](int s, int n) { return cf(F::CompleteBipartite, n, s); };
  auto star_mstar = [&](int n) { return n == 1 ? Rational(0) : cf(F::StarMstarFull, n); };
  std::vector<TheoremVerdict> out;

  {
    TheoremVerdict v{"mstar-bipartite-decreasing", "M*_{K_{s,n-s}} > M*_{K_{s+1,n-s-1}} for 1 <= s <= n/2 - 1",
                     range_str(4, n_max)};
    detail::sweep(v, 4, 4, n_max, [&](int n) -> std::optional<Json> {
      for (int s = 1; s <= n / 2 - 1; ++s)
        if (!(mstar_bip(s, n) > mstar_bip(s + 1, n))) return Json{{"n", n}, {"s", s}};
      return std::nullopt;
    });
    out.push_back(std::move(v));
  }
  {
    TheoremVerdict v{"mstar-star-max-among-bipartite", "K_{1,n-1} has the largest M* among all K_{s,n-s}",
                     range_str(2, n_max)};
    detail::sweep(v, 2, 2, n_max, [&](int n) -> std::optional<Json> {
      for (int s = 2; s <= n - 1; ++s)
        if (mstar_bip(s, n) > mstar_bip(1, n)) return Json{{"n", n}, {"s", s}};
      return std::nullopt;
    });
    out.push_back(std::move(v));
  }
  {
    TheoremVerdict v{"star-mstar-increasing", "M*_{K_{1,n-1}} is strictly increasing in n", range_str(1, n_max)};
    detail::sweep(v, 1, 1, n_max - 1, [&](int n) -> std::optional<Json> {
      if (!(star_mstar(n) < star_mstar(n + 1))) return Json{{"n", n}};
      return std::nullopt;
    });
    if (star_mstar(2) != 2) v.fail(Json{{"mstar_k11", to_string(star_mstar(2))}});
    out.push_back(std::move(v));
  }
  {
    TheoremVerdict v{"star-mstar-bounds", "(n+1)/2 < M*_{K_{1,n-1}} <= (n+2)/2", range_str(2, n_max)};
    detail::sweep(v, 2, 2, n_max, [&](int n) -> std::optional<Json> {
      const Rational m = star_mstar(n);
      if (!(half(n + 1) < m && m <= half(n + 2))) return Json{{"n", n}, {"mstar", to_string(m)}};
      return std::nullopt;
    });
    out.push_back(std::move(v));
  }
  {
    TheoremVerdict v{"bipartite-star-beats-k2", "M_{K_{1,n-1}} > M_{K_{2,n-2}}", range_str(7, n_max)};
    detail::sweep(v, 3, 7, n_max, [&](int n) -> std::optional<Json> {
      if (!(mean_bip(1, n) > mean_bip(2, n))) return Json{{"n", n}};
      return std::nullopt;
    });
    out.push_back(std::move(v));
  }
  {
    TheoremVerdict v{"bipartite-mean-decreasing", "M_{K_{s,n-s}} > M_{K_{s+1,n-s-1}} for 2 <= s <= n/2 - 1",
                     range_str(6, n_max)};
    detail::sweep(v, 4, 6, n_max, [&](int n) -> std::optional<Json> {
      for (int s = 2; s <= n / 2 - 1; ++s)
        if (!(mean_bip(s, n) > mean_bip(s + 1, n))) return Json{{"n", n}, {"s", s}};
      return std::nullopt;
    });
    out.push_back(std::move(v));
  }
  {
    TheoremVerdict v{"star-max-among-bipartite", "K_{1,n-1} has the largest mean among all K_{s,n-s}",
                     range_str(7, n_max)};
    detail::sweep(v, 3, 7, n_max, [&](int n) -> std::optional<Json> {
      for (int s = 2; s <= n - 2; ++s)
        if (!(mean_bip(1, n) > mean_bip(s, n))) return Json{{"n", n}, {"s", s}};
      return std::nullopt;
    });
    out.push_back(std::move(v));
  }
  {
    TheoremVerdict v{"star-mstar-below-bipartite-mean",
                     "M*_{K_{1,n-3}} < M_{K_{s,n-s}} for all s, and M*_{K_{1,n-2}} < M_{K_{1,n-1}}",
                     range_str(6, n_max)};
    detail::sweep(v, 4, 6, n_max, [&](int n) -> std::optional<Json> {
      for (int s = 1; s <= n - 1; ++s)
        if (!(star_mstar(n - 2) < mean_bip(s, n))) return Json{{"n", n}, {"s", s}, {"part", "order n-2"}};
      if (!(star_mstar(n - 1) < cf(F::Star, n))) return Json{{"n", n}, {"part", "order n-1"}};
      return std::nullopt;
    });
    out.push_back(std::move(v));
  }
  {
    TheoremVerdict v{"skillet-below-complete", "M_{S_n} < M_{K_n}", range_str(3, n_max)};
    detail::sweep(v, 3, 3, n_max, [&](int n) -> std::optional<Json> {
      if (!(cf(F::Skillet, n) < cf(F::Complete, n))) return Json{{"n", n}};
      return std::nullopt;
    });
    out.push_back(std::move(v));
  }
  {
    TheoremVerdict v{"mstar-bipartite-above-half-order", "M*_{K_{s,n-s}} > n/2 for all 1 <= s <= n-1",
                     range_str(2, n_max)};
    detail::sweep(v, 2, 2, n_max, [&](int n) -> std::optional<Json> {
      for (int s = 1; s <= n - 1; ++s)
        if (!(mstar_bip(s, n) > half(n))) return Json{{"n", n}, {"s", s}};
      return std::nullopt;
    });
    out.push_back(std::move(v));
  }
  {
    TheoremVerdict v{"k2-mstar-below-complete", "M*_{K_{2,n-3}} <= M_{K_n}", range_str(6, n_max)};
    detail::sweep(v, 4, 6, n_max, [&](int n) -> std::optional<Json> {
      if (!(mstar_bip(2, n - 1) <= cf(F::Complete, n))) return Json{{"n", n}};
      return std::nullopt;
    });
    out.push_back(std::move(v));
  }
  {
    TheoremVerdict v{"disconnected-star-mstar", "M*_{K_{1,n-3}} < M_{K_1 u K_{1,n-2}}", range_str(8, n_max)};
    detail::sweep(v, 4, 8, n_max, [&](int n) -> std::optional<Json> {
      if (!(cf(F::StarMstar, n) < cf(F::K1UnionStar, n))) return Json{{"n", n}};
      return std::nullopt;
    });
    out.push_back(std::move(v));
  }
  {
    TheoremVerdict v{"disconnected-k2", "M_{K_{2,n-3}} < M_{K_1 u K_{1,n-2}}", range_str(9, n_max)};
    detail::sweep(v, 4, 9, n_max, [&](int n) -> std::optional<Json> {
      if (!(cf(F::K2N3, n) < cf(F::K1UnionStar, n))) return Json{{"n", n}};
      return std::nullopt;
    });
    out.push_back(std::move(v));
  }
  {
    TheoremVerdict v{"disconnected-star", "M_{K_{1,n-3}} < M_{K_1 u K_{1,n-2}}", range_str(4, n_max)};
    detail::sweep(v, 4, 4, n_max, [&](int n) -> std::optional<Json> {
      if (!(cf(F::StarN3, n) < cf(F::K1UnionStar, n))) return Json{{"n", n}};
      return std::nullopt;
    });
    out.push_back(std::move(v));
  }
  {
    // Closed forms against the cotree polynomial of the same graph.
    TheoremVerdict v{"closed-form-agreement", "every closed-form mean equals the mean of the cotree polynomial",
                     range_str(1, n_max)};
    using namespace families;
    auto check = [&](F f, int n, int s, const Cotree& t, bool mstar) {
      const SubgraphPolynomial p = phi_cotree(t);
      const Rational got = mstar ? mstar_mean(p) : global_mean(p);
      const Rational want = cf(f, n, s);
      v.require(got == want, [&] {
        return Json{{"family", family_name(f)}, {"n", n}, {"s", s}, {"closed", to_string(want)}, {"cotree", to_string(got)}};
      });
    };
    for (int n = 1; n <= n_max; ++n) {
      check(F::Star, n, 0, star(n), false);
      check(F::Complete, n, 0, complete(n), false);
      if (n >= 2) check(F::StarMstarFull, n, 0, star(n), true);
      if (n >= 3) {
        check(F::Skillet, n, 0, skillet(n), false);
        check(F::K1UnionStar, n, 0, disjoint_union(Cotree::leaf(), star(n - 1)), false);
      }
      if (n >= 4) {
        check(F::StarMstar, n, 0, star(n - 2), true);
        check(F::K2N3, n, 0, complete_bipartite(2, n - 3), false);
        check(F::StarN3, n, 0, star(n - 2), false);
      }
      for (int s = 1; s <= n - 1; ++s) {
        check(F::CompleteBipartite, n, s, complete_bipartite(s, n - s), false);
        check(F::CompleteBipartiteMstar, n, s, complete_bipartite(s, n - s), true);
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

// ------------------------------------------------------ counterexample

struct LocalCounterexample {
  Caterpillar host;
  Graph graph;  // host + one universal vertex, which is the last vertex
  int vertex = 0;
  Rational host_mean;
  Rational global;
  Rational local;
};

/// Searches caterpillars H of order n-1 with M_H > (n+1)/2 and takes the one
/// of largest mean (first in enumeration order on ties). G = H + K_1 then has
/// local mean (n+1)/2 at the added vertex, below its global mean.
inline LocalCounterexample find_local_counterexample(int n, int brute_force_cap = kDefaultBruteForceCap) {
  if (n < 14 || n - 1 > kCaterpillarCap)
    throw Error(Errc::OrderOutOfRange, "counterexample search needs 14 <= n <= " + std::to_string(kCaterpillarCap + 1));
  const Rational threshold = half(n + 1);
  std::optional<std::pair<Caterpillar, Rational>> best;
  for (const Caterpillar& c : enumerate_caterpillar_specs(n - 1)) {
    const Rational m = global_mean(phi_tree(caterpillar_graph(c)));
    if (m > threshold && (!best || m > best->second)) best = {c, m};
  }
  if (!best)
    throw Error(Errc::NoWitnessFound, "no caterpillar of order " + std::to_string(n - 1) + " has mean above " +
                                          to_string(threshold));
  const Graph host = caterpillar_graph(best->first);
  const Graph g = graphs::graph_join(host, Graph::edgeless(1));
  const int v = n - 1;
  SubgraphPolynomial global_poly;
  SubgraphPolynomial local_poly;
  if (n <= brute_force_cap) {
    global_poly = phi_bruteforce(g, brute_force_cap);
    local_poly = phi_local_bruteforce(g, v, brute_force_cap);
  } else {
    // Subgraphs avoiding v are those of H; those containing v are arbitrary
    // subsets of H plus v, since v is universal.
    local_poly = poly::from_dense(n, [&] {
      poly::Dense d = poly::one_plus_x_pow(n - 1);
      d.insert(d.begin(), BigInt(0));
      return d;
    }());
    global_poly = SubgraphPolynomial(n, phi_tree(host).coeffs());
    global_poly += local_poly;
  }
  return {best->first, g, v, best->second, global_mean(global_poly), global_mean(local_poly)};
}

inline TheoremVerdict verify_counterexample(int n, int brute_force_cap = kDefaultBruteForceCap) {
  TheoremVerdict v{"local-counterexample", "H + K_1 with M_H > (n+1)/2 has a vertex whose local mean is below the global mean",
                   "n=" + std::to_string(n)};
  try {
    const LocalCounterexample c = find_local_counterexample(n, brute_force_cap);
    const Rational bound = half(n + 1);
    poly::Dense universal = poly::one_plus_x_pow(n - 1);
    universal.insert(universal.begin(), BigInt(0));
    const bool universal_ok =
        n > brute_force_cap || phi_local_bruteforce(c.graph, c.vertex, brute_force_cap) == poly::from_dense(n, universal);
    v.details = {{"host_leaves", c.host.leaves},
                 {"graph6", emit_graph6(c.graph)},
                 {"vertex", c.vertex},
                 {"host_mean", to_string(c.host_mean)},
                 {"global_mean", to_string(c.global)},
                 {"local_mean", to_string(c.local)}};
    v.require(c.local == bound && universal_ok, [&] { return Json{{"local_mean", to_string(c.local)}}; });
    v.require(c.host_mean > c.global && c.global > c.local, [&] { return v.details; });
  } catch (const Error& e) {
    if (e.code() != Errc::NoWitnessFound) throw;
    v.log.push_back(e.what());
    v.fail(Json{{"no_witness", e.what()}});
  }
  return v;
}

// ---------------------------------------------------------- density

inline std::vector<TheoremVerdict> verify_density(int n_max, SearchContext& ctx) {
  TheoremVerdict bounds{"connected-mean-bounds",
                        "connected cographs satisfy n/2 < M_G <= (n+1)/2, equality only at n = 1", range_str(1, n_max)};
  for (int n = 1; n <= n_max; ++n) {
    for_each_cograph({GenFamily::ConnectedCographs, n}, ctx, [&](const std::string& form, const Cotree& t) {
      const Rational m = global_mean(phi_cotree(t));
      const bool ok = half(n) < m && (n == 1 ? m == half(n + 1) : m < half(n + 1));
      bounds.require(ok, [&] { return Json{{"form", form}, {"mean", to_string(m)}}; });
    });
  }
  TheoremVerdict limit{"density-near-half", "densities of the star and skillet of order 64 lie within 1/64 of 1/2",
                       "n=64"};
  const Rational tol(BigInt(1), BigInt(64));
  for (auto [name, t] : {std::pair<const char*, Cotree>{"star", families::star(64)},
                         std::pair<const char*, Cotree>{"skillet", families::skillet(64)}}) {
    const Rational d = density(phi_cotree(t));
    const Rational diff = d > half(1) ? Rational(d - half(1)) : Rational(half(1) - d);
    limit.details[name] = {{"density", to_string(d)}, {"approx", decimal_approx(d)}};
    limit.require(diff <= tol, [&] { return Json{{"family", name}, {"density", to_string(d)}}; });
  }
  return {bounds, limit};
}

// ------------------------------------------------------ oracle checks

/// phi_cotree against phi_bruteforce on every cograph up to n_max and on
/// random cographs of order 9..14; local polynomials at every leaf up to
/// local_max.
inline TheoremVerdict verify_oracle_equivalence(int n_max, int local_max, int random_count, SearchContext& ctx,
                                                std::uint64_t seed = 20240601) {
  TheoremVerdict v{"cotree-matches-bruteforce", "the cotree recursion equals exhaustive subset counting",
                   range_str(1, n_max) + ", random 9..14"};
  std::size_t graphs_checked = 0;
  std::size_t locals_checked = 0;
  auto check_tree = [&](const std::string& form, const Cotree& t, bool locals) {
    const Graph g = cotree_to_graph(t);
    ++graphs_checked;
    v.require(phi_cotree(t) == phi_bruteforce(g, ctx.brute_force_cap), [&] { return Json{{"form", form}}; });
    if (!locals) return;
    for (int leaf = 0; leaf < t.leaf_count(); ++leaf) {
      ++locals_checked;
      v.require(phi_local_cotree(t, leaf) == phi_local_bruteforce(g, leaf, ctx.brute_force_cap),
                [&] { return Json{{"form", form}, {"leaf", leaf}}; });
    }
  };
  for (int n = 1; n <= n_max; ++n)
    for_each_cograph({GenFamily::Cographs, n}, ctx,
                     [&](const std::string& form, const Cotree& t) { check_tree(form, t, n <= local_max); });
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> order(9, 14);
  for (int i = 0; i < random_count; ++i) {
    const Cotree t = random_cotree(order(rng), rng);
    check_tree(format_cotree(t), t, false);
  }
  v.details = {{"graphs_checked", graphs_checked}, {"local_polynomials_checked", locals_checked}, {"seed", seed}};
  return v;
}

/// Phi_G + Phi_co(G) - n x = (1+x)^n - 1 exactly for the cographs among all
/// graphs of order <= n_max.
inline TheoremVerdict verify_complement_identity(int n_max, SearchContext& ctx) {
  if (n_max < 1 || n_max > kGraphEnumerationCap) throw Error(Errc::OrderOutOfRange, "complement identity needs n_max <= 8");
  TheoremVerdict v{"complement-identity", "Phi_G + Phi_co(G) - nx = (1+x)^n - 1 holds exactly for cographs",
                   range_str(1, n_max)};
  std::size_t cographs = 0;
  std::size_t others = 0;
  for (int n = 1; n <= n_max; ++n) {
    poly::Dense full = poly::one_plus_x_pow(n);
    full[0] = 0;
    const SubgraphPolynomial target = poly::from_dense(n, full);
    for (const Graph& g : ctx.graphs.all(n)) {
      SubgraphPolynomial sum = phi_bruteforce(g, ctx.brute_force_cap);
      sum += phi_bruteforce(complement(g), ctx.brute_force_cap);
      std::vector<BigInt> c = sum.coeffs();
      c[0] -= n;
      const bool identity = SubgraphPolynomial(n, c) == target;
      const bool cograph = !has_induced_p4(g);
      (cograph ? cographs : others)++;
      v.require(identity == cograph, [&] { return Json{{"graph6", emit_graph6(g)}, {"cograph", cograph}}; });
    }
  }
  v.details = {{"cographs", cographs}, {"non_cographs", others}};
  return v;
}

// ----------------------------------------------------------- suites

inline constexpr std::string_view kSuiteNames[] = {
    "table1",     "table2",       "grid-mean",       "skillet-min",    "star-max", "disconnected-max", "local-mean",
    "structural", "inequalities", "path-conjecture", "counterexample", "density",  "oracle",           "complement",
};

inline bool is_suite(std::string_view name) {
  return name == "all" || std::find(std::begin(kSuiteNames), std::end(kSuiteNames), name) != std::end(kSuiteNames);
}

/// Runs one named suite, or every suite in fixed order for "all". `n_max`
/// overrides the suite's default upper order and is ignored by "all".
inline std::vector<TheoremVerdict> run_suite(std::string_view suite, std::optional<int> n_max, SearchContext& ctx) {
  if (!is_suite(suite)) throw Error(Errc::UnknownSuite, "unknown suite '" + std::string(suite) + "'");
  if (suite == "all") {
    std::vector<TheoremVerdict> out;
    for (std::string_view name : kSuiteNames)
      for (TheoremVerdict& v : run_suite(name, std::nullopt, ctx)) out.push_back(std::move(v));
    return out;
  }
  const auto upto = [&](int fallback) { return n_max.value_or(fallback); };
  const auto at_least = [&](int lo, int hi) {
    if (hi < lo)
      throw Error(Errc::OrderOutOfRange, std::string(suite) + " needs --nmax >= " + std::to_string(lo));
    return hi;
  };
  if (suite == "table1") return {verify_table1(ctx)};
  if (suite == "table2") return {verify_table2(upto(7), ctx)};
  if (suite == "grid-mean") return {verify_grid_mean(ctx.brute_force_cap)};
  if (suite == "skillet-min") return {verify_skillet_min(3, at_least(3, upto(12)), ctx)};
  if (suite == "star-max") return {verify_star_max(7, at_least(7, upto(12)), ctx)};
  if (suite == "disconnected-max") return {verify_disconnected_max(upto(10), ctx)};
  if (suite == "local-mean") return verify_local_mean(at_least(1, upto(8)), ctx);
  if (suite == "structural") return verify_structural_theorems(upto(9), ctx);
  if (suite == "inequalities") return verify_inequality_sweeps(upto(64));
  if (suite == "path-conjecture") return {verify_path_min_conjecture(upto(7), ctx)};
  if (suite == "counterexample") return {verify_counterexample(upto(14), ctx.brute_force_cap)};
  if (suite == "density") return verify_density(at_least(1, upto(10)), ctx);
  if (suite == "oracle") return {verify_oracle_equivalence(at_least(1, upto(8)), 7, 200, ctx)};
  return {verify_complement_identity(upto(7), ctx)};
}

}  // namespace cogmean

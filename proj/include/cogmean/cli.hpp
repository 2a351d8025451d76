#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cogmean/cotree.hpp"
#include "cogmean/enumerate.hpp"
#include "cogmean/graph.hpp"
#include "cogmean/numeric.hpp"
#include "cogmean/polynomial.hpp"
#include "cogmean/verify.hpp"

namespace cogmean::cli {

enum ExitCode : int { kPass = 0, kVerificationFailed = 1, kUsage = 2 };

enum class Format { Text, Json, Tsv };

struct CliConfig {
  int brute_force_cap = kDefaultBruteForceCap;
  Shard shard;
  Format format = Format::Text;
  std::string golden_dir;
};

inline Shard parse_shard(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) throw Error(Errc::ParseError, "shard must look like i/k");
  Shard s;
  try {
    s.index = std::stoi(std::string(text.substr(0, slash)));
    s.count = std::stoi(std::string(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, "shard must look like i/k");
  }
  s.validate();
  return s;
}

/// A parsed `mean`/`reliability` argument. Cotree expressions (leading J, U
/// or L) and graph6 strings that happen to be cographs both get a cotree.
struct Input {
  Graph graph = Graph::edgeless(1);
  std::optional<Cotree> tree;
  std::vector<int> leaf_of_vertex;  // graph vertex -> leaf index, cotree route only
};

inline Input read_input(const std::string& text) {
  if (text.empty()) throw Error(Errc::ParseError, "empty input");
  Input in;
  if (text[0] == 'J' || text[0] == 'U' || text[0] == 'L') {
    Cotree t = parse_cotree(text);
    in.graph = cotree_to_graph(t);
    in.leaf_of_vertex.resize(static_cast<std::size_t>(t.leaf_count()));
    for (int i = 0; i < t.leaf_count(); ++i) in.leaf_of_vertex[static_cast<std::size_t>(i)] = i;
    in.tree = std::move(t);
    return in;
  }
  in.graph = parse_graph6(text);
  if (is_cograph(in.graph)) {
    LabeledCotree lc = recognize_cograph(in.graph);
    in.leaf_of_vertex.resize(lc.leaf_vertex.size());
    for (std::size_t i = 0; i < lc.leaf_vertex.size(); ++i)
      in.leaf_of_vertex[static_cast<std::size_t>(lc.leaf_vertex[i])] = static_cast<int>(i);
    in.tree = std::move(lc.tree);
  }
  return in;
}

inline SubgraphPolynomial global_polynomial(const Input& in, int cap) {
  return in.tree ? phi_cotree(*in.tree) : phi_bruteforce(in.graph, cap);
}

inline Json polynomial_json(const SubgraphPolynomial& p) {
  Json coeffs = Json::array();
  for (const BigInt& c : p.coeffs()) coeffs.push_back(to_string(c));
  return Json{{"n", p.order()}, {"coeffs", coeffs}};
}

inline std::string polynomial_text(const SubgraphPolynomial& p) {
  std::string out;
  for (int k = p.order(); k >= 1; --k) {
    const BigInt c = p.coefficient(k);
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (c != 1 || k == 0) out += to_string(c);
    out += k == 1 ? "x" : "x^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

inline std::string with_decimal(const Rational& r, bool decimal) {
  return decimal ? to_string(r) + " ~" + decimal_approx(r) : to_string(r);
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(int argc, const char* const* argv) {
    CLI::App app{"Mean order of connected induced subgraphs of cographs"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", "1.0.0");

    std::string format = "text";
    app.add_option("--cap", config_.brute_force_cap, "brute-force order cap")
        ->envname("COGRAPHMEAN_CAP")
        ->check(CLI::Range(1, 40));
    app.add_option("--format", format, "output format")
        ->envname("COGRAPHMEAN_FORMAT")
        ->check(CLI::IsMember({"text", "json", "tsv"}));

    auto* mean = app.add_subcommand("mean", "exact global, local or M* mean of a graph");
    std::string mean_input;
    std::optional<int> local;
    bool mstar = false, dens = false, poly = false, decimal = false, cotree_only = false;
    mean->add_option("input", mean_input, "graph6 string or cotree expression")->required();
    mean->add_option("--local", local, "vertex for the local mean");
    mean->add_flag("--mstar", mstar, "also print the mean over nontrivial subgraphs");
    mean->add_flag("--density", dens, "also print mean / n");
    mean->add_flag("--poly", poly, "also print the polynomial");
    mean->add_flag("--decimal", decimal, "append an approximate decimal");
    mean->add_flag("--cotree-only", cotree_only, "refuse graphs that are not cographs");

    auto* rel = app.add_subcommand("reliability", "exact node reliability at p");
    std::string rel_input, prob;
    rel->add_option("input", rel_input, "graph6 string or cotree expression")->required();
    rel->add_option("--p", prob, "probability as num/den")->required();
    rel->add_flag("--decimal", decimal, "append an approximate decimal");

    auto* en = app.add_subcommand("enumerate", "stream a generated family, one graph per line");
    std::string family, emit, shard = "0/1";
    int order = 0;
    en->add_option("family", family, "cographs, connected-cographs, disconnected-cographs, connected-graphs, caterpillars")
        ->required();
    en->add_option("n", order, "order")->required();
    en->add_option("--shard", shard, "keep positions p with p mod k = i")->envname("COGRAPHMEAN_SHARD");
    en->add_option("--emit", emit, "graph6 or cotree")->check(CLI::IsMember({"graph6", "cotree"}));

    auto* ver = app.add_subcommand("verify", "run a verification suite; exit 0 iff every verdict passes");
    std::string suite;
    std::optional<int> n_max;
    ver->add_option("suite", suite, "suite name or 'all'")->required();
    ver->add_option("--nmax", n_max, "upper order for the suite")->envname("COGRAPHMEAN_NMAX");
    ver->add_option("--golden", config_.golden_dir, "directory with table1.tsv / table2.tsv")
        ->envname("COGRAPHMEAN_GOLDEN");

    auto* cf = app.add_subcommand("closed-form", "evaluate a closed-form family mean");
    std::string cf_family;
    int cf_n = 0, cf_s = 0;
    cf->add_option("family", cf_family, "STAR, SKILLET, COMPLETE, ...")->required();
    cf->add_option("n", cf_n, "order")->required();
    cf->add_option("--s", cf_s, "part size for the complete bipartite families");
    cf->add_flag("--decimal", decimal, "append an approximate decimal");

    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out_, err_);
      return code == 0 ? kPass : kUsage;
    }
    config_.format = format == "json" ? Format::Json : format == "tsv" ? Format::Tsv : Format::Text;

    try {
      if (mean->parsed()) return cmd_mean(mean_input, local, mstar, dens, poly, decimal, cotree_only);
      if (rel->parsed()) return cmd_reliability(rel_input, prob, decimal);
      if (en->parsed()) {
        config_.shard = parse_shard(shard);
        return cmd_enumerate(family, order, emit);
      }
      if (ver->parsed()) return cmd_verify(suite, n_max);
      return cmd_closed_form(cf_family, cf_n, cf_s, decimal);
    } catch (const Error& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    }
  }

 private:
  int cmd_mean(const std::string& text, std::optional<int> local, bool mstar, bool dens, bool poly, bool decimal,
               bool cotree_only) {
    const Input in = read_input(text);
    if (cotree_only && !in.tree) throw Error(Errc::NotACograph, "input has an induced P4");
    const int n = in.graph.order();
    SubgraphPolynomial p;
    if (local) {
      if (*local < 0 || *local >= n)
        throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(*local) + " outside 0.." + std::to_string(n - 1));
      p = in.tree ? phi_local_cotree(*in.tree, in.leaf_of_vertex[static_cast<std::size_t>(*local)])
                  : phi_local_bruteforce(in.graph, *local, config_.brute_force_cap);
    } else {
      p = global_polynomial(in, config_.brute_force_cap);
    }

    std::vector<std::pair<std::string, std::string>> rows;
    rows.emplace_back(local ? "local_mean" : "mean", with_decimal(global_mean(p), decimal));
    if (mstar) rows.emplace_back("mstar", with_decimal(mstar_mean(p), decimal));
    if (dens) rows.emplace_back("density", with_decimal(density(p), decimal));

    if (config_.format == Format::Json) {
      Json j{{"input", text}, {"order", n}, {"route", in.tree ? "cotree" : "bruteforce"}};
      if (in.tree) j["cotree"] = format_cotree(*in.tree);
      if (local) j["vertex"] = *local;
      for (const auto& [k, v] : rows) j[k] = v;
      if (poly) j["polynomial"] = polynomial_json(p);
      out_ << j.dump() << "\n";
      return kPass;
    }
    if (poly) rows.emplace_back("polynomial", polynomial_text(p));
    if (rows.size() == 1) {
      out_ << rows.front().second << "\n";
    } else {
      for (const auto& [k, v] : rows) out_ << k << "\t" << v << "\n";
    }
    return kPass;
  }

  int cmd_reliability(const std::string& text, const std::string& prob, bool decimal) {
    const Input in = read_input(text);
    const Rational p = parse_rational(prob);
    const Rational r = node_reliability(global_polynomial(in, config_.brute_force_cap), p);
    if (config_.format == Format::Json)
      out_ << Json{{"input", text}, {"p", to_string(p)}, {"reliability", to_string(r)}}.dump() << "\n";
    else
      out_ << with_decimal(r, decimal) << "\n";
    return kPass;
  }

  int cmd_enumerate(const std::string& family, int n, std::string emit) {
    const GenFamily f = parse_gen_family(family);
    const bool cographs =
        f == GenFamily::Cographs || f == GenFamily::ConnectedCographs || f == GenFamily::DisconnectedCographs;
    if (emit.empty()) emit = cographs ? "cotree" : "graph6";
    if (!cographs && emit == "cotree")
      throw Error(Errc::RangeError, std::string(gen_family_name(f)) + " can only be emitted as graph6");
    if (cographs) {
      SearchContext ctx;
      for_each_cograph({f, n, config_.shard}, ctx, [&](const std::string& form, const Cotree& t) {
        out_ << (emit == "cotree" ? form : emit_graph6(cotree_to_graph(t))) << "\n";
      });
    } else if (f == GenFamily::ConnectedGraphs) {
      for (const Graph& g : enumerate_connected_graphs(n, config_.shard)) out_ << emit_graph6(g) << "\n";
    } else {
      for (const Graph& g : take_shard(enumerate_caterpillars(n), config_.shard)) out_ << emit_graph6(g) << "\n";
    }
    return kPass;
  }

  int cmd_verify(const std::string& suite, std::optional<int> n_max) {
    SearchContext ctx;
    ctx.brute_force_cap = config_.brute_force_cap;
    std::vector<TheoremVerdict> verdicts = run_suite(suite, n_max, ctx);
    if (!config_.golden_dir.empty()) check_golden(verdicts);

    bool pass = true;
    for (const TheoremVerdict& v : verdicts) pass = pass && v.pass;
    if (config_.format == Format::Tsv) {
      out_ << "id\tstatus\trange\tclaim\n";
      for (const TheoremVerdict& v : verdicts)
        out_ << v.id << "\t" << (v.pass ? "PASS" : "FAIL") << "\t" << v.range << "\t" << v.claim << "\n";
    } else {
      Json list = Json::array();
      for (const TheoremVerdict& v : verdicts) list.push_back(verdict_json(v));
      Json j{{"suite", suite}, {"caps", {{"brute_force", ctx.brute_force_cap}, {"cotrees", kCotreeEnumerationCap},
                                         {"graphs", kGraphEnumerationCap}, {"caterpillars", kCaterpillarCap}}}};
      if (n_max) j["nmax"] = *n_max;
      j["status"] = pass ? "PASS" : "FAIL";
      j["verdicts"] = list;
      out_ << j.dump(2) << "\n";
    }
    return pass ? kPass : kVerificationFailed;
  }

  /// Reproduced table rows must equal the golden file restricted to the same orders.
  void check_golden(std::vector<TheoremVerdict>& verdicts) const {
    std::vector<TheoremVerdict> extra;
    for (const TheoremVerdict& v : verdicts) {
      if (v.id != "table1" && v.id != "table2") continue;
      const std::string path = config_.golden_dir + "/" + v.id + ".tsv";
      std::ifstream in(path);
      if (!in) throw Error(Errc::ParseError, "cannot read golden file " + path);
      std::set<int> orders;
      for (const Json& row : v.details["rows"]) orders.insert(row["order"].get<int>());
      std::string line, expected;
      std::getline(in, line);
      expected = line + "\n";
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (orders.count(std::stoi(line.substr(0, line.find('\t'))))) expected += line + "\n";
      }
      const std::string got = v.details["tsv"].get<std::string>();
      TheoremVerdict g("golden-" + v.id, "reproduced rows equal " + path, v.range);
      g.require(got == expected, [&] { return Json{{"expected", expected}, {"got", got}}; });
      extra.push_back(std::move(g));
    }
    for (TheoremVerdict& g : extra) verdicts.push_back(std::move(g));
  }

  int cmd_closed_form(const std::string& family, int n, int s, bool decimal) {
    const Family f = parse_family(family);
    const Rational m = closed_form_mean(f, n, s);
    if (config_.format == Format::Json)
      out_ << Json{{"family", family_name(f)}, {"n", n}, {"s", s}, {"mean", to_string(m)}}.dump() << "\n";
    else
      out_ << with_decimal(m, decimal) << "\n";
    return kPass;
  }

  std::ostream& out_;
  std::ostream& err_;
  CliConfig config_;
};

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return Runner(out, err).run(argc, argv);
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"cogmean"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace cogmean::cli

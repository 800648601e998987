#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "wcd/constructions.hpp"
#include "wcd/graph6.hpp"
#include "wcd/scan.hpp"
#include "wcd/wcdim.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitPartial = 1;  // scan finished but saw malformed lines / verify failed
constexpr int kExitUsage = 2;    // bad input, bad parameters, fatal I/O

// Positional graph6 argument; "-" reads one line from stdin.
wcd::Graph read_graph_arg(const std::string& arg) {
  std::string text = arg;
  if (arg == "-") {
    if (!std::getline(std::cin, text)) throw wcd::Graph6Error("no input on stdin", 0);
  }
  return wcd::parse_graph6(text);
}

ordered_json labels_json(const wcd::NamedGraph& named) {
  ordered_json labels = ordered_json::object();
  for (const auto& [name, idx] : named.labels) labels[name] = idx;
  return labels;
}

ordered_json profile_json(const wcd::Graph& g) {
  return ordered_json::parse(wcd::profile_to_json(wcd::wcdim_profile(g), wcd::to_graph6(g)));
}

// What inflation/contraction preserve: the generic dimension and the
// per-prime dimensions, not the order or the number of sets.
bool same_dimension_profile(const wcd::WcdimProfile& a, const wcd::WcdimProfile& b) {
  return a.wcdim_generic == b.wcdim_generic && a.critical == b.critical;
}

struct WcdimCmd {
  std::string graph6;
  long characteristic = -1;  // -1: not requested
  bool profile = false;
  bool basis = false;

  int run() const {
    const wcd::Graph g = read_graph_arg(graph6);
    std::optional<wcd::FieldSpec> gf;
    if (characteristic >= 0 && characteristic != 0)
      gf = wcd::FieldSpec::gf(characteristic);

    ordered_json out;
    if (profile) {
      out = profile_json(g);
    } else {
      out["graph6"] = wcd::to_graph6(g);
      out["order"] = g.order();
      out["wcdim_generic"] = wcd::wcdim(g, wcd::FieldSpec::rationals());
    }
    if (gf) {
      out["wcdim_gf"] = {{"p", characteristic}, {"wcdim", wcd::wcdim(g, *gf)}};
    }
    if (basis) {
      const wcd::FieldSpec field = gf ? *gf : wcd::FieldSpec::rationals();
      auto vectors = ordered_json::array();
      for (const auto& v : wcd::well_covered_space_basis(g, field)) {
        auto vec = ordered_json::array();
        for (const mpz_class& x : v) vec.push_back(x.get_str());
        vectors.push_back(std::move(vec));
      }
      out["basis"] = {{"characteristic", gf ? characteristic : 0}, {"vectors", std::move(vectors)}};
    }
    std::cout << out.dump() << "\n";
    return kExitOk;
  }
};

struct MisCmd {
  std::string graph6;

  int run() const {
    const wcd::Graph g = read_graph_arg(graph6);
    const wcd::MisList mis = wcd::maximal_independent_sets(g);
    for (const wcd::VertexSet& s : mis.sets) {
      const auto vs = s.to_vector();
      for (std::size_t i = 0; i < vs.size(); ++i)
        std::cout << (i ? " " : "") << vs[i];
      std::cout << "\n";
    }
    std::cout << "count " << mis.count() << "\n";
    return kExitOk;
  }
};

struct ScanCmd {
  int order = 0;
  std::string input;
  int jobs = 1;
  std::string output;
  std::string summary_path;

  int run() const {
    if (order <= 0 && input.empty())
      throw CLI::ValidationError("scan needs exactly one of --order or --input");

    std::ostringstream records;
    const wcd::RecordSink sink = [&records](const wcd::ScanRecord& r) {
      records << wcd::record_to_json(r) << "\n";
    };

    wcd::ScanSummary summary;
    if (order > 0) {
      summary = wcd::scan_graphs(wcd::generate_all_graphs(order), jobs, sink);
    } else if (input == "-") {
      summary = wcd::scan_graph6_lines(std::cin, jobs, sink);
    } else {
      std::ifstream in(input);
      if (!in) {
        std::cerr << "error: cannot open input file " << input << "\n";
        return kExitUsage;
      }
      summary = wcd::scan_graph6_lines(in, jobs, sink);
    }

    if (output.empty()) {
      std::cout << records.str();
    } else {
      // Replace any previous output atomically.
      const std::string tmp = output + ".tmp";
      std::ofstream out(tmp, std::ios::trunc);
      if (!out || !(out << records.str()) || (out.close(), std::rename(tmp.c_str(), output.c_str()) != 0)) {
        std::cerr << "error: cannot write output file " << output << "\n";
        return kExitUsage;
      }
    }

    const std::string summary_line = wcd::summary_to_json(summary) + "\n";
    if (summary_path.empty()) {
      std::cerr << summary_line;
    } else {
      std::ofstream s(summary_path, std::ios::trunc);
      if (!s || !(s << summary_line)) {
        std::cerr << "error: cannot write summary file " << summary_path << "\n";
        return kExitUsage;
      }
    }
    for (std::size_t line : summary.malformed_lines)
      std::cerr << "malformed graph6 input on line " << line << "\n";
    return summary.malformed_lines.empty() ? kExitOk : kExitPartial;
  }
};

struct ConstructCmd {
  std::string kind;
  int n = -1;
  long p = -1;
  int target_order = -1;
  std::string input;
  int vertex = -1;
  std::string clique;
  bool verify = false;

  int require_n(const char* what) const {
    if (n < 0) throw CLI::ValidationError(std::string(what) + " requires --n");
    return n;
  }

  static void check(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error("verification failed: " + what);
  }

  // The --verify contract: the emitted profile must satisfy the formula of
  // the construction that produced the graph.
  void verify_named(const wcd::WcdimProfile& prof) const {
    if (kind == "g7")
      check(prof.wcdim_generic == 2 && prof.critical.size() == 1 && prof.critical[0].first == 2 &&
                prof.critical[0].second == 3,
            "g7 must have dimension 2 generically and 3 at characteristic 2");
    else if (kind == "g8")
      check(prof.wcdim_generic == 1 && prof.critical.size() == 1 && prof.critical[0].first == 3 &&
                prof.critical[0].second == 2,
            "g8 must have dimension 1 generically and 2 at characteristic 3");
    else if (kind == "g10")
      check(prof.wcdim_generic == 0 && prof.critical.size() == 1 && prof.critical[0].first == 5 &&
                prof.critical[0].second == 1,
            "g10 must have dimension 0 generically and 1 at characteristic 5");
  }

  int run() const {
    ordered_json out;
    out["kind"] = kind;

    if (kind == "g7" || kind == "g8" || kind == "g10" || kind == "gk2" || kind == "gn") {
      wcd::NamedGraph named = kind == "g7"    ? wcd::g7()
                              : kind == "g8"  ? wcd::g8()
                              : kind == "g10" ? wcd::g10()
                              : kind == "gk2" ? wcd::g_k2()
                                              : wcd::gn_family(require_n("gn"));
      out["graph6"] = wcd::to_graph6(named.graph);
      out["labels"] = labels_json(named);
      if (verify) {
        const wcd::WcdimProfile prof = wcd::wcdim_profile(named.graph);
        verify_named(prof);
        if (kind == "gn") {
          check(prof.wcdim_generic == 1, "gn must have dimension 1 generically");
          const auto primes = wcd::distinct_prime_factors(2 * n - 1);
          check(prof.critical.size() == primes.size(), "gn critical primes must divide 2n-1");
          for (std::size_t i = 0; i < primes.size(); ++i)
            check(prof.critical[i].first == primes[i] && prof.critical[i].second == 2,
                  "gn must have dimension 2 exactly at the primes dividing 2n-1");
        }
        out["profile"] = profile_json(named.graph);
      }
    } else if (kind == "h-of") {
      const wcd::Graph g = read_graph_arg(input);
      const wcd::NamedGraph named = wcd::h_of(g);
      out["graph6"] = wcd::to_graph6(named.graph);
      out["labels"] = labels_json(named);
      if (verify) {
        for (long c : {0L, 2L, 3L, 5L, 7L}) {
          const wcd::FieldSpec f = c == 0 ? wcd::FieldSpec::rationals() : wcd::FieldSpec::gf(c);
          const int shift = wcd::wcdim(named.graph, f) - wcd::wcdim(g, f);
          check(shift == (c == 2 ? 2 : 1), "h-of must shift the dimension by +1 (+2 at char 2)");
        }
        out["profile"] = profile_json(named.graph);
      }
    } else if (kind == "prime") {
      if (p < 0 || target_order < 0) throw CLI::ValidationError("prime requires --p and --order");
      const wcd::Graph g = wcd::graph_for_prime(p, target_order);
      out["graph6"] = wcd::to_graph6(g);
      if (verify) {
        const wcd::WcdimProfile prof = wcd::wcdim_profile(g);
        check(prof.order == target_order, "prime construction must hit the requested order");
        check(prof.wcdim_at(p) > prof.wcdim_generic, "requested prime must be critical");
        out["profile"] = profile_json(g);
      }
    } else if (kind == "inflate") {
      const wcd::Graph g = read_graph_arg(input);
      if (vertex < 0) throw CLI::ValidationError("inflate requires --vertex");
      const wcd::InflatedGraph inf = wcd::inflate_vertex(g, vertex, require_n("inflate"));
      out["graph6"] = wcd::to_graph6(inf.graph);
      out["old_to_new"] = inf.old_to_new;
      out["clique"] = inf.clique.to_vector();
      if (verify) {
        check(same_dimension_profile(wcd::wcdim_profile(inf.graph), wcd::wcdim_profile(g)),
              "inflation must preserve the dimension profile");
        out["profile"] = profile_json(inf.graph);
      }
    } else if (kind == "contract") {
      const wcd::Graph g = read_graph_arg(input);
      wcd::VertexSet c;
      std::stringstream ss(clique);
      for (std::string piece; std::getline(ss, piece, ',');) c.insert(std::stoi(piece));
      if (c.empty()) throw CLI::ValidationError("contract requires --clique i,j,...");
      if (verify) {
        // Contraction only preserves the dimension for twin cliques.
        const int rep = c.lowest();
        for (int v : c.to_vector())
          if (!wcd::closed_neighborhoods_equal(g, rep, v))
            throw CLI::ValidationError("--verify requires a clique with equal closed neighborhoods");
      }
      const wcd::RelabeledGraph res = wcd::contract_clique(g, c);
      out["graph6"] = wcd::to_graph6(res.graph);
      out["old_to_new"] = res.old_to_new;
      if (verify) {
        check(same_dimension_profile(wcd::wcdim_profile(res.graph), wcd::wcdim_profile(g)),
              "twin-clique contraction must preserve the dimension profile");
        out["profile"] = profile_json(res.graph);
      }
    } else {
      throw CLI::ValidationError("unknown construction kind: " + kind);
    }

    std::cout << out.dump() << "\n";
    return kExitOk;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"well-covered dimension of finite simple graphs over any characteristic"};
  app.require_subcommand(1);

  WcdimCmd wcdim_cmd;
  auto* sub_wcdim = app.add_subcommand("wcdim", "compute the well-covered dimension of one graph");
  sub_wcdim->add_option("graph6", wcdim_cmd.graph6, "graph6 string ('-' reads stdin)")->required();
  sub_wcdim->add_option("--char", wcdim_cmd.characteristic, "also report over GF(p)");
  sub_wcdim->add_flag("--profile", wcdim_cmd.profile, "print the full profile (all critical primes)");
  sub_wcdim->add_flag("--basis", wcdim_cmd.basis, "append a well-covered space basis");

  MisCmd mis_cmd;
  auto* sub_mis = app.add_subcommand("mis", "list the maximal independent sets of one graph");
  sub_mis->add_option("graph6", mis_cmd.graph6, "graph6 string ('-' reads stdin)")->required();

  ScanCmd scan_cmd;
  auto* sub_scan = app.add_subcommand("scan", "scan a graph stream for characteristic-dependent dimension");
  auto* order_opt = sub_scan->add_option("--order", scan_cmd.order, "scan all isomorphism classes of this order (<= 8)");
  auto* input_opt = sub_scan->add_option("--input", scan_cmd.input, "newline-delimited graph6 file ('-' reads stdin)");
  order_opt->excludes(input_opt);
  input_opt->excludes(order_opt);
  sub_scan->add_option("--jobs", scan_cmd.jobs, "worker count")->default_val(1);
  sub_scan->add_option("--output", scan_cmd.output, "JSONL record file (default stdout)");
  sub_scan->add_option("--summary", scan_cmd.summary_path, "summary JSON file (default stderr)");

  ConstructCmd construct_cmd;
  auto* sub_construct = app.add_subcommand("construct", "emit one of the named constructions");
  sub_construct
      ->add_option("kind", construct_cmd.kind,
                   "one of: g7 g8 g10 gk2 gn h-of prime inflate contract")
      ->required();
  sub_construct->add_option("--n", construct_cmd.n, "family parameter / clique size");
  sub_construct->add_option("--p", construct_cmd.p, "target prime");
  sub_construct->add_option("--order", construct_cmd.target_order, "target order");
  sub_construct->add_option("--input", construct_cmd.input, "input graph6 ('-' reads stdin)");
  sub_construct->add_option("--vertex", construct_cmd.vertex, "vertex to inflate");
  sub_construct->add_option("--clique", construct_cmd.clique, "comma-separated clique to contract");
  sub_construct->add_flag("--verify", construct_cmd.verify,
                          "recompute the profile and assert the construction's formula");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (sub_wcdim->parsed()) return wcdim_cmd.run();
    if (sub_mis->parsed()) return mis_cmd.run();
    if (sub_scan->parsed()) return scan_cmd.run();
    return construct_cmd.run();
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const wcd::Graph6Error& e) {
    std::cerr << "error: invalid graph6: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPartial;
  }
}

// Acceptance suite: runs the project's acceptance checks with exact
// expectations and fixed time budgets, prints one PASS/FAIL line per
// criterion, and exits nonzero if any fail. Criterion 4 needs externally
// supplied isomorph-free order-9 and order-10 graph6 corpora
// (--order9 FILE --order10 FILE, or the WCDIM_ORDER9_G6 /
// WCDIM_ORDER10_G6 environment variables) and is reported as SKIP when
// they are absent.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/test_util.hpp"
#include "wcd/constructions.hpp"
#include "wcd/graph6.hpp"
#include "wcd/scan.hpp"
#include "wcd/wcdim.hpp"

namespace {

using namespace wcd;

struct Outcome {
  bool passed = true;
  bool skipped = false;
  std::string detail;
};

struct Check {
  Outcome* outcome;
  void require(bool ok, const std::string& what) {
    if (!ok && outcome->passed) {
      outcome->passed = false;
      outcome->detail = what;
    }
  }
  void skip(const std::string& why) {
    outcome->skipped = true;
    outcome->detail = why;
  }
};

FieldSpec field_of(long c) { return c == 0 ? FieldSpec::rationals() : FieldSpec::gf(c); }

// --- criterion bodies ------------------------------------------------------

void witness_reproduction(Check& c) {
  const Graph G7 = g7().graph, G8 = g8().graph, G10 = g10().graph;
  for (long p : {0L, 3L, 5L, 7L})
    c.require(wcdim(G7, field_of(p)) == 2, "wcdim(G7) must be 2 away from characteristic 2");
  c.require(wcdim(G7, field_of(2)) == 3, "wcdim(G7, GF(2)) must be 3");
  c.require(wcdim(G8, field_of(0)) == 1, "wcdim(G8) must be 1 generically");
  c.require(wcdim(G8, field_of(3)) == 2, "wcdim(G8, GF(3)) must be 2");
  c.require(wcdim(G10, field_of(0)) == 0, "wcdim(G10) must be 0 generically");
  c.require(wcdim(G10, field_of(5)) == 1, "wcdim(G10, GF(5)) must be 1");
}

void profile_completeness(Check& c) {
  const auto check_profile = [&c](const Graph& g, long prime, const char* name) {
    const WcdimProfile prof = wcdim_profile(g);
    c.require(prof.critical.size() == 1 && prof.critical[0].first == prime,
              std::string(name) + " must have exactly one critical prime");
  };
  check_profile(g7().graph, 2, "G7");
  check_profile(g8().graph, 3, "G8");
  check_profile(g10().graph, 5, "G10");
}

void minima_at_small_orders(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int order = 1; order <= 6; ++order) {
    const ScanSummary s = scan_graphs(generate_all_graphs(order), 1, nullptr);
    c.require(s.dependent_found == 0,
              "orders 1-6 must have no characteristic-dependent graphs (order " +
                  std::to_string(order) + ")");
  }
  const ScanSummary s7 = scan_graphs(generate_all_graphs(7), 1, nullptr);
  c.require(s7.min_order_per_prime.count(2) == 1 && s7.dependent_found >= 1,
            "order 7 must yield a graph with critical prime 2");
  c.require(s7.min_order_per_prime.count(3) == 0, "order 7 must have no critical prime 3");
  c.require(s7.min_order_per_prime.count(5) == 0, "order 7 must have no critical prime 5");
  const double through7 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.require(through7 < 10.0, "orders 1-7 must finish within 10 s");

  const auto t8 = std::chrono::steady_clock::now();
  const ScanSummary s8 = scan_graphs(generate_all_graphs(8), 1, nullptr);
  c.require(s8.graphs_scanned == 12346, "order 8 must scan 12346 isomorphism classes");
  c.require(s8.min_order_per_prime.count(3) == 1, "order 8 must yield a graph with critical prime 3");
  const double order8 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t8).count();
  c.require(order8 < 120.0, "order 8 must finish within 2 min single-threaded");
}

std::string corpus_path(const char* flag_value, const char* env_name) {
  if (flag_value && *flag_value) return flag_value;
  const char* env = std::getenv(env_name);
  return env ? env : "";
}

void extended_minimum(Check& c, const std::string& order9, const std::string& order10) {
  if (order9.empty() || order10.empty()) {
    c.skip("extended criterion: supply --order9/--order10 isomorph-free corpora to run");
    return;
  }
  std::ifstream in9(order9), in10(order10);
  if (!in9 || !in10) {
    c.require(false, "cannot open the supplied corpora");
    return;
  }
  const ScanSummary s9 = scan_graph6_lines(in9, 8, nullptr);
  c.require(s9.min_order_per_prime.count(5) == 0, "order 9 must show no prime-5 dependence");
  const ScanSummary s10 = scan_graph6_lines(in10, 8, nullptr);
  c.require(s10.min_order_per_prime.count(5) == 1 && s10.min_order_per_prime.at(5).first == 10,
            "prime 5 must first appear at order 10");
}

void h_of_shift(Check& c) {
  std::vector<Graph> inputs = generate_all_graphs(6);
  std::mt19937_64 rng(905);
  for (int i = 0; i < 50; ++i)
    inputs.push_back(wcdtest::random_graph(rng, 1 + static_cast<int>(rng() % 5)));
  for (const Graph& g : inputs) {
    const Graph h = h_of(g).graph;
    for (long p : {0L, 3L, 5L, 7L})
      c.require(wcdim(h, field_of(p)) - wcdim(g, field_of(p)) == 1,
                "h_of must shift the dimension by +1 away from characteristic 2");
    c.require(wcdim(h, field_of(2)) - wcdim(g, field_of(2)) == 2,
              "h_of must shift the dimension by +2 at characteristic 2");
  }
}

void gn_dimension_formula(Check& c) {
  const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
  for (int n = 2; n <= 10; ++n) {
    const Graph g = gn_family(n).graph;
    c.require(maximal_independent_sets(g).count() == static_cast<std::size_t>(2 * n + 4),
              "gn_family(n) must have exactly 2n+4 maximal independent sets");
    c.require(wcdim(g, FieldSpec::rationals()) == 1, "gn_family must have dimension 1 over Q");
    for (long p : primes) {
      const int expected = (2 * n - 1) % p == 0 ? 2 : 1;
      c.require(wcdim(g, field_of(p)) == expected,
                "gn_family dimension must be 2 exactly when p divides 2n-1 (n=" +
                    std::to_string(n) + ", p=" + std::to_string(p) + ")");
    }
  }
}

bool profile_equivalent(const WcdimProfile& a, const WcdimProfile& b) {
  return a.wcdim_generic == b.wcdim_generic && a.critical == b.critical;
}

void invariance_under_inflation(Check& c) {
  std::mt19937_64 rng(906);
  for (int i = 0; i < 100; ++i) {
    const int order = 2 + static_cast<int>(rng() % 7);
    const Graph g = wcdtest::random_graph(rng, order);
    const int v = static_cast<int>(rng() % static_cast<std::uint64_t>(order));
    const int k = 1 + static_cast<int>(rng() % 4);
    c.require(profile_equivalent(wcdim_profile(inflate_vertex(g, v, k).graph), wcdim_profile(g)),
              "inflation must preserve the profile");
  }
  for (int i = 0; i < 100; ++i) {
    // Plant a twin clique by inflation, then contract a random sub-clique
    // of it (any sub-clique of a twin class is itself a twin clique).
    const int order = 2 + static_cast<int>(rng() % 6);
    const Graph g = wcdtest::random_graph(rng, order);
    const int v = static_cast<int>(rng() % static_cast<std::uint64_t>(order));
    const int k = 2 + static_cast<int>(rng() % 3);
    const InflatedGraph inflated = inflate_vertex(g, v, k);
    const auto members = inflated.clique.to_vector();
    VertexSet sub;
    const int take = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(members.size() - 1));
    for (int j = 0; j < take; ++j) sub.insert(members[static_cast<std::size_t>(j)]);
    c.require(profile_equivalent(wcdim_profile(contract_clique(inflated.graph, sub).graph),
                                 wcdim_profile(inflated.graph)),
              "twin-clique contraction must preserve the profile");
  }
}

void linalg_oracles(Check& c) {
  std::mt19937_64 rng(907);
  for (int trial = 0; trial < 1000; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 12);
    const int cols = 1 + static_cast<int>(rng() % 12);
    const IntMatrix m = wcdtest::random_matrix(rng, rows, cols);
    const InvariantFactors inv = invariant_factors(m);
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
      int from_snf = 0;
      for (const mpz_class& d : inv.factors)
        if (d % p != 0) ++from_snf;
      c.require(from_snf == rank(m, FieldSpec::gf(p)),
                "SNF-derived rank must match direct mod-p elimination");
    }
    c.require(rank(m, FieldSpec::rationals()) == wcdtest::rank_rational_oracle(m),
              "Bareiss rank must match explicit rational elimination");
  }
}

void mis_oracles(Check& c) {
  for (int order = 1; order <= 6; ++order)
    for (const Graph& g : generate_all_graphs(order))
      c.require(maximal_independent_sets(g).sets == brute_force_mis(g).sets,
                "enumerator must match the subset oracle on order " + std::to_string(order));
  std::mt19937_64 rng(908);
  for (int i = 0; i < 200; ++i) {
    const int order = 7 + static_cast<int>(rng() % 6);
    const Graph g = wcdtest::random_graph(rng, order);
    c.require(maximal_independent_sets(g).sets == brute_force_mis(g).sets,
              "enumerator must match the subset oracle on random graphs");
  }
}

void scan_determinism(Check& c) {
  const std::vector<Graph> graphs = generate_all_graphs(7);
  const auto run = [&graphs](int jobs) {
    std::ostringstream out;
    scan_graphs(graphs, jobs, [&out](const ScanRecord& r) { out << record_to_json(r) << "\n"; });
    return out.str();
  };
  c.require(run(1) == run(8), "order-7 scan JSONL must be byte-identical for 1 and 8 workers");
}

}  // namespace

int main(int argc, char** argv) {
  std::string order9, order10;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--order9" && i + 1 < argc) order9 = argv[++i];
    if (arg == "--order10" && i + 1 < argc) order10 = argv[++i];
  }
  if (order9.empty()) order9 = corpus_path(nullptr, "WCDIM_ORDER9_G6");
  if (order10.empty()) order10 = corpus_path(nullptr, "WCDIM_ORDER10_G6");

  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<void(Check&)> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "witness reproduction", 1.0, witness_reproduction},
      {2, "profile completeness", 1.0, profile_completeness},
      {3, "minima at small orders", 130.0, minima_at_small_orders},
      {4, "extended minimum (orders 9-10)", 0.0,
       [&](Check& c) { extended_minimum(c, order9, order10); }},
      {5, "h_of dimension shift", 30.0, h_of_shift},
      {6, "gn_family dimension formula", 10.0, gn_dimension_formula},
      {7, "inflation/contraction invariance", 60.0, invariance_under_inflation},
      {8, "linear-algebra oracle equivalence", 60.0, linalg_oracles},
      {9, "MIS oracle equivalence", 60.0, mis_oracles},
      {10, "scan determinism", 30.0, scan_determinism},
  };

  int failures = 0;
  for (const Criterion& crit : criteria) {
    Outcome outcome;
    Check check{&outcome};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      crit.body(check);
    } catch (const std::exception& e) {
      check.require(false, std::string("unexpected exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!outcome.skipped && crit.budget_seconds > 0 && elapsed > crit.budget_seconds)
      check.require(false, "exceeded the " + std::to_string(crit.budget_seconds) + " s budget");

    const char* verdict = outcome.skipped ? "SKIP" : outcome.passed ? "PASS" : "FAIL";
    std::printf("%s  %2d  %-38s (%.2f s)%s%s\n", verdict, crit.id, crit.name, elapsed,
                outcome.detail.empty() ? "" : " -- ", outcome.detail.c_str());
    if (!outcome.skipped && !outcome.passed) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}

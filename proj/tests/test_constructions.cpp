#include <doctest.h>

#include <algorithm>
#include <random>

#include "support/test_util.hpp"
#include "wcd/constructions.hpp"
#include "wcd/graph6.hpp"
#include "wcd/mis.hpp"
#include "wcd/wcdim.hpp"

using namespace wcd;

namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

bool profile_equivalent(const WcdimProfile& a, const WcdimProfile& b) {
  return a.wcdim_generic == b.wcdim_generic && a.critical == b.critical;
}

}  // namespace

TEST_CASE("the fixed gadget g_k2") {
  const NamedGraph k2 = g_k2();
  CHECK(k2.graph.order() == 6);
  CHECK(k2.graph.edge_count() == 7);
  CHECK(k2.graph.degree(k2.label("u")) == 3);
  CHECK(k2.graph.degree(k2.label("w")) == 3);
  for (const char* name : {"v1", "v2", "v3", "v4"}) CHECK(k2.graph.degree(k2.label(name)) == 2);
  CHECK_THROWS_AS(k2.label("nope"), std::invalid_argument);

  // Exactly four maximal independent sets (uw is an edge, so {u,w} is not one).
  const int v1 = k2.label("v1"), v2 = k2.label("v2"), v3 = k2.label("v3"), v4 = k2.label("v4");
  const int u = k2.label("u"), w = k2.label("w");
  std::vector<VertexSet> expected = {VertexSet::of({v1, v4}), VertexSet::of({v2, v3}),
                                     VertexSet::of({v1, v2, w}), VertexSet::of({v3, v4, u})};
  std::sort(expected.begin(), expected.end(), [](VertexSet a, VertexSet b) { return lex_less(a, b); });
  CHECK(brute_force_mis(k2.graph).sets == expected);
}

TEST_CASE("witness graph fixtures carry their vertex labels") {
  CHECK(g7().graph.order() == 7);
  CHECK(g7().graph.edge_count() == 11);
  CHECK(g7().label("v5") == 4);
  CHECK(g8().graph.order() == 8);
  CHECK(g10().graph.order() == 10);
  CHECK(g10().graph.edge_count() == 16);
  CHECK(g10().labels.size() == 10);
}

TEST_CASE("h_of glues the gadget onto any nonempty graph") {
  const Graph c4 = cycle(4);
  const NamedGraph h = h_of(c4);
  CHECK(h.graph.order() == 10);
  CHECK(h.label("x3") == 8);

  // Every maximal independent set has one of the six expected shapes.
  const MisList inner = maximal_independent_sets(c4);
  std::vector<VertexSet> expected = {
      VertexSet::of({h.label("v1"), h.label("v4")}),
      VertexSet::of({h.label("v2"), h.label("v3")}),
      VertexSet::of({h.label("v1"), h.label("v2"), h.label("w")}),
      VertexSet::of({h.label("v3"), h.label("v4"), h.label("u")})};
  for (const VertexSet& m : inner.sets) {
    VertexSet shifted;
    for (int v : m.to_vector()) shifted.insert(6 + v);
    expected.push_back(shifted | VertexSet::of({h.label("u")}));
    expected.push_back(shifted | VertexSet::of({h.label("w")}));
  }
  std::sort(expected.begin(), expected.end(), [](VertexSet a, VertexSet b) { return lex_less(a, b); });
  CHECK(maximal_independent_sets(h.graph).sets == expected);
  CHECK(maximal_independent_sets(h.graph).count() == 4 + 2 * inner.count());

  // Dimension shift: +1 away from characteristic 2, +2 at characteristic 2.
  for (long c : {0L, 2L, 3L, 5L, 7L}) {
    const FieldSpec f = c == 0 ? FieldSpec::rationals() : FieldSpec::gf(c);
    CHECK(wcdim(h.graph, f) - wcdim(c4, f) == (c == 2 ? 2 : 1));
  }

  // "Non-empty" means a nonempty vertex set; edge-free graphs work too.
  const NamedGraph h1 = h_of(Graph(1));
  CHECK(h1.graph.order() == 7);
  CHECK(maximal_independent_sets(h1.graph).count() == 4 + 2 * 1);
  for (long c : {0L, 2L, 3L}) {
    const FieldSpec f = c == 0 ? FieldSpec::rationals() : FieldSpec::gf(c);
    CHECK(wcdim(h1.graph, f) - wcdim(Graph(1), f) == (c == 2 ? 2 : 1));
  }
}

TEST_CASE("gn_family has the expected sets and dimensions") {
  CHECK_THROWS_AS(gn_family(1), std::invalid_argument);

  const NamedGraph g3 = gn_family(3);
  CHECK(g3.graph.order() == 10);
  const MisList mis = maximal_independent_sets(g3.graph);
  CHECK(mis.count() == 10);  // 2n+4
  // The six set shapes, by label.
  std::vector<VertexSet> expected;
  for (int i = 1; i <= 3; ++i) {
    expected.push_back(VertexSet::of({g3.label("y" + std::to_string(i)), g3.label("w1"), g3.label("w2")}));
    expected.push_back(VertexSet::of({g3.label("y" + std::to_string(i)), g3.label("u" + std::to_string(i))}));
  }
  expected.push_back(VertexSet::of({g3.label("v1"), g3.label("w2")}));
  expected.push_back(VertexSet::of({g3.label("v2"), g3.label("w1")}));
  expected.push_back(VertexSet::of({g3.label("v1"), g3.label("u1"), g3.label("u2"), g3.label("u3")}));
  expected.push_back(VertexSet::of({g3.label("v2"), g3.label("u1"), g3.label("u2"), g3.label("u3")}));
  std::sort(expected.begin(), expected.end(), [](VertexSet a, VertexSet b) { return lex_less(a, b); });
  CHECK(mis.sets == expected);

  // Dimension 1 generically, 2 exactly at primes dividing 2n-1.
  const WcdimProfile p2 = wcdim_profile(gn_family(2).graph);
  CHECK(p2.wcdim_generic == 1);
  CHECK(p2.critical == std::vector<std::pair<mpz_class, int>>{{3, 2}});

  // n=3: exactly one invariant factor divisible by 5 = 2n-1, none by
  // anything else.
  const WcdimProfile p3 = wcdim_profile(g3.graph);
  int by_five = 0;
  for (const mpz_class& d : p3.invariant_factors.factors) {
    if (d % 5 == 0) ++by_five;
    CHECK((d == 1 || d % 5 == 0));
  }
  CHECK(by_five == 1);
  CHECK(p3.critical == std::vector<std::pair<mpz_class, int>>{{5, 2}});

  const WcdimProfile p8 = wcdim_profile(gn_family(8).graph);  // 2n-1 = 15
  CHECK(p8.critical == std::vector<std::pair<mpz_class, int>>{{3, 2}, {5, 2}});
  CHECK(p8.wcdim_generic == 1);

  for (int n = 2; n <= 6; ++n) {
    const Graph g = gn_family(n).graph;
    CHECK(maximal_independent_sets(g).count() == static_cast<std::size_t>(2 * n + 4));
    for (long c : {0L, 2L, 3L, 5L, 7L, 11L}) {
      const FieldSpec f = c == 0 ? FieldSpec::rationals() : FieldSpec::gf(c);
      const int expected_dim = (c != 0 && (2 * n - 1) % c == 0) ? 2 : 1;
      CHECK(wcdim(g, f) == expected_dim);
    }
  }
}

TEST_CASE("graph_for_prime pads to the requested order") {
  const Graph g38 = graph_for_prime(3, 8);
  CHECK(g38.order() == 8);
  CHECK(wcdim_profile(g38).wcdim_at(3) == 2);

  const Graph g2 = graph_for_prime(2, 12);
  CHECK(g2.order() == 12);
  const WcdimProfile p2 = wcdim_profile(g2);
  CHECK(p2.wcdim_generic == 2);
  CHECK(p2.wcdim_at(2) == 3);
  CHECK(p2.critical == std::vector<std::pair<mpz_class, int>>{{2, 3}});

  const Graph g7_12 = graph_for_prime(7, 12);  // 12 = 7+5, no padding
  CHECK(g7_12.order() == 12);
  CHECK(wcdim_profile(g7_12).critical == std::vector<std::pair<mpz_class, int>>{{7, 2}});

  const Graph g5_15 = graph_for_prime(5, 15);
  CHECK(g5_15.order() == 15);
  CHECK(wcdim_profile(g5_15).critical == std::vector<std::pair<mpz_class, int>>{{5, 2}});

  CHECK_THROWS_AS(graph_for_prime(3, 7), std::invalid_argument);
  CHECK_THROWS_AS(graph_for_prime(4, 20), std::invalid_argument);

  for (long p : {2L, 3L, 5L, 7L, 11L}) {
    for (int extra : {0, 1, 3}) {
      const int order = static_cast<int>(p) + 5 + extra;
      const Graph g = graph_for_prime(p, order);
      CHECK(g.order() == order);
      const WcdimProfile prof = wcdim_profile(g);
      CHECK(prof.wcdim_at(p) > prof.wcdim_generic);
    }
  }
}

TEST_CASE("inflation and twin-clique contraction preserve the profile") {
  std::mt19937_64 rng(717);
  for (int trial = 0; trial < 25; ++trial) {
    const int order = 2 + static_cast<int>(rng() % 6);
    const Graph g = wcdtest::random_graph(rng, order);
    const int v = static_cast<int>(rng() % static_cast<std::uint64_t>(order));
    const int k = 1 + static_cast<int>(rng() % 4);
    const InflatedGraph inflated = inflate_vertex(g, v, k);
    CHECK(profile_equivalent(wcdim_profile(inflated.graph), wcdim_profile(g)));

    const RelabeledGraph contracted = contract_clique(inflated.graph, inflated.clique);
    CHECK(profile_equivalent(wcdim_profile(contracted.graph), wcdim_profile(inflated.graph)));
  }
}

#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "wcd/graph.hpp"

namespace wcd {

/// A graph whose vertices carry names (v1, u, w1, x3, ...). The names form
/// a bijection onto [0, order).
struct NamedGraph {
  Graph graph;
  std::vector<std::pair<std::string, int>> labels;

  /// Index of a named vertex; throws if the name is unknown.
  int label(const std::string& name) const;
};

/// Fixed witness graphs: the smallest graphs whose well-covered dimension
/// changes at characteristic 2, 3 and 5 respectively (orders 7, 8, 10).
NamedGraph g7();
NamedGraph g8();
NamedGraph g10();

/// The fixed 6-vertex gadget (labels v1..v4, u, w) used by h_of.
NamedGraph g_k2();

/// Disjoint union of g_k2 and g, plus all edges between {v1,v2,v3,v4} and
/// V(g). Shifts the well-covered dimension by +1 (char != 2) or +2
/// (char = 2). Requires |V(g)| >= 1; g's vertices are labeled x1..xm.
NamedGraph h_of(const Graph& g);

/// The 2n+4 vertex family (n >= 2): K_{n+2} on {y1..yn, v1, v2} joined to
/// K_{2,n} on {w1, w2 | u1..un} by v1w1, v2w2 and all cross edges y_i u_j
/// for i != j. Its well-covered dimension is 1, rising to 2 exactly at the
/// primes dividing 2n-1. The constructor verifies the graph has exactly
/// the 2n+4 expected maximal independent sets and throws otherwise.
NamedGraph gn_family(int n);

/// A graph of exactly target_order vertices whose well-covered dimension
/// differs between the rationals and GF(p). Seeds from g7 (p = 2) or
/// gn_family((p+1)/2) (odd p) and pads by inflating the vertex labeled v2,
/// which preserves the dimension over every field. Requires
/// target_order >= p + 5 and p prime.
Graph graph_for_prime(const mpz_class& p, int target_order);

}  // namespace wcd

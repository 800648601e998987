#pragma once

#include <vector>

#include "wcd/graph.hpp"

namespace wcd {

/// All maximal independent sets of a graph, canonically ordered
/// (lexicographic on the sorted member lists).
struct MisList {
  int host_order = 0;
  std::vector<VertexSet> sets;

  std::size_t count() const { return sets.size(); }
};

/// Enumerates every maximal independent set of g via maximal-clique
/// enumeration with greedy pivoting on complement(g).
MisList maximal_independent_sets(const Graph& g);

/// True iff s is independent and every vertex outside s has a neighbor in s.
bool is_maximal_independent(const Graph& g, VertexSet s);

/// Definitionally direct 2^n subset scan. Oracle for the fast enumerator;
/// order <= 20.
MisList brute_force_mis(const Graph& g);

/// True iff all maximal independent sets of g share one cardinality.
bool is_well_covered(const Graph& g);

}  // namespace wcd

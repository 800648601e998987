#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wcd/graph.hpp"
#include "wcd/linalg.hpp"
#include "wcd/mis.hpp"

namespace wcd {

/// The matrix of the difference equations sum_{v in M1} x_v = sum_{v in Mi} x_v:
/// one row per maximal independent set beyond the first, +1 on M1 \ Mi and
/// -1 on Mi \ M1. A single maximal independent set yields a 0-row matrix.
IntMatrix associated_matrix(const Graph& g, const MisList& mis);

/// Well-covered dimension: |V(g)| - rank of the associated matrix over f.
int wcdim(const Graph& g, const FieldSpec& f);

/// Per-graph summary derived from one Smith normal form: every prime at
/// which the rank drops, and the dimension over the rationals and over
/// each such prime.
struct WcdimProfile {
  int order = 0;
  std::size_t mis_count = 0;
  int generic_rank = 0;
  InvariantFactors invariant_factors;
  /// (p, wcdim over GF(p)) for each critical prime, ascending by p.
  std::vector<std::pair<mpz_class, int>> critical;
  int wcdim_generic = 0;

  bool characteristic_dependent() const { return !critical.empty(); }
  /// Dimension over GF(p); equals wcdim_generic when p is not critical.
  int wcdim_at(const mpz_class& p) const;
};

WcdimProfile wcdim_profile(const Graph& g);

/// Basis of the space of well-covered weightings over f (the nullspace of
/// the associated matrix). Each returned vector is re-verified to give the
/// same sum over every maximal independent set in the field.
std::vector<std::vector<mpz_class>> well_covered_space_basis(const Graph& g, const FieldSpec& f);

/// One-line JSON object {graph6, order, mis_count, wcdim_generic,
/// invariant_factors, critical: [{p, wcdim}]} with deterministic key and
/// element order.
std::string profile_to_json(const WcdimProfile& profile, const std::string& graph6);

}  // namespace wcd

#include "wcd/wcdim.hpp"

#include <algorithm>
#include <stdexcept>

#include "json_util.hpp"

namespace wcd {

IntMatrix associated_matrix(const Graph& g, const MisList& mis) {
  if (mis.host_order != g.order())
    throw std::invalid_argument("MIS list host order does not match the graph");
  const int n = g.order();
  const int rows = mis.sets.empty() ? 0 : static_cast<int>(mis.sets.size()) - 1;
  IntMatrix a(rows, n);
  if (rows == 0) return a;
  const VertexSet m1 = mis.sets.front();
  for (int i = 1; i <= rows; ++i) {
    const VertexSet mi = mis.sets[static_cast<std::size_t>(i)];
    for (std::uint64_t b = (m1 - mi).bits(); b; b &= b - 1) a.at(i - 1, std::countr_zero(b)) = 1;
    for (std::uint64_t b = (mi - m1).bits(); b; b &= b - 1) a.at(i - 1, std::countr_zero(b)) = -1;
  }
  return a;
}

int wcdim(const Graph& g, const FieldSpec& f) {
  return g.order() - rank(associated_matrix(g, maximal_independent_sets(g)), f);
}

int WcdimProfile::wcdim_at(const mpz_class& p) const {
  for (const auto& [prime, dim] : critical)
    if (prime == p) return dim;
  return wcdim_generic;
}

WcdimProfile wcdim_profile(const Graph& g) {
  WcdimProfile out;
  out.order = g.order();
  const MisList mis = maximal_independent_sets(g);
  out.mis_count = mis.count();
  out.invariant_factors = invariant_factors(associated_matrix(g, mis));
  out.generic_rank = static_cast<int>(out.invariant_factors.factors.size());
  out.wcdim_generic = out.order - out.generic_rank;

  // One SNF answers every characteristic: rank over GF(p) is the number of
  // invariant factors p does not divide.
  std::vector<mpz_class> primes;
  for (const mpz_class& d : out.invariant_factors.factors)
    for (const mpz_class& p : distinct_prime_factors(d))
      if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  for (const mpz_class& p : primes) {
    int rank_p = 0;
    for (const mpz_class& d : out.invariant_factors.factors)
      if (d % p != 0) ++rank_p;
    out.critical.emplace_back(p, out.order - rank_p);
  }
  return out;
}

std::vector<std::vector<mpz_class>> well_covered_space_basis(const Graph& g, const FieldSpec& f) {
  const MisList mis = maximal_independent_sets(g);
  const IntMatrix a = associated_matrix(g, mis);
  std::vector<std::vector<mpz_class>> basis = nullspace_basis(a, f);

  // Post-hoc recheck straight from the definition: every basis weighting
  // must sum to the same field element over every maximal independent set.
  for (const std::vector<mpz_class>& w : basis) {
    mpz_class first = 0;
    bool have_first = false;
    for (const VertexSet& s : mis.sets) {
      mpz_class sum = 0;
      for (std::uint64_t b = s.bits(); b; b &= b - 1) sum += w[static_cast<std::size_t>(std::countr_zero(b))];
      if (!f.is_rationals()) {
        sum %= f.characteristic();
        if (sum < 0) sum += f.characteristic();
      }
      if (!have_first) {
        first = sum;
        have_first = true;
      } else if (sum != first) {
        throw std::logic_error("well-covered space basis failed the constant-sum recheck");
      }
    }
  }
  return basis;
}

std::string profile_to_json(const WcdimProfile& profile, const std::string& graph6) {
  nlohmann::ordered_json j;
  j["graph6"] = graph6;
  j["order"] = profile.order;
  j["mis_count"] = profile.mis_count;
  j["wcdim_generic"] = profile.wcdim_generic;
  auto factors = nlohmann::ordered_json::array();
  for (const mpz_class& d : profile.invariant_factors.factors) factors.push_back(detail::mpz_to_json(d));
  j["invariant_factors"] = std::move(factors);
  auto critical = nlohmann::ordered_json::array();
  for (const auto& [p, dim] : profile.critical)
    critical.push_back({{"p", detail::mpz_to_json(p)}, {"wcdim", dim}});
  j["critical"] = std::move(critical);
  return j.dump();
}

}  // namespace wcd

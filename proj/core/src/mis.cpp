#include "wcd/mis.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace wcd {

namespace {

// Bron-Kerbosch with greedy pivoting over bitset rows: maximal cliques of
// the complement are exactly the maximal independent sets of the graph.
class CliqueEnum {
 public:
  CliqueEnum(const Graph& comp, std::vector<VertexSet>& out) : out_(out) {
    n_ = comp.order();
    for (int v = 0; v < n_; ++v) adj_[static_cast<std::size_t>(v)] = comp.neighbors(v).bits();
  }

  void run() { expand(0, VertexSet::full(n_).bits(), 0); }

 private:
  void expand(std::uint64_t r, std::uint64_t p, std::uint64_t x) {
    if (p == 0 && x == 0) {
      out_.push_back(VertexSet(r));
      return;
    }
    // Pivot on the vertex of P ∪ X covering the most candidates.
    std::uint64_t pivot_adj = 0;
    int best = -1;
    for (std::uint64_t b = p | x; b; b &= b - 1) {
      const std::uint64_t a = adj_[static_cast<std::size_t>(std::countr_zero(b))];
      const int cover = std::popcount(p & a);
      if (cover > best) {
        best = cover;
        pivot_adj = a;
      }
    }
    for (std::uint64_t cand = p & ~pivot_adj; cand; cand &= cand - 1) {
      const int v = std::countr_zero(cand);
      const std::uint64_t bit = std::uint64_t{1} << v;
      const std::uint64_t a = adj_[static_cast<std::size_t>(v)];
      expand(r | bit, p & a, x & a);
      p &= ~bit;
      x |= bit;
    }
  }

  int n_;
  std::array<std::uint64_t, kMaxOrder> adj_{};
  std::vector<VertexSet>& out_;
};

}  // namespace

MisList maximal_independent_sets(const Graph& g) {
  MisList out;
  out.host_order = g.order();
  CliqueEnum(complement(g), out.sets).run();
  std::sort(out.sets.begin(), out.sets.end(),
            [](VertexSet a, VertexSet b) { return lex_less(a, b); });
  return out;
}

bool is_maximal_independent(const Graph& g, VertexSet s) {
  if (!g.vertices().contains_all(s)) return false;
  if (!g.is_independent(s)) return false;
  for (std::uint64_t rest = (g.vertices() - s).bits(); rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    if ((g.neighbors(v) & s).empty()) return false;  // v could be added
  }
  return true;
}

MisList brute_force_mis(const Graph& g) {
  const int n = g.order();
  if (n > 20) throw std::invalid_argument("brute_force_mis supports order <= 20 only");
  MisList out;
  out.host_order = n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (is_maximal_independent(g, VertexSet(mask))) out.sets.push_back(VertexSet(mask));
  }
  std::sort(out.sets.begin(), out.sets.end(),
            [](VertexSet a, VertexSet b) { return lex_less(a, b); });
  return out;
}

bool is_well_covered(const Graph& g) {
  const MisList mis = maximal_independent_sets(g);
  for (const VertexSet& s : mis.sets)
    if (s.size() != mis.sets.front().size()) return false;
  return true;
}

}  // namespace wcd

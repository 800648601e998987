#include "wcd/graph.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "wcd/graph6.hpp"

namespace wcd {

Graph::Graph(int order) : order_(order), adj_(static_cast<std::size_t>(order), 0) {
  if (order < 1 || order > kMaxOrder)
    throw std::invalid_argument("graph order must be in [1, " + std::to_string(kMaxOrder) +
                                "], got " + std::to_string(order));
}

Graph Graph::from_edges(int order, const std::vector<std::pair<int, int>>& edges) {
  Graph g(order);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_edges(int order, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(order);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= order_ || v < 0 || v >= order_)
    throw std::out_of_range("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

long Graph::edge_count() const {
  long twice = 0;
  for (std::uint64_t row : adj_) twice += std::popcount(row);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order_; ++u)
    for (int v = u + 1; v < order_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

bool Graph::is_clique(VertexSet s) const {
  for (std::uint64_t b = s.bits(); b; b &= b - 1) {
    int v = std::countr_zero(b);
    if (!closed_neighborhood(v).contains_all(s)) return false;
  }
  return true;
}

bool Graph::is_independent(VertexSet s) const {
  for (std::uint64_t b = s.bits(); b; b &= b - 1) {
    int v = std::countr_zero(b);
    if (!(neighbors(v) & s).empty()) return false;
  }
  return true;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

RelabeledGraph contract_clique(const Graph& g, VertexSet c) {
  const int n = g.order();
  if (c.empty()) throw std::invalid_argument("cannot contract an empty vertex set");
  if (!g.vertices().contains_all(c)) throw std::out_of_range("clique vertex out of range");
  if (!g.is_clique(c)) throw std::invalid_argument("vertex set does not induce a clique");

  const int survivor = c.lowest();
  std::vector<int> old_to_new(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (v == survivor || !c.contains(v)) old_to_new[static_cast<std::size_t>(v)] = next++;
  }
  for (std::uint64_t b = c.bits(); b; b &= b - 1) {
    int v = std::countr_zero(b);
    old_to_new[static_cast<std::size_t>(v)] = old_to_new[static_cast<std::size_t>(survivor)];
  }

  Graph out(n - c.size() + 1);
  for (auto [u, v] : g.edges()) {
    int nu = old_to_new[static_cast<std::size_t>(u)];
    int nv = old_to_new[static_cast<std::size_t>(v)];
    if (nu != nv && !out.adjacent(nu, nv)) out.add_edge(nu, nv);
  }
  return {std::move(out), std::move(old_to_new)};
}

InflatedGraph inflate_vertex(const Graph& g, int v, int n) {
  const int order = g.order();
  if (v < 0 || v >= order) throw std::out_of_range("vertex index out of range");
  if (n < 1) throw std::invalid_argument("clique size must be positive");
  const int new_order = order - 1 + n;
  if (new_order > kMaxOrder) throw std::invalid_argument("inflated graph exceeds order cap");

  // Surviving vertices keep their relative order and occupy 0..order-2;
  // the clique takes the top n indices, starting where v used to count.
  std::vector<int> old_to_new(static_cast<std::size_t>(order));
  for (int u = 0; u < order; ++u)
    old_to_new[static_cast<std::size_t>(u)] = u < v ? u : u - 1;
  const int clique_begin = order - 1;
  old_to_new[static_cast<std::size_t>(v)] = clique_begin;

  Graph out(new_order);
  for (auto [a, b] : g.edges()) {
    if (a == v || b == v) continue;
    out.add_edge(old_to_new[static_cast<std::size_t>(a)], old_to_new[static_cast<std::size_t>(b)]);
  }
  VertexSet clique;
  for (int k = 0; k < n; ++k) clique.insert(clique_begin + k);
  for (int k = 0; k < n; ++k) {
    for (int j = k + 1; j < n; ++j) out.add_edge(clique_begin + k, clique_begin + j);
    for (std::uint64_t b = g.neighbors(v).bits(); b; b &= b - 1) {
      int w = std::countr_zero(b);
      out.add_edge(clique_begin + k, old_to_new[static_cast<std::size_t>(w)]);
    }
  }
  return {std::move(out), std::move(old_to_new), clique};
}

RelabeledGraph induced_subgraph(const Graph& g, VertexSet w) {
  if (w.empty()) throw std::invalid_argument("induced subgraph of the empty set");
  if (!g.vertices().contains_all(w)) throw std::out_of_range("subgraph vertex out of range");

  std::vector<int> old_to_new(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (std::uint64_t b = w.bits(); b; b &= b - 1)
    old_to_new[static_cast<std::size_t>(std::countr_zero(b))] = next++;

  Graph out(w.size());
  for (auto [u, v] : g.edges()) {
    if (w.contains(u) && w.contains(v))
      out.add_edge(old_to_new[static_cast<std::size_t>(u)], old_to_new[static_cast<std::size_t>(v)]);
  }
  return {std::move(out), std::move(old_to_new)};
}

bool closed_neighborhoods_equal(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
    throw std::out_of_range("vertex index out of range");
  return g.closed_neighborhood(u) == g.closed_neighborhood(v);
}

namespace {

// DFS over vertex placements minimizing the upper-triangle bit string in
// graph6 column order. Placing position j appends exactly the j adjacency
// bits against positions 0..j-1, so prefixes extend cleanly. The search
// maintains acc == prefix(best) at all times: finding a strictly smaller
// prefix lowers best to that prefix completed with all-ones, and leaves
// shrink it to exact values. Order <= 8 keeps the string inside 28 bits.
class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {
    total_bits_ = n_ * (n_ - 1) / 2;
    best_ = ones(total_bits_);
  }

  std::uint32_t run() {
    sig_.fill(0);
    descend(0, 0, 0);
    return best_;
  }

 private:
  static std::uint32_t ones(int k) { return k == 0 ? 0 : (std::uint32_t{1} << k) - 1; }

  void descend(int depth, std::uint32_t acc, int bits_used) {
    if (depth == n_) return;  // acc == best_ by the invariant
    struct Cand {
      std::uint32_t step;
      int vertex;
    };
    std::array<Cand, 8> cands;
    int m = 0;
    for (int v = 0; v < n_; ++v)
      if (!(used_ & (1u << v))) cands[static_cast<std::size_t>(m++)] = {sig_[static_cast<std::size_t>(v)], v};
    std::sort(cands.begin(), cands.begin() + m,
              [](const Cand& a, const Cand& b) {
                return a.step != b.step ? a.step < b.step : a.vertex < b.vertex;
              });

    const int bits2 = bits_used + depth;
    for (int k = 0; k < m; ++k) {
      const auto [step, v] = cands[static_cast<std::size_t>(k)];
      const std::uint32_t acc2 = (acc << depth) | step;
      const std::uint32_t best_prefix = best_ >> (total_bits_ - bits2);
      if (acc2 > best_prefix) break;  // candidates ascend; the rest are no better
      if (acc2 < best_prefix) {
        const int rem = total_bits_ - bits2;
        best_ = (acc2 << rem) | ones(rem);  // lower the ceiling, restoring the invariant
      }
      used_ |= 1u << v;
      for (int u = 0; u < n_; ++u) {
        if (!(used_ & (1u << u)))
          sig_[static_cast<std::size_t>(u)] =
              (sig_[static_cast<std::size_t>(u)] << 1) | (g_.adjacent(u, v) ? 1u : 0u);
      }
      descend(depth + 1, acc2, bits2);
      for (int u = 0; u < n_; ++u)
        if (!(used_ & (1u << u))) sig_[static_cast<std::size_t>(u)] >>= 1;
      used_ &= ~(1u << v);
    }
  }

  const Graph& g_;
  int n_;
  int total_bits_;
  std::uint32_t best_;
  std::uint32_t used_ = 0;
  std::array<std::uint32_t, 8> sig_{};
};

}  // namespace

std::string canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > 8) throw std::invalid_argument("canonical_form supports order <= 8 only");
  const std::uint32_t bits = CanonSearch(g).run();
  const int total = n * (n - 1) / 2;

  Graph canon(n);
  int t = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++t)
      if ((bits >> (total - 1 - t)) & 1u) canon.add_edge(i, j);
  return to_graph6(canon);
}

}  // namespace wcd

#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace wcd {

// Bitset adjacency rows cap the vertex count at 64.
inline constexpr int kMaxOrder = 64;

/// A set of vertex indices in [0, 64), stored as a single bitmask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  explicit constexpr VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
  }

  /// {0, 1, ..., n-1}
  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
  constexpr bool contains_all(VertexSet s) const { return (s.bits_ & ~bits_) == 0; }
  void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr int lowest() const { return std::countr_zero(bits_); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend bool operator==(VertexSet, VertexSet) = default;

  /// Lexicographic order on the sorted member lists, e.g. {0,1,2} < {0,2} < {0,2,5}... < {1}.
  friend bool lex_less(VertexSet a, VertexSet b) {
    std::uint64_t x = a.bits_, y = b.bits_;
    while (x && y) {
      int i = std::countr_zero(x), j = std::countr_zero(y);
      if (i != j) return i < j;
      x &= x - 1;
      y &= y - 1;
    }
    return y != 0;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Finite simple undirected graph on vertices 0..order-1 with bitset
/// adjacency rows. Values are cheap to copy; treat them as immutable once
/// built (all operations below are pure and return new graphs).
class Graph {
 public:
  explicit Graph(int order);
  static Graph from_edges(int order, const std::vector<std::pair<int, int>>& edges);
  static Graph from_edges(int order, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return order_; }
  bool adjacent(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1u; }
  VertexSet neighbors(int v) const { return VertexSet(adj_[static_cast<std::size_t>(v)]); }
  VertexSet closed_neighborhood(int v) const {
    return VertexSet(adj_[static_cast<std::size_t>(v)] | (std::uint64_t{1} << v));
  }
  int degree(int v) const { return std::popcount(adj_[static_cast<std::size_t>(v)]); }
  long edge_count() const;
  std::vector<std::pair<int, int>> edges() const;
  VertexSet vertices() const { return VertexSet::full(order_); }

  /// Adds the undirected edge uv. Throws on u == v or out-of-range indices.
  void add_edge(int u, int v);

  bool is_clique(VertexSet s) const;
  bool is_independent(VertexSet s) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.adj_ == b.adj_;
  }

 private:
  int order_;
  std::vector<std::uint64_t> adj_;
};

/// uv is an edge of the result iff u != v and uv is not an edge of g.
Graph complement(const Graph& g);

/// A derived graph together with the old-index -> new-index map of the
/// construction that produced it. Vertices that were merged map to their
/// survivor; vertices that were dropped map to -1.
struct RelabeledGraph {
  Graph graph;
  std::vector<int> old_to_new;
};

/// Contracts the clique c to a single vertex (the lowest-index member
/// survives). Remaining vertices are relabeled contiguously, preserving
/// their relative order. Throws if c is empty or does not induce a clique.
RelabeledGraph contract_clique(const Graph& g, VertexSet c);

/// Result of replacing a vertex by a clique: the new graph, the relabeling
/// of the original vertices (the inflated vertex maps to the first clique
/// vertex), and the freshly created clique.
struct InflatedGraph {
  Graph graph;
  std::vector<int> old_to_new;
  VertexSet clique;
};

/// Replaces vertex v by K_n fully joined to N(v); edges elsewhere are kept.
/// The n clique vertices take the highest indices of the result.
InflatedGraph inflate_vertex(const Graph& g, int v, int n);

/// Subgraph induced by w, vertices relabeled contiguously in index order.
/// Throws if w is empty or not contained in V(g).
RelabeledGraph induced_subgraph(const Graph& g, VertexSet w);

/// True iff N(u) ∪ {u} equals N(v) ∪ {v} (adjacent twins, or u == v).
bool closed_neighborhoods_equal(const Graph& g, int u, int v);

/// Complete isomorphism invariant for order <= 8: the graph6 encoding of
/// the relabeling whose upper-triangle bit string is lexicographically
/// smallest over all vertex permutations. Equal strings <=> isomorphic.
/// Throws for order > 8 (brute-force permutation search only).
std::string canonical_form(const Graph& g);

}  // namespace wcd

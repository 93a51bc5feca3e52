#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "gnm/bitset.hpp"

namespace gnm {

using Edge = std::pair<int, int>;

// Labeled simple graph on vertices 0..n-1 with dense bit-vector adjacency rows.
// Immutable once built; safe to share across threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int n() const noexcept { return n_; }
  std::int64_t m() const noexcept { return m_; }

  bool adjacent(int u, int v) const noexcept { return adj_[u].test(static_cast<std::size_t>(v)); }
  const Bitset& row(int v) const noexcept { return adj_[v]; }
  int degree(int v) const noexcept { return static_cast<int>(adj_[v].count()); }

  // Edges (u, v) with u < v, ordered by (u, v).
  std::vector<Edge> edges() const;

  // Checks symmetry, loop-freeness, and the cached edge count.
  bool invariants_hold() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  int n_ = 0;
  std::int64_t m_ = 0;
  std::vector<Bitset> adj_;
};

// Mutable construction helper; produces a Graph whose invariants hold.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);

  // Adds {u, v}; returns false if it was already present. Throws InputError
  // for out-of-range endpoints or a self-loop.
  bool add_edge(int u, int v);
  bool has_edge(int u, int v) const { return g_.adjacent(u, v); }
  int n() const noexcept { return g_.n(); }

  Graph build() &&;

 private:
  Graph g_;
};

Graph make_graph(int n, std::span<const Edge> edges);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

// Graph on |s| vertices; vertex i of the result is s[i] of g.
Graph induced_subgraph(const Graph& g, std::span<const int> s);

Graph complement(const Graph& g);

// Decodes a graph from a mask over the colexicographic pair order
// (0,1), (0,2), (1,2), (0,3), ...; bit i of mask set means pair i is an edge.
Graph graph_from_pair_mask(int n, std::uint64_t mask);

// Colexicographic pair index: pair {u, v} with u < v maps to v(v-1)/2 + u.
constexpr std::uint64_t pair_index(std::uint64_t u, std::uint64_t v) noexcept { return v * (v - 1) / 2 + u; }
Edge pair_from_index(std::uint64_t index);

bool is_independent(const Graph& g, std::span<const int> s);

// beta x gamma 0-1 matrix stored as dense rows.
class BipartiteMatrix {
 public:
  BipartiteMatrix() = default;
  BipartiteMatrix(int beta, int gamma);

  int beta() const noexcept { return beta_; }
  int gamma() const noexcept { return gamma_; }
  std::int64_t kappa() const noexcept { return kappa_; }

  bool get(int row, int col) const noexcept { return rows_[row].test(static_cast<std::size_t>(col)); }
  // Returns false if the cell was already set.
  bool set(int row, int col);
  const Bitset& row(int r) const noexcept { return rows_[r]; }
  int row_sum(int r) const noexcept { return static_cast<int>(rows_[r].count()); }

  std::vector<std::pair<int, int>> ones() const;
  bool invariants_hold() const;

  friend bool operator==(const BipartiteMatrix&, const BipartiteMatrix&) = default;

 private:
  int beta_ = 0;
  int gamma_ = 0;
  std::int64_t kappa_ = 0;
  std::vector<Bitset> rows_;
};

// Text fixtures: header "n m" then m lines "u v" (0-based). Matrices use the
// header "beta gamma kappa" and "row col" lines.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
BipartiteMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const BipartiteMatrix& b);

}  // namespace gnm

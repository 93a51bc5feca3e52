#include "gnm/graph.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "gnm/errors.hpp"

namespace gnm {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw InputError("vertex count must be non-negative");
  adj_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    for (std::size_t v = adj_[u].next(static_cast<std::size_t>(u) + 1); v < adj_[u].size();
         v = adj_[u].next(v + 1))
      out.emplace_back(u, static_cast<int>(v));
  }
  return out;
}

bool Graph::invariants_hold() const {
  if (adj_.size() != static_cast<std::size_t>(n_)) return false;
  std::int64_t bits = 0;
  for (int u = 0; u < n_; ++u) {
    if (adj_[u].size() != static_cast<std::size_t>(n_) || adj_[u].test(static_cast<std::size_t>(u))) return false;
    bits += static_cast<std::int64_t>(adj_[u].count());
    bool symmetric = true;
    adj_[u].for_each([&](std::size_t v) { symmetric = symmetric && adj_[v].test(static_cast<std::size_t>(u)); });
    if (!symmetric) return false;
  }
  return bits == 2 * m_;
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}

bool GraphBuilder::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_)
    throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} has an endpoint outside 0.." +
                     std::to_string(g_.n_ - 1));
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  if (g_.adj_[u].test(static_cast<std::size_t>(v))) return false;
  g_.adj_[u].set(static_cast<std::size_t>(v));
  g_.adj_[v].set(static_cast<std::size_t>(u));
  ++g_.m_;
  return true;
}

Graph GraphBuilder::build() && { return std::move(g_); }

Graph make_graph(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) b.add_edge(u, v);
  return std::move(b).build();
}

Graph cycle_graph(int n) {
  GraphBuilder b(n);
  for (int v = 0; v < n && n >= 3; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, std::span<const int> s) {
  const int k = static_cast<int>(s.size());
  for (int v : s)
    if (v < 0 || v >= g.n()) throw InputError("vertex " + std::to_string(v) + " is out of range");
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (s[i] != s[j] && g.adjacent(s[i], s[j])) b.add_edge(i, j);
  return std::move(b).build();
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.n());
  for (int v = 1; v < g.n(); ++v)
    for (int u = 0; u < v; ++u)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

Edge pair_from_index(std::uint64_t index) {
  auto v = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(index))) / 2.0);
  while (v * (v - 1) / 2 > index) --v;
  while (v * (v + 1) / 2 <= index) ++v;
  return {static_cast<int>(index - v * (v - 1) / 2), static_cast<int>(v)};
}

Graph graph_from_pair_mask(int n, std::uint64_t mask) {
  GraphBuilder b(n);
  std::uint64_t bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit)
      if ((mask >> bit) & 1U) b.add_edge(u, v);
  return std::move(b).build();
}

bool is_independent(const Graph& g, std::span<const int> s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j] || g.adjacent(s[i], s[j])) return false;
  return true;
}

BipartiteMatrix::BipartiteMatrix(int beta, int gamma) : beta_(beta), gamma_(gamma) {
  if (beta < 0 || gamma < 0) throw InputError("matrix dimensions must be non-negative");
  rows_.assign(static_cast<std::size_t>(beta), Bitset(static_cast<std::size_t>(gamma)));
}

bool BipartiteMatrix::set(int row, int col) {
  if (row < 0 || row >= beta_ || col < 0 || col >= gamma_)
    throw InputError("cell (" + std::to_string(row) + "," + std::to_string(col) + ") is out of range");
  if (rows_[row].test(static_cast<std::size_t>(col))) return false;
  rows_[row].set(static_cast<std::size_t>(col));
  ++kappa_;
  return true;
}

std::vector<std::pair<int, int>> BipartiteMatrix::ones() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(kappa_));
  for (int r = 0; r < beta_; ++r) rows_[r].for_each([&](std::size_t c) { out.emplace_back(r, static_cast<int>(c)); });
  return out;
}

bool BipartiteMatrix::invariants_hold() const {
  std::int64_t bits = 0;
  for (const auto& row : rows_) bits += static_cast<std::int64_t>(row.count());
  return bits == kappa_ && kappa_ >= 0 && kappa_ <= static_cast<std::int64_t>(beta_) * gamma_;
}

namespace {

template <typename T>
T read_value(std::istream& in, const char* what) {
  T value{};
  if (!(in >> value)) throw InputError(std::string("malformed fixture: expected ") + what);
  return value;
}

}  // namespace

Graph read_graph(std::istream& in) {
  const auto n = read_value<long long>(in, "vertex count");
  const auto m = read_value<long long>(in, "edge count");
  if (n < 0 || m < 0) throw InputError("malformed fixture: negative header value");
  GraphBuilder b(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    const auto u = read_value<long long>(in, "edge endpoint");
    const auto v = read_value<long long>(in, "edge endpoint");
    if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("edge endpoint out of range in fixture");
    b.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return std::move(b).build();
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

BipartiteMatrix read_matrix(std::istream& in) {
  const auto beta = read_value<long long>(in, "row count");
  const auto gamma = read_value<long long>(in, "column count");
  const auto kappa = read_value<long long>(in, "ones count");
  if (beta < 0 || gamma < 0 || kappa < 0) throw InputError("malformed fixture: negative header value");
  BipartiteMatrix b(static_cast<int>(beta), static_cast<int>(gamma));
  for (long long i = 0; i < kappa; ++i) {
    const auto r = read_value<long long>(in, "row index");
    const auto c = read_value<long long>(in, "column index");
    if (r < 0 || c < 0 || r >= beta || c >= gamma) throw InputError("cell out of range in fixture");
    b.set(static_cast<int>(r), static_cast<int>(c));
  }
  return b;
}

void write_matrix(std::ostream& out, const BipartiteMatrix& b) {
  out << b.beta() << ' ' << b.gamma() << ' ' << b.kappa() << '\n';
  for (auto [r, c] : b.ones()) out << r << ' ' << c << '\n';
}

}  // namespace gnm

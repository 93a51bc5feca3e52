#include "gnm/extended.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "gnm/errors.hpp"

namespace gnm {

namespace {

// Structure of G[K]: isolated vertices, non-trivial components, acyclicity.
struct InducedShape {
  Bitset in_k;
  Bitset isolated;
  Bitset non_isolated;
  std::vector<Bitset> components;  // non-trivial components only
  bool acyclic = true;
};

InducedShape induced_shape(const Graph& g, std::span<const int> K) {
  const auto n = static_cast<std::size_t>(g.n());
  InducedShape s{Bitset(n), Bitset(n), Bitset(n), {}, true};
  for (int v : K) s.in_k.set(static_cast<std::size_t>(v));
  std::size_t twice_edges = 0;
  for (int v : K) {
    const std::size_t d = g.row(v).intersection_count(s.in_k);
    twice_edges += d;
    (d == 0 ? s.isolated : s.non_isolated).set(static_cast<std::size_t>(v));
  }
  Bitset unvisited = s.non_isolated;
  while (unvisited.any()) {
    Bitset comp(n);
    Bitset frontier(n);
    frontier.set(unvisited.first());
    while (frontier.any()) {
      comp |= frontier;
      unvisited.subtract(frontier);
      Bitset grown(n);
      frontier.for_each([&](std::size_t v) { grown |= g.row(static_cast<int>(v)); });
      grown &= unvisited;
      frontier = std::move(grown);
    }
    s.components.push_back(std::move(comp));
  }
  const std::size_t pieces = s.isolated.count() + s.components.size();
  s.acyclic = twice_edges / 2 + pieces == K.size();
  return s;
}

// Condition on outside vertices. `targets` are the vertices counted as
// isolated; with allow_component a vertex may instead see two vertices of a
// single non-trivial component.
bool outside_rule_holds(const Graph& g, const InducedShape& s, const Bitset& targets, bool allow_component) {
  for (int v = 0; v < g.n(); ++v) {
    if (s.in_k.test(static_cast<std::size_t>(v))) continue;
    const Bitset& row = g.row(v);
    if (row.intersection_count(targets) >= 2) continue;
    bool ok = false;
    if (allow_component)
      for (const auto& comp : s.components)
        if (row.intersection_count(comp) >= 2) {
          ok = true;
          break;
        }
    if (!ok) return false;
  }
  return true;
}

Bitset matched_vertices(const Graph& g, const CandidatePair& c) {
  Bitset mv(static_cast<std::size_t>(g.n()));
  for (auto [a, b] : c.M) {
    mv.set(static_cast<std::size_t>(a));
    mv.set(static_cast<std::size_t>(b));
  }
  return mv;
}

bool matching_present(const Graph& g, const CandidatePair& c) {
  return std::all_of(c.M.begin(), c.M.end(), [&](const Edge& e) { return g.adjacent(e.first, e.second); });
}

std::vector<int> to_vector(const Bitset& b) {
  std::vector<int> out;
  b.for_each([&](std::size_t v) { out.push_back(static_cast<int>(v)); });
  return out;
}

Edge ordered(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// ---- 64-bit mask kernels for exhaustive enumeration on small graphs ----

using Mask = std::uint64_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.n()), 0);
  for (int v = 0; v < g.n(); ++v) g.row(v).for_each([&](std::size_t u) { adj[v] |= Mask{1} << u; });
  return adj;
}

Mask non_isolated_in(const std::vector<Mask>& adj, Mask k) {
  Mask d = 0;
  for (Mask rest = k; rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    if (adj[v] & k) d |= Mask{1} << v;
  }
  return d;
}

// Number of perfect matchings of the subgraph induced on `d`; stops once
// `cap` is reached.
std::uint64_t perfect_matchings(const std::vector<Mask>& adj, Mask d, std::uint64_t cap = ~std::uint64_t{0}) {
  if (!d) return 1;
  const int v = std::countr_zero(d);
  const Mask rest = d & (d - 1);
  std::uint64_t total = 0;
  for (Mask cand = adj[v] & rest; cand && total < cap; cand &= cand - 1) {
    const int u = std::countr_zero(cand);
    total += perfect_matchings(adj, rest & ~(Mask{1} << u), cap - total);
  }
  return total;
}

bool first_perfect_matching(const std::vector<Mask>& adj, Mask d, std::vector<Edge>& out) {
  if (!d) return true;
  const int v = std::countr_zero(d);
  const Mask rest = d & (d - 1);
  for (Mask cand = adj[v] & rest; cand; cand &= cand - 1) {
    const int u = std::countr_zero(cand);
    out.push_back(ordered(v, u));
    if (first_perfect_matching(adj, rest & ~(Mask{1} << u), out)) return true;
    out.pop_back();
  }
  return false;
}

struct MaskShape {
  Mask isolated = 0;
  Mask components[32] = {};
  int num_components = 0;
  bool acyclic = true;
};

MaskShape mask_shape(const std::vector<Mask>& adj, Mask k, Mask d) {
  MaskShape s;
  s.isolated = k & ~d;
  int twice_edges = 0;
  for (Mask rest = d; rest; rest &= rest - 1) twice_edges += std::popcount(adj[std::countr_zero(rest)] & k);
  Mask unvisited = d;
  while (unvisited) {
    Mask comp = 0;
    Mask frontier = unvisited & (~unvisited + 1);
    while (frontier) {
      comp |= frontier;
      unvisited &= ~frontier;
      Mask grown = 0;
      for (Mask f = frontier; f; f &= f - 1) grown |= adj[std::countr_zero(f)];
      frontier = grown & unvisited;
    }
    s.components[s.num_components++] = comp;
  }
  s.acyclic = twice_edges / 2 + std::popcount(s.isolated) + s.num_components == std::popcount(k);
  return s;
}

// Returns {two-isolated rule holds, isolated-or-component rule holds}.
std::pair<bool, bool> mask_outside_rules(const std::vector<Mask>& adj, int n, Mask k, const MaskShape& s) {
  bool iso_rule = true;
  bool comp_rule = true;
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  for (Mask out = all & ~k; out; out &= out - 1) {
    const Mask row = adj[std::countr_zero(out)];
    if (std::popcount(row & s.isolated) >= 2) continue;
    iso_rule = false;
    bool seen = false;
    for (int i = 0; i < s.num_components && !seen; ++i) seen = std::popcount(row & s.components[i]) >= 2;
    if (!seen) {
      comp_rule = false;
      break;
    }
  }
  return {iso_rule, comp_rule};
}

std::uint64_t binomial_u64(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

void validate_pair(const Graph& g, const CandidatePair& c) {
  Bitset seen(static_cast<std::size_t>(g.n()));
  for (int v : c.K) {
    if (v < 0 || v >= g.n()) throw InputError("vertex " + std::to_string(v) + " in K is out of range");
    if (seen.test(static_cast<std::size_t>(v))) throw InputError("K repeats vertex " + std::to_string(v));
    seen.set(static_cast<std::size_t>(v));
  }
  Bitset used(static_cast<std::size_t>(g.n()));
  for (auto [a, b] : c.M) {
    if (a < 0 || b < 0 || a >= g.n() || b >= g.n() || a == b) throw InputError("malformed matching pair");
    if (!seen.test(static_cast<std::size_t>(a)) || !seen.test(static_cast<std::size_t>(b)))
      throw InputError("matching pair has an endpoint outside K");
    if (used.test(static_cast<std::size_t>(a)) || used.test(static_cast<std::size_t>(b)))
      throw InputError("M is not a matching");
    used.set(static_cast<std::size_t>(a));
    used.set(static_cast<std::size_t>(b));
  }
  if (c.matching_size() > c.order()) throw InputError("matching size exceeds order");
}

bool is_extended_ind_set(const Graph& g, const CandidatePair& c) {
  validate_pair(g, c);
  if (!matching_present(g, c)) return false;
  const InducedShape s = induced_shape(g, c.K);
  if (!s.acyclic) return false;
  // M covers only non-isolated vertices (its pairs are edges), so equality of
  // the two sets means M is perfect on them.
  if (!(matched_vertices(g, c) == s.non_isolated)) return false;
  return outside_rule_holds(g, s, s.isolated, true);
}

VariableFlags classify_pair(const Graph& g, const CandidatePair& c) {
  validate_pair(g, c);
  VariableFlags f;
  if (!matching_present(g, c)) return f;
  const InducedShape s = induced_shape(g, c.K);
  Bitset designated = s.in_k;
  designated.subtract(matched_vertices(g, c));
  // Condition 1: the designated vertices K \ V(M) carry no edges of G[K].
  bool clean = true;
  designated.for_each([&](std::size_t v) { clean = clean && !g.row(static_cast<int>(v)).intersects(s.in_k); });
  if (!clean) return f;
  f.U = true;
  const bool iso_rule = outside_rule_holds(g, s, designated, false);
  const bool comp_rule = iso_rule || outside_rule_holds(g, s, designated, true);
  f.X = iso_rule;
  f.W = iso_rule && s.acyclic;
  f.Z = comp_rule;
  f.Y = comp_rule && s.acyclic;
  return f;
}

VariableCounts count_variables(const Graph& g, int k, int r) {
  const int n = g.n();
  if (r < 0 || k < r) throw InputError("need 0 <= r <= k");
  if (n > kCountMaxVertices)
    throw InputError("count_variables supports at most " + std::to_string(kCountMaxVertices) + " vertices");
  const int size = k + r;
  VariableCounts counts;
  if (size > n) return counts;
  if (binomial_u64(n, size) > kCountMaxSubsets) throw InputError("too many vertex subsets to enumerate");
  const auto adj = adjacency_masks(g);
  auto visit = [&](Mask kmask) {
    const Mask d = non_isolated_in(adj, kmask);
    // Every M edge makes its endpoints non-isolated and condition 1 forbids
    // any other non-isolated vertex, so V(M) is exactly d.
    if (std::popcount(d) != 2 * r) return;
    const std::uint64_t matchings = perfect_matchings(adj, d);
    if (!matchings) return;
    const MaskShape s = mask_shape(adj, kmask, d);
    const auto [iso_rule, comp_rule] = mask_outside_rules(adj, n, kmask, s);
    counts.U += matchings;
    if (iso_rule) counts.X += matchings;
    if (iso_rule && s.acyclic) counts.W += matchings;
    if (comp_rule) counts.Z += matchings;
    if (comp_rule && s.acyclic) counts.Y += matchings;
  };
  if (size == 0) {
    visit(0);
    return counts;
  }
  // Gosper's hack over all size-element subsets of n.
  Mask kmask = (Mask{1} << size) - 1;
  const Mask limit = Mask{1} << n;
  while (kmask < limit) {
    visit(kmask);
    const Mask low = kmask & (~kmask + 1);
    const Mask ripple = kmask + low;
    kmask = (((ripple ^ kmask) >> 2) / low) | ripple;
  }
  return counts;
}

CandidatePair extend_from_mis(const Graph& g, std::span<const int> S) {
  for (int v : S)
    if (v < 0 || v >= g.n()) throw InputError("vertex " + std::to_string(v) + " is out of range");
  if (!is_independent(g, S)) throw InputError("S is not an independent set");
  CandidatePair c;
  c.K.assign(S.begin(), S.end());
  std::sort(c.K.begin(), c.K.end());
  while (true) {
    const InducedShape s = induced_shape(g, c.K);
    int violator = -1;
    for (int v = 0; v < g.n() && violator < 0; ++v) {
      if (s.in_k.test(static_cast<std::size_t>(v))) continue;
      const Bitset& row = g.row(v);
      if (row.intersection_count(s.isolated) >= 2) continue;
      const bool covered = std::any_of(s.components.begin(), s.components.end(),
                                       [&](const Bitset& comp) { return row.intersection_count(comp) >= 2; });
      if (!covered) violator = v;
    }
    if (violator < 0) break;
    const Bitset& row = g.row(violator);
    const std::size_t w = (row & s.isolated).first();
    if (w < row.size()) {
      c.K.insert(std::upper_bound(c.K.begin(), c.K.end(), violator), violator);
      c.M.push_back(ordered(violator, static_cast<int>(w)));
      continue;
    }
    // No isolated neighbor: the violator plus the isolated vertices plus, from
    // each tree, the side of its bipartition avoiding the violator's (at most
    // one) neighbor there form a larger independent set.
    std::vector<int> larger = to_vector(s.isolated);
    larger.push_back(violator);
    for (const auto& comp : s.components) {
      // 2-color the tree from its lowest vertex.
      const auto n = static_cast<std::size_t>(g.n());
      Bitset side_a(n), side_b(n), frontier(n), seen(n);
      frontier.set(comp.first());
      bool on_a = true;
      while (frontier.any()) {
        (on_a ? side_a : side_b) |= frontier;
        seen |= frontier;
        Bitset grown(n);
        frontier.for_each([&](std::size_t v) { grown |= g.row(static_cast<int>(v)); });
        grown &= comp;
        grown.subtract(seen);
        frontier = std::move(grown);
        on_a = !on_a;
      }
      const Bitset& pick = row.intersects(side_a) ? side_b : side_a;
      pick.for_each([&](std::size_t v) { larger.push_back(static_cast<int>(v)); });
    }
    std::sort(larger.begin(), larger.end());
    throw NotMaximum(std::move(larger));
  }
  std::sort(c.M.begin(), c.M.end());
  return c;
}

ExtendedOrderResult max_extended_order(const Graph& g, ExtendedMode mode, AlphaOptions options) {
  if (mode == ExtendedMode::construct) {
    const AlphaResult a = alpha_exact(g, options);
    ExtendedOrderResult out;
    out.witness = extend_from_mis(g, a.witness);
    out.order = out.witness.order();
    return out;
  }
  const int n = g.n();
  if (n > kExtendedBruteMaxVertices)
    throw InputError("brute-force extended search supports at most " + std::to_string(kExtendedBruteMaxVertices) +
                     " vertices");
  const auto adj = adjacency_masks(g);
  int best_order = -1;
  Mask best_k = 0;
  Mask best_d = 0;
  for (Mask kmask = 0; kmask < (Mask{1} << n); ++kmask) {
    const int size = std::popcount(kmask);
    const Mask d = non_isolated_in(adj, kmask);
    const int order = size - std::popcount(d) / 2;
    if (order <= best_order || std::popcount(d) % 2) continue;
    const MaskShape s = mask_shape(adj, kmask, d);
    if (!s.acyclic || !perfect_matchings(adj, d, 1)) continue;
    if (!mask_outside_rules(adj, n, kmask, s).second) continue;
    best_order = order;
    best_k = kmask;
    best_d = d;
  }
  ExtendedOrderResult out;
  out.order = best_order;
  for (Mask rest = best_k; rest; rest &= rest - 1) out.witness.K.push_back(std::countr_zero(rest));
  first_perfect_matching(adj, best_d, out.witness.M);
  std::sort(out.witness.M.begin(), out.witness.M.end());
  return out;
}

std::optional<int> augmented_order(const Graph& g, std::span<const int> K) {
  const auto n = static_cast<std::size_t>(g.n());
  Bitset in_k(n);
  for (int v : K) {
    if (v < 0 || v >= g.n()) throw InputError("vertex " + std::to_string(v) + " is out of range");
    in_k.set(static_cast<std::size_t>(v));
  }
  if (in_k.count() != K.size()) throw InputError("K repeats a vertex");
  std::size_t twice_edges = 0;
  for (int v : K) {
    const std::size_t d = g.row(v).intersection_count(in_k);
    if (d > 1) return std::nullopt;
    twice_edges += d;
  }
  for (int v = 0; v < g.n(); ++v)
    if (!in_k.test(static_cast<std::size_t>(v)) && g.row(v).intersection_count(in_k) < 2) return std::nullopt;
  return static_cast<int>(K.size() - twice_edges / 2);
}

std::optional<int> max_augmented_order(const Graph& g) {
  const int n = g.n();
  if (n > kExtendedBruteMaxVertices)
    throw InputError("brute-force augmented search supports at most " + std::to_string(kExtendedBruteMaxVertices) +
                     " vertices");
  const auto adj = adjacency_masks(g);
  const Mask all = (Mask{1} << n) - 1;
  std::optional<int> best;
  for (Mask kmask = 0; kmask <= all; ++kmask) {
    bool ok = true;
    int twice_edges = 0;
    for (Mask rest = kmask; rest && ok; rest &= rest - 1) {
      const int d = std::popcount(adj[std::countr_zero(rest)] & kmask);
      ok = d <= 1;
      twice_edges += d;
    }
    for (Mask rest = all & ~kmask; rest && ok; rest &= rest - 1) ok = std::popcount(adj[std::countr_zero(rest)] & kmask) >= 2;
    if (!ok) continue;
    const int order = std::popcount(kmask) - twice_edges / 2;
    if (!best || order > *best) best = order;
  }
  return best;
}

}  // namespace gnm

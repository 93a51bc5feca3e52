#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gnm/alpha.hpp"
#include "gnm/graph.hpp"

namespace gnm {

// A vertex set K with a matching M on K. Pairs in M are stored (low, high).
// Order k = |K| - |M|, matching size r = |M|.
struct CandidatePair {
  std::vector<int> K;
  std::vector<Edge> M;

  int order() const noexcept { return static_cast<int>(K.size()) - static_cast<int>(M.size()); }
  int matching_size() const noexcept { return static_cast<int>(M.size()); }

  friend bool operator==(const CandidatePair&, const CandidatePair&) = default;
};

// Throws InputError unless K has distinct in-range vertices, every M pair lies
// in K, M is vertex-disjoint, and 0 <= r <= k.
void validate_pair(const Graph& g, const CandidatePair& c);

// Flags for the five counting variables. Implications: W => X, W => Y,
// X => Z, Y => Z, Z => U.
struct VariableFlags {
  bool U = false;
  bool W = false;
  bool X = false;
  bool Y = false;
  bool Z = false;

  bool implications_hold() const noexcept {
    return (!W || (X && Y)) && (!X || Z) && (!Y || Z) && (!Z || U);
  }
  friend bool operator==(const VariableFlags&, const VariableFlags&) = default;
};

struct VariableCounts {
  std::uint64_t U = 0;
  std::uint64_t W = 0;
  std::uint64_t X = 0;
  std::uint64_t Y = 0;
  std::uint64_t Z = 0;

  friend bool operator==(const VariableCounts&, const VariableCounts&) = default;
};

// Extended independent set test:
//   1. G[K] is acyclic and M is a perfect matching on its non-isolated vertices
//      (M pairs must be edges of g);
//   2. every vertex outside K sees at least two isolated vertices of G[K], or
//      at least two vertices of one connected component of G[K].
// A pair in M that is not an edge of g yields false.
bool is_extended_ind_set(const Graph& g, const CandidatePair& c);

VariableFlags classify_pair(const Graph& g, const CandidatePair& c);

// Exact U/W/X/Y/Z counts over every (K, M) with |K| = k + r and |M| = r.
// Requires n <= kCountMaxVertices and C(n, k + r) <= kCountMaxSubsets.
VariableCounts count_variables(const Graph& g, int k, int r);

inline constexpr int kCountMaxVertices = 24;
inline constexpr std::uint64_t kCountMaxSubsets = 4'000'000;

// Grows a maximum independent set S into an extended independent set of the
// same order. Violating outside vertices are processed lowest index first and
// matched to their lowest-index isolated neighbor. Throws NotMaximum (with an
// independent set of size |S| + 1) if a violator has no isolated neighbor,
// and InputError if S is not independent.
CandidatePair extend_from_mis(const Graph& g, std::span<const int> S);

enum class ExtendedMode { brute, construct };

struct ExtendedOrderResult {
  int order = 0;
  CandidatePair witness;
};

// brute: scans every vertex subset (n <= kExtendedBruteMaxVertices).
// construct: alpha_exact followed by extend_from_mis.
ExtendedOrderResult max_extended_order(const Graph& g, ExtendedMode mode, AlphaOptions options = {});

inline constexpr int kExtendedBruteMaxVertices = 22;

// Order of K as an augmented independent set (G[K] is a matching plus isolated
// vertices and every outside vertex has at least two neighbors in K), or
// nullopt when K does not qualify.
std::optional<int> augmented_order(const Graph& g, std::span<const int> K);
inline bool is_augmented_ind_set(const Graph& g, std::span<const int> K) { return augmented_order(g, K).has_value(); }

// Largest augmented order over all vertex subsets (n <= kExtendedBruteMaxVertices);
// nullopt when no subset qualifies.
std::optional<int> max_augmented_order(const Graph& g);

}  // namespace gnm

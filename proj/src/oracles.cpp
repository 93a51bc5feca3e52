#include "gnm/oracles.hpp"

#include <gmpxx.h>

#include <bit>
#include <cmath>
#include <map>

#include "gnm/errors.hpp"

namespace gnm::oracle {

namespace {

mpz_class binomial(std::int64_t a, std::int64_t b) {
  mpz_class out;
  if (b < 0 || a < 0 || b > a) return out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

}  // namespace

std::vector<std::uint64_t> min2_counts_bruteforce(int beta, int gamma) {
  if (beta < 1 || gamma < 1 || beta * gamma > 24) throw InputError("need beta, gamma >= 1 and beta*gamma <= 24");
  const int cells = beta * gamma;
  const std::uint32_t row_mask = (std::uint32_t{1} << gamma) - 1;
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(cells + 1), 0);
  for (std::uint32_t mat = 0; mat < (std::uint32_t{1} << cells); ++mat) {
    bool ok = true;
    for (int i = 0; i < beta && ok; ++i) ok = std::popcount((mat >> (i * gamma)) & row_mask) >= 2;
    if (ok) ++counts[static_cast<std::size_t>(std::popcount(mat))];
  }
  return counts;
}

std::string min2_count_recursive(int beta, int gamma, int kappa) {
  std::map<std::pair<int, int>, mpz_class> memo;
  auto rec = [&](auto&& self, int b, int k) -> mpz_class {
    if (b == 0) return k == 0 ? 1 : 0;
    if (k < 2 * b || k > b * gamma) return 0;
    const auto key = std::make_pair(b, k);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    mpz_class sum = 0;
    for (int d = 2; d <= gamma && d <= k; ++d) sum += binomial(gamma, d) * self(self, b - 1, k - d);
    memo.emplace(key, sum);
    return sum;
  };
  return rec(rec, beta, kappa).get_str();
}

namespace {

// Fixed pair: K = {0, ..., k+r-1}, M = {01, 23, ..., (2r-2)(2r-1)}; the
// designated vertices are 2r .. k+r-1.
struct FixedPair {
  int n, k, r;
  std::uint32_t K, D, outside;

  FixedPair(int n_, int k_, int r_) : n(n_), k(k_), r(r_) {
    K = (std::uint32_t{1} << (k + r)) - 1;
    D = K & ~((std::uint32_t{1} << (2 * r)) - 1);
    outside = ((std::uint32_t{1} << n) - 1) & ~K;
  }

  // adj[v] is the neighbor mask of v.
  bool passes_u(const std::uint32_t* adj) const {
    for (int i = 0; i < r; ++i)
      if (!((adj[2 * i] >> (2 * i + 1)) & 1U)) return false;
    for (int v = 2 * r; v < k + r; ++v)
      if (adj[v] & K) return false;
    return true;
  }

  bool passes_x(const std::uint32_t* adj) const {
    for (int v = k + r; v < n; ++v)
      if (std::popcount(adj[v] & D) < 2) return false;
    return true;
  }
};

void decode(int n, std::uint64_t mask, std::uint32_t* adj) {
  for (int v = 0; v < n; ++v) adj[v] = 0;
  int idx = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++idx)
      if ((mask >> idx) & 1U) {
        adj[u] |= std::uint32_t{1} << v;
        adj[v] |= std::uint32_t{1} << u;
      }
}

void require_small(int n, int k, int r, int limit) {
  if (n < 1 || n > limit) throw InputError("exhaustive moments need 1 <= n <= " + std::to_string(limit));
  if (r < 0 || k < r || k + r > n) throw InputError("need 0 <= r <= k and k + r <= n");
}

}  // namespace

MomentTable exact_x_moments(int n, int k, int r) {
  require_small(n, k, r, 8);
  const int pairs = n * (n - 1) / 2;
  MomentTable t;
  t.n = n;
  t.k = k;
  t.r = r;
  t.graphs.assign(static_cast<std::size_t>(pairs + 1), 0);
  t.pair_u = t.graphs;
  t.pair_x = t.graphs;
  const FixedPair fp(n, k, r);
  std::uint32_t adj[32];
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    const auto m = static_cast<std::size_t>(std::popcount(mask));
    ++t.graphs[m];
    decode(n, mask, adj);
    if (!fp.passes_u(adj)) continue;
    ++t.pair_u[m];
    if (fp.passes_x(adj)) ++t.pair_x[m];
  }
  // N(k, r) = C(n, k+r) (k+r)! / ((k-r)! 2^r r!) as an exact integer.
  mpz_class N = binomial(n, k + r);
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k + r));
  N *= f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k - r));
  N /= f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(r));
  N /= f;
  N >>= static_cast<unsigned long>(r);
  t.expectation.resize(t.graphs.size());
  for (std::size_t m = 0; m < t.graphs.size(); ++m)
    t.expectation[m] = mpq_class(N * t.pair_x[m], t.graphs[m]).get_d();
  return t;
}

std::vector<double> exact_x_moments_full(int n, int k, int r) {
  require_small(n, k, r, 6);
  const int pairs = n * (n - 1) / 2;
  std::vector<std::uint64_t> graphs(static_cast<std::size_t>(pairs + 1), 0);
  std::vector<std::uint64_t> hits(graphs.size(), 0);
  std::uint32_t adj[32];
  std::vector<int> K;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    const auto m = static_cast<std::size_t>(std::popcount(mask));
    ++graphs[m];
    decode(n, mask, adj);
    for (std::uint32_t kset = 0; kset < (std::uint32_t{1} << n); ++kset) {
      if (std::popcount(kset) != k + r) continue;
      K.clear();
      for (int v = 0; v < n; ++v)
        if ((kset >> v) & 1U) K.push_back(v);
      // Every way to pick 2r matched vertices and pair them up.
      auto pick = [&](auto&& self, std::uint32_t left, std::uint32_t matched, int todo) -> void {
        if (todo == 0) {
          const std::uint32_t D = kset & ~matched;
          for (std::uint32_t w = D; w; w &= w - 1)
            if (adj[std::countr_zero(w)] & kset) return;
          for (int v = 0; v < n; ++v)
            if (!((kset >> v) & 1U) && std::popcount(adj[v] & D) < 2) return;
          ++hits[m];
          return;
        }
        // Lowest unmatched candidate is either matched now or skipped for good.
        if (!left) return;
        const int a = std::countr_zero(left);
        const std::uint32_t rest = left & (left - 1);
        for (std::uint32_t w = rest; w; w &= w - 1) {
          const int b = std::countr_zero(w);
          if ((adj[a] >> b) & 1U)
            self(self, rest & ~(std::uint32_t{1} << b), matched | (std::uint32_t{1} << a) | (std::uint32_t{1} << b), todo - 1);
        }
        self(self, rest, matched, todo);
      };
      pick(pick, kset, 0, r);
    }
  }
  std::vector<double> out(graphs.size());
  for (std::size_t m = 0; m < graphs.size(); ++m) out[m] = static_cast<double>(hits[m]) / static_cast<double>(graphs[m]);
  return out;
}

namespace {

void require_hyper(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a < 0 || b < 0 || c < 0 || b > a || c > a) throw InputError("need 0 <= b, c <= a");
}

}  // namespace

double hyper_upper_tail(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t x) {
  require_hyper(a, b, c);
  mpz_class num = 0;
  for (std::int64_t i = std::max<std::int64_t>(x, 0); i <= std::min(b, c); ++i) num += binomial(c, i) * binomial(a - c, b - i);
  return mpq_class(num, binomial(a, b)).get_d();
}

double hyper_lower_tail(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t x) {
  require_hyper(a, b, c);
  mpz_class num = 0;
  for (std::int64_t i = 0; i <= std::min({x, b, c}); ++i) num += binomial(c, i) * binomial(a - c, b - i);
  return mpq_class(num, binomial(a, b)).get_d();
}

double janson_exact_no_low_degree(int N, int t, double p) {
  if (N < 1 || N > 4) throw InputError("exhaustive Janson check needs 1 <= N <= 4");
  if (t < 0 || t > 2 * N) throw InputError("need 0 <= t <= 2N");
  if (!(p >= 0 && p <= 1)) throw InputError("p must lie in [0, 1]");
  const int cells = N * N;
  // Degree profile of every graph, then P(X = 0) for each T.
  std::vector<long double> weight(std::size_t{1} << cells);
  std::vector<std::uint32_t> low(weight.size());  // vertices of degree <= 1, rows then columns
  for (std::uint32_t mat = 0; mat < (std::uint32_t{1} << cells); ++mat) {
    const int e = std::popcount(mat);
    weight[mat] = std::pow(static_cast<long double>(p), e) * std::pow(1.0L - p, cells - e);
    std::uint32_t lowmask = 0;
    for (int i = 0; i < N; ++i) {
      int row = 0;
      int col = 0;
      for (int j = 0; j < N; ++j) {
        row += (mat >> (i * N + j)) & 1U;
        col += (mat >> (j * N + i)) & 1U;
      }
      if (row <= 1) lowmask |= std::uint32_t{1} << i;
      if (col <= 1) lowmask |= std::uint32_t{1} << (N + i);
    }
    low[mat] = lowmask;
  }
  long double worst = 0;
  for (std::uint32_t T = 0; T < (std::uint32_t{1} << (2 * N)); ++T) {
    if (std::popcount(T) != t) continue;
    long double prob = 0;
    for (std::size_t mat = 0; mat < weight.size(); ++mat)
      if (!(low[mat] & ~T)) prob += weight[mat];
    worst = std::max(worst, prob);
  }
  return static_cast<double>(worst);
}

}  // namespace gnm::oracle

#include "gnm/alpha.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "gnm/errors.hpp"

namespace gnm {

namespace {

// Smallest-last order of the complement: repeatedly peel a vertex of minimum
// remaining complement degree (lowest index on ties); the result lists the
// last-peeled vertex first.
std::vector<int> smallest_last_order(const std::vector<Bitset>& comp) {
  const int n = static_cast<int>(comp.size());
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(comp[v].count());
  std::vector<bool> removed(static_cast<std::size_t>(n), false);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
    removed[best] = true;
    order.push_back(best);
    comp[best].for_each([&](std::size_t u) {
      if (!removed[u]) --deg[u];
    });
  }
  std::reverse(order.begin(), order.end());
  return order;
}

// Greedy maximal independent set by minimum remaining degree.
std::vector<int> greedy_independent_set(const Graph& g) {
  const int n = g.n();
  Bitset alive(static_cast<std::size_t>(n));
  alive.set_all();
  std::vector<int> out;
  while (alive.any()) {
    int best = -1;
    std::size_t best_deg = 0;
    alive.for_each([&](std::size_t v) {
      const std::size_t d = g.row(static_cast<int>(v)).intersection_count(alive);
      if (best < 0 || d < best_deg) {
        best = static_cast<int>(v);
        best_deg = d;
      }
    });
    out.push_back(best);
    alive.reset(static_cast<std::size_t>(best));
    alive.subtract(g.row(best));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Maximum clique in the complement, in position space. Sets are flat arrays of
// 64-bit words and all scratch is preallocated, so the hot path never
// allocates.
//
// Bounding at each node: color the candidates greedily one class at a time
// (each class is a clique of the graph). The first best - depth - 1 classes
// are never branched on. A vertex that would open a later class is first
// moved into a lower class by swapping out its single conflicting member, and
// failing that is tested by unit propagation: if assuming it alongside one
// vertex from each lower class empties some class, it is absorbed and the
// classes in the conflict are retired from further tests.
class CliqueSearch {
 public:
  using Word = std::uint64_t;

  CliqueSearch(const Graph& g, std::uint64_t budget)
      : g_(g), n_(g.n()), words_((g.n() + 63) / 64), budget_(budget) {
    std::vector<Bitset> comp(static_cast<std::size_t>(n_), Bitset(static_cast<std::size_t>(n_)));
    for (int v = 0; v < n_; ++v) {
      comp[v].set_all();
      comp[v].subtract(g.row(v));
      comp[v].reset(static_cast<std::size_t>(v));
    }
    order_ = smallest_last_order(comp);
    std::vector<int> position(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) position[order_[i]] = i;
    const auto n = static_cast<std::size_t>(n_);
    const auto w = static_cast<std::size_t>(words_);
    comp_.assign(n * w, 0);
    graph_.assign(n * w, 0);
    for (int i = 0; i < n_; ++i) {
      comp[order_[i]].for_each([&](std::size_t u) { set_bit(comp_row(i), static_cast<std::size_t>(position[u])); });
      g.row(order_[i]).for_each([&](std::size_t u) { set_bit(graph_row(i), static_cast<std::size_t>(position[u])); });
    }
    candidates_.assign((n + 1) * w, 0);
    verts_.assign((n + 1) * n, 0);
    colors_.assign((n + 1) * n, 0);
    classes_.assign((n + 1) * w, 0);
    reasons_.assign((n + 1) * w, 0);
    class_of_.assign(n, 0);
    class_size_.assign(n + 1, 0);
    work_size_.assign(n + 1, 0);
    retired_.assign(n + 1, 0);
    units_.reserve(2 * n + 2);
    unit_reason_.assign((2 * n + 2) * w, 0);
    touched_.reserve(n + 1);
    hits_.assign(n + 1, 0);
    hits_w_.assign(n + 1, 0);
    seen_.assign(n + 1, 0);
    seen_w_.assign(n + 1, 0);
    uncolored_.assign(w, 0);
    queue_.assign(w, 0);
    members_.assign(w, 0);
    removed_.assign(w, 0);
    rest_.assign(w, 0);
  }

  AlphaResult run() {
    best_ = greedy_independent_set(g_);
    if (n_ == 0) return finish();
    Word* all = slice(candidates_, 0);
    for (int i = 0; i < n_; ++i) set_bit(all, static_cast<std::size_t>(i));
    current_.clear();
    expand(0);
    return finish();
  }

 private:
  static void set_bit(Word* s, std::size_t i) { s[i / 64] |= Word{1} << (i % 64); }
  static void clear_bit(Word* s, std::size_t i) { s[i / 64] &= ~(Word{1} << (i % 64)); }
  static bool test_bit(const Word* s, std::size_t i) { return (s[i / 64] >> (i % 64)) & 1U; }

  Word* slice(std::vector<Word>& pool, int index) { return pool.data() + static_cast<std::size_t>(index) * words_; }
  Word* comp_row(int v) { return comp_.data() + static_cast<std::size_t>(v) * words_; }
  Word* graph_row(int v) { return graph_.data() + static_cast<std::size_t>(v) * words_; }

  bool empty(const Word* s) const {
    for (int w = 0; w < words_; ++w)
      if (s[w]) return false;
    return true;
  }

  int count(const Word* s) const {
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(s[w]);
    return c;
  }

  // Builds one color class from `uncolored` into `cls` (may be null), calling
  // emit(v) for every vertex placed.
  template <class Emit>
  void build_class(Word* cls, Emit&& emit) {
    Word* uncolored = uncolored_.data();
    Word* queue = queue_.data();
    if (cls) std::fill(cls, cls + words_, 0);
    std::copy(uncolored, uncolored + words_, queue);
    for (int i = 0; i < words_; ++i) {
      while (queue[i]) {
        const int v = i * 64 + std::countr_zero(queue[i]);
        queue[i] &= queue[i] - 1;
        clear_bit(uncolored, static_cast<std::size_t>(v));
        const Word* nv = comp_row(v);
        for (int j = i; j < words_; ++j) queue[j] &= ~nv[j];
        if (cls) set_bit(cls, static_cast<std::size_t>(v));
        emit(v);
      }
    }
  }

  // Counts, per class, the members adjacent to v in the graph. A class is a
  // clique of the graph, so v fits into it when every member is adjacent.
  // Returns the number of such neighbors listed in `seen`.
  int tally(int v, std::vector<int>& hits, std::vector<int>& seen) {
    const Word* gv = graph_row(v);
    const Word* members = members_.data();
    int count = 0;
    for (int i = 0; i < words_; ++i) {
      Word bits = gv[i] & members[i];
      while (bits) {
        const int c = class_of_[i * 64 + std::countr_zero(bits)];
        if (hits[c]++ == 0) seen[count++] = c;
        bits &= bits - 1;
      }
    }
    return count;
  }

  static void untally(std::vector<int>& hits, const std::vector<int>& seen, int count) {
    for (int i = 0; i < count; ++i) hits[seen[i]] = 0;
  }

  void place(int v, int c) {
    set_bit(slice(classes_, c), static_cast<std::size_t>(v));
    set_bit(members_.data(), static_cast<std::size_t>(v));
    class_of_[v] = c;
    ++class_size_[c];
  }

  // Re-NUMBER: put v into a class below limit directly, or by moving its single
  // conflicting member w of class c1 into a later class.
  bool recolor(int v, int limit) {
    const int seen_v = tally(v, hits_, seen_);
    bool done = false;
    for (int c1 = 1; c1 < limit && !done; ++c1) {
      if (retired_[c1]) continue;
      const int missing = class_size_[c1] - hits_[c1];
      if (missing == 0) {
        place(v, c1);
        done = true;
        break;
      }
      if (missing != 1) continue;
      Word* cls1 = slice(classes_, c1);
      const Word* gv = graph_row(v);
      int w = -1;
      for (int i = 0; i < words_ && w < 0; ++i)
        if (const Word x = cls1[i] & ~gv[i]) w = i * 64 + std::countr_zero(x);
      const int seen_w = tally(w, hits_w_, seen_w_);
      int target = limit;
      for (int i = 0; i < seen_w; ++i) {
        const int c2 = seen_w_[i];
        if (c2 > c1 && c2 < target && !retired_[c2] && class_size_[c2] == hits_w_[c2]) target = c2;
      }
      untally(hits_w_, seen_w_, seen_w);
      if (target < limit) {
        clear_bit(cls1, static_cast<std::size_t>(w));
        --class_size_[c1];
        place(w, target);
        place(v, c1);
        done = true;
      }
    }
    untally(hits_, seen_, seen_v);
    return done;
  }

  // Unit propagation over the live classes 1..last starting from v. On a
  // conflict retires the classes that took part and returns true.
  bool absorbs(int v, int last) {
    Word* removed = removed_.data();
    std::fill(removed, removed + words_, 0);
    units_.clear();
    touched_.clear();
    auto unit_reason = [&](std::size_t u) { return unit_reason_.data() + u * words_; };
    auto push_unit = [&](int vertex, const Word* reason) {
      Word* dst = unit_reason(units_.size());
      if (reason) std::copy(reason, reason + words_, dst);
      else std::fill(dst, dst + words_, 0);
      units_.push_back(vertex);
    };
    push_unit(v, nullptr);
    for (int c = 1; c <= last; ++c) {
      work_size_[c] = class_size_[c];
      if (retired_[c] || class_size_[c] != 1) continue;
      Word* r = slice(reasons_, c);
      std::fill(r, r + words_, 0);
      set_bit(r, static_cast<std::size_t>(c));
      touched_.push_back(c);
      const Word* cls = slice(classes_, c);
      for (int i = 0; i < words_; ++i)
        if (cls[i]) {
          push_unit(i * 64 + std::countr_zero(cls[i]), r);
          break;
        }
    }
    bool conflict = false;
    for (std::size_t head = 0; head < units_.size() && !conflict; ++head) {
      const int u = units_[head];
      if (test_bit(removed, static_cast<std::size_t>(u))) {
        // u was knocked out after becoming a unit; its class is now empty.
        continue;
      }
      const Word* gu = graph_row(u);
      const Word* members = members_.data();
      for (int i = 0; i < words_ && !conflict; ++i) {
        Word hits = gu[i] & members[i] & ~removed[i];
        while (hits) {
          const int x = i * 64 + std::countr_zero(hits);
          hits &= hits - 1;
          const int c = class_of_[x];
          if (retired_[c]) continue;
          set_bit(removed, static_cast<std::size_t>(x));
          Word* r = slice(reasons_, c);
          if (work_size_[c] == class_size_[c] && !(class_size_[c] == 1)) {
            std::fill(r, r + words_, 0);
            set_bit(r, static_cast<std::size_t>(c));
            touched_.push_back(c);
          }
          const Word* ur = unit_reason(head);
          for (int j = 0; j < words_; ++j) r[j] |= ur[j];
          if (--work_size_[c] == 0) {
            for (int j = 0; j < words_; ++j) {
              Word bits = r[j];
              while (bits) {
                retired_[j * 64 + std::countr_zero(bits)] = 1;
                bits &= bits - 1;
              }
            }
            conflict = true;
            break;
          }
          if (work_size_[c] == 1) {
            const Word* cls = slice(classes_, c);
            for (int j = 0; j < words_; ++j) {
              const Word left = cls[j] & ~removed[j];
              if (left) {
                push_unit(j * 64 + std::countr_zero(left), r);
                break;
              }
            }
          }
        }
      }
    }
    return conflict;
  }

  void expand(int level) {
    if (++nodes_ > budget_) throw BudgetExceeded(budget_, best_);
    Word* cand = slice(candidates_, level);
    int* verts = verts_.data() + static_cast<std::size_t>(level) * n_;
    int* colors = colors_.data() + static_cast<std::size_t>(level) * n_;
    const int depth = static_cast<int>(current_.size());
    const int min_color = static_cast<int>(best_.size()) - depth;

    Word* uncolored = uncolored_.data();
    std::copy(cand, cand + words_, uncolored);
    int color = 0;
    int count = 0;
    // Classes below min_color: never branched on.
    Word* members = members_.data();
    std::fill(members, members + words_, 0);
    while (color + 1 < min_color && !empty(uncolored)) {
      ++color;
      class_size_[color] = 0;
      retired_[color] = 0;
      build_class(slice(classes_, color), [&](int v) {
        class_of_[v] = color;
        ++class_size_[color];
        set_bit(members, static_cast<std::size_t>(v));
      });
    }
    if (color > 0 && !empty(uncolored)) {
      Word* rest = rest_.data();
      std::fill(rest, rest + words_, 0);
      for (int i = 0; i < words_; ++i) {
        Word bits = uncolored[i];
        while (bits) {
          const int v = i * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          if (recolor(v, color + 1)) continue;
          if (absorbs(v, color)) continue;
          set_bit(rest, static_cast<std::size_t>(v));
        }
      }
      std::copy(rest, rest + words_, uncolored);
    }
    while (!empty(uncolored)) {
      ++color;
      build_class(nullptr, [&](int v) {
        verts[count] = v;
        colors[count] = color;
        ++count;
      });
    }

    Word* next = slice(candidates_, level + 1);
    for (int i = count - 1; i >= 0; --i) {
      if (depth + colors[i] <= static_cast<int>(best_.size())) return;
      const int v = verts[i];
      current_.push_back(v);
      const Word* nv = comp_row(v);
      bool any = false;
      for (int j = 0; j < words_; ++j) {
        next[j] = cand[j] & nv[j];
        any = any || next[j];
      }
      if (!any) {
        if (current_.size() > best_.size()) record();
      } else {
        expand(level + 1);
      }
      current_.pop_back();
      clear_bit(cand, static_cast<std::size_t>(v));
    }
  }

  void record() {
    best_.clear();
    for (int pos : current_) best_.push_back(order_[pos]);
    std::sort(best_.begin(), best_.end());
  }

  AlphaResult finish() const {
    AlphaResult r;
    r.alpha = static_cast<int>(best_.size());
    r.witness = best_;
    r.nodes_explored = nodes_;
    return r;
  }

  const Graph& g_;
  int n_;
  int words_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> order_;
  std::vector<Word> comp_;   // complement adjacency
  std::vector<Word> graph_;  // graph adjacency
  std::vector<Word> candidates_;
  std::vector<int> verts_;
  std::vector<int> colors_;
  std::vector<Word> classes_;
  std::vector<Word> reasons_;
  std::vector<int> class_of_;
  std::vector<int> class_size_;
  std::vector<int> work_size_;
  std::vector<char> retired_;
  std::vector<int> units_;
  std::vector<Word> unit_reason_;
  std::vector<int> touched_;
  std::vector<int> hits_;
  std::vector<int> hits_w_;
  std::vector<int> seen_;
  std::vector<int> seen_w_;
  std::vector<Word> uncolored_;
  std::vector<Word> queue_;
  std::vector<Word> members_;
  std::vector<Word> removed_;
  std::vector<Word> rest_;
  std::vector<int> current_;
  std::vector<int> best_;
};

void enumerate_independent(const Graph& g, int next, Bitset& allowed, std::vector<int>& current,
                           std::vector<int>& best, std::uint64_t& visited) {
  ++visited;
  if (current.size() > best.size()) best = current;
  for (int v = next; v < g.n(); ++v) {
    if (!allowed.test(static_cast<std::size_t>(v))) continue;
    Bitset saved = allowed;
    allowed.subtract(g.row(v));
    allowed.reset(static_cast<std::size_t>(v));
    current.push_back(v);
    enumerate_independent(g, v + 1, allowed, current, best, visited);
    current.pop_back();
    allowed = std::move(saved);
  }
}

}  // namespace

AlphaResult alpha_exact(const Graph& g, AlphaOptions options) {
  CliqueSearch search(g, options.node_budget);
  return search.run();
}

AlphaResult alpha_bruteforce(const Graph& g) {
  if (g.n() > kBruteForceMaxVertices)
    throw InputError("brute-force alpha supports at most " + std::to_string(kBruteForceMaxVertices) +
                     " vertices, got " + std::to_string(g.n()));
  Bitset allowed(static_cast<std::size_t>(g.n()));
  allowed.set_all();
  std::vector<int> current;
  AlphaResult r;
  enumerate_independent(g, 0, allowed, current, r.witness, r.nodes_explored);
  r.alpha = static_cast<int>(r.witness.size());
  return r;
}

}  // namespace gnm

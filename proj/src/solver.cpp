#include "satnum/solver.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_map>
#include <vector>

#include "satnum/errors.hpp"

namespace satnum {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t ceil(const Rational& r) {
  const auto q = r.numerator() / r.denominator();
  return (r.numerator() % r.denominator() > 0) ? q + 1 : q;
}

std::string to_string(const Method& m) {
  switch (m.kind) {
    case Method::Kind::kExact:
      return "exact";
    case Method::Kind::kBruteForce:
      return "brute_force";
    case Method::Kind::kFormula:
      return "formula(" + m.claim_id + ")";
  }
  return "unknown";
}

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(unsigned v) { return Mask{1} << v; }

// Bits v, v+1, ..., 63.
constexpr Mask from(unsigned v) { return v >= 64 ? 0 : ~Mask{0} << v; }

constexpr Mask all_vertices(std::size_t n) {
  return n >= 64 ? ~Mask{0} : bit(static_cast<unsigned>(n)) - 1;
}

void check_vertex_cap(const Graph& g, std::size_t cap, const char* name) {
  const auto limit = std::min<std::size_t>(cap, 64);
  if (g.order() > limit) throw ResourceError(name, limit, g.order());
}

std::vector<Mask> neighbor_masks(const Graph& g) {
  std::vector<Mask> adj(g.order());
  for (Vertex v = 0; v < g.order(); ++v) adj[v] = g.neighbor_mask(v);
  return adj;
}

struct StateKey {
  unsigned vertex;
  Mask matched;
  Mask forced;

  friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const noexcept {
    std::uint64_t h = k.matched * 0x9E3779B97F4A7C15ull;
    h ^= (k.forced + 0x632BE59BD9B4E019ull) * 0xC2B2AE3D27D4EB4Full;
    h ^= std::uint64_t{k.vertex} << 57 | k.vertex;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

// Branch and bound for a smallest maximal matching.
//
// Vertices are decided in increasing order. A decided vertex is either
// matched or left unmatched; every neighbor of an unmatched vertex is
// "forced" and must end up matched. Edges can only be added between two
// undecided vertices, so the state after deciding 0..v-1 is captured by the
// matched and forced bits at positions >= v. Memo entries are either exact
// values or lower bounds learned from a cut-off search.
class SaturationSearch {
 public:
  static constexpr int kInfeasible = std::numeric_limits<int>::max() / 4;

  explicit SaturationSearch(const Graph& g)
      : n_(static_cast<unsigned>(g.order())),
        all_(all_vertices(g.order())),
        adj_(neighbor_masks(g)) {}

  int solve() { return solve(0, 0, 0, kInfeasible); }

  std::vector<Edge> witness(int value) {
    std::vector<Edge> edges;
    unsigned v = 0;
    Mask matched = 0, forced = 0;
    int remaining = value;
    while (true) {
      while (v < n_ && (matched & bit(v))) ++v;
      if (v == n_) break;
      bool advanced = false;
      for (Mask cands = candidates(v, matched); cands != 0; cands &= cands - 1) {
        const auto w = static_cast<unsigned>(std::countr_zero(cands));
        const Mask m2 = matched | bit(v) | bit(w);
        const Mask f2 = forced & ~(bit(v) | bit(w));
        if (solve(v + 1, m2, f2, remaining) == remaining - 1) {
          edges.emplace_back(v, w);
          matched = m2;
          forced = f2;
          --remaining;
          advanced = true;
          break;
        }
      }
      if (!advanced) {
        const Mask f2 = leave_unmatched(v, matched, forced);
        // The optimum is reachable, so this branch must realize it.
        matched &= above(v + 1);
        forced = f2;
      }
      ++v;
    }
    return edges;
  }

 private:
  Mask candidates(unsigned v, Mask matched) const {
    return adj_[v] & above(v + 1) & ~matched;
  }

  // Forced set after deciding that v stays unmatched.
  Mask leave_unmatched(unsigned v, Mask matched, Mask forced) const {
    return (forced | (adj_[v] & above(v + 1) & ~matched)) & ~bit(v);
  }

  // Every forced vertex still needs an undecided partner.
  bool coverable(unsigned next, Mask matched, Mask forced) const {
    const Mask open = above(next) & ~matched;
    for (Mask f = forced; f != 0; f &= f - 1) {
      const auto u = static_cast<unsigned>(std::countr_zero(f));
      if ((adj_[u] & open & ~bit(u)) == 0) return false;
    }
    return true;
  }

  // Pairwise vertex-disjoint demands (forced vertices, plus a greedy set of
  // disjoint edges between unforced undecided vertices) each need a distinct
  // matched endpoint; one new edge satisfies at most two of them.
  int lower_bound(unsigned v, Mask matched, Mask forced) const {
    int demands = std::popcount(forced);
    Mask free = above(v) & ~matched & ~forced;
    while (free != 0) {
      const auto u = static_cast<unsigned>(std::countr_zero(free));
      free &= ~bit(u);
      const Mask nb = adj_[u] & free;
      if (nb != 0) {
        free &= ~(nb & -nb);
        ++demands;
      }
    }
    return (demands + 1) / 2;
  }

  int solve(unsigned v, Mask matched, Mask forced, int limit) {
    while (v < n_ && (matched & bit(v))) ++v;
    if (v == n_) return 0;
    matched &= above(v);
    forced &= above(v);

    const int lb = lower_bound(v, matched, forced);
    if (lb >= limit) return lb;

    const StateKey key{v, matched, forced};
    if (auto it = memo_.find(key); it != memo_.end()) {
      if (it->second.exact || it->second.value >= limit) return it->second.value;
    }

    int best = kInfeasible;
    for (Mask cands = candidates(v, matched); cands != 0; cands &= cands - 1) {
      const int cutoff = std::min(best, limit) - 1;
      if (cutoff <= lb - 1) break;
      const auto w = static_cast<unsigned>(std::countr_zero(cands));
      const int child = solve(v + 1, matched | bit(v) | bit(w),
                              forced & ~(bit(v) | bit(w)), cutoff);
      if (child < kInfeasible) best = std::min(best, child + 1);
    }
    if (!(forced & bit(v)) && std::min(best, limit) > lb) {
      const Mask f2 = leave_unmatched(v, matched, forced);
      if (coverable(v + 1, matched, f2)) {
        best = std::min(best, solve(v + 1, matched, f2, std::min(best, limit)));
      }
    }
    best = std::max(best, lb);

    auto& entry = memo_[key];
    if (best < limit) {
      entry = {best, true};
    } else if (!entry.exact) {
      entry.value = std::max(entry.value, best);
    }
    return best;
  }

  struct Entry {
    int value = 0;
    bool exact = false;
  };

  // Vertices v, v+1, ..., n-1.
  Mask above(unsigned v) const { return from(v) & all_; }

  unsigned n_;
  Mask all_;
  std::vector<Mask> adj_;
  std::unordered_map<StateKey, Entry, StateKeyHash> memo_;
};

// Maximum matching by memoized search over the lowest unmatched vertex.
class MatchingSearch {
 public:
  explicit MatchingSearch(const Graph& g)
      : n_(static_cast<unsigned>(g.order())),
        all_(all_vertices(g.order())),
        adj_(neighbor_masks(g)) {}

  int solve(unsigned v, Mask matched) {
    while (v < n_ && (matched & bit(v))) ++v;
    if (v >= n_) return 0;
    matched &= above(v);
    const auto key = std::make_pair(v, matched);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int ceiling = upper_bound(v, matched);
    int best = 0;
    for (Mask c = adj_[v] & above(v + 1) & ~matched; c != 0 && best < ceiling;
         c &= c - 1) {
      const auto w = static_cast<unsigned>(std::countr_zero(c));
      best = std::max(best, 1 + solve(v + 1, matched | bit(v) | bit(w)));
    }
    if (best < ceiling) best = std::max(best, solve(v + 1, matched));
    memo_.emplace(key, best);
    return best;
  }

  std::vector<Edge> witness(int value) {
    std::vector<Edge> edges;
    unsigned v = 0;
    Mask matched = 0;
    while (value > 0) {
      while (v < n_ && (matched & bit(v))) ++v;
      bool advanced = false;
      for (Mask c = adj_[v] & above(v + 1) & ~matched; c != 0; c &= c - 1) {
        const auto w = static_cast<unsigned>(std::countr_zero(c));
        if (1 + solve(v + 1, matched | bit(v) | bit(w)) == value) {
          edges.emplace_back(v, w);
          matched |= bit(v) | bit(w);
          --value;
          advanced = true;
          break;
        }
      }
      ++v;
      (void)advanced;
    }
    return edges;
  }

 private:
  // Half the undecided vertices that still have an undecided neighbor.
  int upper_bound(unsigned v, Mask matched) const {
    const Mask open = above(v) & ~matched;
    int count = 0;
    for (Mask m = open; m != 0; m &= m - 1) {
      const auto u = static_cast<unsigned>(std::countr_zero(m));
      if (adj_[u] & open) ++count;
    }
    return count / 2;
  }

  struct PairHash {
    std::size_t operator()(const std::pair<unsigned, Mask>& p) const noexcept {
      return std::hash<Mask>{}(p.second * 0x9E3779B97F4A7C15ull + p.first);
    }
  };

  // Vertices v, v+1, ..., n-1.
  Mask above(unsigned v) const { return from(v) & all_; }

  unsigned n_;
  Mask all_;
  std::vector<Mask> adj_;
  std::unordered_map<std::pair<unsigned, Mask>, int, PairHash> memo_;
};

// Maximum independent set by branching on a highest-degree vertex. Vertices
// of degree <= 1 are taken greedily, and once every remaining degree is at
// most 2 the graph is a union of paths and cycles solved in closed form.
class IndependenceSearch {
 public:
  explicit IndependenceSearch(const Graph& g) : adj_(neighbor_masks(g)) {}

  int solve(Mask pool) {
    int taken = 0;
    while (pool != 0) {
      unsigned low = 64, high = 64;
      int low_deg = 65, high_deg = -1;
      for (Mask m = pool; m != 0; m &= m - 1) {
        const auto u = static_cast<unsigned>(std::countr_zero(m));
        const int d = std::popcount(adj_[u] & pool);
        if (d < low_deg) low_deg = d, low = u;
        if (d > high_deg) high_deg = d, high = u;
      }
      if (low_deg <= 1) {
        pool &= ~(adj_[low] | bit(low));
        ++taken;
        continue;
      }
      if (high_deg <= 2) return taken + cycles(pool);
      const int with = 1 + solve(pool & ~(adj_[high] | bit(high)));
      const int without = solve(pool & ~bit(high));
      return taken + std::max(with, without);
    }
    return taken;
  }

 private:
  // Every vertex in pool has degree exactly 2: disjoint cycles.
  int cycles(Mask pool) const {
    int total = 0;
    while (pool != 0) {
      Mask component = pool & -pool;
      Mask frontier = component;
      while (frontier != 0) {
        Mask next = 0;
        for (Mask m = frontier; m != 0; m &= m - 1) {
          next |= adj_[static_cast<unsigned>(std::countr_zero(m))];
        }
        next &= pool & ~component;
        component |= next;
        frontier = next;
      }
      total += std::popcount(component) / 2;
      pool &= ~component;
    }
    return total;
  }

  std::vector<Mask> adj_;
};

}  // namespace

MaximumMatching matching_number(const Graph& g, const SolverCaps& caps) {
  check_vertex_cap(g, caps.matching_vertices, "matching-vertices");
  MatchingSearch search(g);
  const int size = search.solve(0, 0);
  return {size, Matching(g, search.witness(size))};
}

std::int64_t independence_number(const Graph& g, const SolverCaps& caps) {
  check_vertex_cap(g, caps.exact_vertices, "exact-vertices");
  return IndependenceSearch(g).solve(all_vertices(g.order()));
}

LowerBounds bounds(const Graph& g, const SolverCaps& caps) {
  const auto alpha_prime = matching_number(g, caps).size;
  const auto alpha = independence_number(g, caps);
  const auto n = static_cast<std::int64_t>(g.order());
  return {Rational(alpha_prime, 2), Rational(n - alpha, 2)};
}

std::int64_t saturation_value(const Graph& g, const SolverCaps& caps) {
  check_vertex_cap(g, caps.exact_vertices, "exact-vertices");
  return SaturationSearch(g).solve();
}

SaturationResult saturation_exact(const Graph& g, const SolverCaps& caps) {
  check_vertex_cap(g, caps.exact_vertices, "exact-vertices");
  SaturationSearch search(g);
  SaturationResult result;
  result.value = search.solve();
  result.witness = Matching(g, search.witness(static_cast<int>(result.value)));
  const auto maximum = matching_number(g, caps);
  result.matching_number = maximum.size;
  result.unsaturated_count =
      static_cast<std::int64_t>(g.order()) - 2 * maximum.size;
  const auto alpha = independence_number(g, caps);
  result.bounds = {Rational(maximum.size, 2),
                   Rational(static_cast<std::int64_t>(g.order()) - alpha, 2)};
  result.method = Method::exact();
  return result;
}

std::int64_t saturation_bruteforce(const Graph& g, const SolverCaps& caps) {
  const auto limit = std::min<std::size_t>(caps.brute_edges, 32);
  if (g.size() > limit) throw ResourceError("brute-edges", limit, g.size());

  // Relabel the non-isolated vertices densely so they fit one word.
  std::vector<int> label(g.order(), -1);
  int next = 0;
  std::vector<Mask> edge_mask;
  for (const Edge& e : g.edges()) {
    if (label[e.u] < 0) label[e.u] = next++;
    if (label[e.v] < 0) label[e.v] = next++;
    edge_mask.push_back(bit(static_cast<unsigned>(label[e.u])) |
                        bit(static_cast<unsigned>(label[e.v])));
  }
  const auto m = static_cast<unsigned>(edge_mask.size());

  auto is_maximal_matching_subset = [&](Mask subset) {
    Mask covered = 0;
    for (Mask s = subset; s != 0; s &= s - 1) {
      const Mask e = edge_mask[static_cast<unsigned>(std::countr_zero(s))];
      if (covered & e) return false;
      covered |= e;
    }
    for (Mask e : edge_mask) {
      if ((covered & e) == 0) return false;
    }
    return true;
  };

  for (unsigned k = 0; k <= m; ++k) {
    if (k == 0) {
      if (is_maximal_matching_subset(0)) return 0;
      continue;
    }
    // Gosper's hack: all m-bit words with exactly k bits set.
    const Mask last = bit(m);
    for (Mask s = bit(k) - 1; s < last;) {
      if (is_maximal_matching_subset(s)) return k;
      const Mask c = s & -s;
      const Mask r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  throw std::logic_error("no maximal matching found");
}

}  // namespace satnum

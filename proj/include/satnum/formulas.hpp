#pragma once

#include <cstdint>
#include <utility>

#include "satnum/graph.hpp"
#include "satnum/solver.hpp"

// Closed-form saturation numbers for structured families. Every function is
// pure integer arithmetic; out-of-domain parameters raise DomainError and
// parameter combinations without a published row raise UnsupportedParameter.
namespace satnum::formulas {

// Order, matching number and unsaturated-vertex count of a corona core.
struct CoronaStats {
  std::int64_t n = 0;
  std::int64_t alpha_prime = 0;
  std::int64_t l = 0;  // n - 2 * alpha_prime
  bool has_perfect = false;

  // Throws DomainError unless l == n - 2*alpha_prime >= 0 and has_perfect
  // agrees with l == 0.
  void validate() const;
};

// Stats of `g` from an exact maximum matching.
CoronaStats corona_stats(const Graph& g, const SolverCaps& caps = {});

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  friend bool operator==(const Range&, const Range&) = default;
};

std::int64_t s_path(std::int64_t n);
std::int64_t s_cycle(std::int64_t n);
std::int64_t s_wheel(std::int64_t n);

// Edge e_i = v_i v_{i+1} (1-based) removed from P_n. The `paper` variant is
// the three-case table as published; `exact` is s(P_i) + s(P_{n-i}).
std::int64_t s_path_minus_edge_paper(std::int64_t n, std::int64_t i);
std::int64_t s_path_minus_edge_exact(std::int64_t n, std::int64_t i);
std::int64_t s_cycle_minus_edge(std::int64_t n);

// Union of two graphs.
std::int64_t s_union(std::int64_t s_first, std::int64_t s_second);

// G o K̄_m, G o P_m, G o C_m.
std::int64_t s_corona_empty(const CoronaStats& g, std::int64_t m);
std::int64_t s_corona_path(const CoronaStats& g, std::int64_t m);
std::int64_t s_corona_cycle(const CoronaStats& g, std::int64_t m);

// ceil(n/2) for P_n o K̄_m and C_n o K̄_m, n, m >= 3.
std::int64_t s_path_or_cycle_corona_empty(std::int64_t n, std::int64_t m);

// s(G) <= s(K_1 o G) <= s(G) + 1.
Range s_k1_corona_bounds(std::int64_t s_g);

// K_1 o P_n, K_1 o C_n, K_1 o W_n.
std::int64_t s_k1_corona_path(std::int64_t n);
std::int64_t s_k1_corona_cycle(std::int64_t n);
std::int64_t s_k1_corona_wheel(std::int64_t n);

// K̄_m o G from s(K_1 o G).
std::int64_t s_kbar_corona(std::int64_t m, std::int64_t s_k1_g);

// n*s(G2) <= s(G1 o G2) <= n*s(G2) + alpha'(G1) + l.
Range corona_bounds(std::int64_t n, std::int64_t s_g2, std::int64_t alpha_prime,
                    std::int64_t l);

// Link / chain of n copies of P_m joined at path endpoints.
std::int64_t s_link_paths(std::int64_t m, std::int64_t n);
std::int64_t s_chain_paths(std::int64_t m, std::int64_t n);

// Link / chain of n copies of C_m with attach vertices at distance d.
std::int64_t s_link_cycles(std::int64_t m, std::int64_t n, std::int64_t d);
std::int64_t s_chain_cycles(std::int64_t m, std::int64_t n, std::int64_t d);

// Whether (m, d) falls in one of the published rows.
bool link_cycles_supported(std::int64_t m, std::int64_t d);
bool chain_cycles_supported(std::int64_t m, std::int64_t d);

// Chain triangular cactus T_n and chain square cactus O_n.
std::int64_t s_tri(std::int64_t n);
std::int64_t s_sq(std::int64_t n);

// Floor and ceiling division for any sign of the numerator, positive b.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

}  // namespace satnum::formulas

#include "satnum/formulas.hpp"

#include <string>

#include "satnum/errors.hpp"

namespace satnum::formulas {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

[[noreturn]] void unsupported(const char* family, std::int64_t m,
                              std::int64_t d) {
  throw UnsupportedParameter(std::string(family) + ": no published row for m=" +
                             std::to_string(m) + ", d=" + std::to_string(d));
}

bool in(std::int64_t d, std::initializer_list<std::int64_t> set) {
  for (auto x : set) {
    if (x == d) return true;
  }
  return false;
}

void check_cycle_family(std::int64_t m, std::int64_t n, std::int64_t d) {
  require(m >= 3, "cycle order m must be >= 3");
  require(n >= 1, "part count n must be >= 1");
  require(d >= 1 && d <= m / 2, "attach distance must satisfy 1 <= d <= m/2");
}

}  // namespace

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  const auto q = a / b;
  return (a % b != 0 && a < 0) ? q - 1 : q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  const auto q = a / b;
  return (a % b != 0 && a > 0) ? q + 1 : q;
}

void CoronaStats::validate() const {
  require(n >= 0 && alpha_prime >= 0 && l >= 0, "stats must be non-negative");
  require(l == n - 2 * alpha_prime, "l must equal n - 2*alpha'");
  require(has_perfect == (l == 0), "has_perfect must agree with l == 0");
}

CoronaStats corona_stats(const Graph& g, const SolverCaps& caps) {
  const auto n = static_cast<std::int64_t>(g.order());
  const auto alpha_prime = matching_number(g, caps).size;
  const auto l = n - 2 * alpha_prime;
  return {n, alpha_prime, l, l == 0};
}

std::int64_t s_path(std::int64_t n) {
  require(n >= 1, "s_path needs n >= 1");
  return n % 3 == 2 ? ceil_div(n, 3) : n / 3;
}

std::int64_t s_cycle(std::int64_t n) {
  require(n >= 3, "s_cycle needs n >= 3");
  return ceil_div(n, 3);
}

std::int64_t s_wheel(std::int64_t n) {
  require(n >= 4, "s_wheel needs n >= 4");
  return 1 + s_path(n - 2);
}

std::int64_t s_path_minus_edge_paper(std::int64_t n, std::int64_t i) {
  require(n >= 2 && i >= 1 && i <= n - 1, "edge index must be in 1..n-1");
  const auto base = s_path(n);
  const bool half = n % 2 == 0 && i == n / 2;
  if (n % 3 == 2 && (i == 1 || half || i == n - 1)) return base - 1;
  if (n % 3 == 1 && (i == 2 || i == n - 2)) return base + 1;
  return base;
}

std::int64_t s_path_minus_edge_exact(std::int64_t n, std::int64_t i) {
  require(n >= 2 && i >= 1 && i <= n - 1, "edge index must be in 1..n-1");
  return s_path(i) + s_path(n - i);
}

std::int64_t s_cycle_minus_edge(std::int64_t n) {
  require(n >= 3, "s_cycle_minus_edge needs n >= 3");
  return s_path(n);
}

std::int64_t s_union(std::int64_t s_first, std::int64_t s_second) {
  require(s_first >= 0 && s_second >= 0, "saturation numbers are >= 0");
  return s_first + s_second;
}

std::int64_t s_corona_empty(const CoronaStats& g, std::int64_t m) {
  g.validate();
  require(m >= 1, "copy order m must be >= 1");
  return g.alpha_prime + g.l;
}

std::int64_t s_corona_path(const CoronaStats& g, std::int64_t m) {
  g.validate();
  require(m >= 1, "path order m must be >= 1");
  const auto base = g.n * s_path(m);
  return m % 3 == 1 ? base + g.alpha_prime + g.l : base;
}

std::int64_t s_corona_cycle(const CoronaStats& g, std::int64_t m) {
  g.validate();
  require(m >= 3, "cycle order m must be >= 3");
  const auto base = g.n * s_cycle(m);
  return m % 3 == 0 ? base + g.alpha_prime + g.l : base;
}

std::int64_t s_path_or_cycle_corona_empty(std::int64_t n, std::int64_t m) {
  require(n >= 3 && m >= 3, "needs n, m >= 3");
  return ceil_div(n, 2);
}

Range s_k1_corona_bounds(std::int64_t s_g) {
  require(s_g >= 0, "saturation number must be >= 0");
  return {s_g, s_g + 1};
}

std::int64_t s_k1_corona_path(std::int64_t n) {
  return n % 3 == 1 ? 1 + s_path(n) : s_path(n);
}

std::int64_t s_k1_corona_cycle(std::int64_t n) {
  return n % 3 == 0 ? 1 + s_cycle(n) : s_cycle(n);
}

std::int64_t s_k1_corona_wheel(std::int64_t n) {
  return n % 3 == 0 ? 1 + s_wheel(n) : s_wheel(n);
}

std::int64_t s_kbar_corona(std::int64_t m, std::int64_t s_k1_g) {
  require(m >= 1, "m must be >= 1");
  require(s_k1_g >= 0, "saturation number must be >= 0");
  return m * s_k1_g;
}

Range corona_bounds(std::int64_t n, std::int64_t s_g2, std::int64_t alpha_prime,
                    std::int64_t l) {
  require(n >= 1 && s_g2 >= 0 && alpha_prime >= 0 && l >= 0,
          "corona bounds need n >= 1 and non-negative stats");
  require(l == n - 2 * alpha_prime, "l must equal n - 2*alpha'");
  return {n * s_g2, n * s_g2 + alpha_prime + l};
}

std::int64_t s_link_paths(std::int64_t m, std::int64_t n) {
  require(m >= 1 && n >= 1, "m and n must be >= 1");
  const auto base = n * s_path(m);
  switch (m % 3) {
    case 0:
      return base;
    case 1:
      return base + ceil_div(n - 1, 3);
    default:
      return base - ceil_div(n - 1, 3);
  }
}

std::int64_t s_chain_paths(std::int64_t m, std::int64_t n) {
  require(m >= 1 && n >= 1, "m and n must be >= 1");
  require(m >= 2 || n == 1, "a chain of several paths needs m >= 2");
  const auto base = n * s_path(m);
  switch (m % 3) {
    case 0:
      return base - n / 3;
    case 1:
      return base;
    default:
      return base + floor_div(-2 * (n - 1), 3);
  }
}

bool link_cycles_supported(std::int64_t m, std::int64_t d) {
  if (m < 3 || d < 1 || d > m / 2) return false;
  switch (m % 3) {
    case 0:
      return d <= 5;
    case 1:
      return in(d, {1, 3, 4}) || in(d, {2, 5});
    default:
      return in(d, {1, 4}) || in(d, {2, 3, 5});
  }
}

bool chain_cycles_supported(std::int64_t m, std::int64_t d) {
  if (m < 3 || d < 1 || d > m / 2) return false;
  switch (m % 3) {
    case 0:
      return in(d, {1, 2, 4, 5}) || d == 3;
    case 1:
      return d <= 5;
    default:
      return in(d, {1, 4}) || in(d, {2, 3, 5});
  }
}

std::int64_t s_link_cycles(std::int64_t m, std::int64_t n, std::int64_t d) {
  check_cycle_family(m, n, d);
  if (!link_cycles_supported(m, d)) unsupported("link of cycles", m, d);
  const auto base = n * s_cycle(m);
  switch (m % 3) {
    case 0:
      return base;
    case 1:
      // The published set is printed as {1,3.4}; read as {1,3,4}.
      return in(d, {1, 3, 4}) ? base - n / 2 : base - (n - 1);
    default:
      return in(d, {1, 4}) ? base - ceil_div(n - 1, 3) : base - n / 2;
  }
}

std::int64_t s_chain_cycles(std::int64_t m, std::int64_t n, std::int64_t d) {
  check_cycle_family(m, n, d);
  if (!chain_cycles_supported(m, d)) unsupported("chain of cycles", m, d);
  const auto base = n * s_cycle(m);
  switch (m % 3) {
    case 0:
      return d == 3 ? base : base - (n - 1) / 2;
    case 1:
      return base - (n - 1);
    default:
      return in(d, {1, 4}) ? base - ceil_div(n, 2) : base - (n - 1);
  }
}

std::int64_t s_tri(std::int64_t n) {
  require(n >= 1, "s_tri needs n >= 1");
  return floor_div(n - 2, 2) + 2;
}

std::int64_t s_sq(std::int64_t n) {
  require(n >= 1, "s_sq needs n >= 1");
  return n + 1;
}

}  // namespace satnum::formulas

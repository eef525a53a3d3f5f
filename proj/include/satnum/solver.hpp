#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>

#include <boost/rational.hpp>

#include "satnum/graph.hpp"
#include "satnum/matching.hpp"

namespace satnum {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);

// Ceiling of a non-negative rational.
std::int64_t ceil(const Rational& r);

struct SolverCaps {
  std::size_t exact_vertices = 32;   // saturation_exact, independence_number
  std::size_t brute_edges = 24;      // saturation_bruteforce
  std::size_t matching_vertices = 64;
};

struct Method {
  enum class Kind { kExact, kBruteForce, kFormula };

  Kind kind = Kind::kExact;
  std::string claim_id;  // set for kFormula

  static Method exact() { return {Kind::kExact, {}}; }
  static Method brute_force() { return {Kind::kBruteForce, {}}; }
  static Method formula(std::string id) { return {Kind::kFormula, std::move(id)}; }

  friend bool operator==(const Method&, const Method&) = default;
};

// "exact", "brute_force" or "formula(<claim id>)".
std::string to_string(const Method& m);

struct LowerBounds {
  Rational half_alpha;    // alpha'(G) / 2
  Rational independence;  // (n - alpha(G)) / 2
};

struct SaturationResult {
  std::int64_t value = 0;
  Matching witness;
  std::int64_t matching_number = 0;
  std::int64_t unsaturated_count = 0;  // n - 2 alpha'(G)
  LowerBounds bounds;
  Method method;
};

struct MaximumMatching {
  std::int64_t size = 0;
  Matching witness;
};

// alpha'(G) with a maximum matching. Throws ResourceError above
// caps.matching_vertices.
MaximumMatching matching_number(const Graph& g, const SolverCaps& caps = {});

// alpha(G). Throws ResourceError above caps.exact_vertices.
std::int64_t independence_number(const Graph& g, const SolverCaps& caps = {});

LowerBounds bounds(const Graph& g, const SolverCaps& caps = {});

// Size of a smallest maximal matching together with a witness. The witness
// is the first optimum reached when branching on the lowest undecided vertex
// and trying its edges in increasing neighbor order before leaving it
// unmatched, so it depends only on the labeled graph.
// Throws ResourceError above caps.exact_vertices.
SaturationResult saturation_exact(const Graph& g, const SolverCaps& caps = {});

// Only the value of saturation_exact, skipping the bound computations.
std::int64_t saturation_value(const Graph& g, const SolverCaps& caps = {});

// Reference oracle: tries every edge subset of size 0, 1, 2, ... and returns
// the first size at which some subset is a maximal matching. Shares no code
// with the search above. Throws ResourceError above caps.brute_edges.
std::int64_t saturation_bruteforce(const Graph& g, const SolverCaps& caps = {});

}  // namespace satnum

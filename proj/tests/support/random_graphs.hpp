#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "satnum/graph.hpp"

namespace satnum::testing {

// G(n, p) with a fixed seed. Uses raw engine output so the sequence does not
// depend on the standard library's distribution implementations.
inline Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const double r = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (r < p) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

// Order in [lo, hi] drawn from the same engine family.
inline std::size_t random_order(std::size_t lo, std::size_t hi,
                                std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

}  // namespace satnum::testing

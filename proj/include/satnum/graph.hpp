#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace satnum {

using Vertex = std::uint32_t;

// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(Vertex w) const noexcept { return u == w || v == w; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

inline constexpr std::size_t kDefaultMaxVertices = 64;

// Immutable simple undirected graph on vertices 0..n-1.
//
// Edges are normalized (u < v) and kept sorted, so two graphs built from the
// same labeled edge set compare equal regardless of input order or
// orientation. Connectivity is not required.
class Graph {
 public:
  Graph() = default;

  // Throws GraphError on an out-of-range endpoint, a self-loop, or when
  // n exceeds max_vertices. Duplicate pairs collapse to a single edge.
  Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges,
        std::size_t max_vertices = kDefaultMaxVertices);
  Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges,
        std::size_t max_vertices = kDefaultMaxVertices);
  Graph(std::size_t n, std::span<const Edge> edges,
        std::size_t max_vertices = kDefaultMaxVertices);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  bool has_vertex(Vertex v) const noexcept { return v < order(); }
  bool adjacent(Vertex a, Vertex b) const;
  bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }

  // Neighborhood bitmask; only available when order() <= 64.
  std::uint64_t neighbor_mask(Vertex v) const { return masks_.at(v); }
  bool has_masks() const noexcept { return !masks_.empty() || order() == 0; }

  std::size_t component_count() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  void build(std::size_t n, std::vector<Edge> edges, std::size_t max_vertices);

  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::uint64_t> masks_;
};

// Commonly used shapes, labeled in the natural order.
Graph path_graph(std::size_t n,
                 std::size_t max_vertices = kDefaultMaxVertices);
Graph cycle_graph(std::size_t n,
                  std::size_t max_vertices = kDefaultMaxVertices);
Graph complete_graph(std::size_t n,
                     std::size_t max_vertices = kDefaultMaxVertices);
Graph empty_graph(std::size_t n,
                  std::size_t max_vertices = kDefaultMaxVertices);

}  // namespace satnum

#include "satnum/graph.hpp"

#include <algorithm>
#include <numeric>

#include "satnum/errors.hpp"

namespace satnum {

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

Graph::Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges,
             std::size_t max_vertices) {
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) {
      throw GraphError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                       ") has an endpoint outside 0.." +
                       std::to_string(n == 0 ? 0 : n - 1));
    }
    normalized.emplace_back(a, b);
  }
  build(n, std::move(normalized), max_vertices);
}

Graph::Graph(std::size_t n,
             std::initializer_list<std::pair<Vertex, Vertex>> edges,
             std::size_t max_vertices)
    : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(),
                                                          edges.size()),
            max_vertices) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges,
             std::size_t max_vertices) {
  build(n, std::vector<Edge>(edges.begin(), edges.end()), max_vertices);
}

void Graph::build(std::size_t n, std::vector<Edge> edges,
                  std::size_t max_vertices) {
  if (n > max_vertices) throw ResourceError("max-vertices", max_vertices, n);
  for (const Edge& e : edges) {
    if (e.v >= n) {
      throw GraphError("edge " + to_string(e) + " has an endpoint outside 0.." +
                       std::to_string(n == 0 ? 0 : n - 1));
    }
    if (e.u == e.v) {
      throw GraphError("self-loop at vertex " + std::to_string(e.u));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  adjacency_.assign(n, {});
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());

  if (n <= 64) {
    masks_.assign(n, 0);
    for (const Edge& e : edges_) {
      masks_[e.u] |= std::uint64_t{1} << e.v;
      masks_[e.v] |= std::uint64_t{1} << e.u;
    }
  }
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (a >= order() || b >= order()) return false;
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

std::size_t Graph::component_count() const {
  std::vector<Vertex> parent(order());
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t components = order();
  for (const Edge& e : edges_) {
    Vertex a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

Graph path_graph(std::size_t n, std::size_t max_vertices) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(i - 1, i);
  return Graph(n, edges, max_vertices);
}

Graph cycle_graph(std::size_t n, std::size_t max_vertices) {
  if (n < 3) throw GraphError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges, max_vertices);
}

Graph complete_graph(std::size_t n, std::size_t max_vertices) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges, max_vertices);
}

Graph empty_graph(std::size_t n, std::size_t max_vertices) {
  return Graph(n, std::span<const Edge>{}, max_vertices);
}

}  // namespace satnum

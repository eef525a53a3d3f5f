#include "satnum/operations.hpp"

#include "satnum/errors.hpp"

namespace satnum {

namespace {

std::size_t structural_cap(std::size_t needed) {
  return needed > kDefaultMaxVertices ? needed : kDefaultMaxVertices;
}

void check_part(const AttachedPart& part, std::size_t index) {
  const auto n = part.graph.order();
  if (part.x >= n || part.y >= n) {
    throw GraphError("part " + std::to_string(index) +
                     ": attach vertex outside 0.." +
                     std::to_string(n == 0 ? 0 : n - 1));
  }
}

}  // namespace

Graph disjoint_union(const Graph& a, const Graph& b) {
  const auto offset = static_cast<Vertex>(a.order());
  std::vector<Edge> edges(a.edges());
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + offset, e.v + offset);
  const auto n = a.order() + b.order();
  return Graph(n, edges, structural_cap(n));
}

Graph delete_edge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e)) {
    throw GraphError("edge " + to_string(e) + " is not in the graph");
  }
  std::vector<Edge> edges;
  edges.reserve(g.size() - 1);
  for (const Edge& f : g.edges()) {
    if (f != e) edges.push_back(f);
  }
  return Graph(g.order(), edges, structural_cap(g.order()));
}

Graph corona(const Graph& core, const Graph& attached) {
  const auto n1 = core.order();
  const auto n2 = attached.order();
  if (n1 == 0) throw GraphError("corona needs a non-empty core graph");
  std::vector<Edge> edges(core.edges());
  for (std::size_t i = 0; i < n1; ++i) {
    const auto base = static_cast<Vertex>(n1 + i * n2);
    for (const Edge& e : attached.edges()) {
      edges.emplace_back(e.u + base, e.v + base);
    }
    for (std::size_t j = 0; j < n2; ++j) {
      edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(base + j));
    }
  }
  const auto n = n1 * (1 + n2);
  return Graph(n, edges, structural_cap(n));
}

Graph link(std::span<const AttachedPart> parts) {
  if (parts.empty()) throw GraphError("link needs at least one part");
  std::vector<Edge> edges;
  Vertex offset = 0;
  Vertex previous_y = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& part = parts[i];
    check_part(part, i);
    for (const Edge& e : part.graph.edges()) {
      edges.emplace_back(e.u + offset, e.v + offset);
    }
    if (i > 0) edges.emplace_back(previous_y, part.x + offset);
    previous_y = part.y + offset;
    offset += static_cast<Vertex>(part.graph.order());
  }
  return Graph(offset, edges, structural_cap(offset));
}

Graph chain(std::span<const AttachedPart> parts) {
  if (parts.empty()) throw GraphError("chain needs at least one part");
  std::vector<Edge> edges;
  Vertex next_label = 0;
  Vertex previous_y = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& part = parts[i];
    check_part(part, i);
    const bool interior = i > 0 && i + 1 < parts.size();
    if (interior && part.x == part.y) {
      throw GraphError("part " + std::to_string(i) +
                       ": interior chain part needs distinct attach vertices");
    }
    std::vector<Vertex> label(part.graph.order());
    for (Vertex v = 0; v < part.graph.order(); ++v) {
      label[v] = (i > 0 && v == part.x) ? previous_y : next_label++;
    }
    for (const Edge& e : part.graph.edges()) {
      edges.emplace_back(label[e.u], label[e.v]);
    }
    previous_y = label[part.y];
  }
  return Graph(next_label, edges, structural_cap(next_label));
}

}  // namespace satnum

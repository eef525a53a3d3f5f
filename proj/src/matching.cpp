#include "satnum/matching.hpp"

#include <algorithm>

#include "satnum/errors.hpp"

namespace satnum {

const char* to_string(MatchingDiagnostic d) {
  switch (d) {
    case MatchingDiagnostic::kOk:
      return "ok";
    case MatchingDiagnostic::kEdgeNotInGraph:
      return "edge not in graph";
    case MatchingDiagnostic::kSharedVertex:
      return "edges share a vertex";
  }
  return "unknown";
}

MatchingDiagnostic check_matching(const Graph& g, std::span<const Edge> edges) {
  std::vector<bool> used(g.order(), false);
  for (const Edge& e : edges) {
    if (!g.has_edge(e)) return MatchingDiagnostic::kEdgeNotInGraph;
  }
  for (const Edge& e : edges) {
    if (used[e.u] || used[e.v]) return MatchingDiagnostic::kSharedVertex;
    used[e.u] = used[e.v] = true;
  }
  return MatchingDiagnostic::kOk;
}

bool is_matching(const Graph& g, std::span<const Edge> edges) {
  return check_matching(g, edges) == MatchingDiagnostic::kOk;
}

namespace {

std::vector<bool> covered_vertices(const Graph& g, std::span<const Edge> m) {
  std::vector<bool> covered(g.order(), false);
  for (const Edge& e : m) covered[e.u] = covered[e.v] = true;
  return covered;
}

}  // namespace

bool is_maximal_matching(const Graph& g, std::span<const Edge> edges) {
  if (!is_matching(g, edges)) return false;
  const auto covered = covered_vertices(g, edges);
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return covered[e.u] || covered[e.v];
  });
}

bool is_perfect_matching(const Graph& g, std::span<const Edge> edges) {
  return is_matching(g, edges) && 2 * edges.size() == g.order();
}

Matching::Matching(const Graph& g, std::vector<Edge> edges)
    : graph_order_(g.order()), graph_edges_(g.edges()) {
  if (auto d = check_matching(g, edges); d != MatchingDiagnostic::kOk) {
    throw GraphError(std::string("not a matching: ") + to_string(d));
  }
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
}

bool Matching::belongs_to(const Graph& g) const {
  return g.order() == graph_order_ && g.edges() == graph_edges_;
}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet uncovered(const Graph& g, std::span<const Edge> m) {
  if (auto d = check_matching(g, m); d != MatchingDiagnostic::kOk) {
    throw GraphError(std::string("not a matching: ") + to_string(d));
  }
  const auto covered = covered_vertices(g, m);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!covered[v]) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

VertexSet uncovered(const Graph& g, const Matching& m) {
  return uncovered(g, std::span<const Edge>(m.edges()));
}

bool is_independent(const Graph& g, const VertexSet& s) {
  const auto& members = s.members();
  for (Vertex v : members) {
    if (!g.has_vertex(v)) {
      throw GraphError("vertex " + std::to_string(v) + " is not in the graph");
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (g.adjacent(members[i], members[j])) return false;
  return true;
}

}  // namespace satnum

#pragma once

#include <span>
#include <vector>

#include "satnum/graph.hpp"

namespace satnum {

enum class MatchingDiagnostic {
  kOk,
  kEdgeNotInGraph,
  kSharedVertex,
};

const char* to_string(MatchingDiagnostic d);

// Checks the matching property and reports the first violation found.
MatchingDiagnostic check_matching(const Graph& g, std::span<const Edge> edges);

bool is_matching(const Graph& g, std::span<const Edge> edges);
bool is_maximal_matching(const Graph& g, std::span<const Edge> edges);
bool is_perfect_matching(const Graph& g, std::span<const Edge> edges);

// A validated set of vertex-disjoint edges of one particular graph. Edges are
// stored sorted. The graph is identified by value (order and edge set), so a
// Matching stays meaningful after the Graph object it was built from is gone.
class Matching {
 public:
  Matching() = default;

  // Throws GraphError if `edges` is not a matching of `g`.
  Matching(const Graph& g, std::vector<Edge> edges);

  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool belongs_to(const Graph& g) const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::size_t graph_order_ = 0;
  std::vector<Edge> graph_edges_;
  std::vector<Edge> edges_;
};

// Sorted, duplicate-free vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> members);

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const;
  const std::vector<Vertex>& members() const noexcept { return members_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

// Vertices covered by no edge of `m`. Throws GraphError if `m` is not a
// matching of `g`.
VertexSet uncovered(const Graph& g, std::span<const Edge> m);
VertexSet uncovered(const Graph& g, const Matching& m);

// Throws GraphError if a member is not a vertex of `g`.
bool is_independent(const Graph& g, const VertexSet& s);

}  // namespace satnum

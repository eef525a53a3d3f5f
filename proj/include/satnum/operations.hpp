#pragma once

#include <span>
#include <vector>

#include "satnum/graph.hpp"

namespace satnum {

// Vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

// Throws GraphError if `e` is not an edge of `g`.
Graph delete_edge(const Graph& g, const Edge& e);

// One copy of `core` plus core.order() copies of `attached`, core vertex i
// joined to every vertex of copy i. Core vertices keep labels 0..n1-1 and
// copy i occupies n1 + i*n2 .. n1 + (i+1)*n2 - 1.
Graph corona(const Graph& core, const Graph& attached);

// A block of a link or chain: a graph with two designated attach vertices.
struct AttachedPart {
  Graph graph;
  Vertex x = 0;  // joined to the previous part
  Vertex y = 0;  // joined to the next part
};

// Parts placed at cumulative offsets; y_i is joined by a new edge to
// x_{i+1}. Throws GraphError on an empty list or invalid attach vertex.
Graph link(std::span<const AttachedPart> parts);

// Parts glued by identifying y_i with x_{i+1}. The identified vertex keeps
// the label it had in the earlier part; the remaining vertices of each later
// part are numbered consecutively in their original order. Interior parts
// (neither first nor last) must have x != y.
Graph chain(std::span<const AttachedPart> parts);

}  // namespace satnum

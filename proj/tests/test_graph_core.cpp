#include <sstream>
#include <vector>

#include "doctest.h"
#include "satnum/edge_list.hpp"
#include "satnum/errors.hpp"
#include "satnum/graph.hpp"
#include "satnum/matching.hpp"
#include "satnum/operations.hpp"

using namespace satnum;

namespace {

std::vector<Edge> E(std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> out;
  for (auto [a, b] : pairs) out.emplace_back(a, b);
  return out;
}

// Degree sequence, sorted; enough to tell the small shapes below apart.
std::vector<std::size_t> degrees(const Graph& g) {
  std::vector<std::size_t> out;
  for (Vertex v = 0; v < g.order(); ++v) out.push_back(g.degree(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("graph construction") {
  SUBCASE("triangle") {
    Graph g(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(g.order() == 3);
    CHECK(g.size() == 3);
    CHECK(g == cycle_graph(3));
  }
  SUBCASE("single vertex") {
    Graph g(1, {});
    CHECK(g.order() == 1);
    CHECK(g.size() == 0);
  }
  SUBCASE("orientation collapses") {
    Graph g(2, {{0, 1}, {1, 0}});
    CHECK(g.size() == 1);
    CHECK(g.adjacent(1, 0));
    CHECK(g.adjacent(0, 1));
  }
  SUBCASE("input order does not matter") {
    CHECK(Graph(4, {{2, 3}, {0, 1}, {1, 2}}) == path_graph(4));
  }
  SUBCASE("rejects bad input") {
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), GraphError);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), GraphError);
    CHECK_THROWS_AS(Graph(65, {}), ResourceError);
    CHECK_NOTHROW(Graph(65, {}, 100));
  }
  SUBCASE("empty graph on zero vertices") {
    Graph g(0, {});
    CHECK(g.order() == 0);
    CHECK(g.component_count() == 0);
  }
  SUBCASE("neighbor masks") {
    const auto g = path_graph(3);
    CHECK(g.neighbor_mask(1) == 0b101);
    CHECK(g.degree(1) == 2);
  }
}

TEST_CASE("matching predicates") {
  const auto p4 = path_graph(4);
  const auto c6 = cycle_graph(6);
  CHECK(is_matching(p4, E({{0, 1}, {2, 3}})));
  CHECK_FALSE(is_matching(p4, E({{0, 1}, {1, 2}})));
  CHECK(check_matching(p4, E({{0, 1}, {1, 2}})) ==
        MatchingDiagnostic::kSharedVertex);
  CHECK(check_matching(p4, E({{0, 2}})) == MatchingDiagnostic::kEdgeNotInGraph);
  CHECK(is_matching(p4, {}));
  CHECK(is_matching(c6, {}));
  CHECK(is_matching(complete_graph(5), {}));

  CHECK(is_maximal_matching(p4, E({{1, 2}})));
  CHECK_FALSE(is_maximal_matching(p4, E({{0, 1}})));
  CHECK(is_maximal_matching(c6, E({{0, 1}, {3, 4}})));
  CHECK(is_maximal_matching(empty_graph(3), {}));
  CHECK_FALSE(is_maximal_matching(p4, E({{0, 1}, {1, 2}})));

  CHECK(is_perfect_matching(p4, E({{0, 1}, {2, 3}})));
  CHECK(is_perfect_matching(c6, E({{0, 1}, {2, 3}, {4, 5}})));
  const auto p3 = path_graph(3);
  CHECK_FALSE(is_perfect_matching(p3, {}));
  CHECK_FALSE(is_perfect_matching(p3, E({{0, 1}})));
  CHECK_FALSE(is_perfect_matching(p3, E({{1, 2}})));
}

TEST_CASE("Matching value type") {
  const auto p4 = path_graph(4);
  Matching m(p4, E({{2, 3}, {0, 1}}));
  CHECK(m.size() == 2);
  CHECK(m.edges() == E({{0, 1}, {2, 3}}));
  CHECK(m.belongs_to(p4));
  CHECK_FALSE(m.belongs_to(cycle_graph(4)));
  CHECK_THROWS_AS(Matching(p4, E({{0, 1}, {1, 2}})), GraphError);
  CHECK_THROWS_AS(Matching(p4, E({{0, 3}})), GraphError);
}

TEST_CASE("uncovered vertices") {
  CHECK(uncovered(path_graph(4), E({{1, 2}})) == VertexSet({0, 3}));
  CHECK(uncovered(cycle_graph(6), E({{0, 1}, {2, 3}, {4, 5}})).empty());
  CHECK(uncovered(cycle_graph(5), E({{0, 1}, {2, 3}})) == VertexSet({4}));
  CHECK_THROWS_AS(uncovered(path_graph(4), E({{0, 1}, {1, 2}})), GraphError);
  const auto p4 = path_graph(4);
  CHECK(uncovered(p4, Matching(p4, E({{1, 2}}))) == VertexSet({0, 3}));
}

TEST_CASE("independent sets") {
  const auto p4 = path_graph(4);
  CHECK(is_independent(p4, VertexSet({0, 2})));
  CHECK_FALSE(is_independent(p4, VertexSet({0, 1})));
  CHECK(is_independent(empty_graph(5), VertexSet({0, 1, 2, 3, 4})));
  CHECK(is_independent(p4, VertexSet{}));
  CHECK_THROWS_AS(is_independent(p4, VertexSet({7})), GraphError);
  CHECK(VertexSet({3, 1, 3}).members() == std::vector<Vertex>{1, 3});
}

TEST_CASE("disjoint union") {
  const auto u = disjoint_union(path_graph(3), path_graph(2));
  CHECK(u.order() == 5);
  CHECK(u.size() == 3);
  CHECK(disjoint_union(complete_graph(1), complete_graph(1)) == empty_graph(2));
  const auto cc = disjoint_union(cycle_graph(3), cycle_graph(3));
  CHECK(cc.order() == 6);
  CHECK(cc.size() == 6);
  CHECK(cc.component_count() == 2);
  CHECK(cc.adjacent(3, 5));
}

TEST_CASE("edge deletion") {
  const auto c5 = delete_edge(cycle_graph(5), Edge(0, 1));
  CHECK(c5.size() == 4);
  CHECK(degrees(c5) == degrees(path_graph(5)));
  CHECK(c5.component_count() == 1);

  const auto p = delete_edge(path_graph(4), Edge(1, 2));
  CHECK(p == Graph(4, {{0, 1}, {2, 3}}));
  CHECK(p.component_count() == 2);

  const auto k3 = delete_edge(complete_graph(3), Edge(1, 0));
  CHECK(k3 == Graph(3, {{0, 2}, {1, 2}}));
  CHECK_THROWS_AS(delete_edge(path_graph(4), Edge(0, 2)), GraphError);
}

TEST_CASE("corona") {
  const auto g = corona(path_graph(2), empty_graph(1));
  CHECK(g.order() == 4);
  CHECK(g.size() == 3);
  CHECK(degrees(g) == degrees(path_graph(4)));
  CHECK(g.component_count() == 1);

  const auto h = corona(cycle_graph(3), empty_graph(2));
  CHECK(h.order() == 9);
  CHECK(h.size() == 9);

  const auto w = corona(complete_graph(1), cycle_graph(4));
  CHECK(w.order() == 5);
  CHECK(w.size() == 8);
  CHECK(w.degree(0) == 4);

  // Copy i of the attached graph sits at n1 + i*n2.
  const auto labels = corona(path_graph(2), path_graph(2));
  CHECK(labels.adjacent(0, 2));
  CHECK(labels.adjacent(0, 3));
  CHECK(labels.adjacent(1, 4));
  CHECK(labels.adjacent(4, 5));
  CHECK_FALSE(labels.adjacent(0, 4));
  CHECK_THROWS_AS(corona(Graph(0, {}), path_graph(2)), GraphError);
}

TEST_CASE("link") {
  std::vector<AttachedPart> parts(3, AttachedPart{path_graph(2), 0, 1});
  CHECK(link(parts) == path_graph(6));

  std::vector<AttachedPart> one = {{cycle_graph(5), 0, 2}};
  CHECK(link(one) == cycle_graph(5));

  std::vector<AttachedPart> tri = {{cycle_graph(3), 0, 2},
                                   {cycle_graph(3), 1, 0}};
  const auto g = link(tri);
  CHECK(g.order() == 6);
  CHECK(g.size() == 7);
  CHECK(g.adjacent(2, 4));

  CHECK_THROWS_AS(link(std::vector<AttachedPart>{}), GraphError);
  std::vector<AttachedPart> bad = {{path_graph(2), 0, 5}};
  CHECK_THROWS_AS(link(bad), GraphError);
}

TEST_CASE("chain") {
  std::vector<AttachedPart> paths(3, AttachedPart{path_graph(3), 0, 2});
  CHECK(chain(paths) == path_graph(7));

  std::vector<AttachedPart> one = {{cycle_graph(4), 0, 2}};
  CHECK(chain(one) == cycle_graph(4));

  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<AttachedPart> tri(n, AttachedPart{cycle_graph(3), 0, 1});
    const auto g = chain(tri);
    CHECK(g.order() == 2 * n + 1);
    CHECK(g.size() == 3 * n);
  }

  std::vector<AttachedPart> interior = {{path_graph(3), 0, 2},
                                        {path_graph(3), 1, 1},
                                        {path_graph(3), 0, 2}};
  CHECK_THROWS_AS(chain(interior), GraphError);
}

TEST_CASE("edge list format") {
  const auto g = cycle_graph(4);
  const auto text = format_edge_list(g);
  CHECK(text == "4 4\n0 1\n0 3\n1 2\n2 3\n");
  CHECK(parse_edge_list(text) == g);

  SUBCASE("comments, blank lines and trailing whitespace") {
    const auto h = parse_edge_list("# square\n\n4 4  \n0 1\n1 2\t\n2 3\n3 0\n\n");
    CHECK(h == g);
  }
  SUBCASE("stream writer matches formatter") {
    std::ostringstream out;
    write_edge_list(out, g);
    CHECK(out.str() == text);
  }
  SUBCASE("malformed input") {
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 x\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 3\n"), ParseError);
  }
  SUBCASE("isolated vertices survive") {
    const auto e = empty_graph(3);
    CHECK(format_edge_list(e) == "3 0\n");
    CHECK(parse_edge_list("3 0\n") == e);
  }
}

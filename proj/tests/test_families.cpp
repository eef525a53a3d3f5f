#include <string>

#include "doctest.h"
#include "satnum/errors.hpp"
#include "satnum/families.hpp"
#include "satnum/graph.hpp"
#include "support/family_sweep.hpp"

using namespace satnum;
namespace fam = satnum::family;

TEST_CASE("build shapes") {
  for (std::int64_t n = 1; n <= 10; ++n) {
    const auto t = build(fam::tri(n));
    CHECK(t.order() == static_cast<std::size_t>(2 * n + 1));
    CHECK(t.size() == static_cast<std::size_t>(3 * n));
    const auto o = build(fam::sq(n));
    CHECK(o.order() == static_cast<std::size_t>(3 * n + 1));
    CHECK(o.size() == static_cast<std::size_t>(4 * n));
  }
  CHECK(build(fam::wheel(4)) == complete_graph(4));
  CHECK(build(fam::wheel(6)).size() == 10);
  for (std::int64_t m = 1; m <= 5; ++m) {
    for (std::int64_t k = 1; k <= 5; ++k) {
      CHECK(build(fam::linkpath(m, k)) ==
            path_graph(static_cast<std::size_t>(m * k)));
      if (m >= 2) {
        CHECK(build(fam::chainpath(m, k)) ==
              path_graph(static_cast<std::size_t>(k * (m - 1) + 1)));
      }
    }
  }
  CHECK(build(fam::chaincyc(3, 4, 1)) == build(fam::tri(4)));
  CHECK(build(fam::chaincyc(4, 3, 2)) == build(fam::sq(3)));
  CHECK(build(fam::empty(3)) == empty_graph(3));
  CHECK(build(fam::complete(1)).order() == 1);
}

TEST_CASE("link of cycles") {
  const auto g = build(fam::linkcyc(7, 5, 2));
  CHECK(g.order() == 35);
  CHECK(g.size() == 39);
  // Part i attaches at i*7 and leaves from i*7 + 2.
  CHECK(g.adjacent(2, 7));
  CHECK_FALSE(g.adjacent(6, 7));
  CHECK(g.adjacent(23, 28));
  CHECK(g.component_count() == 1);

  const auto c = build(fam::chaincyc(6, 3, 3));
  CHECK(c.order() == 16);
  CHECK(c.size() == 18);
}

TEST_CASE("family order matches build") {
  for (const auto& spec : testing::family_sweep(200, 64)) {
    CAPTURE(render(spec));
    CHECK(family_order(spec) == build(spec).order());
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(build(fam::cycle(2)), GraphError);
  CHECK_THROWS_AS(build(fam::wheel(3)), GraphError);
  CHECK_THROWS_AS(build(fam::path(0)), GraphError);
  CHECK_THROWS_AS(build(fam::linkcyc(6, 2, 4)), GraphError);
  CHECK_THROWS_AS(build(fam::linkcyc(6, 2, 0)), GraphError);
  CHECK_THROWS_AS(build(fam::chainpath(1, 3)), GraphError);
  CHECK_THROWS_AS(build(fam::deledge(fam::path(4), 0, 2)), GraphError);
  CHECK_THROWS_AS(build(fam::path(65)), ResourceError);
  CHECK_NOTHROW(build(fam::path(65), 100));
  CHECK_THROWS_AS(build(fam::corona(fam::path(8), fam::path(8))),
                  ResourceError);
}

TEST_CASE("parse and render") {
  const auto spec = parse_family("corona(cycle(4),path(3))");
  CHECK(spec == fam::corona(fam::cycle(4), fam::path(3)));
  CHECK(parse_family("linkcyc(7,5,2)") == fam::linkcyc(7, 5, 2));
  CHECK(parse_family("  deledge( path(5) , 1 , 2 ) ") ==
        fam::deledge(fam::path(5), 1, 2));
  CHECK(parse_family("union(empty(2),complete(3))") ==
        fam::disjoint(fam::empty(2), fam::complete(3)));
  CHECK(render(parse_family(" corona( path(2) , empty(2) ) ")) ==
        "corona(path(2),empty(2))");

  for (const auto& s : testing::family_sweep(200, 64)) {
    CHECK(parse_family(render(s)) == s);
  }
}

TEST_CASE("parse errors carry positions") {
  auto position = [](const std::string& text) -> std::size_t {
    try {
      parse_family(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return 0;
  };
  CHECK(position("corona(path(2)") == 15);
  CHECK(position("") == 1);
  CHECK(position("banana(3)") == 1);
  CHECK(position("path(3") == 7);
  CHECK(position("path(3))") == 8);
  CHECK(position("path(x)") == 6);
  CHECK(position("path(3,4)") == 7);
  CHECK(position("corona(path(2),3)") == 16);
  CHECK(position("path(path(2))") == 6);
  CHECK(position("path(-1)") == 6);
  CHECK(family_kind("chaincyc") == FamilyKind::kChainCyc);
  CHECK_FALSE(family_kind("nope").has_value());
  CHECK(family_name(FamilyKind::kUnion) == "union");
}

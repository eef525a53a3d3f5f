#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "satnum/graph.hpp"

namespace satnum {

enum class FamilyKind {
  kPath,       // path(n)
  kCycle,      // cycle(n)
  kWheel,      // wheel(n): hub 0 plus a cycle on 1..n-1
  kEmpty,      // empty(n): n isolated vertices
  kComplete,   // complete(n)
  kTri,        // tri(n): chain of n triangles
  kSq,         // sq(n): chain of n squares, opposite attach vertices
  kLinkPath,   // linkpath(m, k)
  kChainPath,  // chainpath(m, k)
  kLinkCyc,    // linkcyc(m, k, d)
  kChainCyc,   // chaincyc(m, k, d)
  kUnion,      // union(A, B)
  kCorona,     // corona(A, B)
  kDelEdge,    // deledge(A, u, v)
};

// Expression tree for a parameterized family instance. Integer arguments and
// graph arguments are stored separately, each in the order written.
struct FamilySpec {
  FamilyKind kind = FamilyKind::kPath;
  std::vector<std::int64_t> ints;
  std::vector<FamilySpec> children;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

std::string_view family_name(FamilyKind kind);
std::optional<FamilyKind> family_kind(std::string_view name);

// Throws ParseError (1-based byte position) on unknown names, arity or type
// mismatches, stray characters and unbalanced parentheses. Parameter ranges
// are not checked here; see build().
FamilySpec parse_family(std::string_view text);

// Canonical text form: no whitespace, arguments in signature order.
std::string render(const FamilySpec& spec);

// Vertex count of the built instance without building it. Throws GraphError
// on the same range violations as build().
std::size_t family_order(const FamilySpec& spec);

// Throws GraphError on an invalid parameter and ResourceError if the
// instance would exceed max_vertices.
Graph build(const FamilySpec& spec,
            std::size_t max_vertices = kDefaultMaxVertices);

// Convenience constructors.
namespace family {
FamilySpec path(std::int64_t n);
FamilySpec cycle(std::int64_t n);
FamilySpec wheel(std::int64_t n);
FamilySpec empty(std::int64_t n);
FamilySpec complete(std::int64_t n);
FamilySpec tri(std::int64_t n);
FamilySpec sq(std::int64_t n);
FamilySpec linkpath(std::int64_t m, std::int64_t k);
FamilySpec chainpath(std::int64_t m, std::int64_t k);
FamilySpec linkcyc(std::int64_t m, std::int64_t k, std::int64_t d);
FamilySpec chaincyc(std::int64_t m, std::int64_t k, std::int64_t d);
FamilySpec disjoint(FamilySpec a, FamilySpec b);
FamilySpec corona(FamilySpec a, FamilySpec b);
FamilySpec deledge(FamilySpec a, std::int64_t u, std::int64_t v);
}  // namespace family

}  // namespace satnum

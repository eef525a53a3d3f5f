#include "satnum/families.hpp"

#include <array>

#include "satnum/errors.hpp"
#include "satnum/operations.hpp"
#include "satnum_internal/family_signature.hpp"

namespace satnum {

namespace detail {

// 'i' = integer argument, 'g' = family argument.
constexpr std::array<FamilySignature, 14> kSignatures{{
    {FamilyKind::kPath, "path", "i"},
    {FamilyKind::kCycle, "cycle", "i"},
    {FamilyKind::kWheel, "wheel", "i"},
    {FamilyKind::kEmpty, "empty", "i"},
    {FamilyKind::kComplete, "complete", "i"},
    {FamilyKind::kTri, "tri", "i"},
    {FamilyKind::kSq, "sq", "i"},
    {FamilyKind::kLinkPath, "linkpath", "ii"},
    {FamilyKind::kChainPath, "chainpath", "ii"},
    {FamilyKind::kLinkCyc, "linkcyc", "iii"},
    {FamilyKind::kChainCyc, "chaincyc", "iii"},
    {FamilyKind::kUnion, "union", "gg"},
    {FamilyKind::kCorona, "corona", "gg"},
    {FamilyKind::kDelEdge, "deledge", "gii"},
}};

const FamilySignature& signature(FamilyKind kind) {
  for (const auto& s : kSignatures) {
    if (s.kind == kind) return s;
  }
  throw std::logic_error("unknown family kind");
}

const FamilySignature* find_signature(std::string_view name) {
  for (const auto& s : kSignatures) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

}  // namespace detail

std::string_view family_name(FamilyKind kind) {
  return detail::signature(kind).name;
}

std::optional<FamilyKind> family_kind(std::string_view name) {
  if (const auto* s = detail::find_signature(name)) return s->kind;
  return std::nullopt;
}

std::string render(const FamilySpec& spec) {
  const auto& sig = detail::signature(spec.kind);
  std::string out(sig.name);
  out += '(';
  std::size_t next_int = 0, next_child = 0;
  for (std::size_t i = 0; i < sig.args.size(); ++i) {
    if (i > 0) out += ',';
    if (sig.args[i] == 'i') {
      out += std::to_string(spec.ints.at(next_int++));
    } else {
      out += render(spec.children.at(next_child++));
    }
  }
  out += ')';
  return out;
}

namespace {

void require(bool ok, const FamilySpec& spec, const std::string& why) {
  if (!ok) throw GraphError(render(spec) + ": " + why);
}

void check_shape(const FamilySpec& spec) {
  const auto& sig = detail::signature(spec.kind);
  std::size_t ints = 0, graphs = 0;
  for (char c : sig.args) (c == 'i' ? ints : graphs)++;
  if (spec.ints.size() != ints || spec.children.size() != graphs) {
    throw GraphError(std::string(sig.name) + " expects " +
                     std::to_string(ints) + " integer and " +
                     std::to_string(graphs) + " family arguments");
  }
}

// Parameter checks shared by family_order and build.
void validate(const FamilySpec& spec) {
  check_shape(spec);
  const auto& a = spec.ints;
  for (auto value : a) {
    require(value >= 0, spec, "arguments must be >= 0");
    require(value <= 1'000'000, spec, "argument too large");
  }
  switch (spec.kind) {
    case FamilyKind::kPath:
    case FamilyKind::kEmpty:
    case FamilyKind::kComplete:
    case FamilyKind::kTri:
    case FamilyKind::kSq:
      require(a[0] >= 1, spec, "n must be >= 1");
      break;
    case FamilyKind::kCycle:
      require(a[0] >= 3, spec, "cycle needs n >= 3");
      break;
    case FamilyKind::kWheel:
      require(a[0] >= 4, spec, "wheel needs n >= 4 (hub plus a cycle)");
      break;
    case FamilyKind::kLinkPath:
      require(a[0] >= 1 && a[1] >= 1, spec, "m and k must be >= 1");
      break;
    case FamilyKind::kChainPath:
      require(a[0] >= 1 && a[1] >= 1, spec, "m and k must be >= 1");
      require(a[0] >= 2 || a[1] == 1, spec,
              "a chain of more than one path needs m >= 2");
      break;
    case FamilyKind::kLinkCyc:
    case FamilyKind::kChainCyc:
      require(a[0] >= 3, spec, "cycle order m must be >= 3");
      require(a[1] >= 1, spec, "k must be >= 1");
      require(a[2] >= 1 && a[2] <= a[0] / 2, spec,
              "attach distance d must satisfy 1 <= d <= m/2");
      break;
    case FamilyKind::kUnion:
    case FamilyKind::kCorona:
    case FamilyKind::kDelEdge:
      break;
  }
}

std::vector<AttachedPart> repeated(const Graph& g, std::int64_t k, Vertex x,
                                   Vertex y) {
  return std::vector<AttachedPart>(static_cast<std::size_t>(k),
                                   AttachedPart{g, x, y});
}

Graph wheel_graph(std::size_t n, std::size_t max_vertices) {
  std::vector<Edge> edges;
  const auto rim = n - 1;
  for (std::size_t i = 0; i < rim; ++i) {
    edges.emplace_back(0, 1 + i);
    edges.emplace_back(1 + i, 1 + (i + 1) % rim);
  }
  return Graph(n, edges, max_vertices);
}

Graph build_unchecked(const FamilySpec& spec) {
  validate(spec);
  const auto& a = spec.ints;
  const auto n0 = static_cast<std::size_t>(a.empty() ? 0 : a[0]);
  // build() has already checked the order against the caller's cap.
  const auto cap = std::max(n0, kDefaultMaxVertices);
  switch (spec.kind) {
    case FamilyKind::kPath:
      return path_graph(n0, cap);
    case FamilyKind::kCycle:
      return cycle_graph(n0, cap);
    case FamilyKind::kWheel:
      return wheel_graph(n0, cap);
    case FamilyKind::kEmpty:
      return empty_graph(n0, cap);
    case FamilyKind::kComplete:
      return complete_graph(n0, cap);
    case FamilyKind::kTri:
      return chain(repeated(cycle_graph(3), a[0], 0, 1));
    case FamilyKind::kSq:
      return chain(repeated(cycle_graph(4), a[0], 0, 2));
    case FamilyKind::kLinkPath:
      return link(repeated(path_graph(n0, cap), a[1], 0,
                           static_cast<Vertex>(n0 - 1)));
    case FamilyKind::kChainPath:
      return chain(repeated(path_graph(n0, cap), a[1], 0,
                            static_cast<Vertex>(n0 - 1)));
    case FamilyKind::kLinkCyc:
      return link(repeated(cycle_graph(n0, cap), a[1], 0,
                           static_cast<Vertex>(a[2])));
    case FamilyKind::kChainCyc:
      return chain(repeated(cycle_graph(n0, cap), a[1], 0,
                            static_cast<Vertex>(a[2])));
    case FamilyKind::kUnion:
      return disjoint_union(build_unchecked(spec.children[0]),
                            build_unchecked(spec.children[1]));
    case FamilyKind::kCorona:
      return corona(build_unchecked(spec.children[0]),
                    build_unchecked(spec.children[1]));
    case FamilyKind::kDelEdge: {
      Graph base = build_unchecked(spec.children[0]);
      require(static_cast<std::size_t>(a[0]) < base.order() &&
                  static_cast<std::size_t>(a[1]) < base.order() &&
                  base.adjacent(static_cast<Vertex>(a[0]),
                                static_cast<Vertex>(a[1])),
              spec, "edge to delete is not present");
      return delete_edge(base, Edge(static_cast<Vertex>(a[0]),
                                    static_cast<Vertex>(a[1])));
    }
  }
  throw std::logic_error("unknown family kind");
}

}  // namespace

std::size_t family_order(const FamilySpec& spec) {
  validate(spec);
  const auto& a = spec.ints;
  auto u = [](std::int64_t v) { return static_cast<std::size_t>(v); };
  switch (spec.kind) {
    case FamilyKind::kPath:
    case FamilyKind::kCycle:
    case FamilyKind::kWheel:
    case FamilyKind::kEmpty:
    case FamilyKind::kComplete:
      return u(a[0]);
    case FamilyKind::kTri:
      return 2 * u(a[0]) + 1;
    case FamilyKind::kSq:
      return 3 * u(a[0]) + 1;
    case FamilyKind::kLinkPath:
    case FamilyKind::kLinkCyc:
      return u(a[0]) * u(a[1]);
    case FamilyKind::kChainPath:
    case FamilyKind::kChainCyc:
      return u(a[0]) * u(a[1]) - (u(a[1]) - 1);
    case FamilyKind::kUnion:
      return family_order(spec.children[0]) + family_order(spec.children[1]);
    case FamilyKind::kCorona:
      return family_order(spec.children[0]) *
             (1 + family_order(spec.children[1]));
    case FamilyKind::kDelEdge:
      return family_order(spec.children[0]);
  }
  throw std::logic_error("unknown family kind");
}

Graph build(const FamilySpec& spec, std::size_t max_vertices) {
  const auto n = family_order(spec);
  if (n > max_vertices) throw ResourceError("max-vertices", max_vertices, n);
  return build_unchecked(spec);
}

namespace family {

FamilySpec path(std::int64_t n) { return {FamilyKind::kPath, {n}, {}}; }
FamilySpec cycle(std::int64_t n) { return {FamilyKind::kCycle, {n}, {}}; }
FamilySpec wheel(std::int64_t n) { return {FamilyKind::kWheel, {n}, {}}; }
FamilySpec empty(std::int64_t n) { return {FamilyKind::kEmpty, {n}, {}}; }
FamilySpec complete(std::int64_t n) {
  return {FamilyKind::kComplete, {n}, {}};
}
FamilySpec tri(std::int64_t n) { return {FamilyKind::kTri, {n}, {}}; }
FamilySpec sq(std::int64_t n) { return {FamilyKind::kSq, {n}, {}}; }
FamilySpec linkpath(std::int64_t m, std::int64_t k) {
  return {FamilyKind::kLinkPath, {m, k}, {}};
}
FamilySpec chainpath(std::int64_t m, std::int64_t k) {
  return {FamilyKind::kChainPath, {m, k}, {}};
}
FamilySpec linkcyc(std::int64_t m, std::int64_t k, std::int64_t d) {
  return {FamilyKind::kLinkCyc, {m, k, d}, {}};
}
FamilySpec chaincyc(std::int64_t m, std::int64_t k, std::int64_t d) {
  return {FamilyKind::kChainCyc, {m, k, d}, {}};
}
FamilySpec disjoint(FamilySpec a, FamilySpec b) {
  return {FamilyKind::kUnion, {}, {std::move(a), std::move(b)}};
}
FamilySpec corona(FamilySpec a, FamilySpec b) {
  return {FamilyKind::kCorona, {}, {std::move(a), std::move(b)}};
}
FamilySpec deledge(FamilySpec a, std::int64_t u, std::int64_t v) {
  return {FamilyKind::kDelEdge, {u, v}, {std::move(a)}};
}

}  // namespace family

}  // namespace satnum

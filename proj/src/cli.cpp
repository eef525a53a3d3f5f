#include "satnum/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "satnum/claims.hpp"
#include "satnum/edge_list.hpp"
#include "satnum/errors.hpp"
#include "satnum/formulas.hpp"

#ifndef SATNUM_DEFAULT_MANIFEST
#define SATNUM_DEFAULT_MANIFEST "data/expected_discrepancies.txt"
#endif

namespace satnum::cli {

namespace {

namespace f = satnum::formulas;
using nlohmann::json;

bool in(std::int64_t d, std::initializer_list<std::int64_t> set) {
  return std::find(set.begin(), set.end(), d) != set.end();
}

std::string link_cycles_claim(std::int64_t m, std::int64_t d) {
  switch (m % 3) {
    case 0:
      return "prop-link-cycles-m0";
    case 1:
      return in(d, {1, 3, 4}) ? "prop-link-cycles-m1-d134"
                              : "prop-link-cycles-m1-d25";
    default:
      return in(d, {1, 4}) ? "prop-link-cycles-m2-d14"
                           : "prop-link-cycles-m2-d235";
  }
}

std::string chain_cycles_claim(std::int64_t m, std::int64_t d) {
  switch (m % 3) {
    case 0:
      return d == 3 ? "obs-chain-cycles-m0-d3" : "obs-chain-cycles-m0-d1245";
    case 1:
      return "obs-chain-cycles-m1";
    default:
      return in(d, {1, 4}) ? "obs-chain-cycles-m2-d14"
                           : "obs-chain-cycles-m2-d235";
  }
}

std::optional<FormulaHit> corona_formula(const FamilySpec& core,
                                         const FamilySpec& copy,
                                         const SolverCaps& caps) {
  if (core.kind == FamilyKind::kComplete && core.ints[0] == 1 &&
      copy.kind == FamilyKind::kWheel) {
    return FormulaHit{"ex-k1-corona-wheel", f::s_k1_corona_wheel(copy.ints[0])};
  }
  const auto m = copy.ints.empty() ? 0 : copy.ints[0];
  switch (copy.kind) {
    case FamilyKind::kEmpty:
      if (m < 1) return std::nullopt;
      return FormulaHit{"thm-corona-empty",
                        f::s_corona_empty(f::corona_stats(build(core), caps), m)};
    case FamilyKind::kPath:
      return FormulaHit{"thm-corona-path",
                        f::s_corona_path(f::corona_stats(build(core), caps), m)};
    case FamilyKind::kCycle:
      return FormulaHit{"thm-corona-cycle",
                        f::s_corona_cycle(f::corona_stats(build(core), caps), m)};
    default:
      return std::nullopt;
  }
}

std::optional<FormulaHit> lookup(const FamilySpec& spec,
                                 const SolverCaps& caps) {
  const auto& a = spec.ints;
  switch (spec.kind) {
    case FamilyKind::kPath:
      return FormulaHit{"s-path", f::s_path(a[0])};
    case FamilyKind::kCycle:
      return FormulaHit{"s-cycle", f::s_cycle(a[0])};
    case FamilyKind::kWheel:
      return FormulaHit{"s-wheel", f::s_wheel(a[0])};
    case FamilyKind::kTri:
      return FormulaHit{"thm-tn", f::s_tri(a[0])};
    case FamilyKind::kSq:
      return FormulaHit{"thm-on", f::s_sq(a[0])};
    case FamilyKind::kLinkPath:
      return FormulaHit{"prop-link-paths", f::s_link_paths(a[0], a[1])};
    case FamilyKind::kChainPath:
      return FormulaHit{"obs-chain-paths", f::s_chain_paths(a[0], a[1])};
    case FamilyKind::kLinkCyc:
    case FamilyKind::kChainCyc: {
      const auto m = a[0], k = a[1], d = a[2];
      // One part is a plain cycle; the chain rows fail there.
      if (k == 1) return FormulaHit{"s-cycle", f::s_cycle(m)};
      if (spec.kind == FamilyKind::kLinkCyc) {
        if (!f::link_cycles_supported(m, d)) return std::nullopt;
        return FormulaHit{link_cycles_claim(m, d), f::s_link_cycles(m, k, d)};
      }
      if (!f::chain_cycles_supported(m, d)) return std::nullopt;
      return FormulaHit{chain_cycles_claim(m, d), f::s_chain_cycles(m, k, d)};
    }
    case FamilyKind::kUnion: {
      const auto first = lookup(spec.children[0], caps);
      const auto second = lookup(spec.children[1], caps);
      if (!first || !second) return std::nullopt;
      return FormulaHit{"lemma-union", f::s_union(first->value, second->value)};
    }
    case FamilyKind::kCorona:
      return corona_formula(spec.children[0], spec.children[1], caps);
    case FamilyKind::kDelEdge: {
      const auto& base = spec.children[0];
      if (base.kind == FamilyKind::kCycle) {
        return FormulaHit{"prop-2.2-i", f::s_cycle_minus_edge(base.ints[0])};
      }
      if (base.kind == FamilyKind::kPath) {
        // build() has already checked that the edge exists.
        return FormulaHit{"prop-2.2-ii-exact",
                          f::s_path_minus_edge_exact(base.ints[0],
                                                     std::max(a[0], a[1]))};
      }
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

struct ComputeOptions {
  std::string family;
  std::string graph_path;
  std::string method = "auto";
  std::string format = "text";
  std::size_t cap_n = SolverCaps{}.exact_vertices;
  std::size_t cap_edges = SolverCaps{}.brute_edges;
};

struct GenerateOptions {
  std::string family;
  std::string out_path;
};

struct AuditOptions {
  std::vector<std::string> claims;
  std::string manifest = SATNUM_DEFAULT_MANIFEST;
  std::string format = "text";
  std::size_t cap_n = claims::AuditConfig{}.caps.exact_vertices;
  std::size_t cap_edges = claims::AuditConfig{}.caps.brute_edges;
  unsigned threads = 0;
};

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

int compute(const ComputeOptions& opt, std::ostream& out) {
  SolverCaps caps;
  caps.exact_vertices = opt.cap_n;
  caps.brute_edges = opt.cap_edges;

  std::optional<FamilySpec> spec;
  std::string label;
  Graph g;
  if (!opt.family.empty()) {
    spec = parse_family(opt.family);
    label = render(*spec);
    g = build(*spec);
  } else {
    g = read_edge_list(opt.graph_path);
    label = opt.graph_path;
  }

  std::optional<FormulaHit> hit;
  if (spec && (opt.method == "auto" || opt.method == "formula")) {
    hit = formula_for(*spec, caps);
  }
  if (opt.method == "formula" && !hit) {
    throw UnsupportedParameter("no closed form applies to " + label);
  }

  std::int64_t value = 0;
  std::optional<std::vector<Edge>> witness;
  Method method;
  if (hit) {
    value = hit->value;
    method = Method::formula(hit->claim_id);
  } else if (opt.method == "brute") {
    value = saturation_bruteforce(g, caps);
    method = Method::brute_force();
  } else {
    const auto result = saturation_exact(g, caps);
    value = result.value;
    witness = result.witness.edges();
    method = Method::exact();
  }

  const auto alpha_prime = matching_number(g, caps).size;
  const auto unsaturated = static_cast<std::int64_t>(g.order()) - 2 * alpha_prime;
  const Rational half_alpha(alpha_prime, 2);
  // The independence bound needs an exact search; it is omitted above the cap.
  std::optional<Rational> independence;
  if (g.order() <= caps.exact_vertices) {
    independence = bounds(g, caps).independence;
  }

  if (opt.format == "json") {
    json j;
    j["graph"] = label;
    j["vertices"] = g.order();
    j["edges"] = g.size();
    j["s"] = value;
    j["matching_number"] = alpha_prime;
    j["unsaturated"] = unsaturated;
    j["bounds"] = {
        {"half_alpha", to_string(half_alpha)},
        {"independence",
         independence ? json(to_string(*independence)) : json(nullptr)}};
    j["witness"] = witness ? edges_json(*witness) : json(nullptr);
    j["method"] = to_string(method);
    out << j.dump(2) << '\n';
    return kOk;
  }

  out << "graph: " << label << '\n'
      << "vertices: " << g.order() << '\n'
      << "edges: " << g.size() << '\n'
      << "s: " << value << '\n'
      << "matching_number: " << alpha_prime << '\n'
      << "unsaturated: " << unsaturated << '\n'
      << "bound_half_alpha: " << to_string(half_alpha) << '\n'
      << "bound_independence: "
      << (independence ? to_string(*independence) : "n/a") << '\n'
      << "witness:";
  if (witness) {
    for (const Edge& e : *witness) out << ' ' << to_string(e);
  } else {
    out << " n/a";
  }
  out << '\n' << "method: " << to_string(method) << '\n';
  return kOk;
}

int generate(const GenerateOptions& opt, std::ostream& out) {
  const Graph g = build(parse_family(opt.family));
  if (opt.out_path.empty()) {
    write_edge_list(out, g);
  } else {
    write_edge_list(opt.out_path, g);
  }
  return kOk;
}

int audit(const AuditOptions& opt, std::ostream& out, std::ostream& err) {
  claims::AuditConfig config;
  config.caps.exact_vertices = opt.cap_n;
  config.caps.brute_edges = opt.cap_edges;
  config.threads = opt.threads;
  const auto summary = claims::run_all(config, opt.claims);

  std::set<std::string> ids;
  for (const auto& c : summary.claims) ids.insert(c.id);
  const auto manifest = claims::read_manifest(opt.manifest);
  const auto diff = claims::compare(summary.counterexamples(), manifest, ids);

  if (opt.format == "json") {
    auto j = claims::to_json(summary);
    j["manifest"] = {
        {"path", opt.manifest},
        {"unexpected",
         std::vector<std::string>(diff.unexpected.begin(), diff.unexpected.end())},
        {"missing",
         std::vector<std::string>(diff.missing.begin(), diff.missing.end())},
        {"match", diff.empty()}};
    out << j.dump(2) << '\n';
  } else {
    claims::print_table(out, summary);
  }
  if (diff.empty()) return kOk;
  err << "audit does not match manifest " << opt.manifest << '\n';
  for (const auto& key : diff.unexpected) err << "+ " << key << '\n';
  for (const auto& key : diff.missing) err << "- " << key << '\n';
  return kAuditMismatch;
}

}  // namespace

std::optional<FormulaHit> formula_for(const FamilySpec& spec,
                                      const SolverCaps& caps) {
  try {
    return lookup(spec, caps);
  } catch (const ResourceError&) {
    return std::nullopt;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Saturation numbers of graphs: exact search, closed forms and "
               "a claims audit"};
  app.name("satnum");
  app.require_subcommand(1);

  ComputeOptions copt;
  auto* compute_cmd = app.add_subcommand("compute", "compute s(G)");
  auto* family_opt = compute_cmd->add_option("--family", copt.family,
                                             "family expression, e.g. cycle(7)");
  auto* graph_opt =
      compute_cmd->add_option("--graph", copt.graph_path, "edge-list file");
  family_opt->excludes(graph_opt);
  compute_cmd->add_option("--method", copt.method)
      ->check(CLI::IsMember({"auto", "exact", "brute", "formula"}))
      ->capture_default_str();
  compute_cmd->add_option("--format", copt.format)
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  compute_cmd->add_option("--cap-n", copt.cap_n, "exact solver vertex cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  compute_cmd->add_option("--cap-edges", copt.cap_edges, "brute force edge cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  GenerateOptions gopt;
  auto* generate_cmd =
      app.add_subcommand("generate", "write a family instance as an edge list");
  generate_cmd->add_option("family", gopt.family, "family expression")
      ->required();
  generate_cmd->add_option("out", gopt.out_path, "output path (default stdout)");

  AuditOptions aopt;
  auto* audit_cmd = app.add_subcommand("audit", "compare closed forms with the "
                                                "exact solver");
  audit_cmd->add_option("--claim", aopt.claims, "claim id (repeatable)");
  audit_cmd->add_option("--manifest", aopt.manifest,
                        "expected-discrepancy manifest")
      ->capture_default_str();
  audit_cmd->add_option("--format", aopt.format)
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  audit_cmd->add_option("--cap-n", aopt.cap_n, "exact solver vertex cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  audit_cmd->add_option("--cap-edges", aopt.cap_edges, "brute force edge cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  audit_cmd->add_option("--threads", aopt.threads, "worker threads (0: auto)")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (compute_cmd->parsed() && copt.family.empty() && copt.graph_path.empty()) {
      throw CLI::RequiredError("--family or --graph");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (compute_cmd->parsed()) return compute(copt, out);
    if (generate_cmd->parsed()) return generate(gopt, out);
    return audit(aopt, out, err);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace satnum::cli

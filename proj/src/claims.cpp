#include "satnum/claims.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "satnum/errors.hpp"
#include "satnum/families.hpp"
#include "satnum/formulas.hpp"
#include "satnum/operations.hpp"

namespace satnum::claims {

const char* to_string(Relation r) {
  switch (r) {
    case Relation::kEqual:
      return "equal";
    case Relation::kLowerBound:
      return "lower_bound";
    case Relation::kUpperBound:
      return "upper_bound";
    case Relation::kSandwich:
      return "sandwich";
    case Relation::kExists:
      return "exists";
  }
  return "unknown";
}

const char* to_string(RowStatus s) {
  switch (s) {
    case RowStatus::kCompared:
      return "compared";
    case RowStatus::kCapSkipped:
      return "cap-skipped";
    case RowStatus::kError:
      return "error";
  }
  return "unknown";
}

std::string row_key(const std::string& claim_id, const Params& params) {
  std::string key = claim_id;
  for (const auto& [name, value] : params) {
    key += ' ' + name + '=' + std::to_string(value);
  }
  return key;
}

namespace {

namespace fam = satnum::family;
namespace f = satnum::formulas;

std::int64_t get(const Params& p, std::string_view name) {
  for (const auto& [key, value] : p) {
    if (key == name) return value;
  }
  throw std::logic_error("missing parameter " + std::string(name));
}

Instance from_spec(const FamilySpec& spec) {
  return {render(spec), build(spec, 64)};
}

// Small graphs used as corona cores; matches the acceptance list.
const std::vector<FamilySpec>& corona_cores() {
  static const std::vector<FamilySpec> cores = {
      fam::path(2),  fam::path(3),  fam::path(4),   fam::path(5),
      fam::path(6),  fam::cycle(3), fam::cycle(4),  fam::cycle(5),
      fam::cycle(6), fam::path(1),  fam::empty(2),  fam::empty(3),
  };
  return cores;
}

// A broader set of small shapes for union, bound and K_1-corona sweeps.
const std::vector<FamilySpec>& zoo() {
  static const std::vector<FamilySpec> shapes = {
      fam::path(1),          fam::path(2),        fam::path(3),
      fam::path(4),          fam::path(5),        fam::path(6),
      fam::path(7),          fam::cycle(3),       fam::cycle(4),
      fam::cycle(5),         fam::cycle(6),       fam::cycle(7),
      fam::wheel(4),         fam::wheel(5),       fam::wheel(6),
      fam::complete(4),      fam::complete(5),    fam::empty(2),
      fam::empty(3),         fam::tri(2),         fam::tri(3),
      fam::sq(2),            fam::linkcyc(4, 2, 1),
      fam::corona(fam::path(3), fam::empty(1)),
      fam::deledge(fam::complete(5), 0, 1),
  };
  return shapes;
}

std::int64_t exact_value(const FamilySpec& spec, const SolverCaps& caps) {
  return saturation_value(build(spec, 64), caps);
}

std::int64_t zoo_size() { return static_cast<std::int64_t>(zoo().size()); }
std::int64_t core_count() {
  return static_cast<std::int64_t>(corona_cores().size());
}

// Claims whose formula is a function of the parameters alone.
Claim equality(std::string id, std::string statement,
               std::vector<ParamRange> params,
               std::function<bool(const Params&)> applies,
               std::function<FamilySpec(const Params&)> spec,
               std::function<std::int64_t(const Params&)> formula,
               std::string notes = {}) {
  Claim c;
  c.id = std::move(id);
  c.statement = std::move(statement);
  c.notes = std::move(notes);
  c.relation = Relation::kEqual;
  c.params = std::move(params);
  c.applies = std::move(applies);
  c.build = [spec](const Params& p) { return from_spec(spec(p)); };
  c.formula = [formula](const Params& p, const SolverCaps&) {
    return Expected{formula(p), std::nullopt};
  };
  return c;
}

auto always = [](const Params&) { return true; };

// Link-of-cycles rows by residue class of m and attach distance set.
Claim link_cycles_row(std::string id, std::string statement, int residue,
                      std::vector<std::int64_t> distances,
                      std::string notes = {}) {
  return equality(
      std::move(id), std::move(statement),
      {{"m", 3, 12}, {"n", 1, 5}, {"d", 1, 5}},
      [residue, distances](const Params& p) {
        const auto m = get(p, "m"), d = get(p, "d");
        return m % 3 == residue && d <= m / 2 &&
               std::find(distances.begin(), distances.end(), d) !=
                   distances.end();
      },
      [](const Params& p) {
        return fam::linkcyc(get(p, "m"), get(p, "n"), get(p, "d"));
      },
      [](const Params& p) {
        return f::s_link_cycles(get(p, "m"), get(p, "n"), get(p, "d"));
      },
      std::move(notes));
}

Claim chain_cycles_row(std::string id, std::string statement, int residue,
                       std::vector<std::int64_t> distances,
                       std::string notes = {}) {
  return equality(
      std::move(id), std::move(statement),
      {{"m", 3, 12}, {"n", 1, 5}, {"d", 1, 5}},
      [residue, distances](const Params& p) {
        const auto m = get(p, "m"), d = get(p, "d");
        return m % 3 == residue && d <= m / 2 &&
               std::find(distances.begin(), distances.end(), d) !=
                   distances.end();
      },
      [](const Params& p) {
        return fam::chaincyc(get(p, "m"), get(p, "n"), get(p, "d"));
      },
      [](const Params& p) {
        return f::s_chain_cycles(get(p, "m"), get(p, "n"), get(p, "d"));
      },
      std::move(notes));
}

// Attach-vertex enumeration for the mixed links quoted in the text. Cycle
// blocks are vertex-transitive, so an end block attaches at 0 and an
// interior block uses x = 0 with y in {0, 1, 2}; path blocks are enumerated
// in full.
struct MixedLink {
  std::vector<FamilySpec> blocks;
  std::int64_t stated = 0;
};

const std::vector<MixedLink>& mixed_links() {
  static const std::vector<MixedLink> links = {
      {{fam::cycle(4), fam::path(5), fam::path(4)}, 2 + 2 + 1},
      {{fam::cycle(4), fam::path(5), fam::cycle(4)}, 2 * 2 + 2 - 1},
      {{fam::cycle(4), fam::path(5), fam::cycle(4), fam::path(5)},
       2 * 2 + 2 * 2 - 2},
  };
  return links;
}

struct AttachChoice {
  std::vector<std::pair<Vertex, Vertex>> xy;
};

// Options for each block, as (x, y) pairs.
std::vector<std::vector<std::pair<Vertex, Vertex>>> attach_options(
    const MixedLink& link) {
  std::vector<std::vector<std::pair<Vertex, Vertex>>> options;
  const auto k = link.blocks.size();
  for (std::size_t i = 0; i < k; ++i) {
    const auto& block = link.blocks[i];
    const auto n = static_cast<Vertex>(family_order(block));
    const bool first = i == 0, last = i + 1 == k;
    std::vector<std::pair<Vertex, Vertex>> opts;
    if (block.kind == FamilyKind::kCycle) {
      if (first || last) {
        opts.emplace_back(0, 0);
      } else {
        for (Vertex y = 0; y <= n / 2; ++y) opts.emplace_back(0, y);
      }
    } else if (first) {
      for (Vertex y = 0; y < n; ++y) opts.emplace_back(0, y);
    } else if (last) {
      for (Vertex x = 0; x < n; ++x) opts.emplace_back(x, 0);
    } else {
      for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y) opts.emplace_back(x, y);
    }
    options.push_back(std::move(opts));
  }
  return options;
}

std::int64_t choice_count(const MixedLink& link) {
  std::int64_t count = 1;
  for (const auto& opts : attach_options(link)) {
    count *= static_cast<std::int64_t>(opts.size());
  }
  return count;
}

Instance mixed_link_instance(const MixedLink& link, std::int64_t choice) {
  const auto options = attach_options(link);
  std::vector<AttachedPart> parts;
  std::string label = "link(";
  for (std::size_t i = 0; i < link.blocks.size(); ++i) {
    const auto& opts = options[i];
    const auto pick = opts[static_cast<std::size_t>(
        choice % static_cast<std::int64_t>(opts.size()))];
    choice /= static_cast<std::int64_t>(opts.size());
    parts.push_back({build(link.blocks[i]), pick.first, pick.second});
    if (i > 0) label += ',';
    label += render(link.blocks[i]) + "[x=" + std::to_string(pick.first) +
             ",y=" + std::to_string(pick.second) + "]";
  }
  label += ')';
  return {label, satnum::link(parts)};
}

std::vector<Claim> make_catalog() {
  std::vector<Claim> out;

  out.push_back(equality(
      "s-path", "s(P_n) = ceil(n/3) if n = 2 (mod 3), else floor(n/3)",
      {{"n", 1, 18}}, always,
      [](const Params& p) { return fam::path(get(p, "n")); },
      [](const Params& p) { return f::s_path(get(p, "n")); }));

  out.push_back(equality(
      "s-cycle", "s(C_n) = ceil(n/3)", {{"n", 3, 18}}, always,
      [](const Params& p) { return fam::cycle(get(p, "n")); },
      [](const Params& p) { return f::s_cycle(get(p, "n")); }));

  out.push_back(equality(
      "s-wheel", "s(W_n) = 1 + s(P_{n-2}) for the wheel of order n",
      {{"n", 4, 14}}, always,
      [](const Params& p) { return fam::wheel(get(p, "n")); },
      [](const Params& p) { return f::s_wheel(get(p, "n")); },
      "wheel(n) is a hub joined to a cycle on n-1 vertices"));

  {
    Claim c;
    c.id = "lemma-union";
    c.statement = "s(G1 u G2) = s(G1) + s(G2)";
    c.relation = Relation::kEqual;
    c.params = {{"a", 0, zoo_size() - 1}, {"b", 0, zoo_size() - 1}};
    c.applies = always;
    c.build = [](const Params& p) {
      return from_spec(fam::disjoint(zoo()[get(p, "a")], zoo()[get(p, "b")]));
    };
    c.formula = [](const Params& p, const SolverCaps& caps) {
      return Expected{f::s_union(exact_value(zoo()[get(p, "a")], caps),
                                 exact_value(zoo()[get(p, "b")], caps)),
                      std::nullopt};
    };
    c.notes = "a and b index a fixed list of small shapes; part values come "
              "from the exact solver";
    out.push_back(std::move(c));
  }

  out.push_back(equality(
      "prop-2.2-i", "s(C_n - e) = s(P_n) for every edge e",
      {{"n", 3, 14}, {"e", 0, 13}},
      [](const Params& p) { return get(p, "e") < get(p, "n"); },
      [](const Params& p) {
        const auto n = get(p, "n"), e = get(p, "e");
        return fam::deledge(fam::cycle(n), e, (e + 1) % n);
      },
      [](const Params& p) { return f::s_cycle_minus_edge(get(p, "n")); },
      "edge e joins cycle vertices e and e+1 (mod n)"));

  out.push_back(equality(
      "prop-2.2-ii-paper",
      "s(P_n - e_i) by the published three-case table",
      {{"n", 2, 18}, {"i", 1, 17}},
      [](const Params& p) { return get(p, "i") <= get(p, "n") - 1; },
      [](const Params& p) {
        const auto i = get(p, "i");
        return fam::deledge(fam::path(get(p, "n")), i - 1, i);
      },
      [](const Params& p) {
        return f::s_path_minus_edge_paper(get(p, "n"), get(p, "i"));
      },
      "e_i joins path vertices i-1 and i (0-based); the table misses splits "
      "into two parts of orders 1 (mod 3) when n = 2 (mod 3), and splits "
      "into two parts of orders 2 (mod 3) when n = 1 (mod 3)"));

  out.push_back(equality(
      "prop-2.2-ii-exact", "s(P_n - e_i) = s(P_i) + s(P_{n-i})",
      {{"n", 2, 18}, {"i", 1, 17}},
      [](const Params& p) { return get(p, "i") <= get(p, "n") - 1; },
      [](const Params& p) {
        const auto i = get(p, "i");
        return fam::deledge(fam::path(get(p, "n")), i - 1, i);
      },
      [](const Params& p) {
        return f::s_path_minus_edge_exact(get(p, "n"), get(p, "i"));
      }));

  {
    Claim c;
    c.id = "thm-corona-empty";
    c.statement = "s(G o K̄_m) = alpha'(G) + l";
    c.relation = Relation::kEqual;
    c.params = {{"g", 0, core_count() - 1}, {"m", 1, 4}};
    c.applies = always;
    c.build = [](const Params& p) {
      return from_spec(
          fam::corona(corona_cores()[get(p, "g")], fam::empty(get(p, "m"))));
    };
    c.formula = [](const Params& p, const SolverCaps& caps) {
      const auto stats =
          f::corona_stats(build(corona_cores()[get(p, "g")]), caps);
      return Expected{f::s_corona_empty(stats, get(p, "m")), std::nullopt};
    };
    c.notes = "g indexes P_2..P_6, C_3..C_6, K_1, K̄_2, K̄_3";
    out.push_back(std::move(c));
  }

  out.push_back(equality(
      "cor-corona-empty-path-cycle",
      "s(P_n o K̄_m) = s(C_n o K̄_m) = ceil(n/2) for n, m >= 3",
      {{"cycle", 0, 1}, {"n", 3, 7}, {"m", 3, 3}}, always,
      [](const Params& p) {
        const auto n = get(p, "n");
        return fam::corona(get(p, "cycle") ? fam::cycle(n) : fam::path(n),
                           fam::empty(get(p, "m")));
      },
      [](const Params& p) {
        return f::s_path_or_cycle_corona_empty(get(p, "n"), get(p, "m"));
      },
      "cycle=0 uses P_n, cycle=1 uses C_n"));

  {
    Claim c;
    c.id = "thm-corona-path";
    c.statement =
        "s(G o P_m) = n s(P_m) + alpha'(G) + l if m = 1 (mod 3), else "
        "n s(P_m)";
    c.relation = Relation::kEqual;
    c.params = {{"g", 0, core_count() - 1}, {"m", 1, 7}};
    c.applies = [](const Params& p) {
      return family_order(corona_cores()[get(p, "g")]) *
                 (1 + static_cast<std::size_t>(get(p, "m"))) <=
             24;
    };
    c.build = [](const Params& p) {
      return from_spec(
          fam::corona(corona_cores()[get(p, "g")], fam::path(get(p, "m"))));
    };
    c.formula = [](const Params& p, const SolverCaps& caps) {
      const auto stats =
          f::corona_stats(build(corona_cores()[get(p, "g")]), caps);
      return Expected{f::s_corona_path(stats, get(p, "m")), std::nullopt};
    };
    c.notes = "g indexes P_2..P_6, C_3..C_6, K_1, K̄_2, K̄_3; instances "
              "limited to 24 vertices";
    out.push_back(std::move(c));
  }

  {
    Claim c;
    c.id = "thm-corona-cycle";
    c.statement =
        "s(G o C_m) = n s(C_m) + alpha'(G) + l if m = 0 (mod 3), else "
        "n s(C_m)";
    c.relation = Relation::kEqual;
    c.params = {{"g", 0, core_count() - 1}, {"m", 3, 7}};
    c.applies = [](const Params& p) {
      return family_order(corona_cores()[get(p, "g")]) *
                 (1 + static_cast<std::size_t>(get(p, "m"))) <=
             24;
    };
    c.build = [](const Params& p) {
      return from_spec(
          fam::corona(corona_cores()[get(p, "g")], fam::cycle(get(p, "m"))));
    };
    c.formula = [](const Params& p, const SolverCaps& caps) {
      const auto stats =
          f::corona_stats(build(corona_cores()[get(p, "g")]), caps);
      return Expected{f::s_corona_cycle(stats, get(p, "m")), std::nullopt};
    };
    c.notes = "g indexes P_2..P_6, C_3..C_6, K_1, K̄_2, K̄_3; instances "
              "limited to 24 vertices";
    out.push_back(std::move(c));
  }

  {
    Claim c;
    c.id = "prop-k1-corona";
    c.statement = "s(G) <= s(K_1 o G) <= 1 + s(G)";
    c.relation = Relation::kSandwich;
    c.params = {{"g", 0, zoo_size() - 1}};
    c.applies = always;
    c.build = [](const Params& p) {
      return from_spec(fam::corona(fam::complete(1), zoo()[get(p, "g")]));
    };
    c.formula = [](const Params& p, const SolverCaps& caps) {
      const auto r =
          f::s_k1_corona_bounds(exact_value(zoo()[get(p, "g")], caps));
      return Expected{r.lo, r.hi};
    };
    out.push_back(std::move(c));
  }

  out.push_back(equality(
      "ex-k1-corona-path", "s(K_1 o P_n) = 1 + s(P_n) if n = 1 (mod 3), else s(P_n)",
      {{"n", 1, 14}}, always,
      [](const Params& p) {
        return fam::corona(fam::complete(1), fam::path(get(p, "n")));
      },
      [](const Params& p) { return f::s_k1_corona_path(get(p, "n")); }));

  out.push_back(equality(
      "ex-k1-corona-cycle",
      "s(K_1 o C_n) = 1 + s(C_n) if n = 0 (mod 3), else s(C_n)",
      {{"n", 3, 14}}, always,
      [](const Params& p) {
        return fam::corona(fam::complete(1), fam::cycle(get(p, "n")));
      },
      [](const Params& p) { return f::s_k1_corona_cycle(get(p, "n")); }));

  out.push_back(equality(
      "ex-k1-corona-wheel",
      "s(K_1 o W_n) = 1 + s(W_n) if n = 0 (mod 3), else s(W_n)",
      {{"n", 4, 14}}, always,
      [](const Params& p) {
        return fam::corona(fam::complete(1), fam::wheel(get(p, "n")));
      },
      [](const Params& p) { return f::s_k1_corona_wheel(get(p, "n")); }));

  {
    Claim c;
    c.id = "prop-kbar-corona";
    c.statement = "s(K̄_m o G) = m s(K_1 o G)";
    c.relation = Relation::kEqual;
    c.params = {{"m", 1, 3}, {"g", 0, zoo_size() - 1}};
    c.applies = [](const Params& p) {
      return static_cast<std::size_t>(get(p, "m")) *
                 (1 + family_order(zoo()[get(p, "g")])) <=
             24;
    };
    c.build = [](const Params& p) {
      return from_spec(fam::corona(fam::empty(get(p, "m")), zoo()[get(p, "g")]));
    };
    c.formula = [](const Params& p, const SolverCaps& caps) {
      const auto k1 =
          exact_value(fam::corona(fam::complete(1), zoo()[get(p, "g")]), caps);
      return Expected{f::s_kbar_corona(get(p, "m"), k1), std::nullopt};
    };
    c.notes = "s(K_1 o G) comes from the exact solver";
    out.push_back(std::move(c));
  }

  {
    Claim c;
    c.id = "cor-corona-bounds";
    c.statement = "n s(G2) <= s(G1 o G2) <= n s(G2) + alpha'(G1) + l";
    c.relation = Relation::kSandwich;
    c.params = {{"g1", 0, core_count() - 1}, {"g2", 0, zoo_size() - 1}};
    c.applies = [](const Params& p) {
      return family_order(corona_cores()[get(p, "g1")]) *
                 (1 + family_order(zoo()[get(p, "g2")])) <=
             24;
    };
    c.build = [](const Params& p) {
      return from_spec(
          fam::corona(corona_cores()[get(p, "g1")], zoo()[get(p, "g2")]));
    };
    c.formula = [](const Params& p, const SolverCaps& caps) {
      const auto stats =
          f::corona_stats(build(corona_cores()[get(p, "g1")]), caps);
      const auto r = f::corona_bounds(
          stats.n, exact_value(zoo()[get(p, "g2")], caps), stats.alpha_prime,
          stats.l);
      return Expected{r.lo, r.hi};
    };
    out.push_back(std::move(c));
  }

  out.push_back(equality(
      "prop-link-paths", "s(L(P_m x n)) by residue of m",
      {{"m", 1, 24}, {"n", 1, 24}},
      [](const Params& p) { return get(p, "m") * get(p, "n") <= 24; },
      [](const Params& p) { return fam::linkpath(get(p, "m"), get(p, "n")); },
      [](const Params& p) { return f::s_link_paths(get(p, "m"), get(p, "n")); },
      "parts are joined end to end"));

  out.push_back(link_cycles_row("prop-link-cycles-m0",
                                "s(L(C_m x n)) = n s(C_m) for m = 0 (mod 3)", 0,
                                {1, 2, 3, 4, 5}));
  out.push_back(link_cycles_row(
      "prop-link-cycles-m1-d134",
      "s(L(C_m x n)) = n s(C_m) - floor(n/2) for m = 1 (mod 3), d in {1,3,4}",
      1, {1, 3, 4},
      "the distance set is printed as {1,3.4}; read as {1,3,4}"));
  out.push_back(link_cycles_row(
      "prop-link-cycles-m1-d25",
      "s(L(C_m x n)) = n s(C_m) - (n-1) for m = 1 (mod 3), d in {2,5}", 1,
      {2, 5}));
  out.push_back(link_cycles_row(
      "prop-link-cycles-m2-d14",
      "s(L(C_m x n)) = n s(C_m) - ceil((n-1)/3) for m = 2 (mod 3), d in {1,4}",
      2, {1, 4}));
  out.push_back(link_cycles_row(
      "prop-link-cycles-m2-d235",
      "s(L(C_m x n)) = n s(C_m) - floor(n/2) for m = 2 (mod 3), d in {2,3,5}",
      2, {2, 3, 5}));

  out.push_back(equality(
      "obs-chain-paths", "s(C(P_m x n)) by residue of m",
      {{"m", 1, 24}, {"n", 1, 24}},
      [](const Params& p) {
        const auto m = get(p, "m"), n = get(p, "n");
        return (m >= 2 || n == 1) && n * (m - 1) + 1 <= 24;
      },
      [](const Params& p) { return fam::chainpath(get(p, "m"), get(p, "n")); },
      [](const Params& p) {
        return f::s_chain_paths(get(p, "m"), get(p, "n"));
      },
      "parts are glued end to end"));

  out.push_back(chain_cycles_row(
      "obs-chain-cycles-m0-d1245",
      "s(C(C_m x n)) = n s(C_m) - floor((n-1)/2) for m = 0 (mod 3), "
      "d in {1,2,4,5}",
      0, {1, 2, 4, 5}));
  out.push_back(chain_cycles_row(
      "obs-chain-cycles-m0-d3",
      "s(C(C_m x n)) = n s(C_m) for m = 0 (mod 3), d = 3", 0, {3}));
  out.push_back(chain_cycles_row(
      "obs-chain-cycles-m1",
      "s(C(C_m x n)) = n s(C_m) - (n-1) for m = 1 (mod 3), 1 <= d <= 5", 1,
      {1, 2, 3, 4, 5}));
  out.push_back(chain_cycles_row(
      "obs-chain-cycles-m2-d14",
      "s(C(C_m x n)) = n s(C_m) - ceil(n/2) for m = 2 (mod 3), d in {1,4}", 2,
      {1, 4},
      "at n = 1 the chain is a single cycle and the row gives s(C_m) - 1"));
  out.push_back(chain_cycles_row(
      "obs-chain-cycles-m2-d235",
      "s(C(C_m x n)) = n s(C_m) - (n-1) for m = 2 (mod 3), d in {2,3,5}", 2,
      {2, 3, 5}));

  {
    struct Caption {
      std::int64_t m, d, value;
    };
    // Link of five C_m at distance d and its captioned value.
    static const std::vector<Caption> captions = {
        {6, 1, 10}, {7, 3, 13}, {7, 2, 11}, {8, 1, 13}, {8, 2, 13},
    };
    auto caption = [](const Params& p) -> const Caption& {
      return captions.at(static_cast<std::size_t>(get(p, "row") - 1));
    };
    out.push_back(equality(
        "fig-captions", "captioned values of links of five cycles",
        {{"row", 1, 5}}, always,
        [caption](const Params& p) {
          const auto& c = caption(p);
          return fam::linkcyc(c.m, 5, c.d);
        },
        [caption](const Params& p) { return caption(p).value; },
        "the fifth caption (C_8) does not fix the distance; d = 2 from the "
        "{2,3,5} row is used"));
  }

  {
    Claim c;
    c.id = "text-link-examples";
    c.statement =
        "s(L(C_4,P_5,P_4)) = 5, s(L(C_4,P_5,C_4)) = 5, "
        "s(L(C_4,P_5,C_4,P_5)) = 6 for some attach vertices";
    c.relation = Relation::kExists;
    std::int64_t max_choices = 0;
    for (const auto& link : mixed_links()) {
      max_choices = std::max(max_choices, choice_count(link));
    }
    c.params = {{"example", 1, 3}, {"choice", 0, max_choices - 1}};
    c.applies = [](const Params& p) {
      return get(p, "choice") <
             choice_count(mixed_links()[get(p, "example") - 1]);
    };
    c.build = [](const Params& p) {
      return mixed_link_instance(mixed_links()[get(p, "example") - 1],
                                 get(p, "choice"));
    };
    c.formula = [](const Params& p, const SolverCaps&) {
      return Expected{mixed_links()[get(p, "example") - 1].stated,
                      std::nullopt};
    };
    c.notes = "attach vertices are not given; every choice is evaluated up "
              "to cycle symmetry and the rows record which ones realize the "
              "stated value";
    out.push_back(std::move(c));
  }

  out.push_back(equality(
      "thm-tn", "s(T_n) = floor((n-2)/2) + 2", {{"n", 1, 8}}, always,
      [](const Params& p) { return fam::tri(get(p, "n")); },
      [](const Params& p) { return f::s_tri(get(p, "n")); }));

  out.push_back(equality(
      "thm-on", "s(O_n) = n + 1", {{"n", 1, 8}}, always,
      [](const Params& p) { return fam::sq(get(p, "n")); },
      [](const Params& p) { return f::s_sq(get(p, "n")); },
      "squares are glued at opposite vertices (distance 2)"));

  {
    Claim c;
    c.id = "bound-half-alpha";
    c.statement = "s(G) >= alpha'(G)/2";
    c.relation = Relation::kLowerBound;
    c.params = {{"g", 0, zoo_size() - 1}};
    c.applies = always;
    c.build = [](const Params& p) { return from_spec(zoo()[get(p, "g")]); };
    c.formula = [](const Params& p, const SolverCaps& caps) {
      const auto b = bounds(build(zoo()[get(p, "g")]), caps);
      return Expected{ceil(b.half_alpha), std::nullopt};
    };
    out.push_back(std::move(c));
  }

  {
    Claim c;
    c.id = "bound-independence";
    c.statement = "s(G) >= (n - alpha(G))/2";
    c.relation = Relation::kLowerBound;
    c.params = {{"g", 0, zoo_size() - 1}};
    c.applies = always;
    c.build = [](const Params& p) { return from_spec(zoo()[get(p, "g")]); };
    c.formula = [](const Params& p, const SolverCaps& caps) {
      const auto b = bounds(build(zoo()[get(p, "g")]), caps);
      return Expected{ceil(b.independence), std::nullopt};
    };
    out.push_back(std::move(c));
  }

  {
    Claim c;
    c.id = "bound-matching-number";
    c.statement = "s(G) <= alpha'(G): a maximum matching is maximal";
    c.relation = Relation::kUpperBound;
    c.params = {{"g", 0, zoo_size() - 1}};
    c.applies = always;
    c.build = [](const Params& p) { return from_spec(zoo()[get(p, "g")]); };
    c.formula = [](const Params& p, const SolverCaps& caps) {
      return Expected{matching_number(build(zoo()[get(p, "g")]), caps).size,
                      std::nullopt};
    };
    out.push_back(std::move(c));
  }

  return out;
}

std::vector<Params> enumerate(const std::vector<ParamRange>& ranges,
                              const std::function<bool(const Params&)>& applies) {
  std::vector<Params> out;
  if (ranges.empty()) return out;
  for (const auto& r : ranges) {
    if (r.lo > r.hi) return out;
  }
  Params current;
  for (const auto& r : ranges) current.emplace_back(r.name, r.lo);
  while (true) {
    if (!applies || applies(current)) out.push_back(current);
    std::size_t i = ranges.size();
    while (i > 0) {
      --i;
      if (current[i].second < ranges[i].hi) {
        ++current[i].second;
        for (std::size_t j = i + 1; j < ranges.size(); ++j) {
          current[j].second = ranges[j].lo;
        }
        break;
      }
      if (i == 0) return out;
    }
  }
}

bool relation_holds(Relation r, const Expected& e, std::int64_t exact) {
  switch (r) {
    case Relation::kEqual:
    case Relation::kExists:
      return e.value == exact;
    case Relation::kLowerBound:
      return e.value <= exact;
    case Relation::kUpperBound:
      return exact <= e.value;
    case Relation::kSandwich:
      return e.value <= exact && exact <= e.hi.value_or(e.value);
  }
  return false;
}

ClaimReport evaluate(const Claim& claim, const Params& params,
                     const SolverCaps& caps) {
  ClaimReport row;
  row.claim_id = claim.id;
  row.params = params;
  try {
    Instance instance = claim.build(params);
    row.instance = instance.label;
    if (instance.graph.order() > caps.exact_vertices) {
      row.status = RowStatus::kCapSkipped;
      row.message = "exact-vertices cap " + std::to_string(caps.exact_vertices) +
                    " < " + std::to_string(instance.graph.order());
      return row;
    }
    const Expected expected = claim.formula(params, caps);
    row.formula = expected.value;
    row.formula_hi = expected.hi;
    row.exact = saturation_value(instance.graph, caps);
    row.agree = relation_holds(claim.relation, expected, row.exact);
    if (!row.agree && claim.relation != Relation::kExists) {
      row.witness = saturation_exact(instance.graph, caps).witness.edges();
    }
  } catch (const ResourceError& e) {
    row.status = RowStatus::kCapSkipped;
    row.message = e.what();
  } catch (const std::exception& e) {
    row.status = RowStatus::kError;
    row.message = e.what();
  }
  return row;
}

}  // namespace

const std::vector<Claim>& catalog() {
  static const std::vector<Claim> claims = make_catalog();
  return claims;
}

const Claim* find_claim(const std::string& id) {
  for (const auto& c : catalog()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::vector<ClaimReport> run_claim(const Claim& claim,
                                   const Overrides& overrides,
                                   const AuditConfig& config) {
  auto ranges = claim.params;
  for (const auto& [name, range] : overrides) {
    auto it = std::find_if(ranges.begin(), ranges.end(),
                           [&](const ParamRange& r) { return r.name == name; });
    if (it == ranges.end()) {
      throw std::invalid_argument("claim " + claim.id +
                                  " has no parameter '" + name + "'");
    }
    it->lo = range.lo;
    it->hi = range.hi;
  }
  const auto tuples = enumerate(ranges, claim.applies);
  std::vector<ClaimReport> rows(tuples.size());

  unsigned threads = config.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(1, tuples.size())));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tuples.size(); i = next++) {
      rows[i] = evaluate(claim, tuples[i], config.caps);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return rows;
}

std::vector<ClaimReport> run_claim(const std::string& id,
                                   const Overrides& overrides,
                                   const AuditConfig& config) {
  const Claim* claim = find_claim(id);
  if (claim == nullptr) throw std::invalid_argument("unknown claim id: " + id);
  return run_claim(*claim, overrides, config);
}

ClaimSummary summarize(const Claim& claim, std::vector<ClaimReport> rows) {
  ClaimSummary s;
  s.id = claim.id;
  s.relation = claim.relation;
  s.statement = claim.statement;
  s.notes = claim.notes;

  // Groups for kExists: first parameter value -> realized?
  std::map<std::int64_t, bool> groups;
  for (const auto& row : rows) {
    switch (row.status) {
      case RowStatus::kCapSkipped:
        ++s.skipped;
        continue;
      case RowStatus::kError:
        ++s.errors;
        s.counterexamples.push_back(row_key(claim.id, row.params) + " error");
        continue;
      case RowStatus::kCompared:
        break;
    }
    row.agree ? ++s.agree : ++s.disagree;
    if (claim.relation == Relation::kExists) {
      auto& realized = groups[row.params.front().second];
      realized = realized || row.agree;
    } else if (!row.agree) {
      s.counterexamples.push_back(row_key(claim.id, row.params));
    }
  }
  if (claim.relation == Relation::kExists && !rows.empty()) {
    const auto& name = rows.front().params.front().first;
    for (const auto& [value, realized] : groups) {
      if (!realized) s.counterexamples.push_back(row_key(claim.id, {{name, value}}));
    }
  }
  s.rows = std::move(rows);
  return s;
}

std::set<std::string> AuditSummary::counterexamples() const {
  std::set<std::string> out;
  for (const auto& c : claims) out.insert(c.counterexamples.begin(), c.counterexamples.end());
  return out;
}

AuditSummary run_all(const std::vector<Claim>& claims,
                     const AuditConfig& config) {
  AuditSummary summary;
  for (const auto& claim : claims) {
    summary.claims.push_back(summarize(claim, run_claim(claim, {}, config)));
  }
  return summary;
}

AuditSummary run_all(const AuditConfig& config,
                     const std::vector<std::string>& ids) {
  if (ids.empty()) return run_all(catalog(), config);
  std::vector<Claim> selected;
  for (const auto& id : ids) {
    const Claim* claim = find_claim(id);
    if (claim == nullptr) throw std::invalid_argument("unknown claim id: " + id);
    selected.push_back(*claim);
  }
  return run_all(selected, config);
}

nlohmann::json to_json(const ClaimReport& row) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [name, value] : row.params) params[name] = value;
  nlohmann::json j;
  j["params"] = std::move(params);
  j["instance"] = row.instance;
  j["status"] = to_string(row.status);
  if (row.status == RowStatus::kCompared) {
    j["formula"] = row.formula;
    j["exact"] = row.exact;
    j["agree"] = row.agree;
    if (row.formula_hi) j["formula_hi"] = *row.formula_hi;
    if (!row.witness.empty()) {
      nlohmann::json w = nlohmann::json::array();
      for (const Edge& e : row.witness) w.push_back({e.u, e.v});
      j["witness"] = std::move(w);
    }
  } else {
    j["formula"] = nullptr;
    j["exact"] = nullptr;
    j["agree"] = nullptr;
    j["message"] = row.message;
  }
  return j;
}

nlohmann::json to_json(const AuditSummary& summary) {
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& c : summary.claims) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : c.rows) rows.push_back(to_json(row));
    claims.push_back({
        {"id", c.id},
        {"relation", to_string(c.relation)},
        {"statement", c.statement},
        {"notes", c.notes},
        {"totals",
         {{"agree", c.agree},
          {"disagree", c.disagree},
          {"skipped", c.skipped},
          {"errors", c.errors}}},
        {"counterexamples", c.counterexamples},
        {"rows", std::move(rows)},
    });
  }
  const auto all = summary.counterexamples();
  return {{"claims", std::move(claims)},
          {"counterexamples", std::vector<std::string>(all.begin(), all.end())}};
}

void print_table(std::ostream& out, const AuditSummary& summary) {
  std::size_t width = 5;
  for (const auto& c : summary.claims) width = std::max(width, c.id.size());
  auto pad = [&](const std::string& s) {
    return s + std::string(width + 2 - s.size(), ' ');
  };
  out << pad("claim") << "relation     agree  disagree  skipped  errors\n";
  for (const auto& c : summary.claims) {
    std::ostringstream line;
    line << pad(c.id);
    std::string rel = to_string(c.relation);
    line << rel << std::string(13 - rel.size(), ' ');
    auto num = [&](std::size_t v, std::size_t w) {
      auto s = std::to_string(v);
      return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
    };
    line << num(c.agree, 5) << num(c.disagree, 10) << num(c.skipped, 9)
         << num(c.errors, 8);
    out << line.str() << '\n';
  }
  const auto all = summary.counterexamples();
  out << "\ncounterexamples: " << all.size() << '\n';
  for (const auto& c : summary.claims) {
    for (const auto& row : c.rows) {
      if (row.status != RowStatus::kCompared || row.agree ||
          c.relation == Relation::kExists) {
        continue;
      }
      out << "  " << row_key(c.id, row.params) << "  " << row.instance
          << "  formula=" << row.formula;
      if (row.formula_hi) out << ".." << *row.formula_hi;
      out << " exact=" << row.exact << '\n';
    }
    if (c.relation == Relation::kExists) {
      for (const auto& key : c.counterexamples) out << "  " << key << '\n';
    }
    for (const auto& row : c.rows) {
      if (row.status == RowStatus::kError) {
        out << "  " << row_key(c.id, row.params) << "  error: " << row.message
            << '\n';
      }
    }
  }
}

std::set<std::string> parse_manifest(std::string_view text) {
  std::set<std::string> keys;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    const auto first = line.find_first_not_of(" \t\r");
    const auto last = line.find_last_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') {
      keys.emplace(line.substr(first, last - first + 1));
    }
    start = end + 1;
  }
  return keys;
}

std::set<std::string> read_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open manifest " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_manifest(buffer.str());
}

ManifestDiff compare(const std::set<std::string>& observed,
                     const std::set<std::string>& manifest,
                     const std::set<std::string>& claim_ids) {
  auto claim_of = [](const std::string& key) {
    return key.substr(0, key.find(' '));
  };
  ManifestDiff diff;
  for (const auto& key : observed) {
    if (!manifest.contains(key)) diff.unexpected.insert(key);
  }
  for (const auto& key : manifest) {
    if (claim_ids.contains(claim_of(key)) && !observed.contains(key)) {
      diff.missing.insert(key);
    }
  }
  return diff;
}

}  // namespace satnum::claims

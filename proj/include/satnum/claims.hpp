#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "satnum/graph.hpp"
#include "satnum/solver.hpp"

namespace satnum::claims {

// Named integer parameters of one row, in declaration order.
using Params = std::vector<std::pair<std::string, std::int64_t>>;

struct ParamRange {
  std::string name;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

enum class Relation {
  kEqual,       // formula == exact
  kLowerBound,  // formula <= exact
  kUpperBound,  // exact <= formula
  kSandwich,    // formula <= exact <= formula_hi
  kExists,      // some row of each group (first parameter) has formula == exact
};

const char* to_string(Relation r);

struct Instance {
  std::string label;  // family expression or description
  Graph graph;
};

struct Expected {
  std::int64_t value = 0;
  std::optional<std::int64_t> hi;  // kSandwich only
};

struct Claim {
  std::string id;
  std::string statement;  // what is being checked, in words
  std::string notes;      // interpretation choices, if any
  Relation relation = Relation::kEqual;
  std::vector<ParamRange> params;

  // Restricts the cartesian product of `params` to meaningful tuples.
  std::function<bool(const Params&)> applies;
  std::function<Instance(const Params&)> build;
  // May run the solver on auxiliary graphs (e.g. corona cores).
  std::function<Expected(const Params&, const SolverCaps&)> formula;
};

enum class RowStatus { kCompared, kCapSkipped, kError };

const char* to_string(RowStatus s);

struct ClaimReport {
  std::string claim_id;
  Params params;
  std::string instance;
  RowStatus status = RowStatus::kCompared;
  std::int64_t formula = 0;
  std::optional<std::int64_t> formula_hi;
  std::int64_t exact = 0;
  bool agree = false;
  std::vector<Edge> witness;  // exact witness, on disagreement only
  std::string message;        // for kCapSkipped / kError
};

// "claim-id k1=v1 k2=v2"; the manifest key of a row or group.
std::string row_key(const std::string& claim_id, const Params& params);

const std::vector<Claim>& catalog();
const Claim* find_claim(const std::string& id);

// Per-claim parameter overrides; names not in the claim are rejected.
using Overrides = std::map<std::string, ParamRange>;

struct AuditConfig {
  SolverCaps caps{.exact_vertices = 40, .brute_edges = 24,
                  .matching_vertices = 64};
  unsigned threads = 0;  // 0: hardware concurrency
};

// Rows ordered by parameter tuple. Throws std::invalid_argument for an
// unknown id or override name.
std::vector<ClaimReport> run_claim(const std::string& id,
                                   const Overrides& overrides = {},
                                   const AuditConfig& config = {});
std::vector<ClaimReport> run_claim(const Claim& claim,
                                   const Overrides& overrides = {},
                                   const AuditConfig& config = {});

struct ClaimSummary {
  std::string id;
  Relation relation = Relation::kEqual;
  std::string statement;
  std::string notes;
  std::vector<ClaimReport> rows;
  std::size_t agree = 0;
  std::size_t disagree = 0;
  std::size_t skipped = 0;
  std::size_t errors = 0;
  std::vector<std::string> counterexamples;  // row or group keys
};

struct AuditSummary {
  std::vector<ClaimSummary> claims;

  std::set<std::string> counterexamples() const;
};

ClaimSummary summarize(const Claim& claim, std::vector<ClaimReport> rows);

// Runs every claim in `ids` (all of the catalog when empty).
AuditSummary run_all(const AuditConfig& config = {},
                     const std::vector<std::string>& ids = {});
AuditSummary run_all(const std::vector<Claim>& claims,
                     const AuditConfig& config = {});

nlohmann::json to_json(const ClaimReport& row);
nlohmann::json to_json(const AuditSummary& summary);
void print_table(std::ostream& out, const AuditSummary& summary);

// Expected-discrepancy manifest: one row key per line, '#' comments.
std::set<std::string> parse_manifest(std::string_view text);
std::set<std::string> read_manifest(const std::string& path);

struct ManifestDiff {
  std::set<std::string> unexpected;  // observed but not listed
  std::set<std::string> missing;     // listed but not observed

  bool empty() const { return unexpected.empty() && missing.empty(); }
};

// Only manifest entries whose claim id is in `claim_ids` take part.
ManifestDiff compare(const std::set<std::string>& observed,
                     const std::set<std::string>& manifest,
                     const std::set<std::string>& claim_ids);

}  // namespace satnum::claims

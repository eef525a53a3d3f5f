#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "satnum/families.hpp"
#include "satnum/solver.hpp"

namespace satnum::cli {

enum ExitCode : int {
  kOk = 0,
  kAuditMismatch = 1,
  kUsage = 2,
  kResource = 3,
};

// A closed form that applies to a family expression.
struct FormulaHit {
  std::string claim_id;
  std::int64_t value = 0;
};

// The formula "auto" would use for `spec`, if any. Rows known to fail the
// audit are never selected.
std::optional<FormulaHit> formula_for(const FamilySpec& spec,
                                      const SolverCaps& caps = {});

// Entry point without argv[0]; all output goes to `out` and `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace satnum::cli

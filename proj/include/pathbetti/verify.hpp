#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pathbetti/caps.hpp"
#include "pathbetti/formulas.hpp"

namespace pathbetti {

/// Closed-form source under test; the default is `betti`.
using FormulaFn = std::function<Count(const PathFamily&, int, int)>;

namespace faults {
/// Line formula with its second summand dropped; cycles unchanged.
/// Used to show that the sweep detects a perturbed formula.
Count drop_line_second_summand(const PathFamily& family, int i, int j);
}  // namespace faults

struct OracleSet {
  bool eligible = true;
  bool hochster = true;
};

struct SweepConfig {
  std::vector<GraphKind> kinds{GraphKind::line, GraphKind::cycle};
  int t_min = 2;
  int t_max = 4;
  int n_min = 2;
  int n_max = 12;
  OracleSet oracles;
  Caps caps;

  /// Instances in sweep order: kind, then t, then n. Lines start at n = t,
  /// cycles at n = t + 1.
  std::vector<PathFamily> instances() const;
};

enum class InstanceStatus { pass, fail, skipped };
std::string to_string(InstanceStatus s);

/// First disagreement found in an instance. Cell checks carry (i, j);
/// whole-table checks ("pd", "reg", "homology-audit") use i = j = -1.
struct Mismatch {
  std::string check;
  int i = -1;
  int j = -1;
  Count formula;
  std::optional<Count> eligible;
  std::optional<Count> hochster;
  std::string detail;
};

struct InstanceReport {
  PathFamily family;
  InstanceStatus status = InstanceStatus::pass;
  int nonzero_cells = 0;
  int cells_compared = 0;
  long homology_evaluations = 0;
  std::optional<Mismatch> mismatch;
  std::string skip_reason;
  double seconds = 0.0;
};

struct VerificationReport {
  std::vector<InstanceReport> instances;

  int checked() const;
  int passed() const;
  int failed() const;
  int skipped() const;
  bool all_pass() const { return failed() == 0; }
  /// Earliest failing instance in sweep order.
  const InstanceReport* first_failure() const;
};

InstanceReport verify_instance(const PathFamily& family, const OracleSet& oracles,
                               const Caps& caps = {}, const FormulaFn& formula = betti,
                               Execution exec = Execution::parallel);

VerificationReport run_sweep(const SweepConfig& config, const FormulaFn& formula = betti,
                             Execution exec = Execution::parallel);

}  // namespace pathbetti

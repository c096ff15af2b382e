#include "pathbetti/verify.hpp"

#include <omp.h>

#include <chrono>

#include "pathbetti/homology.hpp"

namespace pathbetti {

Count faults::drop_line_second_summand(const PathFamily& family, int i, int j) {
  if (family.kind != GraphKind::line) return betti(family, i, j);
  if (i == 0 && j == 0) return Count(1);
  if (j > family.n || j < i) return Count(0);
  const auto shape = shape_params(family.t, i, j);
  if (!shape) return Count(0);
  return binomial(shape->ell, shape->added) *
         binomial(static_cast<long>(family.n) - family.t * shape->ell, shape->ell);
}

std::vector<PathFamily> SweepConfig::instances() const {
  std::vector<PathFamily> out;
  for (GraphKind kind : kinds) {
    for (int t = std::max(t_min, 2); t <= t_max; ++t) {
      const int first_n = std::max({n_min, 2, kind == GraphKind::line ? t : t + 1});
      for (int n = first_n; n <= n_max; ++n) out.push_back({kind, n, t});
    }
  }
  return out;
}

std::string to_string(InstanceStatus s) {
  switch (s) {
    case InstanceStatus::pass: return "pass";
    case InstanceStatus::fail: return "fail";
    case InstanceStatus::skipped: return "skipped";
  }
  return "unknown";
}

int VerificationReport::checked() const { return static_cast<int>(instances.size()) - skipped(); }

int VerificationReport::passed() const {
  int k = 0;
  for (const auto& r : instances) k += r.status == InstanceStatus::pass;
  return k;
}

int VerificationReport::failed() const {
  int k = 0;
  for (const auto& r : instances) k += r.status == InstanceStatus::fail;
  return k;
}

int VerificationReport::skipped() const {
  int k = 0;
  for (const auto& r : instances) k += r.status == InstanceStatus::skipped;
  return k;
}

const InstanceReport* VerificationReport::first_failure() const {
  for (const auto& r : instances)
    if (r.status == InstanceStatus::fail) return &r;
  return nullptr;
}

namespace {

void fail(InstanceReport& report, Mismatch m) {
  report.status = InstanceStatus::fail;
  report.mismatch = std::move(m);
}

}  // namespace

InstanceReport verify_instance(const PathFamily& family, const OracleSet& oracles,
                               const Caps& caps, const FormulaFn& formula, Execution exec) {
  const auto started = std::chrono::steady_clock::now();
  InstanceReport report;
  report.family = family;
  family.validate();
  const int n = family.n;

  std::optional<CountGrid> eligible;
  std::optional<HochsterResult> hochster;
  try {
    if (oracles.eligible) eligible = eligible_grid(family, caps, exec);
    if (oracles.hochster) hochster = hochster_grid(family, caps, exec);
  } catch (const CapExceeded& e) {
    report.status = InstanceStatus::skipped;
    report.skip_reason = e.what();
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
  }

  BettiTable table{family, Provenance::formula, {}};
  for (int i = 0; i <= n && !report.mismatch; ++i) {
    for (int j = 0; j <= n && !report.mismatch; ++j) {
      const Count value = formula(family, i, j);
      table.set(i, j, value);
      ++report.cells_compared;
      if (value != 0) ++report.nonzero_cells;
      Mismatch m{"", i, j, value, std::nullopt, std::nullopt, ""};
      if (eligible && j < n) m.eligible = eligible->at(i, j);
      if (hochster) m.hochster = hochster->grid.at(i, j);

      if (m.eligible && *m.eligible != value) {
        m.check = "eligible";
      } else if (m.hochster && *m.hochster != value) {
        m.check = "hochster";
      } else if (nonzero_predicate(family, i, j) != (value != 0)) {
        m.check = "predicate";
        m.detail = "nonzero_predicate disagrees with the value";
      } else if (value != 0 && j < n && !(i == 0 && j == 0)) {
        const auto shape = shape_params(family.t, i, j);
        if (!shape || shape->ell < 0 || shape->added < 0) {
          m.check = "shape";
          m.detail = "nonzero entry without nonnegative integral (ell, added)";
        }
      }
      if (!m.check.empty()) fail(report, std::move(m));
    }
  }

  if (hochster) {
    report.homology_evaluations = hochster->evaluations;
    if (!report.mismatch && (hochster->euler_failures != 0 || hochster->modular_mismatches != 0)) {
      Mismatch m;
      m.check = "homology-audit";
      m.detail = std::to_string(hochster->euler_failures) + " Euler failures, " +
                 std::to_string(hochster->modular_mismatches) + " GF(32003) rank mismatches";
      fail(report, std::move(m));
    }
  }

  if (!report.mismatch && family.kind == GraphKind::line) {
    const PdReg from_table = pd_reg_from_table(table);
    const int pd = pd_line(n, family.t);
    const int reg = reg_line(n, family.t);
    if (from_table.pd != pd || from_table.reg != reg) {
      Mismatch m;
      m.check = from_table.pd != pd ? "pd" : "reg";
      m.detail = "closed form pd=" + std::to_string(pd) + " reg=" + std::to_string(reg) +
                 ", table pd=" + std::to_string(from_table.pd) +
                 " reg=" + std::to_string(from_table.reg);
      fail(report, std::move(m));
    }
  }

  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

VerificationReport run_sweep(const SweepConfig& config, const FormulaFn& formula, Execution exec) {
  const auto families = config.instances();
  VerificationReport report;
  report.instances.resize(families.size());
  if (exec == Execution::serial) {
    for (std::size_t k = 0; k < families.size(); ++k)
      report.instances[k] =
          verify_instance(families[k], config.oracles, config.caps, formula, Execution::serial);
    return report;
  }
  // Instances run concurrently; each one uses the serial kernels.
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < static_cast<long>(families.size()); ++k)
    report.instances[k] =
        verify_instance(families[k], config.oracles, config.caps, formula, Execution::serial);
  return report;
}

}  // namespace pathbetti

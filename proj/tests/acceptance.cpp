// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pathbetti/formulas.hpp"
#include "pathbetti/homology.hpp"
#include "pathbetti/verify.hpp"

using namespace pathbetti;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
};

int report(int id, const std::string& title, const std::function<Outcome()>& run) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), s,
              o.note.empty() ? "" : " -- ", o.note.c_str());
  return o.pass ? 0 : 1;
}

SweepConfig desk_sweep() {
  SweepConfig config;
  config.kinds = {GraphKind::line, GraphKind::cycle};
  config.t_min = 2;
  config.t_max = 4;
  config.n_min = 2;
  config.n_max = 12;
  config.oracles = {true, true};
  return config;
}

Outcome three_way_agreement() {
  const auto started = std::chrono::steady_clock::now();
  const auto config = desk_sweep();
  const auto sweep = run_sweep(config);
  const double minutes =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count() / 60.0;
  Outcome o;
  o.note = std::to_string(sweep.checked()) + " instances checked, " +
           std::to_string(sweep.skipped()) + " skipped";
  if (sweep.skipped() != 0 || sweep.checked() != static_cast<int>(config.instances().size())) o.pass = false;
  if (const auto* bad = sweep.first_failure()) {
    o.pass = false;
    o.note += "; first failure " + bad->family.name() + " check " + bad->mismatch->check + " at (" +
              std::to_string(bad->mismatch->i) + "," + std::to_string(bad->mismatch->j) + ")";
  }
  if (minutes >= 10.0) {
    o.pass = false;
    o.note += "; over the 10 minute budget";
  }
  return o;
}

Outcome point_values() {
  Outcome o;
  auto expect = [&](const std::string& what, const Count& got, const Count& want) {
    if (got != want) {
      o.pass = false;
      o.note += what + " = " + got.get_str() + " (want " + want.get_str() + "); ";
    }
  };
  expect("formula b34(C4,t2)", betti_cycle(4, 2, 3, 4), 1);
  expect("hochster b34(C4,t2)", hochster_betti({GraphKind::cycle, 4, 2}, 3, 4), 1);
  expect("formula b46(C6,t2)", betti_cycle(6, 2, 4, 6), 2);
  expect("hochster b46(C6,t2)", hochster_betti({GraphKind::cycle, 6, 2}, 4, 6), 2);
  expect("formula b14(C5,t4)", betti_cycle(5, 4, 1, 4), 5);
  expect("hochster b14(C5,t4)", hochster_betti({GraphKind::cycle, 5, 4}, 1, 4), 5);
  int cells = 6;
  for (int t = 2; t <= 4; ++t) {
    for (int p = 0; p <= 2; ++p) {
      const int n_top = (t + 1) * p + t;
      const PathFamily top{GraphKind::line, n_top, t};
      const std::string tag = "(t=" + std::to_string(t) + ",p=" + std::to_string(p) + ")";
      expect("formula b_{2p+1,n}" + tag, betti_line(n_top, t, 2 * p + 1, n_top), 1);
      expect("hochster b_{2p+1,n}" + tag, hochster_betti(top, 2 * p + 1, n_top), 1);
      cells += 2;
      for (int d = 0; d < t; ++d) {
        const int n = (t + 1) * p + d;
        if (n < t || n < 2) continue;  // not a valid line path complex
        const PathFamily f{GraphKind::line, n, t};
        const std::string dtag = tag + "[d=" + std::to_string(d) + "]";
        expect("formula b_{2p,p(t+1)}" + dtag, betti_line(n, t, 2 * p, p * (t + 1)),
               binomial(p + d, p));
        expect("hochster b_{2p,p(t+1)}" + dtag, hochster_betti(f, 2 * p, p * (t + 1)),
               binomial(p + d, p));
        cells += 2;
      }
    }
  }
  if (o.pass) o.note = std::to_string(cells) + " values reproduced";
  return o;
}

Outcome pd_reg_closed_forms() {
  Outcome o;
  int count = 0;
  for (int t = 2; t <= 4; ++t) {
    for (int n = t; n <= 14; ++n) {
      const PdReg table = pd_reg_from_table(betti_table({GraphKind::line, n, t}));
      const PdReg closed{pd_line(n, t), reg_line(n, t)};
      ++count;
      if (!(table == closed)) {
        o.pass = false;
        o.note += "line(n=" + std::to_string(n) + ",t=" + std::to_string(t) + ") ";
      }
    }
  }
  if (o.pass) o.note = std::to_string(count) + " lines";
  return o;
}

long gap_subsets(int k, int m, int t) {
  long count = 0;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    if (__builtin_popcount(mask) != m) continue;
    int last = -1000;
    bool ok = true;
    for (int b = 0; b < k && ok; ++b) {
      if (!((mask >> b) & 1)) continue;
      ok = b - last > t;
      last = b;
    }
    count += ok;
  }
  return count;
}

Outcome counting_lemmas() {
  Outcome o;
  int checks = 0;
  for (int t = 1; t <= 4; ++t)
    for (int k = 0; k <= 14; ++k)
      for (int m = 0; m <= k; ++m, ++checks)
        if (line_run_count(k, m, t) != gap_subsets(k, m, t)) {
          o.pass = false;
          o.note += "line_run_count(" + std::to_string(k) + "," + std::to_string(m) + "," +
                    std::to_string(t) + ") ";
        }
  for (int t = 2; t <= 4; ++t) {
    for (int n = t + 1; n <= 12; ++n) {
      const PathFamily f{GraphKind::cycle, n, t};
      std::vector<long> by_runs(n + 1, 0);
      for (const auto& sub : InducedEnumerator(f).all()) {
        const auto d = decompose_runs(f, sub.facets);
        if (d.whole_cycle) continue;
        bool single = true;
        for (int len : d.lengths()) single &= len == 1;
        if (single) ++by_runs[d.runs.size()];
      }
      for (int m = 0; m <= n; ++m, ++checks)
        if (cycle_run_count(n, m, t) != by_runs[m]) {
          o.pass = false;
          o.note += "cycle_run_count(" + std::to_string(n) + "," + std::to_string(m) + "," +
                    std::to_string(t) + ") ";
        }
    }
  }
  if (o.pass) o.note = std::to_string(checks) + " counts";
  return o;
}

Outcome structural_invariants() {
  Outcome o;
  long shape_checked = 0, predicate_checked = 0, evaluations = 0, euler = 0, modular = 0;
  for (const PathFamily& f : desk_sweep().instances()) {
    for (int i = 0; i <= f.n + 1; ++i) {
      for (int j = 0; j <= f.n + 1; ++j) {
        const Count v = betti(f, i, j);
        ++predicate_checked;
        if (nonzero_predicate(f, i, j) != (v != 0)) {
          o.pass = false;
          o.note += "predicate " + f.name() + " (" + std::to_string(i) + "," + std::to_string(j) + "); ";
        }
        if (v != 0 && j < f.n && !(i == 0 && j == 0)) {
          ++shape_checked;
          const auto shape = shape_params(f.t, i, j);
          if (!shape || shape->ell < 0 || shape->added < 0) {
            o.pass = false;
            o.note += "shape " + f.name() + "; ";
          }
        }
      }
    }
    const auto h = hochster_grid(f);
    evaluations += h.evaluations;
    euler += h.euler_failures;
    modular += h.modular_mismatches;
  }
  if (euler != 0 || modular != 0) o.pass = false;
  o.note += std::to_string(shape_checked) + " shapes, " + std::to_string(predicate_checked) +
            " predicate cells, " + std::to_string(evaluations) + " homology evaluations (" +
            std::to_string(euler) + " Euler failures, " + std::to_string(modular) +
            " GF(32003) rank mismatches)";
  return o;
}

Outcome mutation_sensitivity() {
  Outcome o;
  const auto config = desk_sweep();
  const auto sweep = run_sweep(config, faults::drop_line_second_summand);
  const InstanceReport* first = sweep.first_failure();
  if (first == nullptr || !first->mismatch) return {false, "perturbed formula passed the sweep"};

  // Independently locate the first cell where the perturbed formula leaves the oracles.
  for (const PathFamily& f : config.instances()) {
    const auto h = hochster_grid(f).grid;
    for (int i = 0; i <= f.n; ++i) {
      for (int j = 0; j <= f.n; ++j) {
        if (faults::drop_line_second_summand(f, i, j) == h.at(i, j)) continue;
        const bool pinned = first->family == f && first->mismatch->i == i && first->mismatch->j == j;
        o.pass = pinned;
        o.note = "sweep reported " + first->family.name() + " (" + std::to_string(first->mismatch->i) +
                 "," + std::to_string(first->mismatch->j) + "), minimal divergent cell " + f.name() +
                 " (" + std::to_string(i) + "," + std::to_string(j) + ")";
        return o;
      }
    }
  }
  return {false, "no divergent cell found for the perturbed formula"};
}

}  // namespace

int main() {
  int failures = 0;
  failures += report(1, "three-way agreement, t in 2..4, n <= 12", three_way_agreement);
  failures += report(2, "point values reproduced", point_values);
  failures += report(3, "pd/reg closed forms for lines, n <= 14", pd_reg_closed_forms);
  failures += report(4, "counting lemmas vs enumeration", counting_lemmas);
  failures += report(5, "structural invariants", structural_invariants);
  failures += report(6, "mutation sensitivity", mutation_sensitivity);
  std::printf("%s: %d of 6 criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}

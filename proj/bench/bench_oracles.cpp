// Times the serial reference kernels against their OpenMP counterparts and
// checks that both produce identical results.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>

#include <omp.h>

#include "pathbetti/formulas.hpp"
#include "pathbetti/homology.hpp"
#include "pathbetti/verify.hpp"

using namespace pathbetti;

namespace {

template <typename F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool same(const CountGrid& a, const CountGrid& b) {
  for (int i = 0; i <= a.n(); ++i)
    for (int j = 0; j <= a.n(); ++j)
      if (a.at(i, j) != b.at(i, j)) return false;
  return true;
}

void row(const std::string& kernel, const PathFamily& f, double serial, double parallel, bool ok) {
  std::cout << std::left << std::setw(10) << kernel << std::setw(18) << f.name() << std::right
            << std::fixed << std::setprecision(4) << std::setw(10) << serial << std::setw(10)
            << parallel << std::setw(8) << std::setprecision(2) << serial / parallel << "x  "
            << (ok ? "same" : "DIFFERENT") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  const int n_max = argc > 1 ? std::atoi(argv[1]) : 16;
  std::cout << "threads=" << omp_get_max_threads() << "\n";
  std::cout << std::left << std::setw(10) << "kernel" << std::setw(18) << "instance" << std::right
            << std::setw(10) << "serial" << std::setw(10) << "parallel" << std::setw(9)
            << "speedup" << '\n';
  bool all_same = true;

  for (int n : {n_max - 4, n_max}) {
    const PathFamily f{GraphKind::cycle, n, 2};
    CountGrid s, p;
    const double ts = seconds([&] { s = eligible_grid(f, {}, Execution::serial); });
    const double tp = seconds([&] { p = eligible_grid(f, {}, Execution::parallel); });
    all_same &= same(s, p);
    row("eligible", f, ts, tp, same(s, p));
  }

  for (int n : {10, 12}) {
    const PathFamily f{GraphKind::cycle, n, 2};
    HochsterResult s, p;
    const double ts = seconds([&] { s = hochster_grid(f, {}, Execution::serial); });
    const double tp = seconds([&] { p = hochster_grid(f, {}, Execution::parallel); });
    const bool ok = same(s.grid, p.grid) && s.evaluations == p.evaluations;
    all_same &= ok;
    row("hochster", f, ts, tp, ok);
  }

  {
    const PathFamily f{GraphKind::line, 400, 3};
    BettiTable s, p;
    const double ts = seconds([&] { s = betti_table(f, Execution::serial); });
    const double tp = seconds([&] { p = betti_table(f, Execution::parallel); });
    const bool ok = s.entries == p.entries;
    all_same &= ok;
    row("formula", f, ts, tp, ok);
  }

  {
    SweepConfig config;
    config.n_max = 10;
    VerificationReport s, p;
    const double ts = seconds([&] { s = run_sweep(config, betti, Execution::serial); });
    const double tp = seconds([&] { p = run_sweep(config, betti, Execution::parallel); });
    const bool ok = s.passed() == p.passed() && s.failed() == p.failed();
    all_same &= ok;
    row("sweep", PathFamily{GraphKind::cycle, 10, 4}, ts, tp, ok);
  }
  return all_same ? 0 : 1;
}

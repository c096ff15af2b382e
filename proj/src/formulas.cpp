#include "pathbetti/formulas.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace pathbetti {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::formula: return "formula";
    case Provenance::eligible_oracle: return "eligible-oracle";
    case Provenance::hochster_oracle: return "hochster-oracle";
  }
  return "unknown";
}

std::optional<Provenance> parse_provenance(const std::string& text) {
  if (text == "formula") return Provenance::formula;
  if (text == "eligible-oracle") return Provenance::eligible_oracle;
  if (text == "hochster-oracle") return Provenance::hochster_oracle;
  return std::nullopt;
}

Count BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? Count(0) : it->second;
}

void BettiTable::set(int i, int j, const Count& value) {
  if (value == 0)
    entries.erase({i, j});
  else
    entries[{i, j}] = value;
}

BettiTable BettiTable::from_grid(const PathFamily& family, const CountGrid& grid,
                                 Provenance provenance, int max_j) {
  BettiTable table{family, provenance, {}};
  for (int i = 0; i <= grid.n(); ++i)
    for (int j = 0; j <= std::min(max_j, grid.n()); ++j) table.set(i, j, grid.at(i, j));
  return table;
}

std::optional<ShapeParams> shape_params(int t, int i, int j) {
  const long step = t - 1;
  const long spread = static_cast<long>(j) - i;
  const long slack = static_cast<long>(t) * i - j;
  if (step <= 0 || spread % step != 0 || slack % step != 0) return std::nullopt;
  return ShapeParams{spread / step, slack / step};
}

CyclotomicSplit split(long n, long t) { return {n / (t + 1), n % (t + 1)}; }

namespace {

void check_line(int n, int t) { PathFamily{GraphKind::line, n, t}.validate(); }
void check_cycle(int n, int t) { PathFamily{GraphKind::cycle, n, t}.validate(); }

}  // namespace

Count betti_line(int n, int t, int i, int j) {
  check_line(n, t);
  if (i == 0 && j == 0) return Count(1);
  if (j > n || j < i) return Count(0);
  const auto shape = shape_params(t, i, j);
  if (!shape) return Count(0);
  const long ell = shape->ell;
  const long m = shape->added;
  const long free_points = static_cast<long>(n) - t * ell;
  return binomial(ell, m) * binomial(free_points, ell) +
         binomial(ell - 1, m) * binomial(free_points, ell - 1);
}

Count betti_cycle(int n, int t, int i, int j) {
  check_cycle(n, t);
  if (i == 0 && j == 0) return Count(1);
  if (j > n || i < 0 || j < 0) return Count(0);
  if (j == n) {
    const auto [p, r] = split(n, t);
    if (r == 0 && i == 2 * p) return Count(t);
    if (r != 0 && i == 2 * p + 1) return Count(1);
    return Count(0);
  }
  const auto shape = shape_params(t, i, j);
  if (!shape || shape->ell < 0) return Count(0);
  return binomial(shape->ell, shape->added) * cycle_run_count(n, shape->ell, t);
}

Count betti(const PathFamily& family, int i, int j) {
  return family.kind == GraphKind::line ? betti_line(family.n, family.t, i, j)
                                        : betti_cycle(family.n, family.t, i, j);
}

bool nonzero_predicate(const PathFamily& family, int i, int j) {
  family.validate();
  const long n = family.n;
  const long t = family.t;
  if (i == 0 && j == 0) return true;
  if (i < 0 || j < 0 || j > n) return false;
  const auto [p, r] = split(n, t);

  if (family.kind == GraphKind::cycle && j == n)
    return r == 0 ? i == 2 * p : i == 2 * p + 1;

  const auto shape = shape_params(family.t, i, j);
  if (!shape || shape->ell < 0 || shape->added < 0) return false;
  const long ell = shape->ell;

  if (family.kind == GraphKind::cycle) return 2 * p >= 2 * ell && 2 * ell >= i;

  // p + r/(t+1) >= ell >= i/2, or p + (r+1)/(t+1) >= ell >= (i+1)/2,
  // both sides scaled to integers.
  const bool first = (t + 1) * p + r >= (t + 1) * ell && 2 * ell >= i;
  const bool second = (t + 1) * p + r + 1 >= (t + 1) * ell && 2 * ell >= i + 1;
  return first || second;
}

BettiTable betti_table(const PathFamily& family, Execution exec) {
  family.validate();
  const int n = family.n;
  std::vector<std::vector<std::pair<int, Count>>> rows(n + 1);
  auto fill_row = [&](int i) {
    const int j_max = i == 0 ? 0 : std::min(family.t * i, n);
    for (int j = i; j <= j_max; ++j) {
      Count v = betti(family, i, j);
      if (v != 0) rows[i].emplace_back(j, std::move(v));
    }
  };
  if (exec == Execution::serial) {
    for (int i = 0; i <= n; ++i) fill_row(i);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i <= n; ++i) fill_row(i);
  }
  BettiTable table{family, Provenance::formula, {}};
  for (int i = 0; i <= n; ++i)
    for (auto& [j, v] : rows[i]) table.entries.emplace(std::make_pair(i, j), std::move(v));
  return table;
}

int pd_line(int n, int t) {
  check_line(n, t);
  const auto [p, r] = split(n, t);
  return static_cast<int>(r == t ? 2 * p + 1 : 2 * p);
}

int reg_line(int n, int t) {
  check_line(n, t);
  const auto [p, r] = split(n, t);
  return static_cast<int>(r < t ? p * (t - 1) : (p + 1) * (t - 1));
}

PdReg pd_reg_from_table(const BettiTable& table) {
  PdReg out;
  for (const auto& [cell, value] : table.entries) {
    if (value == 0) continue;
    out.pd = std::max(out.pd, cell.first);
    out.reg = std::max(out.reg, cell.second - cell.first);
  }
  return out;
}

}  // namespace pathbetti

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "pathbetti/caps.hpp"
#include "pathbetti/combinatorics.hpp"
#include "pathbetti/path_complex.hpp"

namespace pathbetti {

enum class Provenance { formula, eligible_oracle, hochster_oracle };

std::string to_string(Provenance p);
std::optional<Provenance> parse_provenance(const std::string& text);

/// Graded Betti numbers beta_{i,j} of R/I; absent entries are zero.
struct BettiTable {
  PathFamily family;
  Provenance provenance = Provenance::formula;
  std::map<std::pair<int, int>, Count> entries;

  Count at(int i, int j) const;
  /// Stores nonzero values only.
  void set(int i, int j, const Count& value);

  static BettiTable from_grid(const PathFamily& family, const CountGrid& grid,
                              Provenance provenance, int max_j);
};

/// (j - i)/(t - 1) and (ti - j)/(t - 1): the number of length-one runs and
/// the number of vertices added to them. Present only when t - 1 divides both.
struct ShapeParams {
  long ell = 0;
  long added = 0;
};
std::optional<ShapeParams> shape_params(int t, int i, int j);

/// n = (t + 1) * p + r with 0 <= r <= t.
struct CyclotomicSplit {
  long p = 0;
  long r = 0;
};
CyclotomicSplit split(long n, long t);

Count betti_line(int n, int t, int i, int j);
Count betti_cycle(int n, int t, int i, int j);
Count betti(const PathFamily& family, int i, int j);

/// Closed-form condition for beta_{i,j} != 0. Lines use the two-branch
/// disjunction derived from the two summands of the line formula.
bool nonzero_predicate(const PathFamily& family, int i, int j);

/// Every nonzero entry with 0 <= i <= n and i <= j <= min(ti, n).
BettiTable betti_table(const PathFamily& family, Execution exec = Execution::parallel);

int pd_line(int n, int t);
int reg_line(int n, int t);

struct PdReg {
  int pd = 0;
  int reg = 0;
  friend bool operator==(const PdReg&, const PdReg&) = default;
};

/// Max i and max (j - i) over nonzero entries.
PdReg pd_reg_from_table(const BettiTable& table);

}  // namespace pathbetti

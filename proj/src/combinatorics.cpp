#include "pathbetti/combinatorics.hpp"

namespace pathbetti {

Count binomial(long a, long b) {
  Count out;
  if (a < 0 || b < 0 || b > a) return out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

Count line_run_count(long k, long m, long t) {
  if (m == 0) return Count(1);
  return binomial(k - (m - 1) * t, m);
}

Count cycle_run_count(long n, long m, long t) {
  if (m == 0) return Count(1);
  const long free_points = n - m * t;
  if (free_points <= 0) return Count(0);
  return t * binomial(free_points - 1, m - 1) + binomial(free_points, m);
}

}  // namespace pathbetti

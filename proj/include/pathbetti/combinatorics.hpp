#pragma once

#include <gmpxx.h>

namespace pathbetti {

/// Exact nonnegative count.
using Count = mpz_class;

/// C(a, b), with C(a, b) = 0 whenever b < 0, b > a or a < 0.
Count binomial(long a, long b);

/// Number of m-subsets of k consecutive facets in which any two chosen
/// facets have at least t unchosen facets between them: C(k - (m-1)t, m).
Count line_run_count(long k, long m, long t);

/// Number of induced subcollections of the t-path complex of the n-cycle
/// made of m runs of length one.
///
/// Evaluated as t*C(n-mt-1, m-1) + C(n-mt, m), which equals
/// n/(n-mt) * C(n-mt, m) but never divides.
Count cycle_run_count(long n, long m, long t);

}  // namespace pathbetti

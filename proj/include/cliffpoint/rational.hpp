#pragma once

#include <gmpxx.h>

#include "cliffpoint/big_real.hpp"

namespace cliffpoint {

/// C(n, k) as an exact integer.
BigInt binomial(unsigned long n, unsigned long k);

/// n-th Bernoulli number under the B_1 = -1/2 convention, computed exactly
/// from sum_{j=0}^{n} C(n+1,j) B_j = 0 and memoized. Thread-safe.
BigRational bernoulli(unsigned n);

/// Exact rational converted into a context.
BigReal to_real(const BigRational& q, const PrecisionContext& ctx);

} // namespace cliffpoint

#pragma once

#include "cliffpoint/big_real.hpp"

namespace cliffpoint {

/// psi(x) to ctx digits for x > 0.
///
/// Shifts the argument above 10 + digits/2 with psi(x+1) = psi(x) + 1/x,
/// then sums the asymptotic series log x - 1/(2x) - sum B_2j/(2j x^2j);
/// the truncation error is below the first omitted term, which is required
/// to drop under 10^-(digits+5) before the series may stop.
BigReal digamma(const BigReal& x, const PrecisionContext& ctx);

} // namespace cliffpoint

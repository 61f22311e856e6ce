#pragma once

#include <cstdint>

#include "cliffpoint/big_real.hpp"

namespace cliffpoint {

/// The slowly divergent series with term f(k) = 1/(step*k + offset), k >= 0.
struct SeriesSpec {
    std::int64_t step;   // m >= 1
    std::int64_t offset; // c >= 1

    SeriesSpec(std::int64_t m, std::int64_t c) : step(m), offset(c) {
        if (m < 1 || c < 1)
            throw domain_error("SeriesSpec: step and offset must be >= 1");
    }

    /// Tail of the same series after the first `initial_terms` terms:
    /// f(x) = 1/(step*x + (initial_terms*step + offset)).
    SeriesSpec shifted_tail(std::int64_t initial_terms) const;

    /// 1/(step*k + offset) for an arbitrary-precision index.
    BigReal term_at(const BigInt& k, const PrecisionContext& ctx) const;
};

/// Hard guard: direct summation refuses above this many terms.
constexpr std::int64_t kDirectSumGuard = 10'000'000'000LL;

/// sum_{k=0}^{n-1} 1/(step*k + offset); terms rounded at ctx digits and
/// accumulated in increasing k with 10 guard digits.
BigReal direct_partial_sum(const SeriesSpec& spec, std::int64_t n, const PrecisionContext& ctx);

/// Same value through the closed form (psi(n + c/m) - psi(c/m)) / m; valid
/// for any n, including far beyond direct-summation range.
BigReal digamma_partial_sum(const SeriesSpec& spec, const BigInt& n, const PrecisionContext& ctx);

/// Largest index M with sum_{k=0}^{M} f(k) < threshold, found by straight
/// summation (scan limit guards runtime). Fails if the sum never crosses.
BigInt direct_crossing_scan(const SeriesSpec& spec, const BigReal& threshold,
                            const PrecisionContext& ctx, std::int64_t scan_limit);

} // namespace cliffpoint

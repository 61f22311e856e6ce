#include "cliffpoint/series.hpp"

#include "cliffpoint/digamma.hpp"

namespace cliffpoint {

SeriesSpec SeriesSpec::shifted_tail(std::int64_t initial_terms) const {
    if (initial_terms < 0)
        throw domain_error("shifted_tail: negative term count");
    __int128 c2 = static_cast<__int128>(step) * initial_terms + offset;
    if (c2 > INT64_MAX)
        throw feasibility_error("shifted_tail: offset overflows 64 bits");
    return SeriesSpec(step, static_cast<std::int64_t>(c2));
}

BigReal SeriesSpec::term_at(const BigInt& k, const PrecisionContext& ctx) const {
    BigInt denom = BigInt(static_cast<long>(step)) * k + static_cast<long>(offset);
    if (denom <= 0)
        throw domain_error("term_at: nonpositive denominator");
    return 1 / BigReal::from_integer(denom, ctx);
}

BigReal direct_partial_sum(const SeriesSpec& spec, std::int64_t n, const PrecisionContext& ctx) {
    if (n < 0)
        throw domain_error("direct_partial_sum: negative term count");
    if (n > kDirectSumGuard)
        throw feasibility_error("direct_partial_sum: term count above feasibility guard");

    const PrecisionContext actx = ctx.with_extra(10);
    BigReal acc(actx);
    BigReal term(ctx);
    mpfr_ptr a = acc.raw();
    mpfr_ptr t = term.raw();
    for (std::int64_t k = 0; k < n; ++k) {
        // denominators stay below 2^63 by the guard and spec invariants
        unsigned long denom = static_cast<unsigned long>(spec.step) * k + spec.offset;
        mpfr_set_ui(t, denom, MPFR_RNDN);
        mpfr_ui_div(t, 1, t, MPFR_RNDN);
        mpfr_add(a, a, t, MPFR_RNDN);
    }
    return acc.round_to(ctx);
}

BigReal digamma_partial_sum(const SeriesSpec& spec, const BigInt& n, const PrecisionContext& ctx) {
    if (n < 0)
        throw domain_error("digamma_partial_sum: negative term count");
    if (n == 0)
        return BigReal(ctx);

    // Precision must resolve n + c/m itself; widen with the integer's size.
    const int extra = static_cast<int>(mpz_sizeinbase(n.get_mpz_t(), 10)) + 10;
    const PrecisionContext wctx = ctx.with_extra(extra);

    BigReal ratio = BigReal(spec.offset, wctx) / BigReal(spec.step, wctx);
    BigReal upper = BigReal::from_integer(n, wctx) + ratio;
    BigReal sum = (digamma(upper, wctx) - digamma(ratio, wctx)) / BigReal(spec.step, wctx);
    return sum.round_to(ctx);
}

BigInt direct_crossing_scan(const SeriesSpec& spec, const BigReal& threshold,
                            const PrecisionContext& ctx, std::int64_t scan_limit) {
    if (scan_limit > kDirectSumGuard)
        throw feasibility_error("direct_crossing_scan: limit above feasibility guard");

    const PrecisionContext actx = ctx.with_extra(10);
    BigReal acc(actx);
    BigReal term(ctx);
    const BigReal thr = threshold.round_to(actx);
    mpfr_ptr a = acc.raw();
    mpfr_ptr t = term.raw();
    for (std::int64_t k = 0; k < scan_limit; ++k) {
        unsigned long denom = static_cast<unsigned long>(spec.step) * k + spec.offset;
        mpfr_set_ui(t, denom, MPFR_RNDN);
        mpfr_ui_div(t, 1, t, MPFR_RNDN);
        mpfr_add(a, a, t, MPFR_RNDN);
        if (acc >= thr) {
            if (k == 0)
                throw domain_error("direct_crossing_scan: threshold below first term");
            return BigInt(static_cast<long>(k - 1));
        }
    }
    throw feasibility_error("direct_crossing_scan: no crossing within scan limit");
}

} // namespace cliffpoint

#include "cliffpoint/prime_ap.hpp"

#include <numeric>

namespace cliffpoint {

std::int64_t euler_phi(std::int64_t q) {
    if (q < 1)
        throw domain_error("euler_phi: argument must be >= 1");
    std::int64_t phi = q, n = q;
    for (std::int64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d)
            continue;
        phi -= phi / d;
        while (n % d == 0)
            n /= d;
    }
    if (n > 1)
        phi -= phi / n;
    return phi;
}

BigReal recip_sum_ap(const APClass& ap, std::int64_t x, const PrecisionContext& ctx,
                     const SieveCache& cache) {
    if (x > cache.limit())
        throw feasibility_error("recip_sum_ap: x exceeds the sieve cache limit");
    const PrecisionContext actx = ctx.with_extra(10);
    BigReal acc(actx);
    BigReal term(ctx);
    mpfr_ptr a = acc.raw();
    mpfr_ptr t = term.raw();
    cache.for_each_prime(x, [&](std::int64_t p) {
        if (p % ap.modulus != ap.residue % ap.modulus)
            return;
        mpfr_set_ui(t, static_cast<unsigned long>(p), MPFR_RNDN);
        mpfr_ui_div(t, 1, t, MPFR_RNDN);
        mpfr_add(a, a, t, MPFR_RNDN);
    });
    return acc.round_to(ctx);
}

MertensEstimate mertens_estimate(const APClass& ap, std::int64_t x, const PrecisionContext& ctx,
                                 const SieveCache& cache) {
    if (x < 3)
        throw domain_error("mertens_estimate: x must be >= 3");
    const BigReal recip = recip_sum_ap(ap, x, ctx, cache);
    const std::int64_t phi = euler_phi(ap.modulus);
    const BigReal loglog = log(log(BigReal(x, ctx.with_extra(10))));
    BigReal value = (recip - loglog / phi).round_to(ctx);
    return MertensEstimate{ap, x, std::move(value), recip, phi};
}

namespace {

CutoffEstimate finish_cutoff(const APClass& ap, const BigReal& mqa, std::int64_t phi,
                             const PrecisionContext& wctx) {
    const BigReal tp = two_pi(wctx);
    if (!(mqa < tp))
        throw domain_error("cutoff: M(q,a) must be below 2pi");

    const BigReal loglog_x = (tp - mqa) * phi;
    const BigReal log_x = exp(loglog_x);
    const BigReal l10 = ln10(wctx);

    const BigReal log10_x = log_x / l10;
    BigInt x_exp = log10_x.floor_integer();
    BigReal x_lead = exp10(log10_x - BigReal::from_integer(x_exp, wctx));

    BigReal log10_n0 = (log_x - log(BigReal(phi, wctx)) - log(log_x)) / l10;
    BigInt n0_exp = log10_n0.floor_integer();
    BigReal n0_lead = exp10(log10_n0 - BigReal::from_integer(n0_exp, wctx));

    return CutoffEstimate{ap,       mqa,      loglog_x,           log_x,
                          log10_x,  x_lead,   std::move(x_exp),   log10_n0,
                          n0_lead,  std::move(n0_exp),            wctx.digits()};
}

/// Digits needed so floor(log10 N0) is exact: size of the exponent + 30.
int cutoff_digits(double phi_times_gap) {
    // log10 of the exponent ~= loglog_x * log10(e) -> digit count of it
    double log10_log_x = phi_times_gap * 0.4342944819032518;
    int exponent_digits = log10_log_x <= 1 ? 1 : static_cast<int>(log10_log_x) + 1;
    return exponent_digits + 30;
}

} // namespace

CutoffEstimate cutoff_from_mertens(const APClass& ap, const DecimalConstant& mqa,
                                   const PrecisionContext& ctx) {
    const std::int64_t phi = euler_phi(ap.modulus);
    const double gap = 6.283185307179586 - mqa.materialize(PrecisionContext::standard()).to_double();
    int digits = std::max(ctx.digits(), cutoff_digits(static_cast<double>(phi) * gap));
    const PrecisionContext wctx(digits);
    return finish_cutoff(ap, mqa.materialize(wctx), phi, wctx);
}

CutoffEstimate all_primes_cutoff(const PrecisionContext& ctx) {
    const PrecisionContext wctx(std::max(ctx.digits(), 50));
    return finish_cutoff(APClass(1, 0), mertens_constant(wctx), 1, wctx);
}

} // namespace cliffpoint

#include "cliffpoint/digamma.hpp"

#include "cliffpoint/rational.hpp"

namespace cliffpoint {

BigReal digamma(const BigReal& x, const PrecisionContext& ctx) {
    if (x.sign() <= 0)
        throw domain_error("digamma: argument must be positive");

    const PrecisionContext wctx = ctx.with_extra(10);
    const long shift_bound = 10 + ctx.digits() / 2;

    BigReal xx = x.round_to(wctx);
    BigReal acc(wctx);
    while (xx < shift_bound) {
        acc -= 1 / xx;
        xx += 1;
    }

    // log x - 1/(2x) - sum_{j>=1} B_2j / (2j x^2j)
    BigReal result = log(xx) - 1 / (xx * 2);
    const BigReal inv_sq = 1 / (xx * xx);
    const BigReal eps = pow10_neg(ctx.digits() + 5, wctx);
    BigReal power = inv_sq;
    BigReal prev_mag(wctx);
    for (unsigned j = 1;; ++j) {
        BigReal term = to_real(bernoulli(2 * j), wctx) * power / (2 * static_cast<long long>(j));
        BigReal mag = abs(term);
        if (mag < eps)
            break; // remainder below first omitted term
        if (j > 1 && mag >= prev_mag)
            throw precision_error("digamma: asymptotic series stalled; raise precision");
        if (j > 2000)
            throw precision_error("digamma: asymptotic series too long");
        result -= term;
        prev_mag = mag;
        power *= inv_sq;
    }

    return (acc + result).round_to(ctx);
}

} // namespace cliffpoint

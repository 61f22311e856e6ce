#include "cliffpoint/euler_maclaurin.hpp"

#include <cmath>

#include "cliffpoint/rational.hpp"

namespace cliffpoint {

BigReal Threshold::materialize(const PrecisionContext& ctx) const {
    switch (kind_) {
    case Kind::TwoPi:
        return cliffpoint::two_pi(ctx);
    case Kind::Integer:
        return BigReal(int_, ctx);
    case Kind::Decimal:
        return BigReal::from_decimal(text_, ctx);
    }
    throw error("Threshold: bad kind");
}

double Threshold::approx() const {
    switch (kind_) {
    case Kind::TwoPi:
        return 6.283185307179586;
    case Kind::Integer:
        return static_cast<double>(int_);
    case Kind::Decimal:
        return materialize(PrecisionContext::standard()).to_double();
    }
    throw error("Threshold: bad kind");
}

std::string Threshold::describe() const {
    switch (kind_) {
    case Kind::TwoPi:
        return "2pi";
    case Kind::Integer:
        return std::to_string(int_);
    case Kind::Decimal:
        return text_;
    }
    throw error("Threshold: bad kind");
}

TailEstimate em_tail_estimate(const SeriesSpec& tail, const BigInt& terms_m, int order,
                              const PrecisionContext& ctx) {
    if (order < 1)
        throw domain_error("em_tail_estimate: order must be >= 1");
    if (terms_m < 0)
        throw domain_error("em_tail_estimate: negative index");

    const PrecisionContext wctx = ctx.with_extra(10);
    const long m = static_cast<long>(tail.step);
    const BigReal c(tail.offset, wctx);
    const BigInt denom_z = BigInt(m) * terms_m + static_cast<long>(tail.offset);
    const BigReal denom = BigReal::from_integer(denom_z, wctx);

    // integral: (log(mM+c) - log c)/m;  boundary: (f(0)+f(M))/2
    BigReal estimate = (log(denom) - log(c)) / m;
    estimate += (1 / c + 1 / denom) / 2;

    // corrections: sum_j B_2j/(2j) * m^(2j-1) * (c^-2j - (mM+c)^-2j)
    //            = (1/m) sum_j B_2j/(2j) * ((m/c)^2j - (m/denom)^2j)
    const BigReal rc = BigReal(m, wctx) / c;
    const BigReal rd = BigReal(m, wctx) / denom;
    const BigReal rc2 = rc * rc;
    const BigReal rd2 = rd * rd;
    BigReal pc = rc2;
    BigReal pd = rd2;
    BigReal corr(wctx);
    for (int j = 1; j <= order; ++j) {
        corr += to_real(bernoulli(2 * j), wctx) / (2 * j) * (pc - pd);
        if (j < order) {
            pc *= rc2;
            pd *= rd2;
        }
    }
    estimate += corr / m;

    // |R| <= |B_{2J+2}| * M * m^(2J+2) / c^(2J+3)
    BigReal bound = abs(to_real(bernoulli(2 * order + 2), wctx));
    bound *= BigReal::from_integer(terms_m, wctx);
    bound *= pow_si(rc, 2 * order + 2) / c;

    return TailEstimate{estimate.round_to(ctx), bound.round_to(ctx)};
}

int crossing_digits(const SeriesSpec& spec, const Threshold& threshold, int requested) {
    const double need = static_cast<double>(spec.step) * threshold.approx() * 0.4342944819032518;
    int digits = static_cast<int>(std::ceil(need)) + 40;
    if (digits < requested)
        digits = requested;
    if (digits < PrecisionContext::kMinDigits)
        digits = PrecisionContext::kMinDigits;
    return digits;
}

namespace {

CrossingResult packaged_direct(const SeriesSpec& spec, const BigInt& index, const BigReal& sum,
                               const BigReal& threshold, const PrecisionContext& ctx,
                               const EmParams& params) {
    CrossingResult r{
        index,
        sum,
        BigReal(ctx),
        threshold - sum,
        spec.term_at(index + 1, ctx),
        {},
        ctx.digits(),
        params.initial_terms,
        params.order,
    };
    r.checks[0] = r.sum_estimate < threshold;
    r.checks[1] = r.sum_estimate + r.next_term > threshold;
    r.checks[2] = r.remainder_bound < r.next_term;
    r.checks[3] = r.margin > r.remainder_bound;
    if (!r.all_checks())
        throw checks_failed("solve_crossing: direct path failed verification");
    return r;
}

} // namespace

namespace {

CrossingResult solve_crossing_impl(const SeriesSpec& spec, const EmParams& params,
                                   bool allow_escalation);

/// Near-boundary certification: rerun with (2K, J+2); the sharper remainder
/// must reproduce the same index with a >= 10x margin.
void certify_by_escalation(const SeriesSpec& spec, const EmParams& params,
                           const BigInt& candidate_index) {
    EmParams harder = params;
    harder.initial_terms = params.initial_terms * 2;
    harder.order = params.order + 2;
    CrossingResult sharper = solve_crossing_impl(spec, harder, false);
    if (sharper.index != candidate_index)
        throw precision_error("solve_crossing: escalated run disagreed; raise K, J, or digits");
}

} // namespace

CrossingResult solve_crossing(const SeriesSpec& spec, const EmParams& params) {
    return solve_crossing_impl(spec, params, true);
}

namespace {

CrossingResult solve_crossing_impl(const SeriesSpec& spec, const EmParams& params,
                                   bool allow_escalation) {
    if (params.initial_terms < 0)
        throw domain_error("solve_crossing: negative initial term count");
    if (params.order < 1)
        throw domain_error("solve_crossing: order must be >= 1");

    const PrecisionContext wctx(crossing_digits(spec, params.threshold, params.ctx.digits()));
    const BigReal threshold = params.threshold.materialize(wctx);
    const std::int64_t K = params.initial_terms;

    const BigReal head = direct_partial_sum(spec, K, wctx);
    if (head >= threshold) {
        // crossing happens inside the directly-summed head
        BigInt index = direct_crossing_scan(spec, threshold, wctx, K);
        BigReal sum = direct_partial_sum(spec, static_cast<long>(index.get_si()) + 1, wctx);
        return packaged_direct(spec, index, sum, threshold, wctx, params);
    }

    const SeriesSpec tail = spec.shifted_tail(K);
    const BigReal target = threshold - head;

    // boundary case: adding the very first tail term already crosses
    if (em_tail_estimate(tail, BigInt(0), params.order, wctx).estimate >= target) {
        if (K == 0)
            throw domain_error("solve_crossing: threshold below first term");
        BigInt index(static_cast<long>(K - 1));
        return packaged_direct(spec, index, head, threshold, wctx, params);
    }

    // bracket by doubling, then integer bisection (estimate is monotone)
    BigInt lo(0), hi(1);
    for (int it = 0;; ++it) {
        if (it > 4000)
            throw precision_error("solve_crossing: bracketing did not terminate");
        if (em_tail_estimate(tail, hi, params.order, wctx).estimate >= target)
            break;
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        BigInt mid = (lo + hi) / 2;
        if (em_tail_estimate(tail, mid, params.order, wctx).estimate < target)
            lo = mid;
        else
            hi = mid;
    }

    // scan the +-2 window around the bisection answer with the four checks
    BigInt found(-1);
    TailEstimate found_est{BigReal(wctx), BigReal(wctx)};
    BigReal found_next(wctx);
    int hits = 0;
    for (int d = -2; d <= 2; ++d) {
        BigInt cand = lo + d;
        if (cand < 0)
            continue;
        TailEstimate te = em_tail_estimate(tail, cand, params.order, wctx);
        BigReal next = tail.term_at(cand + 1, wctx);
        const bool c1 = te.estimate < target;
        const bool c2 = te.estimate + next > target;
        const bool c3 = te.remainder_bound < next;
        const bool c4 = (target - te.estimate) > te.remainder_bound;
        if (c1 && c2 && c3 && c4) {
            ++hits;
            found = cand;
            found_est = te;
            found_next = next;
        }
    }
    if (hits == 0)
        throw checks_failed("solve_crossing: no index passed the four checks; raise K, J, or digits");
    if (hits > 1)
        throw checks_failed("solve_crossing: checks ambiguous across the scan window");

    BigReal margin = target - found_est.estimate;
    BigInt index_total = found + static_cast<long>(K);
    if (margin < found_est.remainder_bound * 10) {
        if (!allow_escalation)
            throw precision_error(
                "solve_crossing: margin within 10x remainder bound; raise K, J, or digits");
        certify_by_escalation(spec, params, index_total);
    }

    CrossingResult r{
        std::move(index_total),
        head + found_est.estimate,
        found_est.remainder_bound,
        margin,
        found_next,
        {true, true, true, true},
        wctx.digits(),
        params.initial_terms,
        params.order,
    };
    return r;
}

} // namespace

bool recompute_stability(const SeriesSpec& spec, const EmParams& params) {
    CrossingResult base = solve_crossing(spec, params);
    EmParams harder = params;
    harder.initial_terms = params.initial_terms * 2;
    harder.order = params.order + 2;
    CrossingResult again = solve_crossing(spec, harder);
    return base.index == again.index;
}

} // namespace cliffpoint

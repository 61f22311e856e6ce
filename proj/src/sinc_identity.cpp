#include "cliffpoint/sinc_identity.hpp"

#include <algorithm>

namespace cliffpoint {

BigReal sinc(const BigReal& x, const PrecisionContext& ctx) {
    BigReal xx = x.round_to(ctx);
    if (xx.is_zero())
        return BigReal(1, ctx);
    if (abs(xx) < pow10_neg(ctx.digits() / 2, ctx)) {
        BigReal x2 = xx * xx;
        return 1 - x2 / 6 + x2 * x2 / 120;
    }
    return sin(xx) / xx;
}

SincSequence::SincSequence(std::vector<BigReal> values) : a_(std::move(values)) {
    if (a_.empty())
        throw domain_error("SincSequence: at least one coefficient required");
    for (const auto& v : a_)
        if (v.sign() <= 0)
            throw domain_error("SincSequence: coefficients must be positive");
}

SincSequence SincSequence::odd_reciprocals(int last_index, const PrecisionContext& ctx) {
    if (last_index < 0)
        throw domain_error("SincSequence: last index must be >= 0");
    std::vector<BigReal> v;
    v.reserve(last_index + 1);
    for (int k = 0; k <= last_index; ++k)
        v.push_back(1 / BigReal(2 * static_cast<long long>(k) + 1, ctx));
    return SincSequence(std::move(v));
}

SincSequence SincSequence::constant(const BigReal& value, int count) {
    if (count < 1)
        throw domain_error("SincSequence: count must be >= 1");
    return SincSequence(std::vector<BigReal>(count, value));
}

SincSequence SincSequence::from_decimals(const std::vector<std::string>& texts,
                                         const PrecisionContext& ctx) {
    std::vector<BigReal> v;
    v.reserve(texts.size());
    for (const auto& t : texts)
        v.push_back(BigReal::from_decimal(t, ctx));
    return SincSequence(std::move(v));
}

BigReal SincSequence::sum(const PrecisionContext& ctx) const {
    BigReal s(ctx);
    for (const auto& v : a_)
        s += v;
    return s;
}

namespace {

void require_desk_scale(const SincSequence& seq) {
    if (seq.size() > kDeskScaleMaxLength)
        throw feasibility_error("sinc identity: sequence longer than the desk-scale cap of 24");
}

} // namespace

PiecewisePoly convolved_density(const SincSequence& seq, const PrecisionContext& ctx) {
    require_desk_scale(seq);
    const PrecisionContext wctx = ctx.with_extra(2 * static_cast<int>(seq.size()));
    PiecewisePoly u = PiecewisePoly::box(seq.values()[0], wctx);
    for (size_t k = 1; k < seq.size(); ++k)
        u = convolve(u, PiecewisePoly::box(seq.values()[k], wctx));
    return u;
}

BigReal rhs_integral(const SincSequence& seq, const PrecisionContext& ctx) {
    PiecewisePoly u = convolved_density(seq, ctx);
    return (pi(u.ctx()) * u.value_at(BigReal(u.ctx()))).round_to(ctx);
}

BigReal lhs_sum_direct(const SincSequence& seq, const PrecisionContext& ctx, const BigReal& tol,
                       std::int64_t term_cap) {
    require_desk_scale(seq);
    const PrecisionContext wctx = ctx.with_extra(10);

    if (seq.size() == 1) {
        const BigReal& a = seq.values()[0];
        if (!(a < two_pi(wctx)))
            throw domain_error("lhs_sum_direct: single-term closed form needs a < 2pi");
        return (pi(wctx) / (a.round_to(wctx) * 2)).round_to(ctx);
    }

    const size_t len = seq.size();
    // decay factor prod 1/a_k and the first n where every a_k*n >= 1
    BigReal decay(1, wctx);
    BigReal amin = seq.values()[0];
    for (const auto& a : seq.values()) {
        decay /= a;
        if (a < amin)
            amin = a;
    }
    const std::int64_t valid_from = (1 / amin).floor_integer().get_si() + 1;

    // tail past T: decay * T^(1-len) / (len-1), valid once T >= valid_from
    auto tail_bound = [&](std::int64_t t) {
        return decay * pow_si(BigReal(t, wctx), 1 - static_cast<long>(len)) /
               (static_cast<long long>(len) - 1);
    };

    BigReal sum(wctx);
    for (std::int64_t n = 1; n <= term_cap; ++n) {
        BigReal nn(n, wctx);
        BigReal term(1, wctx);
        for (const auto& a : seq.values())
            term *= sinc(a.round_to(wctx) * nn, wctx);
        sum += term;
        if (n >= valid_from && tail_bound(n) < tol)
            return (sum + BigReal::from_rational(BigRational(1, 2), wctx)).round_to(ctx);
    }
    throw feasibility_error("lhs_sum_direct: tolerance unreachable within the term cap");
}

BigReal lhs_sum_poisson(const SincSequence& seq, const PrecisionContext& ctx) {
    PiecewisePoly u = convolved_density(seq, ctx);
    const PrecisionContext wctx = u.ctx();
    const BigReal step = two_pi(wctx);
    BigReal lattice = u.value_at(BigReal(wctx));
    BigReal t = step;
    while (t < u.support_max()) {
        lattice += u.value_at(t) * 2; // even symmetry
        t += step;
    }
    return (pi(wctx) * lattice).round_to(ctx);
}

IdentityReport identity_check(const SincSequence& seq, const PrecisionContext& ctx) {
    PiecewisePoly u = convolved_density(seq, ctx);
    const PrecisionContext wctx = u.ctx();

    const BigReal rhs = pi(wctx) * u.value_at(BigReal(wctx));
    const BigReal step = two_pi(wctx);
    BigReal above(wctx);
    BigReal t = step;
    while (t < u.support_max()) {
        above += u.value_at(t) * 2;
        t += step;
    }
    const BigReal lhs = rhs + pi(wctx) * above;

    std::optional<BigReal> agreement;
    try {
        const BigReal tol = pow10_neg(ctx.digits() - 10, wctx);
        agreement = abs(lhs_sum_direct(seq, wctx, tol, 20000) - lhs.round_to(wctx));
    } catch (const feasibility_error&) {
        // slow decay: retry with whatever the capped sum can certify
        try {
            const std::int64_t cap = 20000;
            BigReal decay(1, wctx);
            for (const auto& a : seq.values())
                decay /= a;
            BigReal reachable =
                decay * pow_si(BigReal(cap, wctx), 1 - static_cast<long>(seq.size())) /
                std::max<long long>(1, static_cast<long long>(seq.size()) - 1);
            agreement = abs(lhs_sum_direct(seq, wctx, reachable * 2, cap) - lhs.round_to(wctx));
        } catch (const error&) {
            agreement.reset();
        }
    } catch (const domain_error&) {
        agreement.reset(); // single term with a >= 2pi has no direct path
    }

    IdentityReport rep{
        seq.sum(wctx) <= step,
        lhs.round_to(ctx),
        rhs.round_to(ctx),
        (lhs - rhs).round_to(ctx),
        std::move(agreement),
        seq.sum(ctx),
        wctx.digits(),
    };
    return rep;
}

} // namespace cliffpoint

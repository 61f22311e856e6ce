#include "cliffpoint/towers.hpp"

namespace cliffpoint {

namespace {

// expansion stops once the value would exceed 10^kExpandLog10Limit
constexpr long kExpandLog10Limit = 1'000'000;

} // namespace

TowerReal TowerReal::normalize(int height, const BigReal& top) {
    if (height < 0)
        throw domain_error("TowerReal: height must be >= 0");
    if (top.sign() < 0)
        throw domain_error("TowerReal: top must be >= 0");
    int h = height;
    BigReal f = top;
    while (f >= 1) {
        f = log(f);
        ++h;
    }
    return TowerReal(h, std::move(f));
}

TowerReal TowerReal::from_log10(const BigReal& log10_value) {
    BigReal ln = log10_value * ln10(log10_value.ctx());
    if (ln.sign() < 0)
        return normalize(0, exp(ln));
    return normalize(1, ln);
}

std::variant<BigReal, TowerReal> TowerReal::log10_value() const {
    if (height_ == 0)
        return log10(top_);
    // log10(exp^h(f)) = exp^(h-1)(f) * log10(e)
    const BigReal l10e = 1 / ln10(top_.ctx());
    const BigReal cap = BigReal(kExpandLog10Limit, top_.ctx()) * ln10(top_.ctx());
    BigReal v = top_;
    int remaining = height_ - 1;
    while (remaining > 0 && v <= cap) {
        v = exp(v);
        --remaining;
    }
    if (remaining == 0)
        return v * l10e;
    if (remaining == 1) // exp(v)*c = exp(v + ln c)
        return normalize(1, v + log(l10e));
    // deeper levels: the log10(e) factor is below working precision
    return normalize(remaining, v);
}

std::string TowerReal::describe(int significant) const {
    std::string s;
    for (int i = 0; i < height_; ++i)
        s += "exp(";
    s += top_.to_decimal(significant);
    for (int i = 0; i < height_; ++i)
        s += ")";
    return s;
}

Ordering compare(const TowerReal& x, const TowerReal& y) {
    if (x.height() == y.height()) {
        int c = cmp(x.top(), y.top());
        return c < 0 ? Ordering::Less : c > 0 ? Ordering::Greater : Ordering::Equal;
    }
    const bool x_taller = x.height() > y.height();
    const TowerReal& tall = x_taller ? x : y;
    const TowerReal& shrt = x_taller ? y : x;
    if (tall.height() - shrt.height() == 1) {
        // re-express the taller top one level down before deciding
        BigReal dropped = exp(tall.top());
        int c = cmp(dropped, shrt.top());
        Ordering tall_vs_short = c < 0 ? Ordering::Less : c > 0 ? Ordering::Greater : Ordering::Equal;
        return x_taller ? tall_vs_short
                        : (tall_vs_short == Ordering::Less      ? Ordering::Greater
                           : tall_vs_short == Ordering::Greater ? Ordering::Less
                                                                : Ordering::Equal);
    }
    return x_taller ? Ordering::Greater : Ordering::Less;
}

std::variant<BigReal, TowerReal> iterated_log(const TowerReal& x, int k,
                                              const PrecisionContext& ctx) {
    if (k < 1)
        throw domain_error("iterated_log: k must be >= 1");
    int h = x.height();
    BigReal f = x.top().round_to(ctx);
    if (k > h) {
        // push logs through the top itself
        for (int extra = k - h; extra > 0; --extra) {
            if (f.sign() <= 0 || f < 1)
                throw domain_error("iterated_log: result would be negative (over-logging)");
            f = log(f);
        }
        return f;
    }
    const int remaining = h - k;
    // expand if the value stays under 10^(10^6)
    BigReal v = f;
    int steps = remaining;
    const BigReal cap = BigReal(kExpandLog10Limit, ctx) * ln10(ctx);
    while (steps > 0 && v <= cap) {
        v = exp(v);
        --steps;
    }
    if (steps == 0)
        return v;
    return TowerReal::normalize(remaining, f);
}

NamedConstants::NamedConstants(const PrecisionContext& ctx, long prime_exponent)
    : ctx_(ctx), prime_exponent_(prime_exponent) {
    if (prime_exponent < 2)
        throw domain_error("NamedConstants: prime exponent must be >= 2");
}

TowerReal NamedConstants::skewes_s1() const {
    return TowerReal::normalize(3, BigReal(79, ctx_));
}

TowerReal NamedConstants::skewes_s2() const {
    return TowerReal::normalize(4, BigReal::from_decimal("7.705", ctx_));
}

BigReal NamedConstants::prime_log10() const {
    return BigReal(prime_exponent_, ctx_) * (log(BigReal(2, ctx_)) / ln10(ctx_));
}

TowerReal NamedConstants::prime_tower() const {
    return TowerReal::from_log10(prime_log10());
}

BigInt NamedConstants::prime_digit_count() const {
    return prime_log10().floor_integer() + 1;
}

BigReal NamedConstants::bays_hudson_marker() const {
    return BigReal::from_decimal("1.39822e316", ctx_);
}

SkewesReport skewes_report(const NamedConstants& c) {
    const PrecisionContext& ctx = c.ctx();
    const BigReal e = exp(BigReal(1, ctx));

    const TowerReal s2 = c.skewes_s2();
    // N0 = exp(exp(P))
    const TowerReal p = c.prime_tower();
    const TowerReal n0 = TowerReal::normalize(p.height() + 2, p.top());

    const BigReal s2_top = log(BigReal::from_decimal("7.705", ctx));
    const BigReal ln_p = c.prime_log10() * ln10(ctx);

    SkewesReport rep{
        s2,
        n0,
        s2_top,
        e,
        e / s2_top,
        log(log(ln_p)), // log^3 P = loglog(ln P)
        exp(BigReal::from_decimal("7.705", ctx)),
        exp(exp(BigReal::from_decimal("7.705", ctx))),
        compare(n0, s2) == Ordering::Greater,
    };
    return rep;
}

Section8Report section8_report(const NamedConstants& c) {
    const PrecisionContext& ctx = c.ctx();
    const BigReal l10 = ln10(ctx);
    const BigReal ln_p = c.prime_log10() * l10; // ~ 2.99e7

    // q = P^P: log10 q = P * log10 P; P itself is representable as e^(ln P)
    const BigReal p_real = exp(ln_p);
    const BigReal log10_q = p_real * c.prime_log10();
    const TowerReal q = TowerReal::from_log10(log10_q);
    const TowerReal n0 = TowerReal::normalize(q.height() + 2, q.top());

    // ln^3 N0 = ln q = P ln P; compare via log10 against 10^(10^7) * 10^7
    const BigReal log10_ln3 = c.prime_log10() + log10(ln_p);
    const BigReal bound_log10 = BigReal(10'000'000, ctx) + 7;

    // ln^5 N0 = ln(ln P + ln ln P) ... = ln(ln(P ln P))
    const BigReal ln4 = ln_p + log(ln_p);
    const BigReal ln5 = log(ln4);
    // loglog(10^(10^7) * 10^7) = log((10^7 + 7) log 10)
    const BigReal lower = log((BigReal(10'000'000, ctx) + 7) * l10);
    const BigReal e_to_e = exp(exp(BigReal(1, ctx)));

    Section8Report rep{
        q,
        n0,
        log10_ln3,
        ln5,
        lower,
        e_to_e,
        -c.prime_log10(),
        "exp(exp(exp(exp(exp(exp(e))))))",
        log10_ln3 > bound_log10 && ln5 > lower && lower > e_to_e,
    };
    return rep;
}

LemmasReport inequality_lemmas(const PrecisionContext& ctx) {
    const BigReal pi_v = pi(ctx);

    auto lemma_i_gap = [&](const BigReal& t) {
        return exp(pi_v * t) - pi_v * t - exp(t * 2);
    };

    // root of e^(pi t) - pi t = e^(2t) by bisection on [0.2, 0.6]
    BigReal lo = BigReal::from_decimal("0.2", ctx);
    BigReal hi = BigReal::from_decimal("0.6", ctx);
    if (!(lemma_i_gap(lo) < 0) || !(lemma_i_gap(hi) > 0))
        throw error("inequality_lemmas: bisection bracket lost");
    for (int i = 0; i < 80; ++i) {
        BigReal mid = (lo + hi) / 2;
        if (lemma_i_gap(mid) < 0)
            lo = mid;
        else
            hi = mid;
    }

    LemmasReport rep{(lo + hi) / 2,
                     {0.4, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0},
                     {0.70, 1.0, 2.0, 5.0},
                     {2.0, 5.0, 10.0, 50.0},
                     true,
                     true,
                     true};

    for (double t : rep.grid_i)
        rep.lemma_i = rep.lemma_i && lemma_i_gap(BigReal::from_double(t, ctx)) > 0;

    for (double y : rep.grid_ii) {
        // exp(exp(2y)) > exp(exp(y))^2  <=>  e^(2y) > 2 e^y (checked directly)
        BigReal yy = BigReal::from_double(y, ctx);
        BigReal lhs = exp(exp(yy * 2));
        BigReal rhs = exp(exp(yy));
        rep.lemma_ii = rep.lemma_ii && lhs > rhs * rhs;
    }

    for (double t : rep.grid_iii) {
        // exp(exp(2t))/(t-1) > exp(exp(t)), compared in the log domain
        BigReal tt = BigReal::from_double(t, ctx);
        rep.lemma_iii = rep.lemma_iii && exp(tt * 2) - log(tt - 1) > exp(tt);
    }

    return rep;
}

} // namespace cliffpoint

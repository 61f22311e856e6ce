#include "cliffpoint/piecewise_poly.hpp"

#include <algorithm>

#include "cliffpoint/rational.hpp"

namespace cliffpoint {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

Poly Poly::constant(const BigReal& v) {
    return Poly(std::vector<BigReal>{v});
}

Poly Poly::affine(const BigReal& b0, const BigReal& b1) {
    return Poly(std::vector<BigReal>{b0, b1});
}

BigReal Poly::eval(const BigReal& x) const {
    BigReal acc(x.ctx());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), BigReal(PrecisionContext::standard()));
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        return Poly();
    const PrecisionContext ctx(std::max(a.c_[0].digits(), b.c_[0].digits()));
    std::vector<BigReal> out(a.c_.size() + b.c_.size() - 1, BigReal(ctx));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            out[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(out));
}

Poly Poly::scaled(const BigReal& s) const {
    std::vector<BigReal> out;
    out.reserve(c_.size());
    for (const auto& v : c_)
        out.push_back(v * s);
    return Poly(std::move(out));
}

Poly Poly::antiderivative() const {
    if (is_zero())
        return Poly();
    std::vector<BigReal> out;
    out.reserve(c_.size() + 1);
    out.push_back(BigReal(c_[0].ctx()));
    for (size_t i = 0; i < c_.size(); ++i)
        out.push_back(c_[i] / static_cast<long long>(i + 1));
    return Poly(std::move(out));
}

Poly Poly::shifted(const BigReal& delta) const {
    if (is_zero())
        return Poly();
    const PrecisionContext ctx = c_[0].ctx();
    const size_t n = c_.size();
    std::vector<BigReal> out(n, BigReal(ctx));
    // out[i] = sum_{k>=i} c_k * C(k,i) * delta^(k-i)
    for (size_t k = 0; k < n; ++k) {
        BigReal dp(1, ctx);
        for (size_t back = 0; back <= k; ++back) {
            const size_t i = k - back;
            out[i] += c_[k] * to_real(BigRational(binomial(k, i)), ctx) * dp;
            dp *= delta;
        }
    }
    return Poly(std::move(out));
}

PiecewisePoly::PiecewisePoly(std::vector<BigReal> knots, std::vector<Poly> pieces, int digits)
    : knots_(std::move(knots)), pieces_(std::move(pieces)), digits_(digits) {
    if (knots_.size() < 2 || pieces_.size() + 1 != knots_.size())
        throw domain_error("PiecewisePoly: knot/piece count mismatch");
    for (size_t i = 0; i + 1 < knots_.size(); ++i)
        if (!(knots_[i] < knots_[i + 1]))
            throw domain_error("PiecewisePoly: knots must be strictly increasing");
}

PiecewisePoly PiecewisePoly::box(const BigReal& halfwidth, const PrecisionContext& ctx) {
    if (halfwidth.sign() <= 0)
        throw domain_error("box: halfwidth must be positive");
    BigReal a = halfwidth.round_to(ctx);
    BigReal height = 1 / (a * 2);
    return PiecewisePoly({-a, a}, {Poly::constant(height)}, ctx.digits());
}

int PiecewisePoly::max_degree() const {
    int d = 0;
    for (const auto& p : pieces_)
        d = std::max(d, p.degree());
    return d;
}

BigReal PiecewisePoly::value_at(const BigReal& t) const {
    if (t < knots_.front() || t >= knots_.back())
        return BigReal(ctx());
    // last knot <= t
    size_t lo = 0, hi = knots_.size() - 1;
    while (hi - lo > 1) {
        size_t mid = (lo + hi) / 2;
        if (knots_[mid] <= t)
            lo = mid;
        else
            hi = mid;
    }
    return pieces_[lo].eval(t - knots_[lo]);
}

BigReal PiecewisePoly::total_integral() const {
    BigReal acc(ctx());
    for (size_t i = 0; i < pieces_.size(); ++i) {
        if (pieces_[i].is_zero())
            continue;
        acc += pieces_[i].antiderivative().eval(knots_[i + 1] - knots_[i]);
    }
    return acc;
}

PiecewisePoly convolve(const PiecewisePoly& p, const PiecewisePoly& q) {
    const PrecisionContext ctx(std::max(p.digits(), q.digits()));

    std::vector<BigReal> knots;
    knots.reserve(p.knots().size() * q.knots().size());
    for (const auto& a : p.knots())
        for (const auto& b : q.knots())
            knots.push_back(a + b);
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end(),
                            [](const BigReal& a, const BigReal& b) { return a == b; }),
                knots.end());

    std::vector<Poly> pieces(knots.size() - 1);

    for (size_t i = 0; i + 1 < p.knots().size(); ++i) {
        if (p.pieces()[i].is_zero())
            continue;
        const BigReal& pa = p.knots()[i];
        const BigReal& pb = p.knots()[i + 1];
        // p piece as a global polynomial in sigma
        const Poly pg = p.pieces()[i].shifted(-pa);

        for (size_t j = 0; j + 1 < q.knots().size(); ++j) {
            if (q.pieces()[j].is_zero())
                continue;
            const BigReal& qa = q.knots()[j];
            const BigReal& qb = q.knots()[j + 1];
            const auto& qc = q.pieces()[j].coeffs();
            const int dq = q.pieces()[j].degree();

            // Expand q_j(t - sigma - qa) as a polynomial in sigma whose
            // coefficients are global polynomials in t:
            //   y^m = sum_r C(m,r) (t-qa)^(m-r) (-sigma)^r
            std::vector<Poly> tpow(dq + 1);
            tpow[0] = Poly::constant(BigReal(1, ctx));
            const Poly t_minus_qa = Poly::affine(-qa, BigReal(1, ctx));
            for (int s = 1; s <= dq; ++s)
                tpow[s] = tpow[s - 1] * t_minus_qa;

            std::vector<Poly> qsig(dq + 1);
            for (int r = 0; r <= dq; ++r) {
                Poly acc;
                for (int m = r; m <= dq; ++m) {
                    BigReal f = qc[m] * to_real(BigRational(binomial(m, r)), ctx);
                    acc += tpow[m - r].scaled(f);
                }
                if (r & 1)
                    acc = acc.scaled(BigReal(-1, ctx));
                qsig[r] = std::move(acc);
            }

            // integrand(sigma) = pg(sigma) * qsig(sigma); antiderivative in sigma
            const auto& pc = pg.coeffs();
            std::vector<Poly> integrand(pc.size() + dq + 1);
            for (size_t a = 0; a < pc.size(); ++a)
                for (int r = 0; r <= dq; ++r)
                    integrand[a + r] += qsig[r].scaled(pc[a]);
            std::vector<Poly> anti(integrand.size() + 1);
            for (size_t u = 0; u < integrand.size(); ++u)
                anti[u + 1] = integrand[u].scaled(1 / BigReal(static_cast<long long>(u) + 1, ctx));

            const BigReal lo_sum = pa + qa;
            const BigReal hi_sum = pb + qb;
            for (size_t l = 0; l + 1 < knots.size(); ++l) {
                if (knots[l] < lo_sum || hi_sum < knots[l + 1])
                    continue;
                const BigReal tmid = (knots[l] + knots[l + 1]) / 2;
                // sigma runs from max(pa, t-qb) to min(pb, t-qa)
                const Poly upper = (pb + qa <= tmid) ? Poly::constant(pb)
                                                     : Poly::affine(-qa, BigReal(1, ctx));
                const Poly lower = (pa + qb >= tmid) ? Poly::constant(pa)
                                                     : Poly::affine(-qb, BigReal(1, ctx));

                auto eval_at = [&](const Poly& x) {
                    Poly acc;
                    for (size_t u = anti.size(); u-- > 0;) {
                        acc = acc * x;
                        acc += anti[u];
                    }
                    return acc;
                };
                Poly contribution = eval_at(upper);
                Poly neg = eval_at(lower).scaled(BigReal(-1, ctx));
                contribution += neg;
                pieces[l] += contribution.shifted(knots[l]);
            }
        }
    }

    return PiecewisePoly(std::move(knots), std::move(pieces), ctx.digits());
}

} // namespace cliffpoint

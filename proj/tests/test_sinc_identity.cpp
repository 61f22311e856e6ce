#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cliffpoint/rational.hpp"
#include "cliffpoint/sinc_identity.hpp"

using namespace cliffpoint;

namespace {

const PrecisionContext kCtx(50);

SincSequence random_sequence(std::mt19937_64& rng, int min_len, int max_len) {
    std::uniform_int_distribution<int> len_dist(min_len, max_len);
    std::uniform_real_distribution<double> a_dist(0.1, 3.0);
    std::vector<BigReal> v;
    const int n = len_dist(rng);
    v.reserve(n);
    for (int i = 0; i < n; ++i)
        v.push_back(BigReal::from_double(a_dist(rng), kCtx));
    return SincSequence(std::move(v));
}

// rigorous tail bound of the direct sum past `terms`
BigReal direct_tail_bound(const SincSequence& seq, long terms) {
    BigReal decay(1, kCtx);
    for (const auto& a : seq.values())
        decay /= a;
    long len = static_cast<long>(seq.size());
    return decay * pow_si(BigReal(terms, kCtx), 1 - len) / (len - 1);
}

} // namespace

TEST_CASE("sinc basics") {
    CHECK(sinc(BigReal(kCtx), kCtx) == 1);
    CHECK(abs(sinc(pi(kCtx), kCtx)) < pow10_neg(48, kCtx));

    // sin(1) by its exact alternating Taylor series
    BigRational sin1(0);
    BigRational fact(1);
    for (int i = 0; i <= 20; ++i) {
        fact = (i == 0) ? BigRational(1) : fact / BigRational((2 * i) * (2 * i + 1));
        sin1 += (i % 2 == 0) ? fact : -fact;
    }
    CHECK(abs(sinc(BigReal(1, kCtx), kCtx) - to_real(sin1, kCtx)) < pow10_neg(48, kCtx));

    // series branch below the cancellation cutoff (cutoff is 10^-digits/2):
    // must agree with sin(x)/x evaluated at doubled precision
    PrecisionContext wide(80);
    BigReal tiny = pow10_neg(41, wide);
    BigReal s = sinc(tiny, wide);
    CHECK(s <= 1);
    PrecisionContext wider(160);
    BigReal ref = sin(tiny.round_to(wider)) / tiny.round_to(wider);
    CHECK(abs(s - ref) < pow10_neg(78, wider));
}

TEST_CASE("box density") {
    PiecewisePoly b = PiecewisePoly::box(BigReal(1, kCtx), kCtx);
    CHECK(b.value_at(BigReal(kCtx)).to_double() == doctest::Approx(0.5));
    CHECK(abs(b.total_integral() - 1) < pow10_neg(45, kCtx));
    PiecewisePoly b2 = PiecewisePoly::box(BigReal(2, kCtx), kCtx);
    CHECK(b2.value_at(BigReal(3, kCtx)).is_zero());
    CHECK_THROWS_AS(PiecewisePoly::box(BigReal(kCtx), kCtx), domain_error);
    CHECK_THROWS_AS(PiecewisePoly::box(BigReal(-1, kCtx), kCtx), domain_error);
}

TEST_CASE("convolution of two boxes is the unit triangle") {
    PiecewisePoly b = PiecewisePoly::box(BigReal(1, kCtx), kCtx);
    PiecewisePoly tri = convolve(b, b);
    CHECK(tri.knots().size() == 3);
    CHECK(tri.support_min() == -2);
    CHECK(tri.support_max() == 2);
    CHECK(abs(tri.value_at(BigReal(kCtx)) - to_real(BigRational(1, 2), kCtx)) <
          pow10_neg(45, kCtx));
    CHECK(abs(tri.total_integral() - 1) < pow10_neg(45, kCtx));
    // hand values: tri(t) = (2-|t|)/4
    CHECK(abs(tri.value_at(BigReal(1, kCtx)) - to_real(BigRational(1, 4), kCtx)) <
          pow10_neg(45, kCtx));
    CHECK(abs(tri.value_at(BigReal::from_decimal("-1.5", kCtx)) -
              to_real(BigRational(1, 8), kCtx)) < pow10_neg(45, kCtx));
}

TEST_CASE("convolution mass, symmetry, support on random sequences") {
    std::mt19937_64 rng(0x5eed0003);
    std::uniform_real_distribution<double> tdist(-1.0, 1.0);
    for (int i = 0; i < 40; ++i) {
        SincSequence seq = random_sequence(rng, 2, 6);
        PiecewisePoly u = convolved_density(seq, kCtx);
        PrecisionContext wctx = u.ctx();

        CHECK(abs(u.total_integral() - 1) < pow10_neg(40, wctx));
        CHECK(abs(u.support_max() - seq.sum(wctx)) < pow10_neg(40, wctx));
        CHECK(abs(u.support_min() + seq.sum(wctx)) < pow10_neg(40, wctx));

        BigReal span = u.support_max();
        for (int k = 0; k < 5; ++k) {
            BigReal t = BigReal::from_double(tdist(rng), wctx) * span;
            CHECK(abs(u.value_at(t) - u.value_at(-t)) < pow10_neg(38, wctx));
            CHECK(u.value_at(t) > -pow10_neg(38, wctx));
        }
    }
}

TEST_CASE("rhs integral reference values") {
    // single sinc: pi/2
    SincSequence one(std::vector<BigReal>{BigReal(1, kCtx)});
    CHECK(abs(rhs_integral(one, kCtx) - pi(kCtx) / 2) < pow10_neg(45, kCtx));

    // classic plateau: 1, 1/3, ..., 1/13 stays at pi/2; adding 1/15 drops
    SincSequence plateau = SincSequence::odd_reciprocals(6, kCtx);
    BigReal at13 = rhs_integral(plateau, kCtx);
    CHECK(abs(at13 - pi(kCtx) / 2) < pow10_neg(42, kCtx));
    SincSequence beyond = SincSequence::odd_reciprocals(7, kCtx);
    BigReal at15 = rhs_integral(beyond, kCtx);
    CHECK(at15 < pi(kCtx) / 2);
    CHECK(pi(kCtx) / 2 - at15 > pow10_neg(15, kCtx)); // genuinely below, not noise
}

TEST_CASE("plateau property on random dominated sequences") {
    std::mt19937_64 rng(0x5eed0004);
    std::uniform_real_distribution<double> a_dist(0.05, 0.2);
    for (int i = 0; i < 20; ++i) {
        std::vector<BigReal> v{BigReal(1, kCtx)};
        int n = 2 + static_cast<int>(rng() % 4);
        for (int k = 0; k < n; ++k)
            v.push_back(BigReal::from_double(a_dist(rng), kCtx));
        SincSequence seq(std::move(v)); // sum of the rest <= 0.8 < a_0
        CHECK(abs(rhs_integral(seq, kCtx) - pi(kCtx) / 2) < pow10_neg(40, kCtx));
    }
}

TEST_CASE("lhs direct sum") {
    // single term: closed form pi/(2a)
    SincSequence one(std::vector<BigReal>{BigReal(1, kCtx)});
    CHECK(abs(lhs_sum_direct(one, kCtx, pow10_neg(30, kCtx)) - pi(kCtx) / 2) <
          pow10_neg(45, kCtx));

    SincSequence wide(std::vector<BigReal>{two_pi(kCtx) + 1});
    CHECK_THROWS_AS(lhs_sum_direct(wide, kCtx, pow10_neg(10, kCtx)), domain_error);

    // unreachable tolerance hits the term cap
    SincSequence pair(std::vector<BigReal>{BigReal(1, kCtx), BigReal(1, kCtx)});
    CHECK_THROWS_AS(lhs_sum_direct(pair, kCtx, pow10_neg(30, kCtx), 1000), feasibility_error);
}

TEST_CASE("lhs poisson equals rhs under the condition") {
    SincSequence one(std::vector<BigReal>{BigReal(1, kCtx)});
    CHECK(abs(lhs_sum_poisson(one, kCtx) - pi(kCtx) / 2) < pow10_neg(45, kCtx));

    std::mt19937_64 rng(0x5eed0005);
    for (int i = 0; i < 10; ++i) {
        SincSequence seq = random_sequence(rng, 2, 4); // sum <= 12 may exceed 2pi
        BigReal gap = lhs_sum_poisson(seq, kCtx) - rhs_integral(seq, kCtx);
        if (seq.sum(kCtx) <= two_pi(kCtx))
            CHECK(abs(gap) < pow10_neg(40, kCtx));
        else
            CHECK(gap > 0);
    }
}

TEST_CASE("lhs method agreement property") {
    std::mt19937_64 rng(0x5eed0006);
    for (int i = 0; i < 50; ++i) {
        SincSequence seq = random_sequence(rng, 2, 6);
        const long cap = 5000;
        BigReal tol = direct_tail_bound(seq, cap) * 2;
        BigReal direct = lhs_sum_direct(seq, kCtx, tol, cap);
        BigReal poisson = lhs_sum_poisson(seq, kCtx);
        CHECK(abs(direct - poisson) < tol * 10);
    }
}

TEST_CASE("seven ones fail the identity with positive gap") {
    SincSequence seven = SincSequence::constant(BigReal(1, kCtx), 7);
    IdentityReport rep = identity_check(seven, kCtx);
    CHECK_FALSE(rep.condition_holds);
    CHECK(rep.difference > 0);

    // difference = 2 pi U(2 pi), U evaluated on the degree-6 density
    PiecewisePoly u = convolved_density(seven, kCtx);
    BigReal expected = two_pi(u.ctx()) * u.value_at(two_pi(u.ctx()));
    CHECK(abs(rep.difference - expected.round_to(kCtx)) < pow10_neg(40, kCtx));
    CHECK(u.value_at(two_pi(u.ctx())) > 0);
}

TEST_CASE("identity holds for odd reciprocals at desk scale") {
    for (int n = 0; n <= 3; ++n) {
        SincSequence seq = SincSequence::odd_reciprocals(n, kCtx);
        IdentityReport rep = identity_check(seq, kCtx);
        CHECK(rep.condition_holds);
        CHECK(abs(rep.difference) < pow10_neg(30, kCtx));
        CHECK(rep.difference >= -pow10_neg(40, kCtx));
        if (rep.method_agreement)
            CHECK(*rep.method_agreement < BigReal::from_decimal("1e-3", kCtx));
    }
}

TEST_CASE("desk scale cap refuses long sequences") {
    std::vector<BigReal> v(25, BigReal(1, kCtx));
    SincSequence seq(std::move(v));
    CHECK_THROWS_AS(identity_check(seq, kCtx), feasibility_error);
    CHECK_THROWS_AS(rhs_integral(seq, kCtx), feasibility_error);
    CHECK_THROWS_AS(lhs_sum_poisson(seq, kCtx), feasibility_error);
    CHECK_THROWS_AS(lhs_sum_direct(seq, kCtx, pow10_neg(10, kCtx)), feasibility_error);
}

TEST_CASE("sequence validation") {
    CHECK_THROWS_AS(SincSequence(std::vector<BigReal>{}), domain_error);
    CHECK_THROWS_AS(SincSequence(std::vector<BigReal>{BigReal(kCtx)}), domain_error);
    CHECK_THROWS_AS(SincSequence(std::vector<BigReal>{BigReal(-2, kCtx)}), domain_error);
}

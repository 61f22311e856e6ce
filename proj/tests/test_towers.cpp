#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cliffpoint/towers.hpp"

using namespace cliffpoint;

namespace {
const PrecisionContext kCtx(50);
}

TEST_CASE("normalize canonical forms") {
    TowerReal one = TowerReal::from_real(BigReal(1, kCtx));
    CHECK(one.height() == 1);
    CHECK(one.top().is_zero());

    // e -> (2, 0): log e rounds to exactly 1, log 1 = 0
    TowerReal e = TowerReal::from_real(exp(BigReal(1, kCtx)));
    CHECK(e.height() == 2);
    CHECK(abs(e.top()) < pow10_neg(45, kCtx));

    TowerReal half = TowerReal::from_real(BigReal::from_decimal("0.5", kCtx));
    CHECK(half.height() == 0);

    CHECK_THROWS_AS(TowerReal::normalize(0, BigReal(-1, kCtx)), domain_error);

    // idempotence
    TowerReal t = TowerReal::normalize(3, BigReal(79, kCtx));
    TowerReal again = TowerReal::normalize(t.height(), t.top());
    CHECK(again.height() == t.height());
    CHECK(again.top() == t.top());
}

TEST_CASE("round trip through the log domain") {
    // 10^100: expand the tower back and compare ln values
    TowerReal t = TowerReal::from_log10(BigReal(100, kCtx));
    CHECK(t.height() == 4);
    BigReal ln_back = t.top();
    for (int i = 0; i < t.height() - 1; ++i)
        ln_back = exp(ln_back);
    BigReal expect = BigReal(100, kCtx) * ln10(kCtx);
    CHECK(abs(ln_back - expect) / expect < pow10_neg(40, kCtx));
}

TEST_CASE("ordering embeds the reals") {
    std::mt19937_64 rng(0x5eed0007);
    std::uniform_real_distribution<double> edist(0.0, 300.0);
    for (int i = 0; i < 10000; ++i) {
        BigReal a = exp10(BigReal::from_double(edist(rng), kCtx));
        BigReal b = exp10(BigReal::from_double(edist(rng), kCtx));
        Ordering tower = compare(TowerReal::from_real(a), TowerReal::from_real(b));
        Ordering plain = a < b ? Ordering::Less : a > b ? Ordering::Greater : Ordering::Equal;
        CHECK(tower == plain);
    }
}

TEST_CASE("comparisons across heights") {
    NamedConstants c(kCtx);
    TowerReal s1 = c.skewes_s1();
    TowerReal s2 = c.skewes_s2();
    CHECK(compare(s1, s2) == Ordering::Less);
    CHECK(compare(s2, s1) == Ordering::Greater);
    CHECK(compare(s2, s2) == Ordering::Equal);

    // heights one apart take the re-expression path
    TowerReal low = TowerReal::normalize(1, BigReal::from_decimal("0.9", kCtx));
    TowerReal high = TowerReal::normalize(2, BigReal(kCtx));
    CHECK(compare(low, high) == Ordering::Less);
    CHECK(compare(high, low) == Ordering::Greater);

    // N0 = exp(exp(P)) exceeds S2
    TowerReal p = c.prime_tower();
    TowerReal n0 = TowerReal::normalize(p.height() + 2, p.top());
    CHECK(compare(n0, s2) == Ordering::Greater);
}

TEST_CASE("iterated logs") {
    TowerReal t = TowerReal::from_real(exp(exp(BigReal(5, kCtx))));
    auto two = iterated_log(t, 2, kCtx);
    REQUIRE(std::holds_alternative<BigReal>(two));
    CHECK(abs(std::get<BigReal>(two) - 5) < pow10_neg(43, kCtx));

    NamedConstants c(kCtx);
    auto s2_ll = iterated_log(c.skewes_s2(), 2, kCtx);
    REQUIRE(std::holds_alternative<BigReal>(s2_ll));
    CHECK(std::get<BigReal>(s2_ll) > BigReal::from_decimal("7.5e963", kCtx));
    CHECK(std::get<BigReal>(s2_ll) < BigReal::from_decimal("7.7e963", kCtx));

    // loglog of exp(exp(P)) is P itself: too large to expand, so a tower
    TowerReal p = c.prime_tower();
    TowerReal n0 = TowerReal::normalize(p.height() + 2, p.top());
    auto back = iterated_log(n0, 2, kCtx);
    REQUIRE(std::holds_alternative<TowerReal>(back));
    const TowerReal& pt = std::get<TowerReal>(back);
    CHECK(pt.height() == p.height());
    CHECK(pt.top() == p.top());

    // log10(log10(P)) ~ 7.1132
    auto l1 = pt.log10_value();
    REQUIRE(std::holds_alternative<BigReal>(l1));
    CHECK(abs(std::get<BigReal>(l1) - c.prime_log10()) / c.prime_log10() <
          pow10_neg(40, kCtx));
    CHECK(log10(std::get<BigReal>(l1)).to_fixed(4) == "7.1132");

    CHECK_THROWS_AS(iterated_log(TowerReal::from_real(BigReal::from_decimal("0.5", kCtx)), 1, kCtx),
                    domain_error);

    // monotonicity of the iterated log
    TowerReal small = TowerReal::from_log10(BigReal(50, kCtx));
    TowerReal large = TowerReal::from_log10(BigReal(90, kCtx));
    auto ls = iterated_log(small, 2, kCtx);
    auto ll = iterated_log(large, 2, kCtx);
    CHECK(std::get<BigReal>(ls) < std::get<BigReal>(ll));
}

TEST_CASE("named constants") {
    NamedConstants c(kCtx);
    CHECK(c.prime_digit_count() == 12978189);
    CHECK(c.bays_hudson_marker().to_decimal(6) == "1.39822e+316");

    // smaller configurable record prime: 2^13 - 1 = 8191 has 4 digits
    NamedConstants tiny(kCtx, 13);
    CHECK(tiny.prime_digit_count() == 4);
    CHECK_THROWS_AS(NamedConstants(kCtx, 1), domain_error);
}

TEST_CASE("skewes report") {
    NamedConstants c(kCtx);
    SkewesReport rep = skewes_report(c);

    CHECK(rep.n0_exceeds_s2);
    CHECK(rep.s2_level5_top.to_fixed(4) == "2.0419");
    CHECK(rep.top_ratio > BigReal::from_decimal("1.3312", kCtx));
    CHECK(rep.top_ratio < BigReal::from_decimal("1.3314", kCtx));
    CHECK(rep.log3_P > BigReal::from_decimal("2.845", kCtx));
    CHECK(rep.log3_P > exp(BigReal(1, kCtx)));
    CHECK(rep.ln3_S2.floor_integer() == 2219);
    CHECK(rep.loglog_S2 > BigReal::from_decimal("7.5e963", kCtx));
    CHECK(rep.loglog_S2 < BigReal::from_decimal("7.7e963", kCtx));
    CHECK(rep.s2.height() == 6);
    CHECK(rep.n0.height() == 7);
}

TEST_CASE("section 8 report") {
    NamedConstants c(kCtx);
    Section8Report rep = section8_report(c);

    CHECK(rep.bound_chain_holds);
    CHECK(rep.ln5_N0 > BigReal::from_decimal("16.95", kCtx));
    CHECK(rep.ln5_N0_lower.to_fixed(2) == "16.95");
    CHECK(rep.e_to_e.to_fixed(2) == "15.15");
    CHECK(rep.log10_ln3_N0 > BigReal(10'000'007, kCtx));
    CHECK(rep.log10_phi_gap == -c.prime_log10());
    CHECK(rep.tower_form == "exp(exp(exp(exp(exp(exp(e))))))");
    CHECK(rep.q.height() == 6);
    CHECK(rep.n0.height() == 8);
}

TEST_CASE("inequality lemmas") {
    LemmasReport rep = inequality_lemmas(kCtx);
    CHECK(rep.lemma_i);
    CHECK(rep.lemma_ii);
    CHECK(rep.lemma_iii);
    CHECK(abs(rep.crossover - BigReal::from_decimal("0.391", kCtx)) <
          BigReal::from_decimal("0.002", kCtx));
}

#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cliffpoint/big_real.hpp"

namespace cliffpoint {

/// exp^height(top): height-fold iterated natural exponential of top.
/// Canonical form keeps top in [0, 1) (minimal height); height 0 holds the
/// plain values in [0, 1). Ordering is then lexicographic on (height, top).
class TowerReal {
  public:
    /// Canonicalizes (height, top): while top >= 1, replace top by log top
    /// and raise the height. top must be >= 0.
    static TowerReal normalize(int height, const BigReal& top);

    static TowerReal from_real(const BigReal& value) { return normalize(0, value); }

    /// Value given as its base-10 logarithm (for numbers with millions of
    /// digits whose logs are still representable).
    static TowerReal from_log10(const BigReal& log10_value);

    int height() const { return height_; }
    const BigReal& top() const { return top_; }

    /// Base-10 log of the value, itself plain or a tower.
    std::variant<BigReal, TowerReal> log10_value() const;

    std::string describe(int significant = 12) const;

  private:
    TowerReal(int h, BigReal f) : height_(h), top_(std::move(f)) {}
    int height_;
    BigReal top_;
};

enum class Ordering { Less, Equal, Greater };

/// Real ordering via the canonical (height, top) pair; heights one apart
/// are re-checked by expanding the taller top one level.
Ordering compare(const TowerReal& x, const TowerReal& y);

/// k-fold natural logarithm; plain BigReal once the value's magnitude
/// drops under 10^(10^6), otherwise still a tower. Throws if k over-logs
/// (the result would be negative).
std::variant<BigReal, TowerReal> iterated_log(const TowerReal& x, int k,
                                              const PrecisionContext& ctx);

/// Named very-large-number constants; the record prime exponent is
/// configurable and defaults to 2^43112609 - 1.
class NamedConstants {
  public:
    explicit NamedConstants(const PrecisionContext& ctx, long prime_exponent = 43112609);

    const PrecisionContext& ctx() const { return ctx_; }
    long prime_exponent() const { return prime_exponent_; }

    /// S1 = exp(exp(exp(79))); Skewes' Riemann-Hypothesis bound.
    TowerReal skewes_s1() const;
    /// S2 = exp(exp(exp(exp(7.705)))); the unconditional bound.
    TowerReal skewes_s2() const;
    /// log10 of P = 2^e - 1, as e*log10(2); P is never expanded.
    BigReal prime_log10() const;
    TowerReal prime_tower() const;
    /// Number of decimal digits of P.
    BigInt prime_digit_count() const;
    /// Documentation marker: first known sign-change region, 1.39822e316.
    BigReal bays_hudson_marker() const;

  private:
    PrecisionContext ctx_;
    long prime_exponent_;
};

struct SkewesReport {
    TowerReal s2;             // canonical form of S2
    TowerReal n0;             // canonical form of N0 = exp(exp(P))
    BigReal s2_level5_top;    // log(7.705) ~ 2.0419
    BigReal n0_level5_top;    // e (since log^3 P > e)
    BigReal top_ratio;        // e / log(7.705) ~ 1.3313 (N0 ~ S2^ratio)
    BigReal log3_P;           // log log log P > 2.845 > e
    BigReal ln3_S2;           // log log log S2 = e^7.705 ~ 2219
    BigReal loglog_S2;        // ~ 7.6e963
    bool n0_exceeds_s2 = false;
};

/// The Skewes-number comparison: N0 = exp(exp(P)) against S2.
SkewesReport skewes_report(const NamedConstants& c);

struct Section8Report {
    TowerReal q;                 // P^P
    TowerReal n0;                // exp(exp(q))
    BigReal log10_ln3_N0;        // log10(P log P) > 10^7 + 7
    BigReal ln5_N0;              // ~ 17.21
    BigReal ln5_N0_lower;        // loglog(10^(10^7) * 10^7) ~ 16.95
    BigReal e_to_e;              // e^e ~ 15.15
    BigReal log10_phi_gap;       // log10(1 - phi(q)/q) = -log10 P
    std::string tower_form;      // exp(exp(exp(exp(exp(exp(e))))))
    bool bound_chain_holds = false; // ln5 > 16.95 > e^e and exponent bound
};

/// The q = P^P example: N0 = exp(exp(P^P)) dominates a 7-high tower of e.
Section8Report section8_report(const NamedConstants& c);

struct LemmasReport {
    BigReal crossover;               // root of e^(pi t) - pi t = e^(2t), ~0.391
    std::vector<double> grid_i;      // t values checked for lemma (i)
    std::vector<double> grid_ii;     // y values checked for lemma (ii)
    std::vector<double> grid_iii;    // t values checked for lemma (iii)
    bool lemma_i = false;            // e^(pi t) - pi t > e^(2t) on the grid
    bool lemma_ii = false;           // exp(exp(2y)) > exp(exp(y))^2 for y > log 2
    bool lemma_iii = false;          // exp(exp(2t))/(t-1) > exp(exp(t)) for t > 1
};

/// Numeric certification of the three supporting inequalities.
LemmasReport inequality_lemmas(const PrecisionContext& ctx);

} // namespace cliffpoint

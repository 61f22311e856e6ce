#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "cliffpoint/series.hpp"

namespace cliffpoint {

/// Crossing threshold kept in symbolic/decimal form so it can be
/// materialized exactly at whatever working precision the solver picks.
class Threshold {
  public:
    static Threshold two_pi() { return Threshold(Kind::TwoPi, "", 0); }
    static Threshold integer(std::int64_t v) { return Threshold(Kind::Integer, "", v); }
    static Threshold decimal(std::string text) {
        return Threshold(Kind::Decimal, std::move(text), 0);
    }

    BigReal materialize(const PrecisionContext& ctx) const;
    double approx() const;
    std::string describe() const;

  private:
    enum class Kind { TwoPi, Integer, Decimal };
    Threshold(Kind k, std::string text, std::int64_t v) : kind_(k), text_(std::move(text)), int_(v) {}

    Kind kind_;
    std::string text_;
    std::int64_t int_;
};

struct EmParams {
    std::int64_t initial_terms = 100;          // K, summed directly
    int order = 1;                             // J, number of B_2j corrections
    Threshold threshold = Threshold::two_pi();
    PrecisionContext ctx = PrecisionContext::standard();
};

struct TailEstimate {
    BigReal estimate;        // integral + boundary + Bernoulli corrections
    BigReal remainder_bound; // |B_{2J+2}| * M * m^(2J+2) / c^(2J+3)
};

/// Euler-Maclaurin value of sum_{k=0}^{M} 1/(m k + c) for the tail series,
/// with its rigorous remainder bound (derivative maximized at x = 0).
TailEstimate em_tail_estimate(const SeriesSpec& tail, const BigInt& terms_m, int order,
                              const PrecisionContext& ctx);

/// Outcome of a threshold crossing search: the largest index with partial
/// sum below the threshold, plus the certification data.
struct CrossingResult {
    BigInt index;            // M_total
    BigReal sum_estimate;    // estimated sum_{k=0}^{M_total}
    BigReal remainder_bound;
    BigReal margin;          // threshold - sum_estimate
    BigReal next_term;       // f(M_total + 1)
    std::array<bool, 4> checks{}; // below / next-crosses / bound<next / margin>bound
    int digits_used = 0;
    std::int64_t initial_terms = 0;
    int order = 0;

    bool all_checks() const { return checks[0] && checks[1] && checks[2] && checks[3]; }
};

/// Working precision for a crossing: the index grows like e^(m*threshold),
/// so digits scale with m*threshold*log10(e) plus 40 guard digits.
int crossing_digits(const SeriesSpec& spec, const Threshold& threshold, int requested);

/// Largest M_total with sum_{k=0}^{M_total} 1/(m k + c) < threshold.
///
/// Sums the first K terms directly, solves the Euler-Maclaurin tail
/// equation by doubling + bisection, then scans a +-2 window and keeps the
/// unique index passing all four verification checks. Throws checks_failed
/// when no window index passes and precision_error when the margin is not
/// safely above the remainder bound (margin < 10*bound).
CrossingResult solve_crossing(const SeriesSpec& spec, const EmParams& params);

/// True iff rerunning with (2K, J+2) reproduces the same index.
bool recompute_stability(const SeriesSpec& spec, const EmParams& params);

} // namespace cliffpoint

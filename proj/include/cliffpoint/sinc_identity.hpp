#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cliffpoint/piecewise_poly.hpp"

namespace cliffpoint {

/// sinc(0) = 1, sinc(x) = sin(x)/x otherwise; switches to the series
/// 1 - x^2/6 + x^4/120 below |x| < 10^(-digits/2) to dodge 0/0 cancellation.
BigReal sinc(const BigReal& x, const PrecisionContext& ctx);

/// Positive coefficients a_0..a_N of a product of sinc factors.
class SincSequence {
  public:
    explicit SincSequence(std::vector<BigReal> values);

    static SincSequence odd_reciprocals(int last_index, const PrecisionContext& ctx);
    static SincSequence constant(const BigReal& value, int count);
    static SincSequence from_decimals(const std::vector<std::string>& texts,
                                      const PrecisionContext& ctx);

    const std::vector<BigReal>& values() const { return a_; }
    size_t size() const { return a_.size(); }
    BigReal sum(const PrecisionContext& ctx) const;

  private:
    std::vector<BigReal> a_;
};

/// Evaluation refuses sequences longer than this (breakpoint count grows as
/// the product of interval counts).
constexpr size_t kDeskScaleMaxLength = 24;

/// Density of sum of independent uniforms on [-a_k, a_k]: the convolution
/// of the boxes, built at ctx + 2*length guard digits.
PiecewisePoly convolved_density(const SincSequence& seq, const PrecisionContext& ctx);

/// Right side of the identity: integral_0^inf prod sinc(a_k x) dx = pi*U(0).
BigReal rhs_integral(const SincSequence& seq, const PrecisionContext& ctx);

/// Left side by truncated summation: 1/2 + sum_{n=1..T} prod_k sinc(a_k n),
/// T chosen so the tail bound prod min(1, 1/(a_k n)) summed past T is < tol.
/// Single-term sequences use the closed form pi/(2a) (requires a < 2pi).
BigReal lhs_sum_direct(const SincSequence& seq, const PrecisionContext& ctx, const BigReal& tol,
                       std::int64_t term_cap = 200000);

/// Exact left side: pi * sum_{j in Z} U(2 pi j); finite because U has
/// compact support. Equals rhs_integral when sum a_k <= 2 pi.
BigReal lhs_sum_poisson(const SincSequence& seq, const PrecisionContext& ctx);

struct IdentityReport {
    bool condition_holds = false;          // sum a_k <= 2 pi
    BigReal lhs;
    BigReal rhs;
    BigReal difference;                    // lhs - rhs
    std::optional<BigReal> method_agreement; // |direct - poisson|, when feasible
    BigReal sum_of_terms;
    int digits_used = 0;
};

/// Evaluates both sides and reports whether the identity holds.
IdentityReport identity_check(const SincSequence& seq, const PrecisionContext& ctx);

} // namespace cliffpoint

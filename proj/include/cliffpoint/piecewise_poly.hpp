#pragma once

#include <vector>

#include "cliffpoint/big_real.hpp"

namespace cliffpoint {

/// Dense polynomial in one variable, monomial coefficients low-to-high.
/// An empty coefficient vector is the zero polynomial.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<BigReal> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(const BigReal& v);
    /// b0 + b1*x
    static Poly affine(const BigReal& b0, const BigReal& b1);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<BigReal>& coeffs() const { return c_; }

    BigReal eval(const BigReal& x) const;

    Poly& operator+=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const BigReal& s) const;

    /// Antiderivative with zero constant term.
    Poly antiderivative() const;

    /// p(x + delta) expanded in x.
    Poly shifted(const BigReal& delta) const;

  private:
    std::vector<BigReal> c_;
    void trim();
};

/// Compactly supported piecewise polynomial density. Piece i lives on
/// [knots[i], knots[i+1]) in the local variable x = t - knots[i]; the value
/// is zero outside [knots.front(), knots.back()).
class PiecewisePoly {
  public:
    PiecewisePoly(std::vector<BigReal> knots, std::vector<Poly> pieces, int digits);

    /// Uniform density on [-halfwidth, halfwidth], height 1/(2*halfwidth).
    static PiecewisePoly box(const BigReal& halfwidth, const PrecisionContext& ctx);

    const std::vector<BigReal>& knots() const { return knots_; }
    const std::vector<Poly>& pieces() const { return pieces_; }
    int digits() const { return digits_; }
    PrecisionContext ctx() const { return PrecisionContext(digits_); }

    const BigReal& support_min() const { return knots_.front(); }
    const BigReal& support_max() const { return knots_.back(); }
    int max_degree() const;

    BigReal value_at(const BigReal& t) const;
    BigReal total_integral() const;

  private:
    std::vector<BigReal> knots_;
    std::vector<Poly> pieces_;
    int digits_;
};

/// Exact convolution: knots are all pairwise knot sums; each interval's
/// coefficients come from exact polynomial integration of the overlap.
PiecewisePoly convolve(const PiecewisePoly& p, const PiecewisePoly& q);

} // namespace cliffpoint

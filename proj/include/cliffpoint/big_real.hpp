#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "cliffpoint/errors.hpp"

namespace cliffpoint {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Decimal working precision shared by a family of BigReal values.
/// Identical inputs under an identical context give bit-identical results.
class PrecisionContext {
  public:
    explicit PrecisionContext(int digits) : digits_(digits) {
        if (digits < kMinDigits)
            throw domain_error("PrecisionContext: digits must be >= 30");
    }

    int digits() const { return digits_; }

    /// Binary precision backing this context (ceil(digits*log2(10)) plus a
    /// fixed 8-bit pad so decimal rounding is faithful).
    mpfr_prec_t bits() const {
        return static_cast<mpfr_prec_t>((static_cast<long>(digits_) * 33220 + 9999) / 10000 + 8);
    }

    PrecisionContext with_extra(int extra_digits) const {
        return PrecisionContext(digits_ + extra_digits);
    }

    static constexpr int kMinDigits = 30;
    static constexpr int kDefaultDigits = 50;

    static PrecisionContext standard() { return PrecisionContext(kDefaultDigits); }

    friend bool operator==(const PrecisionContext& a, const PrecisionContext& b) {
        return a.digits_ == b.digits_;
    }

  private:
    int digits_;
};

/// Arbitrary-precision real, always finite. Every operation rounds to
/// nearest at the precision of its widest operand; out-of-range results
/// throw instead of producing NaN or infinity.
class BigReal {
  public:
    BigReal() = delete;

    explicit BigReal(const PrecisionContext& ctx) : digits_(ctx.digits()) {
        mpfr_init2(v_, ctx.bits());
        mpfr_set_zero(v_, 1);
    }

    BigReal(long long value, const PrecisionContext& ctx) : digits_(ctx.digits()) {
        mpfr_init2(v_, ctx.bits());
        mpfr_set_si(v_, static_cast<long>(value), MPFR_RNDN);
    }

    BigReal(const BigReal& o) : digits_(o.digits_) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

    BigReal(BigReal&& o) noexcept : digits_(o.digits_) {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }

    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
            digits_ = o.digits_;
        }
        return *this;
    }

    BigReal& operator=(BigReal&& o) noexcept {
        mpfr_swap(v_, o.v_);
        digits_ = o.digits_;
        return *this;
    }

    ~BigReal() { mpfr_clear(v_); }

    static BigReal from_decimal(const std::string& text, const PrecisionContext& ctx);
    static BigReal from_integer(const BigInt& z, const PrecisionContext& ctx);
    static BigReal from_rational(const BigRational& q, const PrecisionContext& ctx);
    static BigReal from_double(double value, const PrecisionContext& ctx);

    int digits() const { return digits_; }
    PrecisionContext ctx() const { return PrecisionContext(digits_); }

    /// Copy rounded to another context (widening is exact).
    BigReal round_to(const PrecisionContext& ctx) const;

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long long to_long() const;

    /// Largest integer <= value.
    BigInt floor_integer() const;

    /// Canonical scientific form with `significant` digits, e.g.
    /// "-6.2831853072e+00". Deterministic for fixed inputs and precision.
    std::string to_decimal(int significant) const;

    /// Fixed-point form with `decimals` digits after the point.
    std::string to_fixed(int decimals) const;

    BigReal operator-() const;

    BigReal& operator+=(const BigReal& o);
    BigReal& operator-=(const BigReal& o);
    BigReal& operator*=(const BigReal& o);
    BigReal& operator/=(const BigReal& o);

    friend BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
    friend BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
    friend BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
    friend BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }

    BigReal& operator+=(long long k);
    BigReal& operator-=(long long k);
    BigReal& operator*=(long long k);
    BigReal& operator/=(long long k);

    friend BigReal operator+(BigReal a, long long b) { return a += b; }
    friend BigReal operator-(BigReal a, long long b) { return a -= b; }
    friend BigReal operator*(BigReal a, long long b) { return a *= b; }
    friend BigReal operator/(BigReal a, long long b) { return a /= b; }
    friend BigReal operator+(long long a, const BigReal& b) { return b + a; }
    friend BigReal operator*(long long a, const BigReal& b) { return b * a; }
    friend BigReal operator-(long long a, const BigReal& b);
    friend BigReal operator/(long long a, const BigReal& b);

    friend int cmp(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const BigReal& a, const BigReal& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return cmp(a, b) >= 0; }
    friend bool operator==(const BigReal& a, const BigReal& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const BigReal& a, const BigReal& b) { return cmp(a, b) != 0; }

    friend int cmp(const BigReal& a, long long b) { return mpfr_cmp_si(a.v_, b); }
    friend bool operator<(const BigReal& a, long long b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigReal& a, long long b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigReal& a, long long b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigReal& a, long long b) { return cmp(a, b) >= 0; }
    friend bool operator==(const BigReal& a, long long b) { return cmp(a, b) == 0; }

    /// Raw handle for hot loops; the value must stay finite.
    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    /// Throws if the value picked up a NaN/infinity (used after raw access).
    void check_finite() const;

    friend BigReal exp(const BigReal& x);
    friend BigReal exp10(const BigReal& x);
    friend BigReal log(const BigReal& x);
    friend BigReal log10(const BigReal& x);
    friend BigReal sin(const BigReal& x);
    friend BigReal cos(const BigReal& x);
    friend BigReal atan(const BigReal& x);
    friend BigReal sqrt(const BigReal& x);
    friend BigReal abs(const BigReal& x);
    friend BigReal pow_si(const BigReal& x, long e);

  private:
    mpfr_t v_;
    int digits_;

    static int join_digits(const BigReal& a, const BigReal& b) {
        return a.digits_ > b.digits_ ? a.digits_ : b.digits_;
    }
};

BigReal exp(const BigReal& x);
BigReal exp10(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log10(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal atan(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal abs(const BigReal& x);
BigReal pow_si(const BigReal& x, long e);

inline const BigReal& min(const BigReal& a, const BigReal& b) { return b < a ? b : a; }
inline const BigReal& max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }

/// pi to ctx digits.
BigReal pi(const PrecisionContext& ctx);

/// 2*pi to ctx digits; the default crossing threshold.
BigReal two_pi(const PrecisionContext& ctx);

/// Natural log of 10 to ctx digits.
BigReal ln10(const PrecisionContext& ctx);

/// Mertens' constant B = 0.26149... (stored literal, 60 decimals; OEIS A077761).
BigReal mertens_constant(const PrecisionContext& ctx);

/// 10^-k as a positive BigReal (handy tolerance builder).
BigReal pow10_neg(int k, const PrecisionContext& ctx);

} // namespace cliffpoint

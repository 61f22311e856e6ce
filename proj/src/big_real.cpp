#include "cliffpoint/big_real.hpp"

#include <cstdlib>
#include <cstring>

namespace cliffpoint {

namespace {

void require_finite(mpfr_srcptr v, const char* what) {
    if (!mpfr_number_p(v))
        throw domain_error(std::string(what) + ": result is not finite");
}

} // namespace

void BigReal::check_finite() const { require_finite(v_, "BigReal"); }

BigReal BigReal::from_decimal(const std::string& text, const PrecisionContext& ctx) {
    BigReal r(ctx);
    if (text.empty() || mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0)
        throw domain_error("BigReal: cannot parse decimal literal '" + text + "'");
    require_finite(r.v_, "from_decimal");
    return r;
}

BigReal BigReal::from_integer(const BigInt& z, const PrecisionContext& ctx) {
    BigReal r(ctx);
    mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
    return r;
}

BigReal BigReal::from_rational(const BigRational& q, const PrecisionContext& ctx) {
    BigReal r(ctx);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigReal BigReal::from_double(double value, const PrecisionContext& ctx) {
    BigReal r(ctx);
    mpfr_set_d(r.v_, value, MPFR_RNDN);
    require_finite(r.v_, "from_double");
    return r;
}

BigReal BigReal::round_to(const PrecisionContext& ctx) const {
    BigReal r(ctx);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

long long BigReal::to_long() const {
    if (!mpfr_fits_slong_p(v_, MPFR_RNDN))
        throw domain_error("BigReal: value does not fit a long integer");
    return mpfr_get_si(v_, MPFR_RNDN);
}

BigInt BigReal::floor_integer() const {
    BigInt z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
    return z;
}

std::string BigReal::to_decimal(int significant) const {
    if (significant < 1)
        significant = 1;
    if (mpfr_zero_p(v_))
        return "0";
    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(significant), v_, MPFR_RNDN);
    if (s == nullptr)
        throw error("BigReal: formatting failed");
    std::string digits(s);
    mpfr_free_str(s);
    std::string sign;
    if (!digits.empty() && digits[0] == '-') {
        sign = "-";
        digits.erase(0, 1);
    }
    // mpfr convention: value = 0.digits * 10^e
    std::string out = sign + digits.substr(0, 1);
    if (digits.size() > 1)
        out += "." + digits.substr(1);
    long exp10 = static_cast<long>(e) - 1;
    out += "e";
    out += (exp10 < 0 ? "-" : "+");
    long a = exp10 < 0 ? -exp10 : exp10;
    std::string es = std::to_string(a);
    if (es.size() < 2)
        es.insert(0, "0");
    out += es;
    return out;
}

std::string BigReal::to_fixed(int decimals) const {
    char* out = nullptr;
    if (mpfr_asprintf(&out, "%.*Rf", decimals, v_) < 0)
        throw error("BigReal: formatting failed");
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

BigReal BigReal::operator-() const {
    BigReal r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

#define CLIFF_BINOP(opname, mpfrfn)                                                               \
    BigReal& BigReal::operator opname(const BigReal& o) {                                         \
        int d = join_digits(*this, o);                                                            \
        if (d != digits_) {                                                                       \
            BigReal widened = round_to(PrecisionContext(d));                                      \
            mpfr_swap(v_, widened.v_);                                                            \
            digits_ = d;                                                                          \
        }                                                                                         \
        mpfrfn(v_, v_, o.v_, MPFR_RNDN);                                                          \
        require_finite(v_, #mpfrfn);                                                              \
        return *this;                                                                             \
    }

CLIFF_BINOP(+=, mpfr_add)
CLIFF_BINOP(-=, mpfr_sub)
CLIFF_BINOP(*=, mpfr_mul)
#undef CLIFF_BINOP

BigReal& BigReal::operator/=(const BigReal& o) {
    if (mpfr_zero_p(o.v_))
        throw domain_error("BigReal: division by zero");
    int d = join_digits(*this, o);
    if (d != digits_) {
        BigReal widened = round_to(PrecisionContext(d));
        mpfr_swap(v_, widened.v_);
        digits_ = d;
    }
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    require_finite(v_, "mpfr_div");
    return *this;
}

BigReal& BigReal::operator+=(long long k) {
    mpfr_add_si(v_, v_, static_cast<long>(k), MPFR_RNDN);
    require_finite(v_, "mpfr_add_si");
    return *this;
}

BigReal& BigReal::operator-=(long long k) {
    mpfr_sub_si(v_, v_, static_cast<long>(k), MPFR_RNDN);
    require_finite(v_, "mpfr_sub_si");
    return *this;
}

BigReal& BigReal::operator*=(long long k) {
    mpfr_mul_si(v_, v_, static_cast<long>(k), MPFR_RNDN);
    require_finite(v_, "mpfr_mul_si");
    return *this;
}

BigReal& BigReal::operator/=(long long k) {
    if (k == 0)
        throw domain_error("BigReal: division by zero");
    mpfr_div_si(v_, v_, static_cast<long>(k), MPFR_RNDN);
    require_finite(v_, "mpfr_div_si");
    return *this;
}

BigReal operator-(long long a, const BigReal& b) {
    BigReal r(b);
    mpfr_si_sub(r.v_, static_cast<long>(a), b.v_, MPFR_RNDN);
    return r;
}

BigReal operator/(long long a, const BigReal& b) {
    if (mpfr_zero_p(b.v_))
        throw domain_error("BigReal: division by zero");
    BigReal r(b);
    mpfr_si_div(r.v_, static_cast<long>(a), b.v_, MPFR_RNDN);
    require_finite(r.v_, "mpfr_si_div");
    return r;
}

#define CLIFF_UNFN(name, mpfrfn)                                                                  \
    BigReal name(const BigReal& x) {                                                              \
        BigReal r(x);                                                                             \
        mpfrfn(r.v_, x.v_, MPFR_RNDN);                                                            \
        require_finite(r.v_, #mpfrfn);                                                            \
        return r;                                                                                 \
    }

CLIFF_UNFN(exp, mpfr_exp)
CLIFF_UNFN(exp10, mpfr_exp10)
CLIFF_UNFN(sin, mpfr_sin)
CLIFF_UNFN(cos, mpfr_cos)
CLIFF_UNFN(atan, mpfr_atan)
CLIFF_UNFN(abs, mpfr_abs)
#undef CLIFF_UNFN

BigReal log(const BigReal& x) {
    if (mpfr_sgn(x.v_) <= 0)
        throw domain_error("log: argument must be positive");
    BigReal r(x);
    mpfr_log(r.v_, x.v_, MPFR_RNDN);
    return r;
}

BigReal log10(const BigReal& x) {
    if (mpfr_sgn(x.v_) <= 0)
        throw domain_error("log10: argument must be positive");
    BigReal r(x);
    mpfr_log10(r.v_, x.v_, MPFR_RNDN);
    return r;
}

BigReal sqrt(const BigReal& x) {
    if (mpfr_sgn(x.v_) < 0)
        throw domain_error("sqrt: argument must be nonnegative");
    BigReal r(x);
    mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
    return r;
}

BigReal pow_si(const BigReal& x, long e) {
    BigReal r(x);
    mpfr_pow_si(r.v_, x.v_, e, MPFR_RNDN);
    require_finite(r.v_, "mpfr_pow_si");
    return r;
}

BigReal pi(const PrecisionContext& ctx) {
    BigReal r(ctx);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

BigReal two_pi(const PrecisionContext& ctx) {
    BigReal r = pi(ctx);
    mpfr_mul_2ui(r.raw(), r.raw(), 1, MPFR_RNDN);
    return r;
}

BigReal ln10(const PrecisionContext& ctx) {
    return log(BigReal(10, ctx));
}

BigReal mertens_constant(const PrecisionContext& ctx) {
    static const char* kDigits =
        "0.261497212847642783755426838608695859051566648261199206192064";
    return BigReal::from_decimal(kDigits, ctx);
}

BigReal pow10_neg(int k, const PrecisionContext& ctx) {
    BigReal r(ctx);
    mpfr_set_si(r.raw(), -k, MPFR_RNDN);
    mpfr_exp10(r.raw(), r.raw(), MPFR_RNDN);
    return r;
}

} // namespace cliffpoint

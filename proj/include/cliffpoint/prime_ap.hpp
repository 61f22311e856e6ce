#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "cliffpoint/big_real.hpp"
#include "cliffpoint/sieve.hpp"

namespace cliffpoint {

/// Residue class a (mod q) with gcd(a, q) = 1 (Dirichlet precondition).
/// The q = 1 form stands in for "all primes".
struct APClass {
    std::int64_t modulus; // q
    std::int64_t residue; // a

    APClass(std::int64_t q, std::int64_t a) : modulus(q), residue(a) {
        if (q < 1)
            throw usage_error("APClass: modulus must be >= 1");
        if (q > 1 && (a < 1 || a >= q))
            throw usage_error("APClass: residue must satisfy 1 <= a < q");
        if (std::gcd(q, a) != 1)
            throw usage_error("APClass: residue and modulus must be coprime");
    }
};

/// Euler's phi via trial-division factorization.
std::int64_t euler_phi(std::int64_t q);

/// sum of 1/p over primes p <= x with p = a (mod q), increasing p,
/// 10 guard digits.
BigReal recip_sum_ap(const APClass& ap, std::int64_t x, const PrecisionContext& ctx,
                     const SieveCache& cache);

struct MertensEstimate {
    APClass ap;
    std::int64_t x;
    BigReal value;     // recip_sum - loglog(x)/phi(q); non-rigorous
    BigReal recip_sum;
    std::int64_t phi_q;
};

/// Empirical M(q,a) from summation to x (the o(1) term is dropped).
MertensEstimate mertens_estimate(const APClass& ap, std::int64_t x, const PrecisionContext& ctx,
                                 const SieveCache& cache);

/// Exact decimal constant; keeps full precision until a working context is
/// chosen (M(q,a) inputs may carry 100+ decimals).
class DecimalConstant {
  public:
    explicit DecimalConstant(std::string text) : text_(std::move(text)) {}
    const std::string& text() const { return text_; }
    BigReal materialize(const PrecisionContext& ctx) const {
        return BigReal::from_decimal(text_, ctx);
    }

  private:
    std::string text_;
};

struct CutoffEstimate {
    APClass ap;
    BigReal mqa_used;
    BigReal loglog_x;   // phi(q) * (2pi - mqa)
    BigReal log_x;      // exp(loglog_x)
    BigReal log10_x;
    BigReal x_leading;  // mantissa of x
    BigInt x_exponent;  // floor(log10 x)
    BigReal log10_N0;   // (log_x - log phi - log log_x)/log 10
    BigReal N0_leading; // mantissa of N0
    BigInt N0_exponent; // floor(log10 N0)
    int digits_used = 0;
};

/// Index cutoff for the progression: x = exp(exp(phi(q)(2pi - M))) and
/// N0 = x/(phi(q) log x), all carried in the log domain. Precision is
/// auto-raised to (digits of N0's exponent) + 30.
CutoffEstimate cutoff_from_mertens(const APClass& ap, const DecimalConstant& mqa,
                                   const PrecisionContext& ctx);

/// The all-primes cutoff: x = exp(exp(2pi - B)) with Mertens' constant B,
/// N0 = x / log x.
CutoffEstimate all_primes_cutoff(const PrecisionContext& ctx);

} // namespace cliffpoint

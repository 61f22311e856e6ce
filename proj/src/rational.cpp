#include "cliffpoint/rational.hpp"

#include <mutex>
#include <vector>

namespace cliffpoint {

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

namespace {

std::mutex g_bernoulli_mutex;
std::vector<BigRational> g_bernoulli; // B_0 .. B_max computed so far

void extend_bernoulli(unsigned n) {
    if (g_bernoulli.empty())
        g_bernoulli.emplace_back(1);
    for (unsigned i = g_bernoulli.size(); i <= n; ++i) {
        // B_i = -(sum_{j=0}^{i-1} C(i+1, j) B_j) / (i+1)
        BigRational acc(0);
        for (unsigned j = 0; j < i; ++j) {
            if (j > 1 && (j & 1u))
                continue; // odd-index entries above 1 are zero
            acc += BigRational(binomial(i + 1, j)) * g_bernoulli[j];
        }
        acc /= BigRational(static_cast<long>(i) + 1);
        BigRational b = -acc;
        b.canonicalize();
        g_bernoulli.push_back(b);
    }
}

} // namespace

BigRational bernoulli(unsigned n) {
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    if (n >= g_bernoulli.size())
        extend_bernoulli(n);
    return g_bernoulli[n];
}

BigReal to_real(const BigRational& q, const PrecisionContext& ctx) {
    return BigReal::from_rational(q, ctx);
}

} // namespace cliffpoint

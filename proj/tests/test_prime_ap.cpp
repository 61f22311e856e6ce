#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <vector>

#include "cliffpoint/prime_ap.hpp"
#include "cliffpoint/rational.hpp"
#include "cliffpoint/reports.hpp"

using namespace cliffpoint;

namespace {

const PrecisionContext kCtx(50);

bool trial_division_prime(std::int64_t n) {
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

const SieveCache& shared_sieve() {
    static SieveCache cache = SieveCache::build(10'000'000);
    return cache;
}

} // namespace

TEST_CASE("sieve against oracles") {
    const SieveCache& cache = shared_sieve();

    std::vector<std::int64_t> small;
    cache.for_each_prime(30, [&](std::int64_t p) { small.push_back(p); });
    CHECK(small == std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});

    // trial-division oracle up to 10^4
    for (std::int64_t n = 0; n <= 10'000; ++n)
        CHECK(cache.is_prime(n) == trial_division_prime(n));

    int count100 = 0, count1e6 = 0;
    cache.for_each_prime(100, [&](std::int64_t) { ++count100; });
    CHECK(count100 == 25);

    // independent plain sieve oracle at 10^6
    std::vector<char> plain(1'000'001, 1);
    plain[0] = plain[1] = 0;
    for (std::int64_t n = 2; n * n <= 1'000'000; ++n)
        if (plain[n])
            for (std::int64_t c = n * n; c <= 1'000'000; c += n)
                plain[c] = 0;
    int oracle1e6 = 0;
    for (char b : plain)
        oracle1e6 += b;
    cache.for_each_prime(1'000'000, [&](std::int64_t) { ++count1e6; });
    CHECK(count1e6 == 78498);
    CHECK(count1e6 == oracle1e6);

    CHECK_THROWS_AS(cache.is_prime(cache.limit() + 1), feasibility_error);
    CHECK_THROWS_AS(SieveCache::build(SieveCache::kMaxLimit + 1), feasibility_error);
    CHECK_THROWS_AS(SieveCache::build(1), domain_error);
}

TEST_CASE("sieve cache file round trip") {
    SieveCache cache = SieveCache::build(100'000);
    const char* path = "sieve_roundtrip.svc";
    cache.save(path);
    SieveCache loaded = SieveCache::load(path);
    CHECK(loaded.limit() == cache.limit());
    CHECK(loaded.checksum() == cache.checksum());
    for (std::int64_t n : {2, 3, 4, 99991, 99989})
        CHECK(loaded.is_prime(n) == cache.is_prime(n));

    // corrupt one bitset byte: checksum must reject
    {
        std::FILE* f = std::fopen(path, "r+b");
        REQUIRE(f);
        std::fseek(f, 20, SEEK_SET);
        unsigned char b = 0;
        CHECK(std::fread(&b, 1, 1, f) == 1);
        b ^= 0x40;
        std::fseek(f, 20, SEEK_SET);
        CHECK(std::fwrite(&b, 1, 1, f) == 1);
        std::fclose(f);
    }
    CHECK_THROWS_AS(SieveCache::load(path), cache_error);
    CHECK(SieveCache::load_or_build(path, 100'000).is_prime(99991));
    CHECK_THROWS_AS(SieveCache::load("no_such_file.svc"), cache_error);
    std::remove(path);
}

TEST_CASE("euler phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(3) == 2);
    CHECK(euler_phi(10) == 4);
    CHECK(euler_phi(100) == 40);
    CHECK(euler_phi(269) == 268);
    CHECK(euler_phi(9999) == 6000);
    CHECK_THROWS_AS(euler_phi(0), domain_error);
}

TEST_CASE("reciprocal sums over residue classes") {
    const SieveCache& cache = shared_sieve();

    auto frac = [&](std::initializer_list<long> denoms) {
        BigRational s(0);
        for (long d : denoms)
            s += BigRational(1, d);
        return to_real(s, kCtx);
    };

    CHECK(abs(recip_sum_ap(APClass(3, 1), 20, kCtx, cache) - frac({7, 13, 19})) <
          pow10_neg(45, kCtx));
    CHECK(abs(recip_sum_ap(APClass(10, 9), 60, kCtx, cache) - frac({19, 29, 59})) <
          pow10_neg(45, kCtx));
    CHECK(abs(recip_sum_ap(APClass(2, 1), 10, kCtx, cache) - frac({3, 5, 7})) <
          pow10_neg(45, kCtx));
    CHECK_THROWS_AS(recip_sum_ap(APClass(3, 1), cache.limit() + 1, kCtx, cache),
                    feasibility_error);
    CHECK_THROWS_AS(APClass(4, 2), usage_error);
    CHECK_THROWS_AS(APClass(10, 11), usage_error);
}

TEST_CASE("residue classes partition the prime reciprocals") {
    const SieveCache& cache = shared_sieve();
    const std::int64_t x = 100'000;

    BigReal whole(kCtx.with_extra(10));
    cache.for_each_prime(x, [&](std::int64_t p) { whole += 1 / BigReal(p, kCtx); });

    BigReal parts(kCtx.with_extra(10));
    for (std::int64_t a : {1, 3, 7, 9})
        parts += recip_sum_ap(APClass(10, a), x, kCtx, cache);
    parts += to_real(BigRational(1, 2) + BigRational(1, 5), kCtx); // primes dividing 10

    CHECK(abs(whole - parts) < pow10_neg(40, kCtx));
}

TEST_CASE("mertens estimates match the published constants") {
    const SieveCache& cache = shared_sieve();
    const std::int64_t x = 10'000'000;

    MertensEstimate a = mertens_estimate(APClass(3, 1), x, kCtx, cache);
    CHECK(abs(a.value - BigReal::from_decimal("-0.3568904795", kCtx)) <
          BigReal::from_decimal("5e-4", kCtx));
    CHECK(a.phi_q == 2);

    MertensEstimate f = mertens_estimate(APClass(269, 2), x, kCtx, cache);
    CHECK(abs(f.value - BigReal::from_decimal("0.49776", kCtx)) <
          BigReal::from_decimal("5e-4", kCtx));

    // slow loglog drift only between 10^6 and 10^7
    MertensEstimate a6 = mertens_estimate(APClass(3, 1), 1'000'000, kCtx, cache);
    CHECK(abs(a.value - a6.value) < BigReal::from_decimal("0.05", kCtx));

    CHECK_THROWS_AS(mertens_estimate(APClass(3, 1), 2, kCtx, cache), domain_error);
}

TEST_CASE("cutoff examples A through F") {
    auto run = [&](std::int64_t q, std::int64_t a, const char* mqa) {
        return cutoff_from_mertens(APClass(q, a), DecimalConstant(mqa), kCtx);
    };

    CutoffEstimate A = run(3, 1, "-0.3568904795");
    CHECK(A.loglog_x.to_fixed(10) == "13.2801515734");
    CHECK(A.x_exponent == 254261);
    CHECK(abs(A.x_leading - BigReal::from_decimal("4.45176353778", kCtx)) <
          BigReal::from_decimal("1e-3", kCtx));
    CHECK(A.N0_exponent == 254255);
    CHECK(abs(A.N0_leading - BigReal::from_decimal("3.8", kCtx)) <
          BigReal::from_decimal("0.05", kCtx));

    CutoffEstimate B = run(10, 1, "-0.2088344774302376");
    CHECK(B.loglog_x.to_fixed(10) == "25.9680791384");
    CHECK(B.x_exponent == BigInt("82333729216"));
    // x mantissas for B-E are only as good as the 16-decimal inputs (~2e-4)
    CHECK(abs(B.x_leading - BigReal::from_decimal("2.64164832039", kCtx)) <
          BigReal::from_decimal("2e-3", kCtx));
    CHECK(B.N0_exponent == BigInt("82333729204"));
    CHECK(abs(B.N0_leading - BigReal::from_decimal("3.48", kCtx)) <
          BigReal::from_decimal("5e-3", kCtx));

    CutoffEstimate C = run(10, 3, "0.1386504057476469");
    CHECK(C.loglog_x.to_fixed(10) == "24.5781396057");
    CHECK(C.x_exponent == BigInt("20508538744"));
    CHECK(abs(C.x_leading - BigReal::from_decimal("1.89595583512", kCtx)) <
          BigReal::from_decimal("2e-3", kCtx));
    CHECK(C.N0_exponent == BigInt("20508538733"));
    CHECK(abs(C.N0_leading - BigReal::from_decimal("1.0", kCtx)) <
          BigReal::from_decimal("0.05", kCtx));

    CutoffEstimate D = run(10, 7, "-0.1039035249178728");
    CHECK(D.x_exponent == BigInt("54112058088"));
    CHECK(abs(D.x_leading - BigReal::from_decimal("1.38984773649", kCtx)) <
          BigReal::from_decimal("2e-3", kCtx));
    CHECK(D.N0_exponent == BigInt("54112058076"));
    CHECK(abs(D.N0_leading - BigReal::from_decimal("2.8", kCtx)) <
          BigReal::from_decimal("0.05", kCtx));

    CutoffEstimate E = run(10, 9, "-0.2644151905518937");
    CHECK(E.loglog_x.to_fixed(10) == "26.1904019909");
    CHECK(E.x_exponent == BigInt("102832732176"));
    CHECK(abs(E.x_leading - BigReal::from_decimal("9.98876322671", kCtx)) <
          BigReal::from_decimal("2e-3", kCtx));
    CHECK(E.N0_exponent == BigInt("102832732165"));
    CHECK(abs(E.N0_leading - BigReal::from_decimal("1.05", kCtx)) <
          BigReal::from_decimal("5e-3", kCtx));

    // Example F: the 136-decimal constant and the exact 110-digit exponent
    const char* mqa_f =
        "-0.0327328506433100964865591320930048072116438944230"
        "5808121239698784116683056664327790581593738706166"
        "32469149389219354796589435060666487892";
    CutoffEstimate F = run(100, 1, mqa_f);
    CHECK(F.loglog_x.to_fixed(10) == "252.6367263129");
    CHECK(F.N0_exponent ==
          BigInt("2272586775359001684288392849910387559794317395514706629"
                 "6853514124083426515979578332298510630142796585419982817"));
    CHECK(abs(F.x_leading - BigReal::from_decimal("9.1592327310", kCtx)) <
          BigReal::from_decimal("1e-8", kCtx));
    CHECK(abs(F.N0_leading - BigReal::from_decimal("4.4", kCtx)) <
          BigReal::from_decimal("0.05", kCtx));
    CHECK(F.digits_used >= 140);

    // monotone: raising M(q,a) lowers the cutoff exponent (fixed q = 10)
    CHECK(E.N0_exponent > B.N0_exponent);
    CHECK(B.N0_exponent > D.N0_exponent);
    CHECK(D.N0_exponent > C.N0_exponent);

    CHECK_THROWS_AS(run(10, 1, "6.3"), domain_error);
}

TEST_CASE("all primes cutoff") {
    CutoffEstimate ap = all_primes_cutoff(kCtx);
    BigInt xe = ap.x_exponent;
    CHECK((xe == 178 || xe == 179));
    CHECK(ap.N0_exponent >= 175);
    CHECK(ap.N0_exponent <= 177);
    CHECK(ap.N0_exponent < xe); // N0 < x
}

TEST_CASE("cutoff serialization is deterministic") {
    auto render = [&] {
        CutoffEstimate e = cutoff_from_mertens(APClass(10, 9),
                                               DecimalConstant("-0.2644151905518937"), kCtx);
        return to_json(e).dump();
    };
    std::string first = render();
    std::string second = render();
    CHECK(first == second);
    CHECK(first.find("\"102832732165\"") != std::string::npos);
}

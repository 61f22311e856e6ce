#include "cliffpoint/sieve.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <memory>

namespace cliffpoint {

namespace {

constexpr char kMagic[4] = {'S', 'V', 'C', '1'};

std::uint64_t fnv1a(const unsigned char* data, std::size_t n) {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= data[i];
        h *= 1099511628211ULL;
    }
    return h;
}

std::size_t byte_count(std::int64_t limit) {
    std::int64_t nbits = (limit + 1) / 2;
    return static_cast<std::size_t>((nbits + 7) / 8);
}

void put_u64le(unsigned char* out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i)
        out[i] = static_cast<unsigned char>(v >> (8 * i));
}

std::uint64_t get_u64le(const unsigned char* in) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
        v |= static_cast<std::uint64_t>(in[i]) << (8 * i);
    return v;
}

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f)
            std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

std::vector<unsigned char> bitset_bytes(const std::vector<std::uint64_t>& words,
                                        std::int64_t limit) {
    std::vector<unsigned char> bytes(byte_count(limit), 0);
    for (std::size_t i = 0; i < bytes.size(); ++i)
        bytes[i] = static_cast<unsigned char>(words[i >> 3] >> ((i & 7) * 8));
    return bytes;
}

} // namespace

SieveCache SieveCache::build(std::int64_t limit) {
    if (limit < 2)
        throw domain_error("SieveCache: limit must be >= 2");
    if (limit > kMaxLimit)
        throw feasibility_error("SieveCache: limit beyond the memory budget");

    std::int64_t root = 1;
    while ((root + 1) * (root + 1) <= limit)
        ++root;

    // base primes up to sqrt(limit) by a plain odd sieve
    std::vector<std::int64_t> base;
    if (root >= 3) {
        std::vector<bool> small_prime(static_cast<std::size_t>(root / 2 + 1), true);
        for (std::int64_t n = 3; n <= root; n += 2) {
            if (!small_prime[static_cast<std::size_t>(n >> 1)])
                continue;
            base.push_back(n);
            for (std::int64_t c = n * n; c <= root; c += 2 * n)
                small_prime[static_cast<std::size_t>(c >> 1)] = false;
        }
    }

    const std::int64_t nbits = (limit + 1) / 2;
    std::vector<std::uint64_t> words(static_cast<std::size_t>((nbits + 63) / 64), ~0ULL);
    auto clear = [&](std::int64_t idx) { words[idx >> 6] &= ~(1ULL << (idx & 63)); };
    clear(0); // n = 1; trailing bits beyond nbits stay set but are never read

    // clear composites segment by segment over the odd-index space
    constexpr std::int64_t kSegmentBits = 1 << 20;
    for (std::int64_t seg = 0; seg < nbits; seg += kSegmentBits) {
        const std::int64_t seg_end = std::min(nbits, seg + kSegmentBits);
        const std::int64_t first_n = 2 * seg + 1;
        const std::int64_t last_n = 2 * seg_end - 1;
        for (std::int64_t p : base) {
            std::int64_t q = ((first_n + p - 1) / p) * p;
            if ((q & 1) == 0)
                q += p;
            if (q < p * p)
                q = p * p;
            for (std::int64_t n = q; n <= last_n; n += 2 * p)
                clear(n >> 1);
        }
    }
    return SieveCache(limit, std::move(words));
}

bool SieveCache::is_prime(std::int64_t n) const {
    if (n > limit_)
        throw feasibility_error("SieveCache: query exceeds sieve limit");
    if (n < 2)
        return false;
    if (n == 2)
        return true;
    if ((n & 1) == 0)
        return false;
    return bit(n >> 1);
}

std::uint64_t SieveCache::checksum() const {
    auto bytes = bitset_bytes(words_, limit_);
    return fnv1a(bytes.data(), bytes.size());
}

void SieveCache::save(const std::string& path) const {
    FilePtr f(std::fopen(path.c_str(), "wb"));
    if (!f)
        throw cache_error("SieveCache: cannot open '" + path + "' for writing");
    auto bytes = bitset_bytes(words_, limit_);
    unsigned char header[12];
    std::memcpy(header, kMagic, 4);
    put_u64le(header + 4, static_cast<std::uint64_t>(limit_));
    unsigned char trailer[8];
    put_u64le(trailer, fnv1a(bytes.data(), bytes.size()));
    if (std::fwrite(header, 1, sizeof header, f.get()) != sizeof header ||
        std::fwrite(bytes.data(), 1, bytes.size(), f.get()) != bytes.size() ||
        std::fwrite(trailer, 1, sizeof trailer, f.get()) != sizeof trailer)
        throw cache_error("SieveCache: short write to '" + path + "'");
    if (std::fflush(f.get()) != 0)
        throw cache_error("SieveCache: flush failed for '" + path + "'");
}

SieveCache SieveCache::load(const std::string& path) {
    FilePtr f(std::fopen(path.c_str(), "rb"));
    if (!f)
        throw cache_error("SieveCache: cannot open '" + path + "'");
    unsigned char header[12];
    if (std::fread(header, 1, sizeof header, f.get()) != sizeof header ||
        std::memcmp(header, kMagic, 4) != 0)
        throw cache_error("SieveCache: bad magic in '" + path + "'");
    const std::int64_t limit = static_cast<std::int64_t>(get_u64le(header + 4));
    if (limit < 2 || limit > kMaxLimit)
        throw cache_error("SieveCache: implausible limit in '" + path + "'");
    std::vector<unsigned char> bytes(byte_count(limit));
    if (std::fread(bytes.data(), 1, bytes.size(), f.get()) != bytes.size())
        throw cache_error("SieveCache: truncated bitset in '" + path + "'");
    unsigned char trailer[8];
    if (std::fread(trailer, 1, sizeof trailer, f.get()) != sizeof trailer)
        throw cache_error("SieveCache: missing checksum in '" + path + "'");
    if (get_u64le(trailer) != fnv1a(bytes.data(), bytes.size()))
        throw cache_error("SieveCache: checksum mismatch in '" + path + "'");

    std::int64_t nbits = (limit + 1) / 2;
    std::vector<std::uint64_t> words(static_cast<std::size_t>((nbits + 63) / 64), 0);
    for (std::size_t i = 0; i < bytes.size(); ++i)
        words[i >> 3] |= static_cast<std::uint64_t>(bytes[i]) << ((i & 7) * 8);
    return SieveCache(limit, std::move(words));
}

SieveCache SieveCache::load_or_build(const std::string& path, std::int64_t limit) {
    try {
        SieveCache cache = load(path);
        if (cache.limit() >= limit)
            return cache;
    } catch (const cache_error&) {
        // fall through to a fresh build
    }
    SieveCache cache = build(limit);
    cache.save(path);
    return cache;
}

} // namespace cliffpoint

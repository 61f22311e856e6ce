#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cliffpoint/errors.hpp"

namespace cliffpoint {

/// Primality bitset over odd integers <= limit (2 handled separately).
/// File form: magic "SVC1", u64-LE limit, LSB-first bitset bytes, then a
/// u64-LE FNV-1a checksum of the bitset bytes.
class SieveCache {
  public:
    static constexpr std::int64_t kDefaultLimit = 10'000'000;
    static constexpr std::int64_t kMaxLimit = 1LL << 32; // 256 MiB of bits

    /// Segmented sieve of Eratosthenes; deterministic.
    static SieveCache build(std::int64_t limit);

    static SieveCache load(const std::string& path);
    void save(const std::string& path) const;

    /// Loads `path` when it covers `limit`, else builds and saves it.
    static SieveCache load_or_build(const std::string& path, std::int64_t limit);

    std::int64_t limit() const { return limit_; }
    bool is_prime(std::int64_t n) const;

    /// Calls fn(p) for every prime p <= bound in increasing order.
    template <typename Fn>
    void for_each_prime(std::int64_t bound, Fn&& fn) const {
        if (bound > limit_)
            throw feasibility_error("SieveCache: bound exceeds sieve limit");
        if (bound >= 2)
            fn(std::int64_t{2});
        for (std::int64_t n = 3; n <= bound; n += 2)
            if (bit(n >> 1))
                fn(n);
    }

    std::uint64_t checksum() const;

  private:
    SieveCache(std::int64_t limit, std::vector<std::uint64_t> words)
        : limit_(limit), words_(std::move(words)) {}

    bool bit(std::int64_t idx) const {
        return (words_[static_cast<std::size_t>(idx >> 6)] >> (idx & 63)) & 1u;
    }

    std::int64_t limit_;
    std::vector<std::uint64_t> words_; // bit i <=> 2i+1 is prime
};

} // namespace cliffpoint

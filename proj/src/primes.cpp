#include "mzeta/primes.hpp"

#include <stdexcept>

namespace mz {

PrimeSieve::PrimeSieve(std::uint64_t limit) : limit_(limit), flags_(limit + 1, 1) {
    flags_[0] = 0;
    if (limit_ >= 1) flags_[1] = 0;
    for (std::uint64_t p = 2; p * p <= limit_; ++p) {
        if (!flags_[p]) continue;
        for (std::uint64_t q = p * p; q <= limit_; q += p) flags_[q] = 0;
    }
}

std::uint64_t PrimeSieve::largest_prime_below(std::uint64_t n) const {
    if (n > limit_ + 1) throw std::out_of_range("sieve too small");
    for (std::uint64_t x = n; x-- > 2;)
        if (flags_[x]) return x;
    return 0;
}

std::uint64_t PrimeSieve::next_prime_at_or_after(std::uint64_t n) const {
    for (std::uint64_t x = n < 2 ? 2 : n; x <= limit_; ++x)
        if (flags_[x]) return x;
    return 0;
}

std::vector<std::uint64_t> nagura_check(std::uint64_t lo, std::uint64_t hi) {
    if (lo < 1) throw std::invalid_argument("interval start must be >= 1");
    if (hi < lo) return {};
    const PrimeSieve sieve(hi + hi / 5 + 1);
    // next_prime[x] = smallest prime >= x, precomputed backwards.
    std::vector<std::uint64_t> next_prime(sieve.limit() + 2, 0);
    for (std::uint64_t x = sieve.limit(); x >= 1; --x)
        next_prime[x] = sieve.is_prime(x) ? x : next_prime[x + 1];
    next_prime[0] = next_prime[1];
    std::vector<std::uint64_t> failures;
    for (std::uint64_t x = lo; x <= hi; ++x) {
        const std::uint64_t window_end = x + x / 5; // floor(6x/5)
        const std::uint64_t p = next_prime[x];
        if (p == 0 || p > window_end) failures.push_back(x);
    }
    return failures;
}

std::vector<unsigned> powers_with_largest_prime(std::uint64_t p, std::uint64_t cap) {
    if (cap < 4) return {};
    const PrimeSieve sieve(cap);
    std::vector<unsigned> out;
    for (unsigned t = 2; (std::uint64_t{1} << t) <= cap; ++t)
        if (sieve.largest_prime_below(std::uint64_t{1} << t) == p) out.push_back(t);
    return out;
}

} // namespace mz

#pragma once

#include <cstdint>
#include <vector>

namespace mz {

/// Eratosthenes sieve up to limit inclusive.
class PrimeSieve {
public:
    explicit PrimeSieve(std::uint64_t limit);

    std::uint64_t limit() const noexcept { return limit_; }
    bool is_prime(std::uint64_t n) const { return n <= limit_ && flags_[n]; }

    /// Largest prime strictly below n, 0 if none.
    std::uint64_t largest_prime_below(std::uint64_t n) const;

    /// Smallest prime >= n, 0 if none up to the limit.
    std::uint64_t next_prime_at_or_after(std::uint64_t n) const;

private:
    std::uint64_t limit_;
    std::vector<char> flags_;
};

/// All x in [lo, hi] with no prime in [x, floor(6x/5)].  Nagura's bound says
/// the list is empty from 25 on; below that a handful of x fail.
std::vector<std::uint64_t> nagura_check(std::uint64_t lo, std::uint64_t hi);

/// All t >= 2 with 2^t <= cap such that p is the largest prime below 2^t.
std::vector<unsigned> powers_with_largest_prime(std::uint64_t p, std::uint64_t cap);

} // namespace mz

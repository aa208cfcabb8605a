#pragma once

#include <cstdint>
#include <vector>

namespace mdg {

using u128 = unsigned __int128;

bool is_prime(std::uint64_t n) noexcept;

/// Largest r with r*r <= n.
std::uint64_t isqrt(std::uint64_t n) noexcept;

/// Ascending prime factors of n, without multiplicity.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Positive divisors of n, ascending.
std::vector<std::uint32_t> divisors(std::uint32_t n);

struct PrimePower {
    std::uint32_t p, e, q;
};

/// All prime powers p^e <= limit with q >= 2, ascending by q.
std::vector<PrimePower> prime_powers_upto(std::uint32_t limit);

/// Decompose q as p^e; returns false if q is not a prime power >= 2.
bool as_prime_power(std::uint32_t q, std::uint32_t& p, std::uint32_t& e) noexcept;

inline u128 pow_u128(std::uint64_t base, unsigned exp) noexcept {
    u128 r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

} // namespace mdg

#include "mdg/num_util.hpp"

namespace mdg {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t isqrt(std::uint64_t n) noexcept {
    if (n == 0) return 0;
    std::uint64_t r = n, x = (n >> 1) + 1;
    while (x < r) {
        r = x;
        x = (x + n / x) >> 1;
    }
    return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<std::uint32_t> divisors(std::uint32_t n) {
    std::vector<std::uint32_t> small, large;
    for (std::uint32_t d = 1; (std::uint64_t)d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

std::vector<PrimePower> prime_powers_upto(std::uint32_t limit) {
    std::vector<PrimePower> out;
    for (std::uint32_t q = 2; q <= limit; ++q) {
        std::uint32_t p, e;
        if (as_prime_power(q, p, e)) out.push_back({p, e, q});
    }
    return out;
}

bool as_prime_power(std::uint32_t q, std::uint32_t& p, std::uint32_t& e) noexcept {
    if (q < 2) return false;
    std::uint32_t base = q;
    for (std::uint32_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            base = d;
            break;
        }
    }
    std::uint32_t m = q, k = 0;
    while (m % base == 0) {
        m /= base;
        ++k;
    }
    if (m != 1) return false;
    p = base;
    e = k;
    return true;
}

} // namespace mdg

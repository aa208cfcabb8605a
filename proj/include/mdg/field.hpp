#pragma once

#include <cstdint>
#include <vector>

#include "mdg/errors.hpp"

namespace mdg {

/// Canonical code of a field element: the integer sum c_i * p^i in [0, q)
/// for the polynomial representation c_0 + c_1 t + ... + c_{e-1} t^{e-1}.
using felem = std::uint32_t;

/// Exact arithmetic in GF(p^e), table-driven. Immutable after construction,
/// safe to share across threads.
///
/// The modulus is the lexicographically smallest monic irreducible polynomial
/// of degree e over GF(p) (coefficients compared low-degree-first) unless one
/// is supplied explicitly; the primitive element is the smallest code of
/// multiplicative order q-1. Both choices are deterministic so every derived
/// output is reproducible.
class Field {
public:
    static constexpr std::uint64_t default_cap = std::uint64_t{1} << 20;

    Field(std::uint32_t p, std::uint32_t e, std::uint64_t cap = default_cap);

    /// Build with an explicit modulus, coefficients c_0..c_e low-degree-first.
    /// Must be monic and irreducible over GF(p); used by --modulus overrides
    /// and the modulus-independence tests.
    Field(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus,
          std::uint64_t cap = default_cap);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t e() const noexcept { return e_; }
    std::uint32_t q() const noexcept { return q_; }
    bool prime_field() const noexcept { return e_ == 1; }

    /// Modulus coefficients c_0..c_e (monic), empty for e == 1.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    felem generator() const noexcept { return gen_; }

    felem add(felem x, felem y) const noexcept {
        if (e_ == 1) {
            std::uint32_t s = x + y;
            return s >= q_ ? s - q_ : s;
        }
        if (p_ == 2) return x ^ y;
        return add_digits(x, y);
    }

    felem neg(felem x) const noexcept {
        if (e_ == 1) return x == 0 ? 0 : q_ - x;
        if (p_ == 2) return x;
        return neg_digits(x);
    }

    felem sub(felem x, felem y) const noexcept { return add(x, neg(y)); }

    felem mul(felem x, felem y) const noexcept {
        if (x == 0 || y == 0) return 0;
        return exp_[log_[x] + log_[y]]; // exp_ is doubled, no reduction needed
    }

    felem inv(felem x) const; // throws division_by_zero on 0

    /// x^k with pow(0, 0) = 1 by convention (never reachable from the walk
    /// formulas, where every exponent is >= 1).
    felem pow(felem x, std::uint64_t k) const noexcept;

    /// g^i for any i (reduced mod q-1).
    felem exp_at(std::uint64_t i) const noexcept { return exp_[i % (q_ - 1)]; }
    /// Discrete log base g; x must be nonzero.
    std::uint32_t log_of(felem x) const noexcept { return log_[x]; }

    /// {x^r : x in GF(q)}, ascending codes. Contains 0 and 1; the nonzero part
    /// is the subgroup of index gcd(r, q-1) in the multiplicative group.
    std::vector<felem> power_classes(std::uint32_t r) const;

    /// roots[w] = smallest y with y^r = w, for every w in the r-th power
    /// class; 0 for w outside the class.
    std::vector<felem> power_class_roots(std::uint32_t r) const;

private:
    std::uint32_t p_, e_, q_;
    std::vector<std::uint32_t> modulus_;
    felem gen_ = 0;
    std::vector<felem> exp_;        // size 2(q-1): exp_[i] = g^(i mod q-1)
    std::vector<std::uint32_t> log_; // size q, log_[0] unused

    felem add_digits(felem x, felem y) const noexcept;
    felem neg_digits(felem x) const noexcept;
    void init(std::uint64_t cap, const std::vector<std::uint32_t>* forced_modulus);
    void build_tables();
};

/// All monic irreducible polynomials of degree e over GF(p), coefficients
/// c_0..c_e low-degree-first, in lexicographic order.
std::vector<std::vector<std::uint32_t>> irreducible_polynomials(std::uint32_t p, std::uint32_t e);

} // namespace mdg

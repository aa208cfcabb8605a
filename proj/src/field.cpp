#include "mdg/field.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mdg/num_util.hpp"

namespace mdg {

namespace {

// Dense polynomial over GF(p), coefficients low-degree-first.
using Poly = std::vector<std::uint32_t>;

std::uint32_t poly_degree(const Poly& f) {
    for (std::size_t i = f.size(); i-- > 0;)
        if (f[i] != 0) return static_cast<std::uint32_t>(i);
    return 0;
}

// r = (a * b) mod modulus, all over GF(p); modulus monic of degree e.
Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& modulus, std::uint32_t p) {
    const std::uint32_t e = static_cast<std::uint32_t>(modulus.size()) - 1;
    Poly buf(2 * e, 0);
    for (std::uint32_t i = 0; i < e; ++i) {
        if (i >= a.size() || a[i] == 0) continue;
        for (std::uint32_t j = 0; j < e; ++j) {
            if (j >= b.size() || b[j] == 0) continue;
            buf[i + j] = (buf[i + j] + a[i] * b[j]) % p;
        }
    }
    // reduce using t^e = -(c_0 + ... + c_{e-1} t^{e-1})
    for (std::uint32_t i = 2 * e - 1; i >= e; --i) {
        std::uint32_t c = buf[i];
        if (c == 0) continue;
        buf[i] = 0;
        for (std::uint32_t j = 0; j < e; ++j) {
            std::uint32_t sub = (c * modulus[j]) % p;
            buf[i - e + j] = (buf[i - e + j] + p - sub) % p;
        }
    }
    buf.resize(e);
    return buf;
}

// Remainder of monic-or-not dividend by monic divisor.
Poly poly_rem(Poly r, const Poly& d, std::uint32_t p) {
    const std::uint32_t dd = poly_degree(d);
    while (true) {
        std::uint32_t rd = poly_degree(r);
        if (rd < dd || (rd == 0 && r[0] == 0)) break;
        std::uint32_t c = r[rd];
        for (std::uint32_t j = 0; j <= dd; ++j) {
            std::uint32_t sub = (c * d[j]) % p;
            r[rd - dd + j] = (r[rd - dd + j] + p - sub) % p;
        }
    }
    return r;
}

bool poly_is_zero(const Poly& f) {
    return std::all_of(f.begin(), f.end(), [](std::uint32_t c) { return c == 0; });
}

// Trial division by every monic polynomial of degree 1..e/2.
bool poly_irreducible(const Poly& f, std::uint32_t p) {
    const std::uint32_t e = poly_degree(f);
    if (e == 0) return false;
    for (std::uint32_t d = 1; 2 * d <= e; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t k = 0; k < count; ++k) {
            Poly g(d + 1, 0);
            g[d] = 1;
            std::uint64_t t = k;
            for (std::uint32_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            if (poly_is_zero(poly_rem(f, g, p))) return false;
        }
    }
    return true;
}

Poly code_to_poly(felem code, std::uint32_t p, std::uint32_t e) {
    Poly f(e, 0);
    for (std::uint32_t i = 0; i < e; ++i) {
        f[i] = code % p;
        code /= p;
    }
    return f;
}

felem poly_to_code(const Poly& f, std::uint32_t p) {
    felem code = 0;
    for (std::size_t i = f.size(); i-- > 0;) code = code * p + f[i];
    return code;
}

} // namespace

std::vector<std::vector<std::uint32_t>> irreducible_polynomials(std::uint32_t p, std::uint32_t e) {
    std::vector<std::vector<std::uint32_t>> out;
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < e; ++i) count *= p;
    // k enumerates the low coefficients (c_0,...,c_{e-1}) in lexicographic
    // order, c_0 most significant.
    for (std::uint64_t k = 0; k < count; ++k) {
        Poly f(e + 1, 0);
        f[e] = 1;
        std::uint64_t t = k;
        for (std::uint32_t i = e; i-- > 0;) {
            f[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        if (poly_irreducible(f, p)) out.push_back(f);
    }
    return out;
}

Field::Field(std::uint32_t p, std::uint32_t e, std::uint64_t cap) : p_(p), e_(e), q_(0) {
    init(cap, nullptr);
}

Field::Field(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus, std::uint64_t cap)
    : p_(p), e_(e), q_(0) {
    init(cap, &modulus);
}

void Field::init(std::uint64_t cap, const std::vector<std::uint32_t>* forced_modulus) {
    if (!is_prime(p_)) fail(errc::not_prime, "p = " + std::to_string(p_) + " is not prime");
    if (e_ < 1) fail(errc::bad_range, "field exponent e must be >= 1");

    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        q *= p_;
        if (q > cap) fail(errc::field_too_large, "p^e exceeds the field cap");
    }
    q_ = static_cast<std::uint32_t>(q);

    if (e_ >= 2) {
        if (forced_modulus) {
            modulus_ = *forced_modulus;
            if (modulus_.size() != e_ + 1 || modulus_[e_] != 1)
                fail(errc::bad_input, "modulus must be monic of degree e");
            for (auto c : modulus_)
                if (c >= p_) fail(errc::bad_input, "modulus coefficient out of range");
            if (!poly_irreducible(modulus_, p_))
                fail(errc::bad_input, "modulus is reducible over GF(p)");
        } else {
            auto all = irreducible_polynomials(p_, e_);
            // lexicographic enumeration: the first hit is the canonical choice
            modulus_ = all.front();
        }
    } else if (forced_modulus && !forced_modulus->empty()) {
        fail(errc::bad_input, "prime fields take no modulus");
    }

    build_tables();
}

void Field::build_tables() {
    auto raw_mul = [&](felem x, felem y) -> felem {
        if (e_ == 1) return static_cast<felem>((std::uint64_t)x * y % p_);
        return poly_to_code(poly_mulmod(code_to_poly(x, p_, e_), code_to_poly(y, p_, e_), modulus_, p_), p_);
    };
    auto raw_pow = [&](felem x, std::uint64_t k) -> felem {
        felem r = 1, b = x;
        while (k) {
            if (k & 1) r = raw_mul(r, b);
            b = raw_mul(b, b);
            k >>= 1;
        }
        return r;
    };

    const std::uint32_t n = q_ - 1;
    auto factors = prime_factors(n);
    gen_ = 0;
    for (felem c = 1; c < q_; ++c) {
        bool primitive = true;
        for (auto ell : factors) {
            if (raw_pow(c, n / ell) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen_ = c;
            break;
        }
    }
    if (gen_ == 0) throw std::logic_error("no primitive element found");

    exp_.assign(2 * static_cast<std::size_t>(n), 0);
    log_.assign(q_, 0);
    felem cur = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        exp_[i] = cur;
        exp_[i + n] = cur;
        if (cur == 0 || (log_[cur] != 0 && cur != 1) || (cur == 1 && i != 0))
            throw std::logic_error("generator order check failed");
        log_[cur] = i;
        cur = raw_mul(cur, gen_);
    }
    if (cur != 1) throw std::logic_error("generator does not close the cycle");
}

felem Field::add_digits(felem x, felem y) const noexcept {
    felem r = 0;
    std::uint32_t pw = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        std::uint32_t d = x % p_ + y % p_;
        if (d >= p_) d -= p_;
        r += d * pw;
        x /= p_;
        y /= p_;
        pw *= p_;
    }
    return r;
}

felem Field::neg_digits(felem x) const noexcept {
    felem r = 0;
    std::uint32_t pw = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        std::uint32_t d = x % p_;
        if (d != 0) d = p_ - d;
        r += d * pw;
        x /= p_;
        pw *= p_;
    }
    return r;
}

felem Field::inv(felem x) const {
    if (x == 0) fail(errc::division_by_zero, "inverse of zero");
    if (x == 1) return 1;
    const std::uint32_t n = q_ - 1;
    return exp_[n - log_[x]];
}

felem Field::pow(felem x, std::uint64_t k) const noexcept {
    if (x == 0) return k == 0 ? 1u : 0u;
    const std::uint32_t n = q_ - 1;
    return exp_[(std::uint64_t)log_[x] * (k % n) % n];
}

std::vector<felem> Field::power_classes(std::uint32_t r) const {
    if (r < 1 || r > q_ - 1) fail(errc::bad_range, "power exponent r out of [1, q-1]");
    const std::uint32_t n = q_ - 1;
    const std::uint32_t d = static_cast<std::uint32_t>(std::gcd(r, n));
    std::vector<felem> out;
    out.reserve(n / d + 1);
    out.push_back(0);
    for (std::uint32_t j = 0; j < n / d; ++j) out.push_back(exp_[(std::uint64_t)j * d]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<felem> Field::power_class_roots(std::uint32_t r) const {
    if (r < 1 || r > q_ - 1) fail(errc::bad_range, "power exponent r out of [1, q-1]");
    std::vector<felem> roots(q_, 0);
    std::vector<char> seen(q_, 0);
    for (felem y = 0; y < q_; ++y) {
        felem w = pow(y, r);
        if (!seen[w]) {
            seen[w] = 1;
            roots[w] = y;
        }
    }
    return roots;
}

} // namespace mdg

#include "mdg/curves.hpp"

#include <algorithm>
#include <stdexcept>

#include "mdg/num_util.hpp"

namespace mdg {

namespace {

std::int64_t hw_floor(std::uint32_t q, std::uint64_t genus) {
    // q - 1 - floor(2g*sqrt(q)) via floor(sqrt(4 g^2 q))
    return (std::int64_t)q - 1 - (std::int64_t)isqrt(4 * genus * genus * q);
}

void require_n(const Field& field, std::uint32_t n) {
    if (n < 1 || n > field.q() - 1) fail(errc::bad_range, "curve exponent n out of [1, q-1]");
}

} // namespace

std::uint64_t diam3_threshold(std::uint32_t n) {
    const std::uint64_t t = (std::uint64_t)n * n - n + 1;
    return t * t;
}

CurveCount count_affine(const Field& field, felem a, felem c, std::uint32_t n) {
    require_n(field, n);
    const std::uint32_t q = field.q();
    std::vector<felem> powtab(q);
    for (felem t = 0; t < q; ++t) powtab[t] = field.pow(t, n);
    CurveCount cc;
    cc.a = a;
    cc.c = c;
    cc.n = n;
    cc.genus = (std::uint64_t)n * (n - 1) / 2;
    cc.hasse_weil_floor = hw_floor(q, cc.genus);
    for (felem x = 0; x < q; ++x) {
        const felem ax = field.mul(a, powtab[x]);
        for (felem y = 0; y < q; ++y) {
            // a x^n - x y^n + c
            const felem val = field.add(field.sub(ax, field.mul(x, powtab[y])), c);
            if (val == 0) ++cc.solutions;
        }
    }
    return cc;
}

bool check_nonsingular(const Field& field, felem a, felem c, std::uint32_t n) {
    require_n(field, n);
    if (n % field.p() == 0)
        fail(errc::characteristic_divides_n, "the smoothness argument needs p not dividing n");
    if (a == 0 || c == 0) fail(errc::bad_input, "needs a, c nonzero");

    const std::uint32_t q = field.q();
    const felem nc = static_cast<felem>(n % field.p());        // n as a field constant
    const felem n1c = static_cast<felem>((n + 1) % field.p()); // n+1 likewise

    // F   = a X^n Z - X Y^n + c Z^(n+1)
    // F_X = a n X^(n-1) Z - Y^n
    // F_Y = -n X Y^(n-1)
    // F_Z = a X^n + c (n+1) Z^n
    auto singular_at = [&](felem X, felem Y, felem Z) {
        const felem Xn = field.pow(X, n), Yn = field.pow(Y, n), Zn = field.pow(Z, n);
        const felem F = field.add(field.sub(field.mul(field.mul(a, Xn), Z), field.mul(X, Yn)),
                                  field.mul(c, field.mul(Zn, Z)));
        if (F != 0) return false;
        const felem FX = field.sub(field.mul(field.mul(a, nc), field.mul(field.pow(X, n - 1), Z)), Yn);
        if (FX != 0) return false;
        const felem FY = field.neg(field.mul(nc, field.mul(X, field.pow(Y, n - 1))));
        if (FY != 0) return false;
        const felem FZ = field.add(field.mul(a, Xn), field.mul(field.mul(c, n1c), Zn));
        return FZ == 0;
    };

    // projective points via canonical scaling: first nonzero coordinate is 1
    for (felem y = 0; y < q; ++y)
        for (felem z = 0; z < q; ++z)
            if (singular_at(1, y, z)) return false;
    for (felem z = 0; z < q; ++z)
        if (singular_at(0, 1, z)) return false;
    return !singular_at(0, 0, 1);
}

HasseWeilReport hasse_weil_lower_bound(const Field& field, std::uint32_t n) {
    require_n(field, n);
    if (n % field.p() == 0)
        fail(errc::characteristic_divides_n, "the Hasse-Weil instance needs p not dividing n");
    const std::uint32_t q = field.q();

    HasseWeilReport rep;
    rep.q = q;
    rep.n = n;
    rep.genus = (std::uint64_t)n * (n - 1) / 2;
    rep.pairs = (std::uint64_t)(q - 1) * (q - 1);
    rep.min_solutions = UINT64_MAX;

    const std::int64_t floor_bound = hw_floor(q, rep.genus);
    const u128 rhs = (u128)n * n * (n - 1) * (n - 1) * q;

    std::vector<felem> powtab(q);
    for (felem t = 0; t < q; ++t) powtab[t] = field.pow(t, n);

    std::vector<std::uint64_t> hist(q);
    for (felem a = 1; a < q; ++a) {
        std::fill(hist.begin(), hist.end(), 0);
        // each (x, y) solves the equation for exactly one c = x y^n - a x^n
        std::uint64_t total = 0;
        for (felem x = 0; x < q; ++x) {
            const felem ax = field.mul(a, powtab[x]);
            for (felem y = 0; y < q; ++y) {
                const felem c = field.sub(field.mul(x, powtab[y]), ax);
                ++hist[c];
                ++total;
            }
        }
        if (total != (std::uint64_t)q * q) throw std::logic_error("curve histogram miscount");
        for (felem c = 1; c < q; ++c) {
            const std::uint64_t N = hist[c];
            bool pass = true;
            if (N < (std::uint64_t)q - 1) {
                const std::uint64_t d = q - 1 - N;
                pass = (u128)d * d <= rhs;
            }
            if (!pass) rep.all_pass = false;
            if (N < rep.min_solutions) {
                rep.min_solutions = N;
                rep.min_a = a;
                rep.min_c = c;
            }
        }
    }
    rep.min_margin = (std::int64_t)rep.min_solutions - floor_bound;
    return rep;
}

} // namespace mdg

#include "mdg/walks.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mdg/num_util.hpp"
#include "mdg/waring.hpp"

namespace mdg {

bool is_walk(const Digraph& g, const std::vector<vert>& vertices) {
    const Field& F = g.field();
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        const felem x1 = g.first(vertices[i]), x2 = g.second(vertices[i]);
        const felem y1 = g.first(vertices[i + 1]), y2 = g.second(vertices[i + 1]);
        if (F.add(x2, y2) != g.f_of(x1, y1)) return false;
    }
    return true;
}

namespace {

std::vector<vert> derive_vertices(const Digraph& g, felem a, felem b, const std::vector<felem>& xs) {
    const Field& F = g.field();
    std::vector<vert> out;
    out.reserve(xs.size() + 1);
    out.push_back(g.make_vertex(a, b));
    felem ca = a, cb = b;
    for (felem x : xs) {
        const felem nb = F.sub(g.f_of(ca, x), cb);
        out.push_back(g.make_vertex(x, nb));
        ca = x;
        cb = nb;
    }
    return out;
}

// Assemble a targeted certificate; constructors must only ever produce valid
// ones, so a failed check here is an internal transcription error.
WalkCertificate finish(const Digraph& g, vert from, vert to, std::vector<felem> xs) {
    WalkCertificate cert;
    cert.q = g.q();
    cert.m = g.m();
    cert.n = g.n();
    cert.start = from;
    cert.end = to;
    cert.vertices = derive_vertices(g, g.first(from), g.second(from), xs);
    cert.xs = std::move(xs);
    cert.valid = is_walk(g, cert.vertices) && cert.vertices.front() == from &&
                 cert.vertices.back() == to;
    if (!cert.valid) throw std::logic_error("walk construction failed its independent validation");
    return cert;
}

void require_monomial(const Digraph& g) {
    if (!g.monomial()) fail(errc::not_monomial, "walk construction needs a monomial digraph");
}

void require_prime_field(const Digraph& g) {
    if (g.field().e() != 1) fail(errc::not_prime_field, "this construction needs a prime field");
}

// Index patterns of the case ladders, keyed by i mod 4 (positions are
// 1-based). "Ones" positions get x_i = 1, the rest of the range gets 0.
enum class Pat {
    ones03, // x_i = 1 for i = 0,3 (mod 4)
    ones23,
    ones12,
    ones01,
};

bool pat_one(Pat p, std::uint32_t i) {
    const std::uint32_t r = i % 4;
    switch (p) {
        case Pat::ones03: return r == 0 || r == 3;
        case Pat::ones23: return r == 2 || r == 3;
        case Pat::ones12: return r == 1 || r == 2;
        case Pat::ones01: return r == 0 || r == 1;
    }
    return false;
}

// Fill x_lo..x_hi (1-based, inclusive) with the pattern; hi < lo is a no-op.
void fill_pattern(std::vector<felem>& x, std::uint32_t lo, std::uint32_t hi, Pat p) {
    for (std::uint32_t i = lo; i <= hi && i >= 1; ++i) x[i - 1] = pat_one(p, i) ? 1 : 0;
}

// Smallest nonzero w with scale * w^n not in {0, 1}; requires n != p-1 (so the
// n-th powers take at least two nonzero values) and scale != 0.
felem smallest_witness(const Field& F, felem scale, std::uint32_t n) {
    for (felem w = 1; w < F.q(); ++w) {
        const felem s = F.mul(scale, F.pow(w, n));
        if (s != 0 && s != 1) return w;
    }
    throw std::logic_error("witness element must exist under the case hypothesis");
}

// Solution x_1..x_{2p-2} of the length-(2p-1) walk equation
//   a^m x_1^n - x_1^m x_2^n + ... - x_{2p-3}^m x_{2p-2}^n + x_{2p-2}^m u^n = b+v
// over GF(p), p odd. Case ladder on the representative of b+v.
std::vector<felem> solve_2p1(const Field& F, std::uint32_t m, std::uint32_t n, felem a, felem b,
                             felem u, felem v) {
    const std::uint32_t p = F.q();
    const std::uint32_t mid = (p - 1) / 2;
    const std::uint32_t len = 2 * p - 2;
    std::vector<felem> x(len, 0);
    const felem br = F.add(b, v); // code equals the integer representative

    if (br == 0) return x;
    if (br <= mid) { // Case 1.2
        fill_pattern(x, 1, 4 * br - 1, Pat::ones23);
        return x;
    }
    if (br >= mid + 2) { // Case 1.1
        fill_pattern(x, 1, 4 * (p - br), Pat::ones03);
        return x;
    }
    // br == mid + 1
    if (u == 0) { // Case 1.3.1
        fill_pattern(x, 1, len, Pat::ones03);
        return x;
    }
    if (a == 0) { // Case 1.3.2
        fill_pattern(x, 1, len, Pat::ones12);
        return x;
    }
    if (a != 1) {
        // Normalize the source to (1, b') and translate the solution back
        // through the inverse automorphism (first coordinates scale by a).
        const felem lam = F.inv(a);
        const felem lam_mn = F.pow(lam, (std::uint64_t)m + n);
        auto xs = solve_2p1(F, m, n, 1, F.mul(lam_mn, b), F.mul(lam, u), F.mul(lam_mn, v));
        for (felem& xi : xs) xi = F.mul(a, xi);
        return xs;
    }
    // Case 1.3.3 with a = 1, u != 0
    x[len - 1] = 1; // x_{2p-2} = 1
    const felem t = F.sub(br, F.pow(u, n));
    if (t == 0) return x;                      // 1.3.3.1-style leaf
    if (t == mid + 1) throw std::logic_error("t = (p+1)/2 is excluded by u != 0");
    if (t <= mid) {                            // 1.3.3.2
        fill_pattern(x, 1, 4 * (t - 1) + 1, Pat::ones01);
    } else {                                   // 1.3.3.3
        fill_pattern(x, 1, 4 * (p - t), Pat::ones03);
    }
    return x;
}

// Solution x_1..x_{2p-3} of the length-(2p-2) walk equation
//   -a^m x_1^n + x_1^m x_2^n - ... - x_{2p-4}^m x_{2p-3}^n + x_{2p-3}^m u^n = -b+v
// over GF(p), p odd, (m,n) != (p-1,p-1). Case ladder on -b+v.
//
// The WLOG normalizations rescale -b+v by lambda^(m+n), so after normalizing
// we re-dispatch on the new residue; allow_norm=false forbids a second
// normalization (the corner cases are handled by product-form witnesses,
// which agree with the a=1/u=1 selections when those assumptions hold).
std::vector<felem> solve_2p2(const Field& F, std::uint32_t m, std::uint32_t n, felem a, felem b,
                             felem u, felem v, bool allow_norm) {
    const std::uint32_t p = F.q();
    const std::uint32_t mid = (p - 1) / 2;
    const std::uint32_t len = 2 * p - 3;
    std::vector<felem> x(len, 0);
    const felem mb = F.sub(v, b);

    if (mb == 0) return x;
    if (mb <= mid - 1) { // Case 2.1
        fill_pattern(x, 1, 4 * mb, Pat::ones03);
        return x;
    }
    if (mb >= mid + 2) { // Case 2.2
        fill_pattern(x, 1, 4 * (p - mb) - 1, Pat::ones23);
        return x;
    }

    auto normalize = [&](felem lam, felem scale_back) {
        const felem lam_mn = F.pow(lam, (std::uint64_t)m + n);
        auto xs = solve_2p2(F, m, n, F.mul(lam, a), F.mul(lam_mn, b), F.mul(lam, u),
                            F.mul(lam_mn, v), false);
        for (felem& xi : xs) xi = F.mul(scale_back, xi);
        return xs;
    };

    if (mb == mid) { // Case 2.3
        if (a == 0) { // 2.3.1
            fill_pattern(x, 1, len, Pat::ones12);
            return x;
        }
        if (a != 1 && allow_norm) return normalize(F.inv(a), a);
        if (n != p - 1) { // 2.3.2.1
            const felem w = smallest_witness(F, F.pow(a, m), n);
            const felem s = F.mul(F.pow(a, m), F.pow(w, n));
            x[0] = w;
            const felem t = F.add(mb, s);
            if (t == 0) return x;
            if (t == mid || t == mid + 1) throw std::logic_error("t exclusion violated");
            if (t <= mid - 1)
                fill_pattern(x, 2, 4 * t, Pat::ones03);
            else
                fill_pattern(x, 2, 4 * (p - t) + 1, Pat::ones01);
            return x;
        }
        // n = p-1, hence m != p-1
        if (u != 0) { // 2.3.2.2.1 (u^n = 1; x_1 = 0 kills the a-term)
            fill_pattern(x, 1, len, Pat::ones03);
            return x;
        }
        // 2.3.2.2.2
        const felem alpha = smallest_witness(F, 1, m);
        x[0] = 0;
        x[1] = alpha;
        x[2] = 1;
        const felem t = F.add(mb, F.pow(alpha, m));
        if (t == 0) return x;
        if (t == mid || t == mid + 1) throw std::logic_error("t exclusion violated");
        if (t <= mid - 1)
            fill_pattern(x, 4, 4 * t, Pat::ones03);
        else
            fill_pattern(x, 4, 4 * (p - t) + 3, Pat::ones23);
        return x;
    }

    // mb == mid + 1, Case 2.4
    if (u == 0) { // 2.4.1
        fill_pattern(x, 1, len, Pat::ones23);
        return x;
    }
    if (u != 1 && allow_norm) return normalize(F.inv(u), u);
    if (m != p - 1) { // 2.4.2.1
        const felem w = smallest_witness(F, F.pow(u, n), m);
        const felem s = F.mul(F.pow(w, m), F.pow(u, n));
        x[len - 1] = w; // x_{2p-3}
        const felem t = F.sub(mb, s);
        if (t == 0) return x;
        if (t == mid || t == mid + 1) throw std::logic_error("t exclusion violated");
        if (t <= mid - 1)
            fill_pattern(x, 1, 4 * t, Pat::ones03);
        else
            fill_pattern(x, 1, 4 * (p - t) - 1, Pat::ones23);
        return x;
    }
    // m = p-1, hence n != p-1
    if (a != 0) { // 2.4.2.2.1 (a^m = 1; ends at x_{2p-5}, u never enters)
        fill_pattern(x, 1, len >= 2 ? len - 2 : 0, Pat::ones01);
        return x;
    }
    // 2.4.2.2.2
    const felem beta = smallest_witness(F, 1, n);
    x[len - 3] = 1;    // x_{2p-5}
    x[len - 2] = beta; // x_{2p-4}
    x[len - 1] = 0;    // x_{2p-3}
    const felem t = F.sub(mb, F.pow(beta, n));
    if (t == 0) return x;
    if (t == mid || t == mid + 1) throw std::logic_error("t exclusion violated");
    if (t <= mid - 1)
        fill_pattern(x, 1, 4 * t - 2, Pat::ones12);
    else
        fill_pattern(x, 1, 4 * (p - t) - 1, Pat::ones23);
    return x;
}

} // namespace

WalkCertificate walk_from_solution(const Digraph& g, felem a, felem b,
                                   const std::vector<felem>& xs) {
    WalkCertificate cert;
    cert.q = g.q();
    cert.m = g.m();
    cert.n = g.n();
    cert.start = g.make_vertex(a, b);
    cert.xs = xs;
    cert.vertices = derive_vertices(g, a, b, xs);
    cert.end = cert.vertices.back();
    cert.valid = is_walk(g, cert.vertices);
    return cert;
}

WalkCertificate construct_walk_gcd(const Digraph& g, vert from, vert to) {
    require_monomial(g);
    const Field& F = g.field();
    const std::uint32_t q = g.q(), n1 = q - 1;
    const std::uint32_t m = g.m(), n = g.n();
    const bool gm = std::gcd(m, n1) == 1, gn = std::gcd(n, n1) == 1;
    if (!gm && !gn)
        fail(errc::gcd_hypothesis_fails, "needs gcd(m, q-1) = 1 or gcd(n, q-1) = 1");

    // unique r-th root when gcd(r, q-1) = 1
    auto root = [&](felem w, std::uint32_t r) -> felem {
        if (w == 0) return 0;
        if (n1 == 1) return w;
        std::uint64_t rinv = 1;
        for (std::uint64_t cand = 1; cand < n1; ++cand)
            if (cand * (r % n1) % n1 == 1) {
                rinv = cand;
                break;
            }
        return F.exp_at((std::uint64_t)F.log_of(w) * rinv);
    };

    const felem a = g.first(from), b = g.second(from);
    const felem u = g.first(to), v = g.second(to);

    if (gm && gn) {
        if (a == 0) {
            const felem x1 = root(F.sub(F.sub(F.pow(u, n), b), v), m); // x_1^m = u^n - b - v
            return finish(g, from, to, {x1, 1, u});
        }
        const felem x1 = root(F.mul(F.add(v, b), F.inv(F.pow(a, m))), n); // x_1^n = (v+b)/a^m
        return finish(g, from, to, {x1, 0, u});
    }
    if (gm) {
        const felem x2 = root(F.sub(F.add(F.pow(u, n), b), v), m); // x_2^m = u^n + b - v
        return finish(g, from, to, {0, x2, 1, u});
    }
    const felem x2 = root(F.sub(F.add(v, F.pow(a, m)), b), n); // x_2^n = v + a^m - b
    return finish(g, from, to, {1, x2, 0, u});
}

WalkCertificate construct_walk_2p_minus_1(const Digraph& g, vert from, vert to) {
    require_monomial(g);
    require_prime_field(g);
    const Field& F = g.field();
    const std::uint32_t p = F.p();
    const felem a = g.first(from), b = g.second(from);
    const felem u = g.first(to), v = g.second(to);

    if (p == 2) {
        // The ladder assumes p odd; for GF(2) the length-3 walk equation is
        // solved by trying all four (x_1, x_2).
        for (felem x1 = 0; x1 < 2; ++x1)
            for (felem x2 = 0; x2 < 2; ++x2) {
                auto probe = walk_from_solution(g, a, b, {x1, x2, u});
                if (probe.valid && probe.end == to) return finish(g, from, to, {x1, x2, u});
            }
        throw std::logic_error("no length-3 walk in D(2;1,1)");
    }

    auto xs = solve_2p1(F, g.m(), g.n(), a, b, u, v);
    xs.push_back(u);
    return finish(g, from, to, std::move(xs));
}

WalkCertificate construct_walk_2p_minus_2(const Digraph& g, vert from, vert to) {
    require_monomial(g);
    require_prime_field(g);
    const Field& F = g.field();
    const std::uint32_t p = F.p();
    if (g.m() == p - 1 && g.n() == p - 1)
        fail(errc::equality_case, "no length-(2p-2) walk is promised when m = n = p-1");

    auto xs = solve_2p2(F, g.m(), g.n(), g.first(from), g.second(from), g.first(to),
                        g.second(to), true);
    xs.push_back(g.first(to));
    return finish(g, from, to, std::move(xs));
}

WalkCertificate construct_walk_13(const Digraph& g, vert from, vert to) {
    require_monomial(g);
    const Field& F = g.field();
    const std::uint32_t m = g.m(), n = g.n();
    if (!((u128)g.q() > pow_u128(m - 1, 4)))
        fail(errc::hypothesis_fails, "needs q > (m-1)^4");

    const felem b = g.second(from);
    const felem u = g.first(to), v = g.second(to);

    std::vector<felem> xs(13, 0);
    xs[2] = xs[5] = xs[8] = xs[11] = 1; // x_3 = x_6 = x_9 = x_12 = 1
    xs[12] = u;
    // x_2^m - x_5^m + x_8^m - x_11^m = v + b - u^n
    const felem target = F.sub(F.add(v, b), F.pow(u, n));
    const auto ys = alternating_solution(F, target, m, 4);
    xs[1] = ys[0];
    xs[4] = ys[1];
    xs[7] = ys[2];
    xs[10] = ys[3];
    return finish(g, from, to, std::move(xs));
}

WalkCertificate construct_walk_9(const Digraph& g, vert from, vert to) {
    require_monomial(g);
    const Field& F = g.field();
    const std::uint32_t n = g.n();
    if (g.m() != n) fail(errc::hypothesis_fails, "needs m = n");
    if (!((u128)g.q() > pow_u128(n - 1, 4)))
        fail(errc::hypothesis_fails, "needs q > (n-1)^4");

    const felem b = g.second(from);
    const felem u = g.first(to), v = g.second(to);

    std::vector<felem> xs(9, 0);
    xs[2] = xs[6] = 1; // x_3 = x_7 = 1
    xs[8] = u;
    // x_2^n + x_6^n = v + b, solvable in two terms since gamma(n,q) <= 2
    const felem target = F.add(v, b);
    const auto classes = F.power_classes(n);
    const auto roots = F.power_class_roots(n);
    std::vector<char> in_class(F.q(), 0);
    for (felem w : classes) in_class[w] = 1;
    bool found = false;
    for (felem w : classes) {
        const felem rest = F.sub(target, w);
        if (in_class[rest]) {
            xs[1] = roots[w];
            xs[5] = roots[rest];
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("two-term representation must exist when q > (n-1)^4");
    return finish(g, from, to, std::move(xs));
}

LevelSets level_sets_pm1(std::uint32_t p) {
    if (!is_prime(p) || p == 2) fail(errc::bad_range, "needs an odd prime");
    LevelSets ls;
    ls.p = p;
    ls.sets.assign(2 * p, {});
    auto dense = [p](felem a, felem b) { return a * p + b; };
    for (std::uint32_t t = 0; t <= (p - 1) / 2; ++t) {
        ls.sets[4 * t] = {dense(0, t)};
        auto& star = ls.sets[4 * t + 1];
        const felem mt = (p - t) % p;
        for (felem x = 1; x < p; ++x) star.push_back(dense(x, mt));
    }
    for (std::uint32_t t = 0; t + 1 <= (p - 1) / 2; ++t) {
        auto& star = ls.sets[4 * t + 2];
        for (felem x = 1; x < p; ++x) star.push_back(dense(x, t + 1));
        ls.sets[4 * t + 3] = {dense(0, p - t - 1)};
    }
    return ls;
}

} // namespace mdg

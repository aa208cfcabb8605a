#include "mdg/waring.hpp"

#include <algorithm>
#include <numeric>

#include "mdg/num_util.hpp"

namespace mdg {

bool gamma_exists(const Field& field, std::uint32_t r) {
    const std::uint32_t q = field.q();
    if (r < 1 || r > q - 1) fail(errc::bad_range, "r out of [1, q-1]");
    const std::uint32_t p = field.p(), e = field.e();
    for (std::uint32_t d : divisors(e)) {
        if (d == e) continue;
        std::uint64_t pd = 1;
        for (std::uint32_t i = 0; i < d; ++i) pd *= p;
        const std::uint32_t qd = (q - 1) / static_cast<std::uint32_t>(pd - 1);
        if (r % qd == 0) return false;
    }
    return true;
}

namespace {

// Least number of terms from `steps` (all nonzero sums allowed, zero pads for
// free since 0 is an r-th power) needed to reach every field element; nullopt
// if some element stays unreachable. Iterated sumset growth, capped at q
// rounds.
std::optional<std::uint32_t> saturation_rounds(const Field& F, const std::vector<felem>& steps) {
    const std::uint32_t q = F.q();
    std::vector<char> cur(q, 0);
    cur[0] = 1;
    std::uint32_t covered = 1;
    for (std::uint32_t round = 1; round <= q; ++round) {
        std::vector<char> next = cur;
        std::uint32_t added = 0;
        for (felem x = 0; x < q; ++x) {
            if (!cur[x]) continue;
            for (felem s : steps) {
                if (s == 0) continue;
                const felem y = F.add(x, s);
                if (!next[y]) {
                    next[y] = 1;
                    ++added;
                }
            }
        }
        covered += added;
        if (covered == q) return round;
        if (added == 0) return std::nullopt; // stabilized short of GF(q)
        cur.swap(next);
    }
    return std::nullopt;
}

} // namespace

std::optional<std::uint32_t> waring_gamma(const Field& field, std::uint32_t r) {
    return saturation_rounds(field, field.power_classes(r));
}

std::optional<std::uint32_t> waring_delta(const Field& field, std::uint32_t r) {
    auto steps = field.power_classes(r);
    const std::size_t base = steps.size();
    for (std::size_t i = 0; i < base; ++i) steps.push_back(field.neg(steps[i]));
    std::sort(steps.begin(), steps.end());
    steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
    return saturation_rounds(field, steps);
}

std::vector<BoundCheck> check_bounds(const Field& field, const WaringResult& result) {
    if (!result.exists) fail(errc::not_exists, "Waring number does not exist for these parameters");
    const std::uint64_t r = result.r, q = field.q(), p = field.p(), e = field.e();
    const std::uint64_t gamma = *result.gamma;
    const std::uint64_t delta = result.delta ? *result.delta : gamma;
    std::vector<BoundCheck> out;

    if (e == 2) {
        // gamma <= 16*sqrt(r+1)  <=>  gamma^2 <= 256(r+1)
        out.push_back({"gamma-sqrt-e2", isqrt(256 * (r + 1)), gamma * gamma <= 256 * (r + 1)});
    }
    if (e >= 3) {
        out.push_back({"gamma-sqrt-e3", isqrt(100 * (r + 1)), gamma * gamma <= 100 * (r + 1)});
    }
    if (r * r < q) {
        out.push_back({"gamma-le-8", 8, gamma <= 8});
    }
    if (e == 1 && (q - 1) / std::gcd(r, q - 1) > 2) {
        // delta <= 20*sqrt(r)
        out.push_back({"delta-20sqrt-prime", isqrt(400 * r), delta * delta <= 400 * r});
    }
    if (q > pow_u128(r - 1, 4)) {
        out.push_back({"gamma-le-2-large-q", 2, gamma <= 2});
    }
    if (e == 1 && p > pow_u128(r - 1, 3)) {
        out.push_back({"gamma-le-3-large-p", 3, gamma <= 3});
    }
    return out;
}

WaringResult waring_analyze(const Field& field, std::uint32_t r) {
    WaringResult res;
    res.r = r;
    res.q = field.q();
    res.gamma = waring_gamma(field, r);
    res.delta = waring_delta(field, r);
    res.exists = res.gamma.has_value();
    if (res.exists) res.bounds = check_bounds(field, res);
    return res;
}

std::vector<felem> alternating_solution(const Field& field, felem a, std::uint32_t r,
                                        std::uint32_t k) {
    const std::uint32_t q = field.q();
    if (r < 1 || r > q - 1) fail(errc::bad_range, "r out of [1, q-1]");
    auto delta = waring_delta(field, r);
    if (!delta) fail(errc::not_exists, "delta(r,q) does not exist");
    if (k < 2 * *delta) fail(errc::k_too_small, "k must be at least 2*delta(r,q)");

    std::vector<felem> x(k, 0);
    if (a == 0) return x;

    // breadth-first over signed sums, recording one predecessor step each
    const auto roots = field.power_class_roots(r);
    const auto classes = field.power_classes(r);
    struct Step {
        felem prev;
        felem root;
        bool plus;
    };
    std::vector<std::int32_t> dist(q, -1);
    std::vector<Step> via(q);
    std::vector<felem> queue;
    queue.reserve(q);
    dist[0] = 0;
    queue.push_back(0);
    for (std::size_t head = 0; head < queue.size() && dist[a] < 0; ++head) {
        const felem t = queue[head];
        for (felem w : classes) {
            if (w == 0) continue;
            const felem plus = field.add(t, w);
            if (dist[plus] < 0) {
                dist[plus] = dist[t] + 1;
                via[plus] = {t, roots[w], true};
                queue.push_back(plus);
            }
            const felem minus = field.sub(t, w);
            if (dist[minus] < 0) {
                dist[minus] = dist[t] + 1;
                via[minus] = {t, roots[w], false};
                queue.push_back(minus);
            }
        }
    }
    if (dist[a] < 0) throw std::logic_error("delta exists but target unreachable");

    std::vector<std::pair<felem, bool>> terms; // (root, sign) of a shortest witness
    for (felem t = a; t != 0; t = via[t].prev) terms.push_back({via[t].root, via[t].plus});
    std::reverse(terms.begin(), terms.end());

    // Embed into the alternating pattern +,-,+,...: each term consumes at
    // most two positions, and k >= 2*delta >= 2*|terms| leaves room.
    std::uint32_t pos = 1;
    for (auto [root, plus] : terms) {
        const bool pos_sign = (pos % 2 == 1);
        if (pos_sign != plus) ++pos;
        x[pos - 1] = root;
        ++pos;
    }

    felem check = 0;
    for (std::uint32_t i = 1; i <= k; ++i) {
        const felem term = field.pow(x[i - 1], r);
        check = (i % 2 == 1) ? field.add(check, term) : field.sub(check, term);
    }
    if (check != a) throw std::logic_error("alternating solution failed self-check");
    return x;
}

} // namespace mdg

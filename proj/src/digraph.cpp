#include "mdg/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mdg/num_util.hpp"

namespace mdg {

Digraph::Digraph(const Field& field, std::uint32_t m, std::uint32_t n)
    : field_(&field), kind_(Kind::monomial), m_(m), n_(n), q_(field.q()) {
    if (m < 1 || m > q_ - 1 || n < 1 || n > q_ - 1)
        fail(errc::bad_range, "monomial exponents must satisfy 1 <= m, n <= q-1");
    xm_.resize(q_);
    yn_.resize(q_);
    for (felem x = 0; x < q_; ++x) {
        xm_[x] = field.pow(x, m);
        yn_[x] = field.pow(x, n);
    }
}

Digraph::Digraph(const Field& field, std::vector<felem> f_table)
    : field_(&field), kind_(Kind::general), q_(field.q()), f_table_(std::move(f_table)) {
    if (f_table_.size() != vertex_count()) fail(errc::bad_input, "f table must have q*q entries");
    for (felem v : f_table_)
        if (v >= q_) fail(errc::bad_input, "f table entry out of range");
}

std::vector<vert> Digraph::out_neighbors(vert v) const {
    std::vector<vert> out(q_);
    for (felem y1 = 0; y1 < q_; ++y1) out[y1] = out_neighbor(v, y1);
    return out;
}

std::vector<vert> Digraph::in_neighbors(vert v) const {
    std::vector<vert> out(q_);
    for (felem x1 = 0; x1 < q_; ++x1) out[x1] = in_neighbor(v, x1);
    return out;
}

bool Digraph::is_strong_by_criterion() const {
    if (!monomial()) fail(errc::not_monomial, "connectivity criterion needs a monomial digraph");
    const std::uint32_t p = field_->p(), e = field_->e();
    const std::uint32_t g = static_cast<std::uint32_t>(std::gcd(std::uint64_t{q_ - 1}, std::gcd(std::uint64_t{m_}, std::uint64_t{n_})));
    for (std::uint32_t d : divisors(e)) {
        if (d == e) continue;
        std::uint64_t pd = 1;
        for (std::uint32_t i = 0; i < d; ++i) pd *= p;
        std::uint32_t qd = (q_ - 1) / static_cast<std::uint32_t>(pd - 1);
        if (g % qd == 0) return false;
    }
    return true;
}

std::uint64_t bfs_fill(const Digraph& g, vert source, std::int32_t* dist, vert* queue_buf) {
    const std::uint32_t q = g.q();
    const Field& F = g.field();
    const std::uint64_t nv = g.vertex_count();
    std::fill(dist, dist + nv, unreachable);
    std::uint64_t head = 0, tail = 0;
    dist[source] = 0;
    queue_buf[tail++] = source;
    while (head < tail) {
        const vert v = queue_buf[head++];
        const std::int32_t dv = dist[v] + 1;
        const felem a = v / q, b = v % q;
        if (g.monomial()) {
            const felem fa = g.xm(a);
            if (fa == 0) {
                // whole row maps through f = 0
                const felem y2 = F.neg(b);
                for (felem y1 = 0; y1 < q; ++y1) {
                    const vert w = y1 * q + y2;
                    if (dist[w] < 0) {
                        dist[w] = dv;
                        queue_buf[tail++] = w;
                    }
                }
            } else {
                for (felem y1 = 0; y1 < q; ++y1) {
                    const felem y2 = F.sub(F.mul(fa, g.yn(y1)), b);
                    const vert w = y1 * q + y2;
                    if (dist[w] < 0) {
                        dist[w] = dv;
                        queue_buf[tail++] = w;
                    }
                }
            }
        } else {
            for (felem y1 = 0; y1 < q; ++y1) {
                const felem y2 = F.sub(g.f_of(a, y1), b);
                const vert w = y1 * q + y2;
                if (dist[w] < 0) {
                    dist[w] = dv;
                    queue_buf[tail++] = w;
                }
            }
        }
    }
    return tail;
}

namespace {

void check_dense(const Digraph& g) {
    if (g.q() > Digraph::dense_q_cap)
        fail(errc::field_too_large, "q = " + std::to_string(g.q()) + " exceeds the dense vertex-array cap");
}

} // namespace

DistanceMap bfs_distances(const Digraph& g, vert source) {
    check_dense(g);
    DistanceMap m;
    m.source = source;
    m.dist.resize(g.vertex_count());
    std::vector<vert> queue(g.vertex_count());
    bfs_fill(g, source, m.dist.data(), queue.data());
    return m;
}

std::vector<std::uint64_t> SccPartition::sizes() const {
    std::vector<std::uint64_t> s(count, 0);
    for (std::uint32_t c : comp) ++s[c];
    return s;
}

SccPartition tarjan_scc(const Digraph& g) {
    check_dense(g);
    const std::uint32_t q = g.q();
    const std::uint64_t nv = g.vertex_count();
    SccPartition part;
    part.comp.assign(nv, 0);

    std::vector<std::int64_t> index(nv, -1), low(nv, 0);
    std::vector<char> onstack(nv, 0);
    std::vector<vert> stack;
    struct Frame {
        vert v;
        felem next;
    };
    std::vector<Frame> call;
    std::int64_t counter = 0;
    std::uint32_t ncomp = 0;

    for (vert root = 0; root < nv; ++root) {
        if (index[root] >= 0) continue;
        index[root] = low[root] = counter++;
        stack.push_back(root);
        onstack[root] = 1;
        call.push_back({root, 0});
        while (!call.empty()) {
            Frame& fr = call.back();
            if (fr.next < q) {
                const vert w = g.out_neighbor(fr.v, fr.next++);
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    onstack[w] = 1;
                    call.push_back({w, 0});
                } else if (onstack[w]) {
                    low[fr.v] = std::min(low[fr.v], index[w]);
                }
            } else {
                const vert v = fr.v;
                call.pop_back();
                if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
                if (low[v] == index[v]) {
                    while (true) {
                        const vert w = stack.back();
                        stack.pop_back();
                        onstack[w] = 0;
                        part.comp[w] = ncomp;
                        if (w == v) break;
                    }
                    ++ncomp;
                }
            }
        }
    }
    part.count = ncomp;
    return part;
}

vert apply_automorphism(const Digraph& g, felem lambda, vert v) {
    if (!g.monomial()) fail(errc::not_monomial, "automorphism needs a monomial digraph");
    if (lambda == 0) fail(errc::zero_scalar, "automorphism scalar must be nonzero");
    const Field& F = g.field();
    const felem a = g.first(v), b = g.second(v);
    return g.make_vertex(F.mul(lambda, a), F.mul(F.pow(lambda, (std::uint64_t)g.m() + g.n()), b));
}

std::vector<vert> orbit_representatives(const Digraph& g) {
    if (!g.monomial()) fail(errc::not_monomial, "orbit reduction needs a monomial digraph");
    const Field& F = g.field();
    const std::uint32_t q = g.q();

    // subgroup {lambda^(m+n)} of GF(q)*
    std::vector<char> in_subgroup(q, 0);
    const std::uint32_t n1 = q - 1;
    const std::uint32_t d = static_cast<std::uint32_t>(std::gcd((std::uint64_t)g.m() + g.n(), (std::uint64_t)n1));
    for (std::uint32_t j = 0; j < n1 / d; ++j) in_subgroup[F.exp_at((std::uint64_t)j * d)] = 1;

    std::vector<vert> reps;
    reps.push_back(g.make_vertex(0, 0));
    std::vector<char> covered(q, 0);
    for (felem b = 1; b < q; ++b) {
        if (covered[b]) continue;
        reps.push_back(g.make_vertex(0, b)); // smallest code in its coset
        for (felem s = 1; s < q; ++s)
            if (in_subgroup[s]) covered[F.mul(b, s)] = 1;
    }
    for (felem b = 0; b < q; ++b) reps.push_back(g.make_vertex(1, b));
    std::sort(reps.begin(), reps.end());
    return reps;
}

namespace {

struct EccResult {
    std::uint32_t ecc = 0;
    bool all_reached = true;
};

EccResult ecc_from(const Digraph& g, vert source, std::int32_t* dist, vert* queue) {
    const std::uint64_t nv = g.vertex_count();
    const std::uint64_t reached = bfs_fill(g, source, dist, queue);
    EccResult r;
    if (reached != nv) {
        r.all_reached = false;
        return r;
    }
    std::int32_t m = 0;
    for (std::uint64_t i = 0; i < nv; ++i) m = std::max(m, dist[i]);
    r.ecc = static_cast<std::uint32_t>(m);
    return r;
}

} // namespace

std::optional<std::uint32_t> max_eccentricity_serial(const Digraph& g, const std::vector<vert>& sources) {
    check_dense(g);
    const std::uint64_t nv = g.vertex_count();
    std::vector<std::int32_t> dist(nv);
    std::vector<vert> queue(nv);
    std::uint32_t best = 0;
    for (vert s : sources) {
        EccResult r = ecc_from(g, s, dist.data(), queue.data());
        if (!r.all_reached) return std::nullopt;
        best = std::max(best, r.ecc);
    }
    return best;
}

std::optional<std::uint32_t> max_eccentricity(const Digraph& g, const std::vector<vert>& sources,
                                              int threads) {
    check_dense(g);
#ifndef _OPENMP
    (void)threads;
    return max_eccentricity_serial(g, sources);
#else
    const std::uint64_t nv = g.vertex_count();
    const int nthreads = threads > 0 ? threads : omp_get_max_threads();
    std::uint32_t best = 0;
    bool infinite = false;
    const std::int64_t count = static_cast<std::int64_t>(sources.size());
#pragma omp parallel num_threads(nthreads)
    {
        std::vector<std::int32_t> dist(nv);
        std::vector<vert> queue(nv);
        std::uint32_t local = 0;
        bool local_inf = false;
#pragma omp for schedule(dynamic) nowait
        for (std::int64_t i = 0; i < count; ++i) {
            if (local_inf || infinite) continue;
            EccResult r = ecc_from(g, sources[static_cast<std::size_t>(i)], dist.data(), queue.data());
            if (!r.all_reached)
                local_inf = true;
            else
                local = std::max(local, r.ecc);
        }
#pragma omp critical
        {
            best = std::max(best, local);
            if (local_inf) infinite = true;
        }
    }
    if (infinite) return std::nullopt;
    return best;
#endif
}

std::vector<vert> all_vertices(const Digraph& g) {
    std::vector<vert> v(g.vertex_count());
    std::iota(v.begin(), v.end(), 0u);
    return v;
}

std::optional<std::uint32_t> diameter(const Digraph& g, int threads) {
    const auto sources = g.monomial() ? orbit_representatives(g) : all_vertices(g);
    return max_eccentricity(g, sources, threads);
}

std::optional<std::uint32_t> diameter_all_sources_serial(const Digraph& g) {
    return max_eccentricity_serial(g, all_vertices(g));
}

} // namespace mdg

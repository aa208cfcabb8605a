#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mdg/field.hpp"

namespace mdg {

/// Dense vertex id of (a, b) in GF(q)^2: a.code * q + b.code.
using vert = std::uint32_t;

inline constexpr std::int32_t unreachable = -1;

/// Implicit digraph D(q; f) on GF(q)^2 with arc (x1,x2) -> (y1,y2) iff
/// x2 + y2 = f(x1, y1). Adjacency is computed from the rule, never stored.
/// For the monomial kind f(x1,y1) = x1^m * y1^n.
///
/// Holds a reference to the field, which must outlive the digraph.
/// Immutable after construction; all queries are thread-safe.
class Digraph {
public:
    enum class Kind { monomial, general };

    /// Largest q for which dense q^2 vertex arrays are allocated.
    static constexpr std::uint32_t dense_q_cap = 4096;

    Digraph(const Field& field, std::uint32_t m, std::uint32_t n);
    Digraph(const Field& field, std::vector<felem> f_table); // row-major f[x1*q + y1]

    const Field& field() const noexcept { return *field_; }
    Kind kind() const noexcept { return kind_; }
    bool monomial() const noexcept { return kind_ == Kind::monomial; }
    std::uint32_t m() const noexcept { return m_; }
    std::uint32_t n() const noexcept { return n_; }
    std::uint32_t q() const noexcept { return q_; }
    std::uint64_t vertex_count() const noexcept { return (std::uint64_t)q_ * q_; }

    vert make_vertex(felem a, felem b) const noexcept { return a * q_ + b; }
    felem first(vert v) const noexcept { return v / q_; }
    felem second(vert v) const noexcept { return v % q_; }

    felem f_of(felem x1, felem y1) const noexcept {
        return monomial() ? field_->mul(xm_[x1], yn_[y1]) : f_table_[(std::size_t)x1 * q_ + y1];
    }

    /// x^m and y^n lookup, precomputed (monomial only).
    felem xm(felem x) const noexcept { return xm_[x]; }
    felem yn(felem y) const noexcept { return yn_[y]; }

    /// The unique out-neighbor of v whose first coordinate is y1.
    vert out_neighbor(vert v, felem y1) const noexcept {
        return make_vertex(y1, field_->sub(f_of(first(v), y1), second(v)));
    }
    /// The unique in-neighbor of v whose first coordinate is x1.
    vert in_neighbor(vert v, felem x1) const noexcept {
        return make_vertex(x1, field_->sub(f_of(x1, first(v)), second(v)));
    }

    std::vector<vert> out_neighbors(vert v) const;
    std::vector<vert> in_neighbors(vert v) const;

    /// Strong connectivity by the divisibility criterion: strong iff no
    /// q_d = (q-1)/(p^d-1), d a positive divisor of e with d < e, divides
    /// gcd(q-1, m, n). Always true for e = 1. Monomial kind only.
    bool is_strong_by_criterion() const;

private:
    const Field* field_;
    Kind kind_;
    std::uint32_t m_ = 0, n_ = 0;
    std::uint32_t q_;
    std::vector<felem> xm_, yn_;    // monomial power tables
    std::vector<felem> f_table_;    // general kind only
};

struct DistanceMap {
    vert source;
    std::vector<std::int32_t> dist; // unreachable = -1
};

/// Exact shortest-path lengths from source (flat array + flat queue kernel).
DistanceMap bfs_distances(const Digraph& g, vert source);

/// Kernel used by all sweeps: fills dist (q^2 slots) and uses queue_buf
/// (q^2 slots) as scratch. Returns the number of reached vertices.
std::uint64_t bfs_fill(const Digraph& g, vert source, std::int32_t* dist, vert* queue_buf);

struct SccPartition {
    std::vector<std::uint32_t> comp; // component id per vertex
    std::uint32_t count = 0;

    std::vector<std::uint64_t> sizes() const;
};

/// Strong components via iterative Tarjan over the implicit adjacency.
SccPartition tarjan_scc(const Digraph& g);

/// phi_lambda((a,b)) = (lambda*a, lambda^(m+n)*b); lambda must be nonzero.
vert apply_automorphism(const Digraph& g, felem lambda, vert v);

/// One vertex per orbit of the automorphism group {phi_lambda}: (0,0), one
/// (0,b) per coset of the subgroup {lambda^(m+n)} in GF(q)*, and every (1,b).
/// Ascending dense order. Monomial kind only.
std::vector<vert> orbit_representatives(const Digraph& g);

/// Max eccentricity over the given BFS sources; nullopt as soon as some
/// vertex is unreachable from a source. OpenMP-parallel over sources.
std::optional<std::uint32_t> max_eccentricity(const Digraph& g, const std::vector<vert>& sources,
                                              int threads = 0);
/// Serial reference for the same computation, kept for testing and the
/// benchmark target.
std::optional<std::uint32_t> max_eccentricity_serial(const Digraph& g,
                                                     const std::vector<vert>& sources);

/// Exact diameter; nullopt means infinite (not strong). Monomial digraphs use
/// orbit representatives as BFS sources, general ones scan all vertices.
std::optional<std::uint32_t> diameter(const Digraph& g, int threads = 0);

/// All-sources serial BFS, no orbit reduction. The oracle the fast path is
/// tested against.
std::optional<std::uint32_t> diameter_all_sources_serial(const Digraph& g);

std::vector<vert> all_vertices(const Digraph& g);

} // namespace mdg

#pragma once

#include <cstdint>
#include <vector>

#include "mdg/digraph.hpp"

namespace mdg {

/// Explicit walk witnessing dist(start, end) <= xs.size(). The vertex
/// sequence is derived from the first coordinates xs via the arc rule;
/// `valid` is decided by independent arc-by-arc traversal (checking
/// x2 + y2 == f(x1, y1) with plain field ops), never by the algebra that
/// produced xs.
struct WalkCertificate {
    std::uint32_t q = 0, m = 0, n = 0;
    vert start = 0, end = 0;
    std::vector<felem> xs;       // x_1 .. x_k
    std::vector<vert> vertices;  // length k+1 when xs nonempty
    bool valid = false;

    std::uint32_t length() const noexcept { return static_cast<std::uint32_t>(xs.size()); }
};

/// Arc-by-arc check of a vertex sequence against the arc rule.
bool is_walk(const Digraph& g, const std::vector<vert>& vertices);

/// Derives the walk starting at (a, b) along the first coordinates xs and
/// validates it. Never throws on bad input: an xs that does not produce a
/// walk simply yields valid = false. end is the last derived vertex.
WalkCertificate walk_from_solution(const Digraph& g, felem a, felem b,
                                   const std::vector<felem>& xs);

/// Length <= 4 certificate using the unique m-th (or n-th) root, available
/// whenever gcd(m, q-1) = 1 or gcd(n, q-1) = 1; length 3 when both hold.
WalkCertificate construct_walk_gcd(const Digraph& g, vert from, vert to);

/// Length exactly 2p-1 certificate in D(p; m, n), p prime, via the residue
/// case ladder on b+v (with automorphism normalization of the source when
/// the ladder requires a = 1).
WalkCertificate construct_walk_2p_minus_1(const Digraph& g, vert from, vert to);

/// Length exactly 2p-2 certificate in D(p; m, n), p prime, (m, n) != (p-1, p-1);
/// the excluded pair is the diameter-equality case and raises equality_case.
WalkCertificate construct_walk_2p_minus_2(const Digraph& g, vert from, vert to);

/// Length-13 certificate when q > (m-1)^4: four interior unknowns solved by a
/// signed two-term representation embedded in the alternating pattern.
WalkCertificate construct_walk_13(const Digraph& g, vert from, vert to);

/// Length-9 certificate when m = n and q > (n-1)^4: two interior unknowns
/// solved as a two-term sum of n-th powers.
WalkCertificate construct_walk_9(const Digraph& g, vert from, vert to);

/// Distance level sets of D(p; p-1, p-1) from (0,0), emitted from the closed
/// formulas (N_0 .. N_{2p-1}); p odd prime. Partition of GF(p)^2.
struct LevelSets {
    std::uint32_t p = 0;
    std::vector<std::vector<vert>> sets;
};

LevelSets level_sets_pm1(std::uint32_t p);

} // namespace mdg

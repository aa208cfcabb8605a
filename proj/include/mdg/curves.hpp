#pragma once

#include <cstdint>
#include <vector>

#include "mdg/field.hpp"

namespace mdg {

/// Affine solution count of a*x^n - x*y^n + c = 0 over GF(q), with the genus
/// of the corresponding projective curve and the exact integer floor of the
/// Hasse-Weil lower bound q - 1 - 2g*sqrt(q) (may be negative).
struct CurveCount {
    felem a = 0, c = 0;
    std::uint32_t n = 0;
    std::uint64_t solutions = 0;
    std::uint64_t genus = 0;            // n(n-1)/2
    std::int64_t hasse_weil_floor = 0;  // q - 1 - floor(2g*sqrt(q))
};

/// Exact N by enumerating all (x, y) in GF(q)^2.
CurveCount count_affine(const Field& field, felem a, felem c, std::uint32_t n);

/// Verifies by projective-point enumeration that F = aX^nZ - XY^n + cZ^(n+1)
/// and its three partials share only the trivial zero. Requires p not
/// dividing n and a, c nonzero.
bool check_nonsingular(const Field& field, felem a, felem c, std::uint32_t n);

struct HasseWeilReport {
    std::uint32_t q = 0, n = 0;
    std::uint64_t genus = 0;
    std::uint64_t pairs = 0;    // (q-1)^2 parameter pairs checked
    bool all_pass = true;
    std::uint64_t min_solutions = 0;
    felem min_a = 0, min_c = 0;
    std::int64_t min_margin = 0; // min over (a,c) of N - (q - 1 - floor(2g*sqrt(q)))
};

/// Asserts N(a,c) >= q - 1 - n(n-1)*sqrt(q) for every (a,c) in (GF(q)*)^2,
/// deciding each instance by the exact squared-integer comparison
/// (q-1-N)^2 <= n^2 (n-1)^2 q whenever q-1-N > 0. Requires p not dividing n.
HasseWeilReport hasse_weil_lower_bound(const Field& field, std::uint32_t n);

/// (n^2 - n + 1)^2: the q-threshold above which the diameter-3 conclusion for
/// D(q; 1, n) applies.
std::uint64_t diam3_threshold(std::uint32_t n);

} // namespace mdg

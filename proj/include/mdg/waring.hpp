#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mdg/field.hpp"

namespace mdg {

struct BoundCheck {
    std::string name;     // which imported bound
    std::uint64_t bound;  // integer floor of the bound value, for reporting
    bool satisfied;       // decided by exact integer arithmetic, never floats
};

struct WaringResult {
    std::uint32_t r = 0, q = 0;
    bool exists = false;
    std::optional<std::uint32_t> gamma; // least s with s-fold sums of r-th powers covering GF(q)
    std::optional<std::uint32_t> delta; // signed variant; delta <= gamma when both exist
    std::vector<BoundCheck> bounds;
};

/// Existence criterion: gamma(r,q) exists iff r is not divisible by any
/// q_d = (q-1)/(p^d-1) for a positive divisor d of e with d < e.
bool gamma_exists(const Field& field, std::uint32_t r);

/// Exact gamma(r,q) by iterated sumset growth of {x^r}; nullopt iff the
/// growth stabilizes short of GF(q) (which must agree with gamma_exists).
std::optional<std::uint32_t> waring_gamma(const Field& field, std::uint32_t r);

/// Exact delta(r,q): breadth-first over sums where one step adds any r-th
/// power or its negation. Exists iff gamma exists; in characteristic 2 the
/// two coincide.
std::optional<std::uint32_t> waring_delta(const Field& field, std::uint32_t r);

/// Checks every imported bound whose hypothesis applies against the computed
/// gamma/delta. Throws not_exists when result.exists is false. A failed check
/// would falsify either the imported theorem or this computation, so callers
/// treat it as fatal.
std::vector<BoundCheck> check_bounds(const Field& field, const WaringResult& result);

/// gamma + delta + bound report in one pass.
WaringResult waring_analyze(const Field& field, std::uint32_t r);

/// A solution (x_1,...,x_k) of x_1^r - x_2^r + x_3^r - ... + (-1)^(k+1) x_k^r = a,
/// built by embedding a shortest signed representation of a into the
/// alternating sign pattern with zero padding. Requires k >= 2*delta(r,q).
std::vector<felem> alternating_solution(const Field& field, felem a, std::uint32_t r,
                                        std::uint32_t k);

} // namespace mdg

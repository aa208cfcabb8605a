#pragma once

#include <stdexcept>
#include <string>

namespace mdg {

// Error categories; the CLI maps these onto process exit codes
// (bad input -> 2, resource cap -> 3, hypothesis violation -> 4).
enum class errc {
    not_prime,
    field_too_large,
    bad_range,
    bad_input,
    division_by_zero,
    not_monomial,
    zero_scalar,
    gcd_hypothesis_fails,
    equality_case,
    not_prime_field,
    hypothesis_fails,
    k_too_small,
    characteristic_divides_n,
    not_exists,
    unknown_claim,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace mdg

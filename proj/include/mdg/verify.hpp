#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mdg/report.hpp"

namespace mdg {

/// One verified parameter point of a claim (typically one field size).
struct VerificationOutcome {
    std::string claim;
    std::string params;
    std::uint64_t cases = 0;
    bool pass = true;
    std::string counterexample; // nonempty iff !pass, independently re-checkable
};

struct VerifyOptions {
    std::optional<std::uint32_t> qmax; // override the per-claim default range
    std::optional<std::uint32_t> pmax;
    int threads = 0;
};

/// Recognized claim ids, in run order of `verify all`.
const std::vector<std::string>& verify_claim_ids();

/// Runs one claim over its (possibly overridden) desk-scale range; throws
/// unknown_claim for unrecognized ids.
std::vector<VerificationOutcome> run_verify_claim(const std::string& id, const VerifyOptions& opt);

nlohmann::json outcome_to_json(const VerificationOutcome& o);

/// Open-problem exploration scans. Observational output only.
nlohmann::json explore_problem(std::uint32_t problem, const VerifyOptions& opt);

} // namespace mdg

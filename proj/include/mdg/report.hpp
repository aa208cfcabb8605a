#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mdg/curves.hpp"
#include "mdg/digraph.hpp"
#include "mdg/walks.hpp"
#include "mdg/waring.hpp"

namespace mdg {

inline constexpr const char* tool_version = "mdg 1.0.0";

struct ScanRow {
    std::uint32_t m = 0, n = 0;
    bool strong = false;
    std::optional<std::uint32_t> diameter; // nullopt = infinite
};

struct ScanReport {
    std::uint32_t q = 0, p = 0, e = 0;
    std::vector<std::uint32_t> modulus;
    std::uint32_t max_n = 0;
    std::vector<ScanRow> rows;
    std::uint64_t representatives_total = 0;
    double runtime_ms = 0; // metadata only, never in rows
};

/// Diameter rows for all 1 <= m <= n <= max_n (paper normalization); the
/// library itself accepts any (m, n), the scan range is a reporting choice.
ScanReport run_scan(const Field& field, std::uint32_t max_n, int threads = 0);

/// "infinite" or the number, for JSON fields that are finite-or-infinite.
nlohmann::json diameter_json(const std::optional<std::uint32_t>& d);

nlohmann::json scan_to_json(const ScanReport& rep, int threads);
std::string scan_to_csv(const ScanReport& rep);

nlohmann::json certificate_to_json(const WalkCertificate& cert);
nlohmann::json waring_to_json(const WaringResult& res, bool include_delta);
nlohmann::json curve_count_to_json(const Field& field, const CurveCount& cc);
nlohmann::json hasse_weil_to_json(const HasseWeilReport& rep);

/// f-table file: header `q=<int>`, then q rows of q field codes
/// (row x1, column y1, value f(x1, y1)).
struct FTable {
    std::uint32_t q = 0, p = 0, e = 0;
    std::vector<felem> values;
};
FTable load_ftable(std::istream& in);

} // namespace mdg

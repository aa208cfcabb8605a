#include "mdg/report.hpp"

#include <chrono>
#include <istream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mdg/num_util.hpp"

namespace mdg {

ScanReport run_scan(const Field& field, std::uint32_t max_n, int threads) {
    const auto t0 = std::chrono::steady_clock::now();
    ScanReport rep;
    rep.q = field.q();
    rep.p = field.p();
    rep.e = field.e();
    rep.modulus = field.modulus();
    rep.max_n = std::min<std::uint32_t>(max_n, field.q() - 1);

    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t m = 1; m <= rep.max_n; ++m)
        for (std::uint32_t n = m; n <= rep.max_n; ++n) pairs.push_back({m, n});
    rep.rows.resize(pairs.size());

    std::uint64_t reps_total = 0;
    const std::int64_t count = static_cast<std::int64_t>(pairs.size());
#ifdef _OPENMP
    const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nthreads) reduction(+ : reps_total)
#else
    (void)threads;
#endif
    for (std::int64_t i = 0; i < count; ++i) {
        const auto [m, n] = pairs[static_cast<std::size_t>(i)];
        Digraph g(field, m, n);
        const auto sources = orbit_representatives(g);
        reps_total += sources.size();
        // rows computed independently, so parallel order cannot leak into
        // the report
        const auto diam = max_eccentricity_serial(g, sources);
        rep.rows[static_cast<std::size_t>(i)] = ScanRow{m, n, diam.has_value(), diam};
    }
    rep.representatives_total = reps_total;
    rep.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

nlohmann::json diameter_json(const std::optional<std::uint32_t>& d) {
    if (d) return *d;
    return "infinite";
}

nlohmann::json scan_to_json(const ScanReport& rep, int threads) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : rep.rows)
        rows.push_back({{"m", r.m}, {"n", r.n}, {"strong", r.strong}, {"diameter", diameter_json(r.diameter)}});
    return {
        {"q", rep.q},
        {"p", rep.p},
        {"e", rep.e},
        {"modulus", rep.modulus},
        {"max_n", rep.max_n},
        {"rows", rows},
        {"metadata",
         {{"tool_version", tool_version},
          {"runtime_ms", rep.runtime_ms},
          {"threads", threads},
          {"representatives_total", rep.representatives_total}}},
    };
}

std::string scan_to_csv(const ScanReport& rep) {
    std::ostringstream out;
    out << "m,n,strong,diameter\n";
    for (const auto& r : rep.rows) {
        out << r.m << ',' << r.n << ',' << (r.strong ? "true" : "false") << ',';
        if (r.diameter)
            out << *r.diameter;
        else
            out << "infinite";
        out << '\n';
    }
    return out.str();
}

nlohmann::json certificate_to_json(const WalkCertificate& cert) {
    const std::uint32_t q = cert.q;
    return {
        {"q", q},
        {"m", cert.m},
        {"n", cert.n},
        {"start", {cert.start / q, cert.start % q}},
        {"end", {cert.end / q, cert.end % q}},
        {"xs", cert.xs},
        {"length", cert.length()},
        {"valid", cert.valid},
    };
}

nlohmann::json waring_to_json(const WaringResult& res, bool include_delta) {
    nlohmann::json j{
        {"r", res.r},
        {"q", res.q},
        {"exists", res.exists},
    };
    if (res.gamma) j["gamma"] = *res.gamma;
    if (include_delta && res.delta) j["delta"] = *res.delta;
    nlohmann::json bounds = nlohmann::json::array();
    for (const auto& b : res.bounds)
        bounds.push_back({{"name", b.name}, {"bound", b.bound}, {"satisfied", b.satisfied}});
    j["bounds"] = bounds;
    return j;
}

nlohmann::json curve_count_to_json(const Field& field, const CurveCount& cc) {
    return {
        {"q", field.q()},
        {"n", cc.n},
        {"a", cc.a},
        {"c", cc.c},
        {"solutions", cc.solutions},
        {"genus", cc.genus},
        {"hasse_weil_floor", cc.hasse_weil_floor},
    };
}

nlohmann::json hasse_weil_to_json(const HasseWeilReport& rep) {
    return {
        {"q", rep.q},
        {"n", rep.n},
        {"genus", rep.genus},
        {"pairs", rep.pairs},
        {"all_pass", rep.all_pass},
        {"min_solutions", rep.min_solutions},
        {"min_margin", rep.min_margin},
        {"worst", {{"a", rep.min_a}, {"c", rep.min_c}}},
        {"diam3_threshold", diam3_threshold(rep.n)},
    };
}

FTable load_ftable(std::istream& in) {
    FTable ft;
    std::string header;
    if (!std::getline(in, header)) fail(errc::bad_input, "empty f-table file");
    if (header.rfind("q=", 0) != 0) fail(errc::bad_input, "f-table header must be q=<int>");
    try {
        ft.q = static_cast<std::uint32_t>(std::stoul(header.substr(2)));
    } catch (const std::exception&) {
        fail(errc::bad_input, "bad q in f-table header");
    }
    if (!as_prime_power(ft.q, ft.p, ft.e)) fail(errc::bad_input, "f-table q is not a prime power");
    ft.values.reserve((std::size_t)ft.q * ft.q);
    for (std::uint32_t row = 0; row < ft.q; ++row) {
        for (std::uint32_t col = 0; col < ft.q; ++col) {
            std::int64_t v;
            if (!(in >> v)) fail(errc::bad_input, "f-table truncated");
            if (v < 0 || v >= ft.q) fail(errc::bad_input, "f-table value out of [0, q)");
            ft.values.push_back(static_cast<felem>(v));
        }
    }
    return ft;
}

} // namespace mdg

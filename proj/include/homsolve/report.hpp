#ifndef HOMSOLVE_REPORT_HPP
#define HOMSOLVE_REPORT_HPP

#include "homsolve/dp.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace homsolve {

// Machine-readable record of one solver run.
struct RunReport {
    std::string answer;          // "yes" | "no"
    std::string mode;            // "hom" | "lihom"
    int beta = 1;
    std::vector<int> ordering;   // permutation of V(H)
    std::string ordering_source; // "exact" | "heuristic" | "user"
    std::vector<std::uint64_t> stage_sizes;
    std::uint64_t peak_nodes = 0;
    double wall_ms = 0.0;
    std::optional<std::vector<int>> witness;

    bool operator==(const RunReport&) const = default;
};

RunReport make_report(const SolveResult& result, Mode mode);

void to_json(nlohmann::json& j, const RunReport& r);
void from_json(const nlohmann::json& j, RunReport& r);

std::string render_text(const RunReport& r);

} // namespace homsolve

#endif

#include "homsolve/report.hpp"

#include <sstream>

namespace homsolve {

RunReport make_report(const SolveResult& result, Mode mode) {
    RunReport r;
    r.answer = result.yes ? "yes" : "no";
    r.mode = mode == Mode::hom ? "hom" : "lihom";
    r.beta = result.stats.beta;
    r.ordering = result.stats.ordering.perm;
    r.ordering_source = to_string(result.stats.ordering_source);
    r.stage_sizes = result.stats.stage_sizes;
    r.peak_nodes = result.stats.peak_nodes;
    r.wall_ms = result.stats.wall_ms;
    r.witness = result.witness;
    return r;
}

void to_json(nlohmann::json& j, const RunReport& r) {
    j = nlohmann::json{{"answer", r.answer},
                       {"mode", r.mode},
                       {"beta", r.beta},
                       {"ordering", r.ordering},
                       {"ordering_source", r.ordering_source},
                       {"stage_sizes", r.stage_sizes},
                       {"peak_nodes", r.peak_nodes},
                       {"wall_ms", r.wall_ms}};
    if (r.witness)
        j["witness"] = *r.witness;
}

void from_json(const nlohmann::json& j, RunReport& r) {
    j.at("answer").get_to(r.answer);
    j.at("mode").get_to(r.mode);
    j.at("beta").get_to(r.beta);
    j.at("ordering").get_to(r.ordering);
    j.at("ordering_source").get_to(r.ordering_source);
    j.at("stage_sizes").get_to(r.stage_sizes);
    j.at("peak_nodes").get_to(r.peak_nodes);
    j.at("wall_ms").get_to(r.wall_ms);
    if (j.contains("witness"))
        r.witness = j.at("witness").get<std::vector<int>>();
    else
        r.witness.reset();
}

std::string render_text(const RunReport& r) {
    std::ostringstream out;
    out << "answer " << r.answer << '\n';
    out << "mode " << r.mode << '\n';
    out << "beta " << r.beta << '\n';
    out << "ordering_source " << r.ordering_source << '\n';
    out << "ordering";
    for (int v : r.ordering)
        out << ' ' << v;
    out << '\n';
    out << "stage_sizes";
    for (auto s : r.stage_sizes)
        out << ' ' << s;
    out << '\n';
    out << "peak_nodes " << r.peak_nodes << '\n';
    out << "wall_ms " << r.wall_ms << '\n';
    if (r.witness) {
        out << "witness";
        for (int v : *r.witness)
            out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

} // namespace homsolve

#include "homsolve/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace homsolve {

namespace {

[[noreturn]] void fail_line(int lineno, const std::string& what, const std::string& line) {
    throw InputError("line " + std::to_string(lineno) + ": " + what + ": '" + line + "'");
}

bool extra_tokens(std::istringstream& ss) {
    std::string rest;
    return static_cast<bool>(ss >> rest);
}

} // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_problem = false;
    int n = 0, declared_m = 0;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string kind;
        if (!(ss >> kind))
            continue; // blank line
        if (kind == "c")
            continue;
        if (kind == "p") {
            if (have_problem)
                fail_line(lineno, "duplicate problem line", line);
            std::string fmt;
            if (!(ss >> fmt >> n >> declared_m) || fmt != "edge" || n < 0 || declared_m < 0 ||
                extra_tokens(ss))
                fail_line(lineno, "malformed problem line, expected 'p edge <n> <m>'", line);
            have_problem = true;
        } else if (kind == "e") {
            if (!have_problem)
                fail_line(lineno, "edge before problem line", line);
            int u = 0, v = 0;
            if (!(ss >> u >> v) || extra_tokens(ss))
                fail_line(lineno, "malformed edge line, expected 'e <u> <v>'", line);
            if (u < 1 || u > n || v < 1 || v > n)
                fail_line(lineno, "vertex index out of range 1.." + std::to_string(n), line);
            if (u == v)
                fail_line(lineno, "self-loop edge", line);
            edges.emplace_back(u, v);
        } else {
            fail_line(lineno, "unknown line type '" + kind + "'", line);
        }
    }
    if (!have_problem)
        throw InputError("missing problem line 'p edge <n> <m>'");
    return Graph::from_edges(n, edges);
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string render_graph(const Graph& g) {
    auto es = g.edges();
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << es.size() << '\n';
    for (auto [u, v] : es)
        out << "e " << u << ' ' << v << '\n';
    return out.str();
}

namespace {

// "name:3" / "name:7:2" -> trailing integer fields
std::vector<int> parse_spec_fields(const std::string& arg, size_t colon, size_t count,
                                   const std::string& usage) {
    std::vector<int> vals;
    std::string rest = arg.substr(colon + 1);
    std::istringstream ss(rest);
    std::string field;
    while (std::getline(ss, field, ':')) {
        try {
            size_t used = 0;
            int v = std::stoi(field, &used);
            if (used != field.size())
                throw std::invalid_argument(field);
            vals.push_back(v);
        } catch (const std::exception&) {
            throw InputError("bad builtin graph spec '" + arg + "', expected " + usage);
        }
    }
    if (vals.size() != count)
        throw InputError("bad builtin graph spec '" + arg + "', expected " + usage);
    return vals;
}

} // namespace

Graph load_graph_arg(const std::string& arg) {
    size_t colon = arg.find(':');
    if (colon != std::string::npos) {
        std::string name = arg.substr(0, colon);
        try {
            if (name == "cycle")
                return make_cycle(parse_spec_fields(arg, colon, 1, "cycle:<m>")[0]);
            if (name == "path")
                return make_path(parse_spec_fields(arg, colon, 1, "path:<m>")[0]);
            if (name == "complete")
                return make_complete(parse_spec_fields(arg, colon, 1, "complete:<m>")[0]);
            if (name == "cyclepow") {
                auto mk = parse_spec_fields(arg, colon, 2, "cyclepow:<m>:<k>");
                return power(make_cycle(mk[0]), mk[1]);
            }
        } catch (const std::invalid_argument& e) {
            throw InputError("bad builtin graph spec '" + arg + "': " + e.what());
        }
        // fall through: a path name may contain ':'
    }
    std::ifstream in(arg);
    if (!in)
        throw InputError("cannot open graph file '" + arg + "'");
    try {
        return parse_graph(in);
    } catch (const InputError& e) {
        throw InputError(arg + ": " + e.what());
    }
}

std::vector<int> parse_permutation(const std::string& text, int expected_size) {
    std::istringstream ss(text);
    std::vector<int> perm;
    int v = 0;
    while (ss >> v)
        perm.push_back(v);
    if (static_cast<int>(perm.size()) != expected_size)
        throw InputError("permutation has " + std::to_string(perm.size()) + " entries, expected " +
                         std::to_string(expected_size));
    std::vector<char> seen(expected_size, 0);
    for (int x : perm) {
        if (x < 1 || x > expected_size || seen[x - 1])
            throw InputError("not a permutation of 1.." + std::to_string(expected_size));
        seen[x - 1] = 1;
    }
    return perm;
}

std::vector<int> load_permutation_file(const std::string& path, int expected_size) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open ordering file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_permutation(buf.str(), expected_size);
}

} // namespace homsolve

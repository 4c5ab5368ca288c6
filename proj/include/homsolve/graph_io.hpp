#ifndef HOMSOLVE_GRAPH_IO_HPP
#define HOMSOLVE_GRAPH_IO_HPP

#include "homsolve/graph.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace homsolve {

// Malformed input document (graph file, ordering file, builtin spec).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// DIMACS-style edge list: optional 'c' comment lines, one 'p edge <n> <m>'
// problem line, then 'e <u> <v>' lines with 1-indexed endpoints.
// Duplicate edges collapse; self-loops are rejected. Errors name the line.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);

// Canonical form: problem line followed by 'e u v' lines, u < v, sorted.
// parse_graph(render_graph(g)) == g.
std::string render_graph(const Graph& g);

// Resolves a CLI graph argument: a builtin spec "cycle:<m>", "path:<m>",
// "complete:<m>", "cyclepow:<m>:<k>", or otherwise a file path.
Graph load_graph_arg(const std::string& arg);

// One line of space-separated 1-indexed vertex names; must be a
// permutation of 1..expected_size.
std::vector<int> parse_permutation(const std::string& text, int expected_size);
std::vector<int> load_permutation_file(const std::string& path, int expected_size);

} // namespace homsolve

#endif

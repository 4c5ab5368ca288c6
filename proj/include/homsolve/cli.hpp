#ifndef HOMSOLVE_CLI_HPP
#define HOMSOLVE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace homsolve {

// Runs the command-line tool on the given arguments (program name
// excluded). Exit status: 0 for a completed computation, 2 for a usage
// error, 3 for an input error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace homsolve

#endif

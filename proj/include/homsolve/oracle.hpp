#ifndef HOMSOLVE_ORACLE_HPP
#define HOMSOLVE_ORACLE_HPP

#include "homsolve/graph.hpp"

#include <optional>
#include <vector>

namespace homsolve {

// Total mapping V(G) -> V(H): entry i is the 1-indexed image of v_{i+1}.
using Mapping = std::vector<int>;

// Reference checkers and exhaustive searches. These exist to be obviously
// correct, not fast; the solver is tested against them.

bool check_hom(const Graph& g, const Graph& h, const Mapping& phi);

// Homomorphism and no two vertices with a common neighbor share an image.
bool check_lihom(const Graph& g, const Graph& h, const Mapping& phi);

// H(2,1)-labeling: images of adjacent vertices at H-distance >= 2, images
// of distance-2 vertices distinct. Unreachable pairs in h count as
// infinitely far apart and satisfy both conditions.
bool check_h21(const Graph& g, const Graph& h, const Mapping& psi);

// Backtracking in input vertex order with forward pruning; returns the
// lexicographically first witness, or nothing.
std::optional<Mapping> brute_hom(const Graph& g, const Graph& h);
std::optional<Mapping> brute_lihom(const Graph& g, const Graph& h);

} // namespace homsolve

#endif

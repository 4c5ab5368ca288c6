#ifndef HOMSOLVE_PACKING_HPP
#define HOMSOLVE_PACKING_HPP

#include "homsolve/graph.hpp"
#include "homsolve/vector_set.hpp"

namespace homsolve {

// Characteristic vectors of all independent sets of g, coordinate i
// describing vertex v_i. Built directly in trie form by branching on each
// vertex in input order (out / in), so the solver's first-symbol
// decomposition needs no re-partitioning. The all-zero word is always a
// member.
VectorSet enum_independent_sets(const Graph& g);

// Characteristic vectors of all 2-independent sets: supports with pairwise
// distance >= 3 in g. Conflicts come from BFS distances, not from an
// explicit graph square.
VectorSet enum_2_independent_sets(const Graph& g);

} // namespace homsolve

#endif

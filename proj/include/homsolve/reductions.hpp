#ifndef HOMSOLVE_REDUCTIONS_HPP
#define HOMSOLVE_REDUCTIONS_HPP

#include "homsolve/dp.hpp"
#include "homsolve/graph.hpp"

#include <optional>
#include <vector>

namespace homsolve {

struct MkColoringResult {
    bool yes = false;
    std::optional<std::vector<int>> coloring; // values in 0..m-1 per vertex
    std::optional<SolveResult> run; // underlying solver run; absent for the m < 3 direct path
};

// f: V -> {0..m-1} with k <= |f(v)-f(u)| <= m-k across edges, solved as a
// homomorphism into the complement of the (k-1)'th power of an m-cycle,
// with the zigzag cycle ordering so the alphabet size is 2k. m in {1,2}
// has no cycle and is answered by direct search.
MkColoringResult solve_mk_coloring(const Graph& g, int m, int k, const SolveOptions& opts = {});

struct H21Result {
    bool yes = false;
    std::optional<Mapping> labeling; // images are vertex names of h
    SolveResult run;
};

// H(2,1)-labeling of g into h: a locally injective homomorphism into the
// complement of h.
H21Result solve_h21(const Graph& g, const Graph& h, const SolveOptions& opts = {});

struct SpanResult {
    int span = 0;
    std::optional<std::vector<int>> labels; // values in 0..span
};

// Least k such that g has a P_{k+1}(2,1)-labeling; ascending search from
// k = 0. Always feasible (k <= maxdeg^2 + maxdeg).
SpanResult l21_span(const Graph& g, const SolveOptions& opts = {});

struct CircularSpanResult {
    std::optional<int> span;  // witness cycle is C_{span+1}; empty if none in range
    int max_cycle_checked = 0;
    std::optional<std::vector<int>> labels;
};

// Least k >= 2 such that g has a C_{k+1}(2,1)-labeling, scanning cycle
// sizes 3..2n. Infeasibility within the range is reported, not asserted
// away. g must be nonempty.
CircularSpanResult circular_l21_span(const Graph& g, const SolveOptions& opts = {});

} // namespace homsolve

#endif

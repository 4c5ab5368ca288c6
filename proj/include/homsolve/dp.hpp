#ifndef HOMSOLVE_DP_HPP
#define HOMSOLVE_DP_HPP

#include "homsolve/graph.hpp"
#include "homsolve/oracle.hpp"
#include "homsolve/ordering.hpp"
#include "homsolve/vector_set.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace homsolve {

enum class Mode { hom, locally_injective };

// State-vector symbols at stage k, beta the window width:
//   0            vertex unmapped
//   1            mapped to h_l with l <= k - beta + 1
//   x in 2..beta mapped to h_{k-beta+x}
// The barred alphabet adds a blocked-zero mark, stored as symbol beta+1.
constexpr Symbol bar_zero(int beta) { return static_cast<Symbol>(beta + 1); }

// The partial symbol combination: x from the barred alphabet, y a bit.
// Empty optional means undefined.
std::optional<Symbol> oplus_symbol(Symbol x, bool y, int beta);

enum class OrderingSource { exact, heuristic, user };
std::string to_string(OrderingSource s);

struct SolveOptions {
    std::optional<Ordering> ordering; // user-supplied ordering of V(H)
    bool force_heuristic_ordering = false;
    int exact_threshold = kDefaultExactThreshold;
    bool want_witness = false; // retain all stage sets and extract a mapping
    int threads = 1;           // >1 enables the OpenMP kernels
};

// Everything the stage loop needs. Owns copies of both graphs; immutable
// once built.
struct SolverContext {
    Graph g;
    Graph h;
    Mode mode = Mode::hom;
    Ordering ordering; // h_i is ordering.perm[i-1]
    OrderingSource ordering_source = OrderingSource::exact;
    int beta = 1;      // stretch(complement(h), ordering) + 1
    VectorSet p_family;

    // adjacency of H between positions (1-based) under the ordering
    bool h_adjacent_pos(int i, int j) const { return adj_pos_[i - 1][j - 1] != 0; }
    std::vector<std::vector<char>> adj_pos_;
};

SolverContext make_context(const Graph& g, const Graph& h, Mode mode,
                           const SolveOptions& opts = {});

// The bar of one state vector at 0-based stage k: coordinates holding 0
// whose vertex has a neighbor mapped to a non-neighbor of h_{k+1} become
// the blocked mark. Nonzero symbols pass through.
Word bar_word(const Word& a, int stage, const SolverContext& ctx);

// bar applied to a whole stage set; |result| == |t| always.
VectorSet bar_stage(const VectorSet& t, int stage, const SolverContext& ctx, int threads = 1);

// {a (+) b : a in abar, b in p, defined}, via the first-symbol
// decomposition. abar has alphabet beta+2, p alphabet 2; the result has
// alphabet beta+1.
VectorSet oplus_sets(const VectorSet& abar, const VectorSet& p, int beta, int threads = 1);

struct SolveStats {
    int beta = 1;
    Ordering ordering;
    OrderingSource ordering_source = OrderingSource::exact;
    std::uint64_t p_size = 0;
    std::vector<std::uint64_t> stage_sizes;  // |T[k]| for k = 0..m
    std::vector<std::uint64_t> barred_sizes; // |T_bar[k]| for k = 0..m-1
    std::uint64_t peak_nodes = 0;
    double wall_ms = 0.0;
};

struct SolveResult {
    bool yes = false;
    SolveStats stats;
    std::optional<Mapping> witness; // images are original H vertex names
};

// Runs the stage loop keeping every T[k]; used for witness extraction and
// by tests that inspect stages.
std::vector<VectorSet> compute_stage_sets(const SolverContext& ctx, int threads = 1,
                                          SolveStats* stats = nullptr);

// Walks the retained stages backwards, recovering one mapping. Requires a
// yes instance; the result passes the mode's checker.
Mapping reconstruct_witness(const SolverContext& ctx, const std::vector<VectorSet>& stages);

SolveResult solve(const Graph& g, const Graph& h, Mode mode, const SolveOptions& opts = {});
SolveResult solve_hom(const Graph& g, const Graph& h, const SolveOptions& opts = {});
SolveResult solve_lihom(const Graph& g, const Graph& h, const SolveOptions& opts = {});

} // namespace homsolve

#endif

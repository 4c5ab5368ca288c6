#ifndef HOMSOLVE_ORDERING_HPP
#define HOMSOLVE_ORDERING_HPP

#include "homsolve/graph.hpp"

#include <vector>

namespace homsolve {

// A vertex ordering: position i (1-based) holds vertex perm[i-1].
struct Ordering {
    std::vector<int> perm;

    bool operator==(const Ordering&) const = default;
};

Ordering identity_ordering(int n);

// Checks that ord is a permutation of 1..g.vertex_count(); throws otherwise.
void validate_ordering(const Graph& g, const Ordering& ord);

// max |i-j| over edges v_i v_j under the ordering; 0 for an edgeless graph
// (max over the empty set).
int stretch(const Graph& g, const Ordering& ord);

struct BandwidthCertificate {
    int value = 0;
    Ordering ordering;
};

inline constexpr int kDefaultExactThreshold = 24;

// Minimum stretch over all orderings, with the lexicographically smallest
// permutation attaining it. Branch and bound, iterative deepening on the
// bound. Refuses graphs above the threshold; use heuristic_bandwidth there.
BandwidthCertificate exact_bandwidth(const Graph& g, int threshold = kDefaultExactThreshold);

// Cuthill-McKee layout from a pseudo-peripheral start vertex, ties broken
// by vertex index. Deterministic; value is the exact stretch of the
// returned ordering (an upper bound on the true bandwidth).
BandwidthCertificate heuristic_bandwidth(const Graph& g);

// Zigzag layout 1, m, 2, m-1, 3, ... of the vertices of the cycle power
// C_m^{k-1}. Its stretch on that graph is exactly 2(k-1) for
// 2 <= k <= (m-1)/2 + 1, matching the optimum, and 0 for k = 1.
Ordering cycle_power_ordering(int m, int k);

} // namespace homsolve

#endif

#ifndef HOMSOLVE_GRAPH_HPP
#define HOMSOLVE_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

namespace homsolve {

// Simple loopless undirected graph on vertices 1..n.
// All public interfaces are 1-indexed (DIMACS convention); storage is
// 0-indexed internally. Immutable after construction, safe to share
// read-only across threads.
class Graph {
public:
    Graph() = default;

    // Builds a graph from an edge list. Duplicate edges collapse.
    // Throws std::invalid_argument on self-loops or endpoints outside 1..n.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const;

    bool adjacent(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    // Edges as (u, v) pairs with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const;

private:
    int n_ = 0;
    std::vector<std::vector<int>> nbrs_; // nbrs_[v-1]: sorted 1-indexed neighbors
    std::vector<char> adj_;              // n*n adjacency matrix
};

Graph complement(const Graph& g);

// k'th power: u,v adjacent iff 0 < dist_g(u,v) <= k. Power 0 is edgeless.
// Vertices in different components are never adjacent in any power.
Graph power(const Graph& g, int k);

Graph make_cycle(int m);    // m >= 3
Graph make_path(int m);     // m >= 1
Graph make_complete(int m); // m >= 1

// BFS distances from every vertex; dist[u-1][v-1], -1 if unreachable.
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

} // namespace homsolve

#endif

#include "homsolve/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace homsolve {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0)
        throw std::invalid_argument("vertex count must be nonnegative");
    Graph g;
    g.n_ = n;
    g.nbrs_.assign(n, {});
    g.adj_.assign(static_cast<size_t>(n) * n, 0);
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("edge endpoint out of range 1.." + std::to_string(n) +
                                        ": (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        size_t a = static_cast<size_t>(u - 1) * n + (v - 1);
        size_t b = static_cast<size_t>(v - 1) * n + (u - 1);
        if (g.adj_[a])
            continue; // duplicate edge lines collapse
        g.adj_[a] = g.adj_[b] = 1;
        g.nbrs_[u - 1].push_back(v);
        g.nbrs_[v - 1].push_back(u);
    }
    for (auto& nb : g.nbrs_)
        std::sort(nb.begin(), nb.end());
    return g;
}

int Graph::edge_count() const {
    size_t deg_sum = 0;
    for (const auto& nb : nbrs_)
        deg_sum += nb.size();
    return static_cast<int>(deg_sum / 2);
}

bool Graph::adjacent(int u, int v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_)
        throw std::invalid_argument("vertex out of range");
    return adj_[static_cast<size_t>(u - 1) * n_ + (v - 1)] != 0;
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 1 || v > n_)
        throw std::invalid_argument("vertex out of range");
    return nbrs_[v - 1];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    for (int u = 1; u <= n_; ++u)
        for (int v : nbrs_[u - 1])
            if (u < v)
                es.emplace_back(u, v);
    return es;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> es;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (!g.adjacent(u, v))
                es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

Graph power(const Graph& g, int k) {
    if (k < 0)
        throw std::invalid_argument("power exponent must be nonnegative");
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> es;
    if (k > 0) {
        auto dist = all_pairs_distances(g);
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (dist[u - 1][v - 1] >= 1 && dist[u - 1][v - 1] <= k)
                    es.emplace_back(u, v);
    }
    return Graph::from_edges(n, es);
}

Graph make_cycle(int m) {
    if (m < 3)
        throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i < m; ++i)
        es.emplace_back(i, i + 1);
    es.emplace_back(m, 1);
    return Graph::from_edges(m, es);
}

Graph make_path(int m) {
    if (m < 1)
        throw std::invalid_argument("path needs at least 1 vertex");
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i < m; ++i)
        es.emplace_back(i, i + 1);
    return Graph::from_edges(m, es);
}

Graph make_complete(int m) {
    if (m < 1)
        throw std::invalid_argument("complete graph needs at least 1 vertex");
    std::vector<std::pair<int, int>> es;
    for (int u = 1; u <= m; ++u)
        for (int v = u + 1; v <= m; ++v)
            es.emplace_back(u, v);
    return Graph::from_edges(m, es);
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    std::deque<int> queue;
    for (int s = 1; s <= n; ++s) {
        auto& d = dist[s - 1];
        d[s - 1] = 0;
        queue.clear();
        queue.push_back(s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u)) {
                if (d[v - 1] < 0) {
                    d[v - 1] = d[u - 1] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    return dist;
}

} // namespace homsolve

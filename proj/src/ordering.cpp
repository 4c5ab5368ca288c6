#include "homsolve/ordering.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

namespace homsolve {

Ordering identity_ordering(int n) {
    Ordering ord;
    ord.perm.resize(n);
    std::iota(ord.perm.begin(), ord.perm.end(), 1);
    return ord;
}

void validate_ordering(const Graph& g, const Ordering& ord) {
    int n = g.vertex_count();
    if (static_cast<int>(ord.perm.size()) != n)
        throw std::invalid_argument("ordering length " + std::to_string(ord.perm.size()) +
                                    " does not match vertex count " + std::to_string(n));
    std::vector<char> seen(n, 0);
    for (int v : ord.perm) {
        if (v < 1 || v > n || seen[v - 1])
            throw std::invalid_argument("ordering is not a permutation of 1.." + std::to_string(n));
        seen[v - 1] = 1;
    }
}

int stretch(const Graph& g, const Ordering& ord) {
    validate_ordering(g, ord);
    int n = g.vertex_count();
    std::vector<int> pos(n + 1, 0);
    for (int i = 0; i < n; ++i)
        pos[ord.perm[i]] = i + 1;
    int best = 0;
    for (auto [u, v] : g.edges())
        best = std::max(best, std::abs(pos[u] - pos[v]));
    return best;
}

namespace {

// Depth-first feasibility search for an ordering of stretch <= bound,
// trying the smallest unplaced vertex first at each position, so the first
// complete layout found is the lexicographically smallest one.
class LayoutSearch {
public:
    LayoutSearch(const Graph& g, int bound) : g_(g), n_(g.vertex_count()), bound_(bound) {
        pos_.assign(n_ + 1, 0);
        unplaced_nbrs_.assign(n_ + 1, 0);
        for (int v = 1; v <= n_; ++v)
            unplaced_nbrs_[v] = g_.degree(v);
        layout_.reserve(n_);
    }

    bool run() { return place(1); }

    const std::vector<int>& layout() const { return layout_; }

private:
    bool place(int p) {
        if (p > n_)
            return true;
        for (int v = 1; v <= n_; ++v) {
            if (pos_[v] != 0)
                continue;
            if (!fits(v, p))
                continue;
            pos_[v] = p;
            layout_.push_back(v);
            for (int u : g_.neighbors(v))
                --unplaced_nbrs_[u];
            if (viable(p) && place(p + 1))
                return true;
            for (int u : g_.neighbors(v))
                ++unplaced_nbrs_[u];
            layout_.pop_back();
            pos_[v] = 0;
        }
        return false;
    }

    bool fits(int v, int p) const {
        for (int u : g_.neighbors(v))
            if (pos_[u] != 0 && p - pos_[u] > bound_)
                return false;
        return true;
    }

    // Every placed vertex must still be able to host its unplaced neighbors
    // within positions p+1 .. pos(u)+bound.
    bool viable(int p) const {
        for (int u : layout_)
            if (unplaced_nbrs_[u] > 0 && unplaced_nbrs_[u] > pos_[u] + bound_ - p)
                return false;
        return true;
    }

    const Graph& g_;
    int n_;
    int bound_;
    std::vector<int> pos_;
    std::vector<int> unplaced_nbrs_;
    std::vector<int> layout_;
};

int degree_lower_bound(const Graph& g) {
    int lb = 0;
    for (int v = 1; v <= g.vertex_count(); ++v)
        lb = std::max(lb, (g.degree(v) + 1) / 2);
    return lb;
}

} // namespace

BandwidthCertificate exact_bandwidth(const Graph& g, int threshold) {
    int n = g.vertex_count();
    if (n > threshold)
        throw std::invalid_argument("exact bandwidth search refused for n = " + std::to_string(n) +
                                    " > threshold " + std::to_string(threshold) +
                                    "; use heuristic_bandwidth or raise the threshold");
    for (int b = degree_lower_bound(g);; ++b) {
        LayoutSearch search(g, b);
        if (search.run())
            return {b, Ordering{search.layout()}};
    }
}

namespace {

std::vector<int> bfs_levels(const Graph& g, int start, std::vector<int>& dist) {
    dist.assign(g.vertex_count() + 1, -1);
    std::deque<int> queue{start};
    std::vector<int> order;
    dist[start] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        order.push_back(u);
        for (int v : g.neighbors(u))
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
    }
    return order;
}

int pseudo_peripheral_start(const Graph& g, int seed) {
    std::vector<int> dist;
    int start = seed;
    int ecc = -1;
    for (int round = 0; round < 8; ++round) {
        auto order = bfs_levels(g, start, dist);
        int far = order.back();
        int far_ecc = dist[far];
        // among farthest vertices prefer low degree, then low index
        for (auto it = order.rbegin(); it != order.rend() && dist[*it] == far_ecc; ++it) {
            int v = *it;
            if (g.degree(v) < g.degree(far) || (g.degree(v) == g.degree(far) && v < far))
                far = v;
        }
        if (far_ecc <= ecc)
            break;
        ecc = far_ecc;
        start = far;
    }
    return start;
}

} // namespace

BandwidthCertificate heuristic_bandwidth(const Graph& g) {
    int n = g.vertex_count();
    std::vector<char> visited(n + 1, 0);
    std::vector<int> layout;
    layout.reserve(n);
    for (int seed = 1; seed <= n; ++seed) {
        if (visited[seed])
            continue;
        int start = pseudo_peripheral_start(g, seed);
        // Cuthill-McKee over this component
        std::deque<int> queue{start};
        visited[start] = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            layout.push_back(u);
            std::vector<int> next;
            for (int v : g.neighbors(u))
                if (!visited[v]) {
                    visited[v] = 1;
                    next.push_back(v);
                }
            std::sort(next.begin(), next.end(), [&](int a, int b) {
                return g.degree(a) != g.degree(b) ? g.degree(a) < g.degree(b) : a < b;
            });
            for (int v : next)
                queue.push_back(v);
        }
    }
    Ordering ord{std::move(layout)};
    return {stretch(g, ord), std::move(ord)};
}

Ordering cycle_power_ordering(int m, int k) {
    if (m < 3)
        throw std::invalid_argument("cycle power ordering needs m >= 3");
    if (k < 1)
        throw std::invalid_argument("cycle power ordering needs k >= 1");
    Ordering ord;
    ord.perm.reserve(m);
    int lo = 1, hi = m;
    while (lo <= hi) {
        ord.perm.push_back(lo++);
        if (lo <= hi)
            ord.perm.push_back(hi--);
    }
    return ord;
}

} // namespace homsolve

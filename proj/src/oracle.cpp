#include "homsolve/oracle.hpp"

#include <stdexcept>

namespace homsolve {

namespace {

void require_total(const Graph& g, const Graph& h, const Mapping& phi) {
    if (static_cast<int>(phi.size()) != g.vertex_count())
        throw std::invalid_argument("mapping size does not match |V(G)|");
    for (int img : phi)
        if (img < 1 || img > h.vertex_count())
            throw std::invalid_argument("mapping image outside V(H)");
}

// pairs u < v at distance exactly 2 in g, or sharing a common neighbor
std::vector<std::pair<int, int>> common_neighbor_pairs(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> pairs;
    for (int w = 1; w <= n; ++w) {
        const auto& nb = g.neighbors(w);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j)
                pairs.emplace_back(nb[i], nb[j]);
    }
    return pairs;
}

class BruteSearch {
public:
    BruteSearch(const Graph& g, const Graph& h, bool locally_injective)
        : g_(g), h_(h), li_(locally_injective), n_(g.vertex_count()), m_(h.vertex_count()),
          phi_(n_, 0) {
        if (li_) {
            dist2_ = std::vector<std::vector<char>>(n_, std::vector<char>(n_, 0));
            for (auto [u, v] : common_neighbor_pairs(g_))
                dist2_[u - 1][v - 1] = dist2_[v - 1][u - 1] = 1;
        }
    }

    std::optional<Mapping> run() {
        if (n_ > 0 && m_ == 0)
            return std::nullopt;
        if (assign(0))
            return phi_;
        return std::nullopt;
    }

private:
    bool assign(int i) {
        if (i == n_)
            return true;
        for (int t = 1; t <= m_; ++t) {
            if (!consistent(i, t))
                continue;
            phi_[i] = t;
            if (assign(i + 1))
                return true;
            phi_[i] = 0;
        }
        return false;
    }

    bool consistent(int i, int t) const {
        for (int u : g_.neighbors(i + 1)) {
            int j = u - 1;
            if (j < i && !h_.adjacent(phi_[j], t))
                return false;
        }
        if (li_)
            for (int j = 0; j < i; ++j)
                if (phi_[j] == t && dist2_[j][i])
                    return false;
        return true;
    }

    const Graph& g_;
    const Graph& h_;
    bool li_;
    int n_, m_;
    Mapping phi_;
    std::vector<std::vector<char>> dist2_;
};

} // namespace

bool check_hom(const Graph& g, const Graph& h, const Mapping& phi) {
    require_total(g, h, phi);
    for (auto [u, v] : g.edges())
        if (!h.adjacent(phi[u - 1], phi[v - 1]))
            return false;
    return true;
}

bool check_lihom(const Graph& g, const Graph& h, const Mapping& phi) {
    if (!check_hom(g, h, phi))
        return false;
    for (auto [u, v] : common_neighbor_pairs(g))
        if (phi[u - 1] == phi[v - 1])
            return false;
    return true;
}

bool check_h21(const Graph& g, const Graph& h, const Mapping& psi) {
    require_total(g, h, psi);
    auto dg = all_pairs_distances(g);
    auto dh = all_pairs_distances(h);
    int n = g.vertex_count();
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            int dist_h = dh[psi[u - 1] - 1][psi[v - 1] - 1]; // -1 means unreachable
            if (dist_h < 0)
                continue;
            if (dg[u - 1][v - 1] == 1 && dist_h < 2)
                return false;
            if (dg[u - 1][v - 1] == 2 && dist_h < 1)
                return false;
        }
    return true;
}

std::optional<Mapping> brute_hom(const Graph& g, const Graph& h) {
    return BruteSearch(g, h, false).run();
}

std::optional<Mapping> brute_lihom(const Graph& g, const Graph& h) {
    return BruteSearch(g, h, true).run();
}

} // namespace homsolve

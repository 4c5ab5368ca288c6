#include "homsolve/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace homsolve {

namespace {

// Direct backtracking for (m,k)-colorings; only used when m < 3, where
// the cycle-power target does not exist.
bool direct_mk_search(const Graph& g, int m, int k, int i, std::vector<int>& f) {
    int n = g.vertex_count();
    if (i == n)
        return true;
    for (int c = 0; c < m; ++c) {
        bool ok = true;
        for (int u : g.neighbors(i + 1)) {
            if (u - 1 >= i)
                continue;
            int d = std::abs(f[u - 1] - c);
            if (d < k || d > m - k) {
                ok = false;
                break;
            }
        }
        if (!ok)
            continue;
        f[i] = c;
        if (direct_mk_search(g, m, k, i + 1, f))
            return true;
    }
    return false;
}

} // namespace

MkColoringResult solve_mk_coloring(const Graph& g, int m, int k, const SolveOptions& opts) {
    if (m < 1 || k < 1)
        throw std::invalid_argument("mk-coloring needs m >= 1 and k >= 1");
    MkColoringResult res;
    if (m < 3) {
        std::vector<int> f(g.vertex_count(), 0);
        if (direct_mk_search(g, m, k, 0, f)) {
            res.yes = true;
            res.coloring = std::move(f);
        }
        return res;
    }
    Graph target = complement(power(make_cycle(m), k - 1));
    SolveOptions solver_opts = opts;
    if (!solver_opts.ordering)
        solver_opts.ordering = cycle_power_ordering(m, k);
    SolveResult run = solve_hom(g, target, solver_opts);
    res.yes = run.yes;
    if (run.witness) {
        std::vector<int> f(run.witness->size());
        for (size_t i = 0; i < f.size(); ++i)
            f[i] = (*run.witness)[i] - 1; // vertex j of C_m stands for value j-1
        res.coloring = std::move(f);
    }
    res.run = std::move(run);
    return res;
}

H21Result solve_h21(const Graph& g, const Graph& h, const SolveOptions& opts) {
    H21Result res;
    res.run = solve_lihom(g, complement(h), opts);
    res.yes = res.run.yes;
    if (res.run.witness)
        res.labeling = *res.run.witness; // same vertex names in h and its complement
    return res;
}

SpanResult l21_span(const Graph& g, const SolveOptions& opts) {
    int maxdeg = 0;
    for (int v = 1; v <= g.vertex_count(); ++v)
        maxdeg = std::max(maxdeg, g.degree(v));
    int bound = maxdeg * maxdeg + maxdeg;
    for (int k = 0; k <= bound; ++k) {
        H21Result h21 = solve_h21(g, make_path(k + 1), opts);
        if (h21.yes) {
            SpanResult res;
            res.span = k;
            if (h21.labeling) {
                std::vector<int> labels(h21.labeling->size());
                for (size_t i = 0; i < labels.size(); ++i)
                    labels[i] = (*h21.labeling)[i] - 1; // path vertex j carries label j-1
                res.labels = std::move(labels);
            }
            return res;
        }
    }
    throw std::logic_error("no L(2,1)-labeling up to the maxdeg^2+maxdeg bound");
}

CircularSpanResult circular_l21_span(const Graph& g, const SolveOptions& opts) {
    int n = g.vertex_count();
    if (n < 1)
        throw std::invalid_argument("circular span needs a nonempty graph");
    CircularSpanResult res;
    res.max_cycle_checked = std::max(2 * n, 3);
    for (int cyc = 3; cyc <= res.max_cycle_checked; ++cyc) {
        H21Result h21 = solve_h21(g, make_cycle(cyc), opts);
        if (h21.yes) {
            res.span = cyc - 1;
            if (h21.labeling) {
                std::vector<int> labels(h21.labeling->size());
                for (size_t i = 0; i < labels.size(); ++i)
                    labels[i] = (*h21.labeling)[i] - 1;
                res.labels = std::move(labels);
            }
            return res;
        }
    }
    return res; // span empty: no feasible cycle within the scanned range
}

} // namespace homsolve

#include "homsolve/dp.hpp"

#include "homsolve/packing.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace homsolve {

namespace {
constexpr std::uint32_t kNull = TrieArena::kNull;
constexpr std::uint32_t kLeaf = TrieArena::kLeaf;
// below this many words the threading overhead dominates
constexpr std::uint64_t kParallelMinWords = 2048;
} // namespace

std::optional<Symbol> oplus_symbol(Symbol x, bool y, int beta) {
    Symbol bz = bar_zero(beta);
    if (x > bz)
        throw std::invalid_argument("symbol outside the barred alphabet");
    if (!y) {
        if (x == 0 || x == bz)
            return Symbol{0};
        if (x == 1 || x == 2)
            return Symbol{1};
        return static_cast<Symbol>(x - 1); // x in 3..beta
    }
    if (x == 0)
        return static_cast<Symbol>(beta);
    return std::nullopt;
}

std::string to_string(OrderingSource s) {
    switch (s) {
    case OrderingSource::exact: return "exact";
    case OrderingSource::heuristic: return "heuristic";
    case OrderingSource::user: return "user";
    }
    return "?";
}

SolverContext make_context(const Graph& g, const Graph& h, Mode mode, const SolveOptions& opts) {
    SolverContext ctx;
    ctx.g = g;
    ctx.h = h;
    ctx.mode = mode;
    Graph hbar = complement(h);
    if (opts.ordering) {
        validate_ordering(h, *opts.ordering);
        ctx.ordering = *opts.ordering;
        ctx.ordering_source = OrderingSource::user;
    } else if (!opts.force_heuristic_ordering && h.vertex_count() <= opts.exact_threshold) {
        ctx.ordering = exact_bandwidth(hbar, opts.exact_threshold).ordering;
        ctx.ordering_source = OrderingSource::exact;
    } else {
        ctx.ordering = heuristic_bandwidth(hbar).ordering;
        ctx.ordering_source = OrderingSource::heuristic;
    }
    ctx.beta = stretch(hbar, ctx.ordering) + 1;
    ctx.p_family =
        mode == Mode::hom ? enum_independent_sets(g) : enum_2_independent_sets(g);
    int m = h.vertex_count();
    ctx.adj_pos_.assign(m, std::vector<char>(m, 0));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            ctx.adj_pos_[i - 1][j - 1] = h.adjacent(ctx.ordering.perm[i - 1], ctx.ordering.perm[j - 1]);
    return ctx;
}

// ---------------------------------------------------------------------------
// bar

namespace {

struct BarTables {
    int stage;
    int beta;
    // blocks[x]: a neighbor holding symbol x forbids mapping to h_{stage+1}
    std::vector<char> blocks;
};

BarTables make_bar_tables(int stage, const SolverContext& ctx) {
    BarTables t{stage, ctx.beta, std::vector<char>(ctx.beta + 2, 0)};
    for (int x = 2; x <= ctx.beta; ++x) {
        int l = stage - ctx.beta + x;
        if (l >= 1)
            t.blocks[x] = !ctx.h_adjacent_pos(l, stage + 1);
    }
#ifndef NDEBUG
    // the unified old class (symbol 1) never blocks a placement: any h_l
    // with l <= stage-beta+1 sits more than stretch(H-bar) positions away
    // from h_{stage+1}, so they are adjacent in H
    for (int l = 1; l <= stage - ctx.beta + 1; ++l)
        assert(ctx.h_adjacent_pos(l, stage + 1));
#endif
    return t;
}

void apply_bar(Symbol* w, const Graph& g, const BarTables& t) {
    int n = g.vertex_count();
    Symbol barsym = bar_zero(t.beta);
    for (int i = 0; i < n; ++i) {
        if (w[i] != 0)
            continue;
        for (int u : g.neighbors(i + 1)) {
            Symbol x = w[u - 1];
            // a coordinate already rewritten to the bar mark was a 0
            assert(x == bar_zero(t.beta) || x <= t.beta);
            assert(!(x >= 2 && x <= t.beta) || t.stage - t.beta + x >= 1);
            if (t.blocks[x]) {
                w[i] = barsym;
                break;
            }
        }
    }
}

} // namespace

Word bar_word(const Word& a, int stage, const SolverContext& ctx) {
    if (static_cast<int>(a.size()) != ctx.g.vertex_count())
        throw std::invalid_argument("state vector length does not match |V(G)|");
    BarTables tables = make_bar_tables(stage, ctx);
    Word out = a;
    apply_bar(out.data(), ctx.g, tables);
    return out;
}

VectorSet bar_stage(const VectorSet& t, int stage, const SolverContext& ctx, int threads) {
    int n = t.word_length();
    VectorSet out(n, ctx.beta + 2);
    BarTables tables = make_bar_tables(stage, ctx);
#ifdef _OPENMP
    if (threads > 1 && t.size() >= kParallelMinWords) {
        std::vector<Symbol> flat;
        t.dump_words(flat);
        auto count = static_cast<std::int64_t>(t.size());
#pragma omp parallel for num_threads(threads) schedule(static)
        for (std::int64_t i = 0; i < count; ++i)
            apply_bar(flat.data() + i * n, ctx.g, tables);
        for (std::int64_t i = 0; i < count; ++i)
            out.insert(std::span<const Symbol>(flat.data() + i * n, n));
        return out;
    }
#else
    (void)threads;
#endif
    Word buf(n);
    t.for_each_word([&](std::span<const Symbol> w) {
        std::copy(w.begin(), w.end(), buf.begin());
        apply_bar(buf.data(), ctx.g, tables);
        out.insert(buf);
    });
    return out;
}

// ---------------------------------------------------------------------------
// oplus on sets

namespace {

constexpr int kTaskCutoffDepth = 4;

// First-symbol recursion for T_bar (+) P. Operand subtries of the barred
// set live either in the original arena or, for materialized unions, in a
// LIFO scratch arena.
class OplusKernel {
public:
    OplusKernel(const TrieArena& p, int beta) : p_(p), beta_(beta), barsym_(bar_zero(beta)) {}

    std::uint32_t run(const TrieArena& aar, std::uint32_t a, std::uint32_t b, int depth,
                      TrieArena& dst, int task_depth) {
        TrieArena scratch(beta_ + 2);
        return rec(aar, a, b, depth, dst, scratch, task_depth);
    }

private:
    std::uint32_t rec(const TrieArena& aar, std::uint32_t a, std::uint32_t b, int depth,
                      TrieArena& dst, TrieArena& scratch, int task_depth) {
        if (a == kNull || b == kNull)
            return kNull;
        if (depth == 0)
            return kLeaf;
        std::uint32_t b0 = p_.child(b, 0);
        std::uint32_t b1 = p_.child(b, 1);
        int width = beta_ + 1;
        std::uint32_t kids[256];
#ifdef _OPENMP
        if (task_depth > 0 && depth >= kTaskCutoffDepth && beta_ >= 2) {
            run_branches_as_tasks(aar, a, b0, b1, depth, dst, task_depth, kids);
            return assemble(kids, width, dst);
        }
#endif
        if (beta_ >= 2) {
            kids[0] = branch_pair(aar, aar.child(a, 0), aar.child(a, barsym_), b0, depth - 1, dst,
                                  scratch, task_depth);
            kids[1] =
                branch_pair(aar, aar.child(a, 1), aar.child(a, 2), b0, depth - 1, dst, scratch,
                            task_depth);
            for (int s = 2; s <= beta_ - 1; ++s)
                kids[s] = rec(aar, aar.child(a, s + 1), b0, depth - 1, dst, scratch, task_depth);
            kids[beta_] = rec(aar, aar.child(a, 0), b1, depth - 1, dst, scratch, task_depth);
        } else {
            // beta == 1: output symbol 1 receives both (1,0) and (0,1)
            kids[0] = branch_pair(aar, aar.child(a, 0), aar.child(a, barsym_), b0, depth - 1, dst,
                                  scratch, task_depth);
            kids[1] = branch_result_union(aar, a, b0, b1, depth - 1, dst, scratch);
        }
        return assemble(kids, width, dst);
    }

    // ((x union y) (+) B_b); the union, when both sides exist, is
    // materialized into scratch and dropped afterwards.
    std::uint32_t branch_pair(const TrieArena& aar, std::uint32_t x, std::uint32_t y,
                              std::uint32_t b, int depth, TrieArena& dst, TrieArena& scratch,
                              int task_depth) {
        if (b == kNull || (x == kNull && y == kNull))
            return kNull;
        if (x != kNull && y != kNull) {
            size_t mk = scratch.mark();
            std::uint32_t u = trie::merge(aar, x, aar, y, depth, scratch);
            std::uint32_t r = rec(scratch, u, b, depth, dst, scratch, task_depth);
            scratch.rollback(mk);
            return r;
        }
        return rec(aar, x != kNull ? x : y, b, depth, dst, scratch, task_depth);
    }

    // (A_1 (+) B_0) union (A_0 (+) B_1), materialized in a temporary arena
    // and merged into dst. Only reached for beta == 1.
    std::uint32_t branch_result_union(const TrieArena& aar, std::uint32_t a, std::uint32_t b0,
                                      std::uint32_t b1, int depth, TrieArena& dst,
                                      TrieArena& scratch) {
        TrieArena tmp(beta_ + 1);
        std::uint32_t ra = rec(aar, aar.child(a, 1), b0, depth, tmp, scratch, 0);
        std::uint32_t rb = rec(aar, aar.child(a, 0), b1, depth, tmp, scratch, 0);
        if (ra == kNull && rb == kNull)
            return kNull;
        return trie::merge(tmp, ra, tmp, rb, depth, dst);
    }

    static std::uint32_t assemble(const std::uint32_t* kids, int width, TrieArena& dst) {
        bool any = false;
        for (int s = 0; s < width; ++s)
            any = any || kids[s] != kNull;
        if (!any)
            return kNull;
        std::uint32_t id = dst.new_node();
        for (int s = 0; s < width; ++s)
            dst.set_child(id, s, kids[s]);
        return id;
    }

#ifdef _OPENMP
    // One task per output branch, each materializing its own unions and
    // building into its own arena; the subtrees are grafted back in branch
    // order, so the result is identical to the serial one.
    void run_branches_as_tasks(const TrieArena& aar, std::uint32_t a, std::uint32_t b0,
                               std::uint32_t b1, int depth, TrieArena& dst, int task_depth,
                               std::uint32_t* kids) {
        int width = beta_ + 1;
        struct BranchIn {
            std::uint32_t x = kNull; // union pair; y may be kNull
            std::uint32_t y = kNull;
            std::uint32_t b = kNull;
        };
        std::vector<BranchIn> in(width);
        in[0] = {aar.child(a, 0), aar.child(a, barsym_), b0};
        in[1] = {aar.child(a, 1), aar.child(a, 2), b0};
        for (int s = 2; s <= beta_ - 1; ++s)
            in[s] = {aar.child(a, s + 1), kNull, b0};
        in[beta_] = {aar.child(a, 0), kNull, b1};

        std::vector<TrieArena> arenas(width, TrieArena(beta_ + 1));
        std::vector<std::uint32_t> roots(width, kNull);
        for (int s = 0; s < width; ++s) {
            if ((in[s].x == kNull && in[s].y == kNull) || in[s].b == kNull)
                continue;
#pragma omp task firstprivate(s, depth, task_depth) shared(in, arenas, roots)
            {
                TrieArena local_scratch(beta_ + 2);
                roots[s] = branch_pair(aar, in[s].x, in[s].y, in[s].b, depth - 1, arenas[s],
                                       local_scratch, task_depth - 1);
            }
        }
#pragma omp taskwait
        for (int s = 0; s < width; ++s)
            kids[s] = graft(arenas[s], roots[s], dst);
    }

    static std::uint32_t graft(const TrieArena& src, std::uint32_t root, TrieArena& dst) {
        if (root == kNull || root == kLeaf)
            return root;
        auto base = static_cast<std::uint32_t>(dst.node_count());
        dst.slots.reserve(dst.slots.size() + src.slots.size());
        for (std::uint32_t v : src.slots)
            dst.slots.push_back(v == kNull || v == kLeaf ? v : v + base);
        return root + base;
    }
#endif

    const TrieArena& p_;
    int beta_;
    Symbol barsym_;
};

} // namespace

VectorSet oplus_sets(const VectorSet& abar, const VectorSet& p, int beta, int threads) {
    if (abar.word_length() != p.word_length())
        throw std::invalid_argument("oplus operands must have equal word length");
    if (abar.alphabet_size() != beta + 2 || p.alphabet_size() != 2)
        throw std::invalid_argument("oplus operand alphabets do not match beta");
    int len = abar.word_length();
    VectorSet out(len, beta + 1);
    OplusKernel kernel(p.arena(), beta);
    std::uint32_t root = kNull;
#ifdef _OPENMP
    if (threads > 1 && abar.size() >= kParallelMinWords) {
#pragma omp parallel num_threads(threads)
        {
#pragma omp single
            root = kernel.run(abar.arena(), abar.root(), p.root(), len, out.arena(), 1);
        }
    } else
#endif
    {
        root = kernel.run(abar.arena(), abar.root(), p.root(), len, out.arena(), 0);
    }
    out.finalize(root);
    return out;
}

// ---------------------------------------------------------------------------
// stage loop

namespace {

void track_trie(SolveStats* stats, const VectorSet& s) {
    if (stats)
        stats->peak_nodes = std::max(stats->peak_nodes, s.node_count());
}

} // namespace

std::vector<VectorSet> compute_stage_sets(const SolverContext& ctx, int threads,
                                          SolveStats* stats) {
    int n = ctx.g.vertex_count();
    int m = ctx.h.vertex_count();
    std::vector<VectorSet> stages;
    stages.reserve(m + 1);
    VectorSet t0(n, ctx.beta + 1);
    Word zeros(n, 0);
    t0.insert(zeros);
    if (stats)
        stats->stage_sizes.push_back(t0.size());
    track_trie(stats, t0);
    stages.push_back(std::move(t0));
    for (int k = 1; k <= m; ++k) {
        VectorSet tbar = bar_stage(stages.back(), k - 1, ctx, threads);
        if (stats) {
            stats->barred_sizes.push_back(tbar.size());
            track_trie(stats, tbar);
        }
        VectorSet tk = oplus_sets(tbar, ctx.p_family, ctx.beta, threads);
        if (stats) {
            stats->stage_sizes.push_back(tk.size());
            track_trie(stats, tk);
        }
        stages.push_back(std::move(tk));
    }
    return stages;
}

// ---------------------------------------------------------------------------
// witness reconstruction

namespace {

bool first_word_avoiding(const TrieArena& ar, std::uint32_t node, int len, int depth, Symbol skip,
                         Word& out) {
    if (node == kNull)
        return false;
    if (depth == len)
        return true;
    for (int s = 0; s < ar.alphabet; ++s) {
        if (s == skip)
            continue;
        out[depth] = static_cast<Symbol>(s);
        if (first_word_avoiding(ar, ar.child(node, s), len, depth + 1, skip, out))
            return true;
    }
    return false;
}

// preimage options (pre-bar a'_i, p_i) of one output symbol under (+)
struct PreimageOptions {
    std::pair<Symbol, Symbol> opt[2];
    int count = 0;
};

std::vector<PreimageOptions> preimage_table(int beta) {
    std::vector<PreimageOptions> table(beta + 1);
    table[0] = {{{0, 0}}, 1};
    if (beta == 1) {
        table[1] = {{{1, 0}, {0, 1}}, 2};
    } else {
        table[1] = {{{1, 0}, {2, 0}}, 2};
        for (int s = 2; s <= beta - 1; ++s)
            table[s] = {{{static_cast<Symbol>(s + 1), 0}}, 1};
        table[beta] = {{{0, 1}}, 1};
    }
    return table;
}

// Joint depth-first search over T[k-1] and P for a pair whose barred
// combination reproduces the target vector. The per-coordinate options
// restrict the walk; the bar condition is global, so candidates are
// verified before acceptance.
struct PreimageSearch {
    const SolverContext& ctx;
    const Word& target;
    int stage; // k-1
    const VectorSet& tprev;
    const std::vector<PreimageOptions>& table;
    int n;
    Word aprime, pbits;

    bool dfs(int i, std::uint32_t tn, std::uint32_t pn) {
        if (i == n)
            return verify();
        const PreimageOptions& po = table[target[i]];
        for (int oi = 0; oi < po.count; ++oi) {
            auto [x, y] = po.opt[oi];
            std::uint32_t tc = tprev.arena().child(tn, x);
            std::uint32_t pc = ctx.p_family.arena().child(pn, y);
            if (tc == kNull || pc == kNull)
                continue;
            aprime[i] = x;
            pbits[i] = y;
            if (dfs(i + 1, tc, pc))
                return true;
        }
        return false;
    }

    bool verify() const {
        Word barred = bar_word(aprime, stage, ctx);
        for (int i = 0; i < n; ++i) {
            auto r = oplus_symbol(barred[i], pbits[i] != 0, ctx.beta);
            if (!r || *r != target[i])
                return false;
        }
        return true;
    }
};

} // namespace

Mapping reconstruct_witness(const SolverContext& ctx, const std::vector<VectorSet>& stages) {
    int n = ctx.g.vertex_count();
    int m = ctx.h.vertex_count();
    if (static_cast<int>(stages.size()) != m + 1)
        throw std::invalid_argument("reconstruct_witness needs all m+1 stage sets");
    Word a(n);
    if (!first_word_avoiding(stages[m].arena(), stages[m].root(), n, 0, 0, a))
        throw std::logic_error("reconstruct_witness called on a no instance");
    Mapping phi(n, 0);
    auto table = preimage_table(ctx.beta);
    for (int k = m; k >= 1; --k) {
        PreimageSearch search{ctx, a, k - 1, stages[k - 1], table, n, Word(n), Word(n)};
        if (stages[k - 1].root() == kNull ||
            !search.dfs(0, stages[k - 1].root(), ctx.p_family.root()))
            throw std::logic_error("no stage preimage found; stage sets are inconsistent");
        for (int i = 0; i < n; ++i)
            if (search.pbits[i])
                phi[i] = ctx.ordering.perm[k - 1];
        a = search.aprime;
    }
    for (int i = 0; i < n; ++i)
        if (a[i] != 0 || phi[i] == 0)
            throw std::logic_error("witness reconstruction left an unmapped vertex");
    return phi;
}

// ---------------------------------------------------------------------------
// solve

SolveResult solve(const Graph& g, const Graph& h, Mode mode, const SolveOptions& opts) {
    auto t_start = std::chrono::steady_clock::now();
    SolverContext ctx = make_context(g, h, mode, opts);
    SolveResult res;
    SolveStats& st = res.stats;
    st.beta = ctx.beta;
    st.ordering = ctx.ordering;
    st.ordering_source = ctx.ordering_source;
    st.p_size = ctx.p_family.size();
    st.peak_nodes = ctx.p_family.node_count();

    if (opts.want_witness) {
        auto stages = compute_stage_sets(ctx, opts.threads, &st);
        res.yes = stages.back().has_word_avoiding(0);
        if (res.yes) {
            Mapping w = reconstruct_witness(ctx, stages);
            bool ok = mode == Mode::hom ? check_hom(g, h, w) : check_lihom(g, h, w);
            if (!ok)
                throw std::logic_error("reconstructed witness failed verification");
            res.witness = std::move(w);
        }
    } else {
        int n = g.vertex_count();
        int m = h.vertex_count();
        VectorSet t(n, ctx.beta + 1);
        Word zeros(n, 0);
        t.insert(zeros);
        st.stage_sizes.push_back(t.size());
        track_trie(&st, t);
        for (int k = 1; k <= m && !t.empty(); ++k) {
            VectorSet tbar = bar_stage(t, k - 1, ctx, opts.threads);
            st.barred_sizes.push_back(tbar.size());
            track_trie(&st, tbar);
            t = oplus_sets(tbar, ctx.p_family, ctx.beta, opts.threads);
            st.stage_sizes.push_back(t.size());
            track_trie(&st, t);
        }
        res.yes = t.has_word_avoiding(0);
    }
    st.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                           t_start)
                     .count();
    return res;
}

SolveResult solve_hom(const Graph& g, const Graph& h, const SolveOptions& opts) {
    return solve(g, h, Mode::hom, opts);
}

SolveResult solve_lihom(const Graph& g, const Graph& h, const SolveOptions& opts) {
    return solve(g, h, Mode::locally_injective, opts);
}

} // namespace homsolve

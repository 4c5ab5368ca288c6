#include "homsolve/packing.hpp"

namespace homsolve {

namespace {

constexpr std::uint32_t kNull = TrieArena::kNull;
constexpr std::uint32_t kLeaf = TrieArena::kLeaf;

// conflicts[i]: indices j < i whose vertex cannot share a set with v_{i+1}.
struct PackingBuilder {
    const std::vector<std::vector<int>>& conflicts;
    int n;
    TrieArena& out;
    std::uint64_t words = 0;
    std::vector<char> chosen;

    std::uint32_t build(int i) {
        if (i == n) {
            ++words;
            return kLeaf;
        }
        std::uint32_t kid0, kid1 = kNull;
        chosen[i] = 0;
        kid0 = build(i + 1);
        bool allowed = true;
        for (int j : conflicts[i])
            if (chosen[j]) {
                allowed = false;
                break;
            }
        if (allowed) {
            chosen[i] = 1;
            kid1 = build(i + 1);
            chosen[i] = 0;
        }
        std::uint32_t id = out.new_node();
        out.set_child(id, 0, kid0);
        out.set_child(id, 1, kid1);
        return id;
    }
};

VectorSet build_packing_trie(int n, const std::vector<std::vector<int>>& conflicts) {
    VectorSet set(n, 2);
    PackingBuilder builder{conflicts, n, set.arena(), 0, std::vector<char>(n, 0)};
    set.set_root(builder.build(0));
    set.set_word_count(builder.words);
    return set;
}

} // namespace

VectorSet enum_independent_sets(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> conflicts(n);
    for (int v = 1; v <= n; ++v)
        for (int u : g.neighbors(v))
            if (u < v)
                conflicts[v - 1].push_back(u - 1);
    return build_packing_trie(n, conflicts);
}

VectorSet enum_2_independent_sets(const Graph& g) {
    int n = g.vertex_count();
    auto dist = all_pairs_distances(g);
    std::vector<std::vector<int>> conflicts(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (dist[i][j] >= 1 && dist[i][j] <= 2)
                conflicts[i].push_back(j);
    return build_packing_trie(n, conflicts);
}

} // namespace homsolve

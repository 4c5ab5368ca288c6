#ifndef HOMSOLVE_VECTOR_SET_HPP
#define HOMSOLVE_VECTOR_SET_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace homsolve {

using Symbol = std::uint8_t;
using Word = std::vector<Symbol>;

// Flat node pool for fixed-depth tries. Node i owns the slot range
// [i*alphabet, (i+1)*alphabet); each slot holds a child node id, kNull
// (no child) or kLeaf (end of a word). Ids stay valid across growth.
struct TrieArena {
    static constexpr std::uint32_t kNull = 0xFFFFFFFFu;
    static constexpr std::uint32_t kLeaf = 0xFFFFFFFEu;

    int alphabet = 1;
    std::vector<std::uint32_t> slots;

    TrieArena() = default;
    explicit TrieArena(int alphabet_size) : alphabet(alphabet_size) {}

    std::uint32_t new_node() {
        std::uint32_t id = static_cast<std::uint32_t>(slots.size() / alphabet);
        slots.resize(slots.size() + alphabet, kNull);
        return id;
    }
    std::uint32_t child(std::uint32_t node, int s) const {
        return slots[static_cast<size_t>(node) * alphabet + s];
    }
    void set_child(std::uint32_t node, int s, std::uint32_t c) {
        slots[static_cast<size_t>(node) * alphabet + s] = c;
    }
    std::uint64_t node_count() const { return alphabet ? slots.size() / alphabet : 0; }

    // LIFO scratch management: nodes allocated after mark() can be dropped.
    size_t mark() const { return slots.size(); }
    void rollback(size_t m) { slots.resize(m); }
};

namespace trie {

// Null-safe primitives shared by VectorSet and the solver kernels. All
// return a subtrie root in dst (possibly kNull/kLeaf); depth is the number
// of symbol levels below the given roots.
std::uint32_t clone(const TrieArena& src, std::uint32_t root, int depth, TrieArena& dst);
std::uint32_t merge(const TrieArena& aa, std::uint32_t a, const TrieArena& ba, std::uint32_t b,
                    int depth, TrieArena& dst);
std::uint64_t count_words(const TrieArena& ar, std::uint32_t root, int depth);
bool equal(const TrieArena& aa, std::uint32_t a, const TrieArena& ba, std::uint32_t b, int depth);

} // namespace trie

// A set of equal-length words over {0..alphabet-1}, stored as a
// fixed-depth trie. The children of the root are the first-symbol
// branches A_x. Structure is canonical for a given word set, so two
// equal sets always have identical tries.
class VectorSet {
public:
    VectorSet() : VectorSet(0, 1) {}
    VectorSet(int word_len, int alphabet_size);

    int word_length() const { return len_; }
    int alphabet_size() const { return arena_.alphabet; }
    std::uint64_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    std::uint64_t node_count() const { return arena_.node_count(); }

    void insert(std::span<const Symbol> word);
    bool contains(std::span<const Symbol> word) const;

    // The set {w : x.w is a member} as a trie of length len-1.
    VectorSet branch(int symbol) const;

    static VectorSet set_union(const VectorSet& a, const VectorSet& b);

    // Visits members in lexicographic order.
    template <class F>
    void for_each_word(F&& fn) const {
        Word scratch(len_);
        walk(root_, 0, scratch, fn);
    }
    std::vector<Word> members() const;

    // Members concatenated into one buffer with stride word_length().
    void dump_words(std::vector<Symbol>& flat) const;

    // True iff some member avoids the given symbol at every coordinate.
    bool has_word_avoiding(Symbol s) const;

    // Same word set; word length and alphabet must agree.
    bool operator==(const VectorSet& other) const;

    // Low-level access for solver kernels building tries node by node.
    TrieArena& arena() { return arena_; }
    const TrieArena& arena() const { return arena_; }
    std::uint32_t root() const { return root_; }
    void set_root(std::uint32_t id) { root_ = id; }
    void set_word_count(std::uint64_t c) { size_ = c; }
    // set_root + recount size by traversal
    void finalize(std::uint32_t id) {
        root_ = id;
        size_ = trie::count_words(arena_, root_, len_);
    }

private:
    template <class F>
    void walk(std::uint32_t node, int depth, Word& scratch, F& fn) const {
        if (node == TrieArena::kNull)
            return;
        if (depth == len_) {
            fn(std::span<const Symbol>(scratch.data(), len_));
            return;
        }
        for (int s = 0; s < arena_.alphabet; ++s) {
            std::uint32_t c = arena_.child(node, s);
            if (c == TrieArena::kNull)
                continue;
            scratch[depth] = static_cast<Symbol>(s);
            walk(c, depth + 1, scratch, fn);
        }
    }

    int len_ = 0;
    TrieArena arena_;
    std::uint32_t root_ = TrieArena::kNull;
    std::uint64_t size_ = 0;
};

} // namespace homsolve

#endif

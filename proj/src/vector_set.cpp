#include "homsolve/vector_set.hpp"

#include <stdexcept>

namespace homsolve {

namespace {
constexpr std::uint32_t kNull = TrieArena::kNull;
constexpr std::uint32_t kLeaf = TrieArena::kLeaf;
} // namespace

namespace trie {

std::uint32_t clone(const TrieArena& src, std::uint32_t root, int depth, TrieArena& dst) {
    if (root == kNull)
        return kNull;
    if (depth == 0)
        return kLeaf;
    std::uint32_t kids[256];
    for (int s = 0; s < src.alphabet; ++s)
        kids[s] = clone(src, src.child(root, s), depth - 1, dst);
    std::uint32_t id = dst.new_node();
    for (int s = 0; s < src.alphabet; ++s)
        dst.set_child(id, s, kids[s]);
    return id;
}

std::uint32_t merge(const TrieArena& aa, std::uint32_t a, const TrieArena& ba, std::uint32_t b,
                    int depth, TrieArena& dst) {
    if (a == kNull)
        return clone(ba, b, depth, dst);
    if (b == kNull)
        return clone(aa, a, depth, dst);
    if (depth == 0)
        return kLeaf;
    std::uint32_t kids[256];
    for (int s = 0; s < dst.alphabet; ++s)
        kids[s] = merge(aa, aa.child(a, s), ba, ba.child(b, s), depth - 1, dst);
    std::uint32_t id = dst.new_node();
    for (int s = 0; s < dst.alphabet; ++s)
        dst.set_child(id, s, kids[s]);
    return id;
}

std::uint64_t count_words(const TrieArena& ar, std::uint32_t root, int depth) {
    if (root == kNull)
        return 0;
    if (depth == 0)
        return 1;
    std::uint64_t total = 0;
    for (int s = 0; s < ar.alphabet; ++s)
        total += count_words(ar, ar.child(root, s), depth - 1);
    return total;
}

bool equal(const TrieArena& aa, std::uint32_t a, const TrieArena& ba, std::uint32_t b, int depth) {
    if ((a == kNull) != (b == kNull))
        return false;
    if (a == kNull || depth == 0)
        return true;
    for (int s = 0; s < aa.alphabet; ++s)
        if (!equal(aa, aa.child(a, s), ba, ba.child(b, s), depth - 1))
            return false;
    return true;
}

} // namespace trie

VectorSet::VectorSet(int word_len, int alphabet_size) : len_(word_len), arena_(alphabet_size) {
    if (word_len < 0 || alphabet_size < 1 || alphabet_size > 256)
        throw std::invalid_argument("bad VectorSet dimensions");
}

void VectorSet::insert(std::span<const Symbol> word) {
    if (static_cast<int>(word.size()) != len_)
        throw std::invalid_argument("word length mismatch");
    if (len_ == 0) {
        if (root_ == kNull) {
            root_ = kLeaf;
            size_ = 1;
        }
        return;
    }
    if (root_ == kNull)
        root_ = arena_.new_node();
    std::uint32_t cur = root_;
    for (int d = 0; d + 1 < len_; ++d) {
        Symbol s = word[d];
        std::uint32_t next = arena_.child(cur, s);
        if (next == kNull) {
            next = arena_.new_node();
            arena_.set_child(cur, s, next);
        }
        cur = next;
    }
    if (arena_.child(cur, word[len_ - 1]) == kNull) {
        arena_.set_child(cur, word[len_ - 1], kLeaf);
        ++size_;
    }
}

bool VectorSet::contains(std::span<const Symbol> word) const {
    if (static_cast<int>(word.size()) != len_)
        throw std::invalid_argument("word length mismatch");
    std::uint32_t cur = root_;
    for (int d = 0; d < len_; ++d) {
        if (cur == kNull)
            return false;
        cur = arena_.child(cur, word[d]);
    }
    return cur != kNull;
}

VectorSet VectorSet::branch(int symbol) const {
    if (len_ == 0)
        throw std::invalid_argument("branch on a set of empty words");
    if (symbol < 0 || symbol >= arena_.alphabet)
        throw std::invalid_argument("symbol outside alphabet");
    VectorSet out(len_ - 1, arena_.alphabet);
    std::uint32_t sub = root_ == kNull ? kNull : arena_.child(root_, symbol);
    out.finalize(trie::clone(arena_, sub, len_ - 1, out.arena_));
    return out;
}

VectorSet VectorSet::set_union(const VectorSet& a, const VectorSet& b) {
    if (a.len_ != b.len_ || a.arena_.alphabet != b.arena_.alphabet)
        throw std::invalid_argument("set_union operands must share length and alphabet");
    VectorSet out(a.len_, a.arena_.alphabet);
    out.finalize(trie::merge(a.arena_, a.root_, b.arena_, b.root_, a.len_, out.arena_));
    return out;
}

std::vector<Word> VectorSet::members() const {
    std::vector<Word> out;
    out.reserve(size_);
    for_each_word([&](std::span<const Symbol> w) { out.emplace_back(w.begin(), w.end()); });
    return out;
}

void VectorSet::dump_words(std::vector<Symbol>& flat) const {
    flat.clear();
    flat.reserve(size_ * len_);
    for_each_word([&](std::span<const Symbol> w) { flat.insert(flat.end(), w.begin(), w.end()); });
}

bool VectorSet::has_word_avoiding(Symbol s) const {
    struct Rec {
        const TrieArena& ar;
        int len;
        Symbol skip;
        bool visit(std::uint32_t node, int depth) const {
            if (node == kNull)
                return false;
            if (depth == len)
                return true;
            for (int x = 0; x < ar.alphabet; ++x)
                if (x != skip && visit(ar.child(node, x), depth + 1))
                    return true;
            return false;
        }
    };
    return Rec{arena_, len_, s}.visit(root_, 0);
}

bool VectorSet::operator==(const VectorSet& other) const {
    if (len_ != other.len_ || arena_.alphabet != other.arena_.alphabet || size_ != other.size_)
        return false;
    return trie::equal(arena_, root_, other.arena_, other.root_, len_);
}

} // namespace homsolve

#ifndef CUBEKAPPA_INTERNAL_WORDSET_HPP
#define CUBEKAPPA_INTERNAL_WORDSET_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "cubekappa/graph.hpp"

namespace cubekappa::detail {

/// Fixed-width bitset sized at compile time; the hot enumeration loops run on
/// these instead of the heap-backed VertexSet.
template <int W>
struct WordSet {
    std::array<std::uint64_t, W> w{};

    void set(int i) { w[static_cast<std::size_t>(i) >> 6] |= std::uint64_t(1) << (i & 63); }
    void clear(int i) { w[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(int i) const {
        return (w[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1;
    }

    bool any() const {
        for (int i = 0; i < W; ++i)
            if (w[static_cast<std::size_t>(i)]) return true;
        return false;
    }

    int popcount() const {
        int c = 0;
        for (int i = 0; i < W; ++i) c += std::popcount(w[static_cast<std::size_t>(i)]);
        return c;
    }

    int first() const {
        for (int i = 0; i < W; ++i)
            if (w[static_cast<std::size_t>(i)])
                return i * 64 + std::countr_zero(w[static_cast<std::size_t>(i)]);
        return -1;
    }

    WordSet& operator|=(const WordSet& o) {
        for (int i = 0; i < W; ++i) w[static_cast<std::size_t>(i)] |= o.w[static_cast<std::size_t>(i)];
        return *this;
    }
    WordSet& operator&=(const WordSet& o) {
        for (int i = 0; i < W; ++i) w[static_cast<std::size_t>(i)] &= o.w[static_cast<std::size_t>(i)];
        return *this;
    }
    WordSet& andnot(const WordSet& o) {
        for (int i = 0; i < W; ++i) w[static_cast<std::size_t>(i)] &= ~o.w[static_cast<std::size_t>(i)];
        return *this;
    }

    bool operator==(const WordSet& o) const { return w == o.w; }

    bool intersects(const WordSet& o) const {
        for (int i = 0; i < W; ++i)
            if (w[static_cast<std::size_t>(i)] & o.w[static_cast<std::size_t>(i)]) return true;
        return false;
    }

    template <class F>
    void for_each(F&& f) const {
        for (int i = 0; i < W; ++i) {
            std::uint64_t x = w[static_cast<std::size_t>(i)];
            while (x) {
                f(i * 64 + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }

    /// Lexicographic comparison of the ascending member sequences. A set bit
    /// at a lower index wins, so the set whose lowest differing bit belongs
    /// to it compares smaller.
    static int compare_lex(const WordSet& a, const WordSet& b) {
        for (int i = 0; i < W; ++i) {
            std::uint64_t diff = a.w[static_cast<std::size_t>(i)] ^ b.w[static_cast<std::size_t>(i)];
            if (diff) {
                std::uint64_t low = diff & ~(diff - 1);
                return (a.w[static_cast<std::size_t>(i)] & low) ? -1 : 1;
            }
        }
        return 0;
    }
};

template <int W>
WordSet<W> to_wordset(const VertexSet& s) {
    WordSet<W> out{};
    for (std::size_t i = 0; i < static_cast<std::size_t>(W); ++i) out.w[i] = s.word(i);
    return out;
}

template <int W>
VertexSet to_vertex_set(const WordSet<W>& m, int universe) {
    VertexSet out(universe);
    for (std::size_t i = 0; i < out.word_count() && i < static_cast<std::size_t>(W); ++i)
        out.set_word(i, m.w[i]);
    return out;
}

template <int W>
std::vector<WordSet<W>> adjacency_words(const Graph& g) {
    std::vector<WordSet<W>> adj(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        adj[static_cast<std::size_t>(v)] = to_wordset<W>(g.neighbors(v));
    return adj;
}

template <int W>
WordSet<W> full_set(int universe) {
    WordSet<W> out{};
    for (int v = 0; v < universe; ++v) out.set(v);
    return out;
}

template <int W>
WordSet<W> bfs_component(const std::vector<WordSet<W>>& adj, const WordSet<W>& alive,
                         int start) {
    WordSet<W> comp{};
    comp.set(start);
    WordSet<W> frontier = comp;
    while (frontier.any()) {
        WordSet<W> next{};
        frontier.for_each([&](int v) { next |= adj[static_cast<std::size_t>(v)]; });
        next &= alive;
        next.andnot(comp);
        comp |= next;
        frontier = next;
    }
    return comp;
}

template <int W>
bool is_connected_mask(const std::vector<WordSet<W>>& adj, const WordSet<W>& alive) {
    int start = alive.first();
    if (start < 0) return true;
    return bfs_component(adj, alive, start) == alive;
}

/// True iff removing `removed` leaves >= 2 components, all of order >= h+1.
template <int W>
bool is_h_extra_cut_mask(const std::vector<WordSet<W>>& adj, const WordSet<W>& all,
                         const WordSet<W>& removed, int h) {
    WordSet<W> alive = all;
    alive.andnot(removed);
    int alive_count = alive.popcount();
    if (alive_count < 2 * (h + 1)) return false;

    WordSet<W> comp = bfs_component(adj, alive, alive.first());
    int comp_count = comp.popcount();
    if (comp_count == alive_count) return false;  // still connected
    if (comp_count < h + 1) return false;

    WordSet<W> rest = alive;
    rest.andnot(comp);
    int rest_count = alive_count - comp_count;
    while (true) {
        if (rest_count < h + 1) return false;
        comp = bfs_component(adj, rest, rest.first());
        comp_count = comp.popcount();
        if (comp_count < h + 1) return false;
        if (comp_count == rest_count) return true;
        rest.andnot(comp);
        rest_count -= comp_count;
    }
}

} // namespace cubekappa::detail

#endif

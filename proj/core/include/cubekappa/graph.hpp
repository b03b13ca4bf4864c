#ifndef CUBEKAPPA_GRAPH_HPP
#define CUBEKAPPA_GRAPH_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace cubekappa {

/// Dense set of vertex indices over a fixed universe [0, universe_size).
/// Backed by 64-bit words; iteration order is always ascending index.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe_size);
    VertexSet(int universe_size, std::initializer_list<int> members);

    int universe_size() const { return universe_; }
    int count() const;
    bool empty() const;
    bool contains(int v) const;

    void insert(int v);
    void erase(int v);
    void clear();

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet& other) const;
    bool operator!=(const VertexSet& other) const { return !(*this == other); }

    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;

    /// Smallest member, or -1 when empty.
    int first() const;
    /// Smallest member strictly greater than v, or -1 when none.
    int next_after(int v) const;

    std::vector<int> to_vector() const;

    /// Ascending-index comparison: lexicographic on the member sequences.
    /// Empty compares before non-empty; used for deterministic tie-breaks.
    static int compare_lex(const VertexSet& a, const VertexSet& b);

    std::uint64_t word(std::size_t i) const { return i < words_.size() ? words_[i] : 0; }
    std::size_t word_count() const { return words_.size(); }
    void set_word(std::size_t i, std::uint64_t w);

private:
    int universe_ = 0;
    std::vector<std::uint64_t> words_;
    void check_index(int v) const;
};

/// Immutable undirected simple graph over dense vertex indices.
/// Adjacency rows are VertexSets; symmetry and irreflexivity are enforced
/// at construction.
class Graph {
public:
    class Builder {
    public:
        explicit Builder(int vertex_count);
        Builder& add_edge(int u, int v);
        Graph build();

    private:
        int vertex_count_;
        std::vector<VertexSet> adjacency_;
    };

    Graph() = default;

    static Graph from_edges(int vertex_count,
                            const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return vertex_count_; }
    const VertexSet& neighbors(int v) const;
    bool adjacent(int u, int v) const;
    int degree(int v) const;
    int min_degree() const;
    long long edge_count() const;
    bool is_complete() const;

    std::vector<std::pair<int, int>> edges() const;

    /// Full-universe set {0, ..., vertex_count-1}.
    VertexSet all_vertices() const;

private:
    int vertex_count_ = 0;
    std::vector<VertexSet> adjacency_;
    explicit Graph(int vertex_count, std::vector<VertexSet> adjacency);
};

enum class ShapeTag {
    Singleton,
    Edge,
    Path2,   // path on 3 vertices
    Cycle3,
    Path3,   // path on 4 vertices
    Cycle4,
    Other,
};

/// Isomorphism class of a small connected induced subgraph. `order` is the
/// vertex count; it is the only payload for Other.
struct ComponentShape {
    ShapeTag tag = ShapeTag::Other;
    int order = 0;

    bool operator==(const ComponentShape& o) const {
        return tag == o.tag && order == o.order;
    }
};

std::string shape_name(const ComponentShape& shape);

/// Connected components of g with `removed` deleted, sorted by
/// (size descending, smallest member ascending).
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed);

/// Open neighborhood N(s) = (union of adj(u) for u in s) - s, or the closed
/// form N[s] = N(s) | s.
VertexSet neighborhood_of_set(const Graph& g, const VertexSet& s, bool closed = false);

/// Shape of the induced subgraph g[c]. Requires c connected and non-empty;
/// total over orders 1-4 via degree-sequence and edge-count discrimination,
/// Other(order) beyond.
ComponentShape classify_small_component(const Graph& g, const VertexSet& c);

/// True iff g - s has at least two components and every component has
/// order >= h + 1.
bool is_h_extra_cut(const Graph& g, const VertexSet& s, int h);

} // namespace cubekappa

#endif

#include "cubekappa/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cubekappa {

namespace {
constexpr std::uint64_t kOne = 1;

std::size_t words_for(int universe) {
    return static_cast<std::size_t>((universe + 63) / 64);
}
} // namespace

VertexSet::VertexSet(int universe_size)
    : universe_(universe_size), words_(words_for(universe_size), 0) {
    if (universe_size < 0) throw std::invalid_argument("negative universe size");
}

VertexSet::VertexSet(int universe_size, std::initializer_list<int> members)
    : VertexSet(universe_size) {
    for (int v : members) insert(v);
}

void VertexSet::check_index(int v) const {
    if (v < 0 || v >= universe_)
        throw std::out_of_range("vertex index outside universe");
}

int VertexSet::count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
}

bool VertexSet::empty() const {
    for (std::uint64_t w : words_)
        if (w) return false;
    return true;
}

bool VertexSet::contains(int v) const {
    if (v < 0 || v >= universe_) return false;
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1;
}

void VertexSet::insert(int v) {
    check_index(v);
    words_[static_cast<std::size_t>(v) >> 6] |= kOne << (v & 63);
}

void VertexSet::erase(int v) {
    check_index(v);
    words_[static_cast<std::size_t>(v) >> 6] &= ~(kOne << (v & 63));
}

void VertexSet::clear() {
    std::fill(words_.begin(), words_.end(), 0);
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    if (universe_ != other.universe_) throw std::invalid_argument("universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    if (universe_ != other.universe_) throw std::invalid_argument("universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    if (universe_ != other.universe_) throw std::invalid_argument("universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

bool VertexSet::operator==(const VertexSet& other) const {
    return universe_ == other.universe_ && words_ == other.words_;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    if (universe_ != other.universe_) throw std::invalid_argument("universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
    if (universe_ != other.universe_) throw std::invalid_argument("universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

int VertexSet::first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
    return -1;
}

int VertexSet::next_after(int v) const {
    int start = v + 1;
    if (start >= universe_) return -1;
    std::size_t wi = static_cast<std::size_t>(start) >> 6;
    std::uint64_t w = words_[wi] >> (start & 63);
    if (w) return start + std::countr_zero(w);
    for (++wi; wi < words_.size(); ++wi)
        if (words_[wi]) return static_cast<int>(wi * 64 + std::countr_zero(words_[wi]));
    return -1;
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int v = first(); v >= 0; v = next_after(v)) out.push_back(v);
    return out;
}

int VertexSet::compare_lex(const VertexSet& a, const VertexSet& b) {
    int va = a.first();
    int vb = b.first();
    while (va >= 0 && vb >= 0) {
        if (va != vb) return va < vb ? -1 : 1;
        va = a.next_after(va);
        vb = b.next_after(vb);
    }
    if (va == vb) return 0;
    return va < 0 ? -1 : 1;
}

void VertexSet::set_word(std::size_t i, std::uint64_t w) {
    if (i >= words_.size()) throw std::out_of_range("word index");
    words_[i] = w;
    // mask tail bits beyond the universe
    if (i + 1 == words_.size() && (universe_ & 63))
        words_[i] &= (kOne << (universe_ & 63)) - 1;
}

Graph::Builder::Builder(int vertex_count) : vertex_count_(vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    adjacency_.assign(static_cast<std::size_t>(vertex_count), VertexSet(vertex_count));
}

Graph::Builder& Graph::Builder::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_)
        throw std::out_of_range("edge endpoint outside universe");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adjacency_[static_cast<std::size_t>(u)].insert(v);
    adjacency_[static_cast<std::size_t>(v)].insert(u);
    return *this;
}

Graph Graph::Builder::build() {
    return Graph(vertex_count_, std::move(adjacency_));
}

Graph::Graph(int vertex_count, std::vector<VertexSet> adjacency)
    : vertex_count_(vertex_count), adjacency_(std::move(adjacency)) {}

Graph Graph::from_edges(int vertex_count,
                        const std::vector<std::pair<int, int>>& edges) {
    Builder b(vertex_count);
    for (const auto& [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

const VertexSet& Graph::neighbors(int v) const {
    if (v < 0 || v >= vertex_count_) throw std::out_of_range("vertex index");
    return adjacency_[static_cast<std::size_t>(v)];
}

bool Graph::adjacent(int u, int v) const {
    return neighbors(u).contains(v);
}

int Graph::degree(int v) const {
    return neighbors(v).count();
}

int Graph::min_degree() const {
    if (vertex_count_ == 0) return 0;
    int d = degree(0);
    for (int v = 1; v < vertex_count_; ++v) d = std::min(d, degree(v));
    return d;
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (int v = 0; v < vertex_count_; ++v) twice += degree(v);
    return twice / 2;
}

bool Graph::is_complete() const {
    for (int v = 0; v < vertex_count_; ++v)
        if (degree(v) != vertex_count_ - 1) return false;
    return true;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (int u = 0; u < vertex_count_; ++u)
        for (int v = neighbors(u).next_after(u); v >= 0; v = neighbors(u).next_after(v))
            out.emplace_back(u, v);
    return out;
}

VertexSet Graph::all_vertices() const {
    VertexSet s(vertex_count_);
    for (std::size_t i = 0; i < s.word_count(); ++i) s.set_word(i, ~std::uint64_t(0));
    return s;
}

std::string shape_name(const ComponentShape& shape) {
    switch (shape.tag) {
        case ShapeTag::Singleton: return "singleton";
        case ShapeTag::Edge: return "edge";
        case ShapeTag::Path2: return "path2";
        case ShapeTag::Cycle3: return "cycle3";
        case ShapeTag::Path3: return "path3";
        case ShapeTag::Cycle4: return "cycle4";
        case ShapeTag::Other: break;
    }
    return "other(" + std::to_string(shape.order) + ")";
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
    if (removed.universe_size() != g.vertex_count())
        throw std::invalid_argument("removed set universe mismatch");
    VertexSet alive = g.all_vertices() - removed;
    std::vector<VertexSet> out;
    while (!alive.empty()) {
        int start = alive.first();
        VertexSet comp(g.vertex_count());
        comp.insert(start);
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next(g.vertex_count());
            for (int v = frontier.first(); v >= 0; v = frontier.next_after(v))
                next |= g.neighbors(v);
            next &= alive;
            next -= comp;
            comp |= next;
            frontier = std::move(next);
        }
        alive -= comp;
        out.push_back(std::move(comp));
    }
    std::stable_sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
        int ca = a.count(), cb = b.count();
        if (ca != cb) return ca > cb;
        return a.first() < b.first();
    });
    return out;
}

VertexSet neighborhood_of_set(const Graph& g, const VertexSet& s, bool closed) {
    if (s.universe_size() != g.vertex_count())
        throw std::invalid_argument("set universe mismatch");
    VertexSet nb(g.vertex_count());
    for (int v = s.first(); v >= 0; v = s.next_after(v)) nb |= g.neighbors(v);
    if (!closed) nb -= s;
    else nb |= s;
    return nb;
}

ComponentShape classify_small_component(const Graph& g, const VertexSet& c) {
    int order = c.count();
    if (order == 0) throw std::invalid_argument("empty component");
    if (components(g, g.all_vertices() - c).size() != 1)
        throw std::invalid_argument("component is not connected");

    if (order == 1) return {ShapeTag::Singleton, 1};
    if (order == 2) return {ShapeTag::Edge, 2};

    auto verts = c.to_vector();
    int edges_twice = 0;
    int max_deg = 0;
    for (int u : verts) {
        int d = (g.neighbors(u) & c).count();
        edges_twice += d;
        max_deg = std::max(max_deg, d);
    }
    int edges = edges_twice / 2;

    if (order == 3) return {edges == 2 ? ShapeTag::Path2 : ShapeTag::Cycle3, 3};
    if (order == 4) {
        if (edges == 3 && max_deg == 2) return {ShapeTag::Path3, 4};
        if (edges == 4 && max_deg == 2) return {ShapeTag::Cycle4, 4};
        return {ShapeTag::Other, 4};
    }
    return {ShapeTag::Other, order};
}

bool is_h_extra_cut(const Graph& g, const VertexSet& s, int h) {
    if (h < 0) throw std::invalid_argument("negative h");
    auto comps = components(g, s);
    if (comps.size() < 2) return false;
    // sorted size-descending, so only the last can fail first
    return comps.back().count() >= h + 1;
}

} // namespace cubekappa

#include "doctest.h"

#include <set>

#include "cubekappa/cube.hpp"
#include "cubekappa/graph.hpp"
#include "cubekappa/rng.hpp"
#include "oracle.hpp"

using namespace cubekappa;

namespace {

VertexSet set_of(int universe, std::initializer_list<int> members) {
    return VertexSet(universe, members);
}

std::set<int> as_std_set(const VertexSet& s) {
    auto v = s.to_vector();
    return {v.begin(), v.end()};
}

Graph random_connected_graph(std::uint64_t seed, int n, int extra_edges) {
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(v, static_cast<int>(rng.below(static_cast<std::uint64_t>(v))));
    for (int i = 0; i < extra_edges; ++i) {
        int u = rng.int_in(0, n - 1);
        int v = rng.int_in(0, n - 1);
        if (u != v) edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    return Graph::from_edges(n, edges);
}

oracle::AdjList to_adjlist(const Graph& g) {
    oracle::AdjList adj(static_cast<std::size_t>(g.vertex_count()));
    for (const auto& [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    return adj;
}

} // namespace

TEST_CASE("vertex sets iterate ascending and compare lexicographically") {
    VertexSet s = set_of(100, {70, 3, 64, 5});
    CHECK(s.to_vector() == std::vector<int>{3, 5, 64, 70});
    CHECK(s.count() == 4);
    CHECK(s.first() == 3);
    CHECK(s.next_after(5) == 64);
    CHECK(s.next_after(70) == -1);

    CHECK(VertexSet::compare_lex(set_of(10, {0, 5}), set_of(10, {1, 2})) < 0);
    CHECK(VertexSet::compare_lex(set_of(10, {1, 2}), set_of(10, {1, 2, 3})) < 0);
    CHECK(VertexSet::compare_lex(set_of(10, {4}), set_of(10, {4})) == 0);
}

TEST_CASE("graph builder rejects bad edges and enforces invariants") {
    Graph::Builder b(4);
    CHECK_THROWS(b.add_edge(0, 0));
    CHECK_THROWS(b.add_edge(0, 4));
    Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {1, 2}});
    CHECK(g.edge_count() == 2);  // duplicate collapsed
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
}

TEST_CASE("components of the 3x3 torus") {
    auto cube = build_kary_cube(3, 2);
    const Graph& g = cube.graph;

    auto whole = components(g, VertexSet(9));
    REQUIRE(whole.size() == 1);
    CHECK(whole[0].count() == 9);

    // removing the neighborhood of the 00-01 edge splits the rest two-by-two
    VertexSet edge = set_of(9, {0, 1});
    VertexSet removed = neighborhood_of_set(g, edge);
    CHECK(removed.count() == 5);
    auto comps = components(g, removed);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].count() == 2);
    CHECK(comps[1].count() == 2);

    auto naive = oracle::components_naive(to_adjlist(g), as_std_set(removed));
    REQUIRE(naive.size() == comps.size());
    for (std::size_t i = 0; i < naive.size(); ++i)
        CHECK(comps[i].to_vector() == naive[i]);
}

TEST_CASE("components of a triangle minus one vertex") {
    Graph k3 = Graph::from_edges(3, oracle::complete_edges(3));
    auto comps = components(k3, set_of(3, {1}));
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].count() == 2);
}

TEST_CASE("component ordering is size descending then smallest member") {
    // two singletons and one big side
    Graph g = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
    auto comps = components(g, set_of(7, {2}));
    REQUIRE(comps.size() == 4);
    CHECK(comps[0].to_vector() == std::vector<int>{0, 1});
    CHECK(comps[1].to_vector() == std::vector<int>{3, 4});
    CHECK(comps[2].to_vector() == std::vector<int>{5});
    CHECK(comps[3].to_vector() == std::vector<int>{6});
}

TEST_CASE("neighborhoods in cubes match the digit rule") {
    auto q2 = build_kary_cube(3, 2);
    VertexSet nb = neighborhood_of_set(q2.graph, set_of(9, {0}));
    CHECK(as_std_set(nb) == std::set<int>{1, 2, 3, 6});  // 01 02 10 20

    CHECK(neighborhood_of_set(q2.graph, VertexSet(9)).empty());

    auto q3 = build_kary_cube(3, 3);
    // chain 000 010 011 001 closes into a 4-cycle; its boundary has 12 vertices
    VertexSet frag = set_of(27, {0, 3, 4, 1});
    CHECK(neighborhood_of_set(q3.graph, frag).count() == 12);

    VertexSet closed = neighborhood_of_set(q3.graph, frag, true);
    CHECK(closed.count() == 16);
    CHECK(frag.is_subset_of(closed));
}

TEST_CASE("neighborhood properties on random graphs") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        Graph g = random_connected_graph(seed, 14, 10);
        SplitMix64 rng(seed * 977);
        VertexSet s(g.vertex_count());
        for (int v : sample_distinct(rng, g.vertex_count(), rng.int_in(1, 5))) s.insert(v);

        VertexSet open = neighborhood_of_set(g, s);
        int degree_sum = 0;
        for (int v = s.first(); v >= 0; v = s.next_after(v)) degree_sum += g.degree(v);
        CHECK(open.count() <= degree_sum);
        CHECK_FALSE(open.intersects(s));
        CHECK(neighborhood_of_set(g, s, true) == (open | s));

        // every component's boundary lies inside the removed set
        for (const auto& comp : components(g, open | s))
            CHECK(neighborhood_of_set(g, comp).is_subset_of(open | s));
    }
}

TEST_CASE("small component classification") {
    auto q3 = build_kary_cube(3, 3);
    const Graph& g = q3.graph;

    CHECK(classify_small_component(g, set_of(27, {0})).tag == ShapeTag::Singleton);
    CHECK(classify_small_component(g, set_of(27, {0, 1})).tag == ShapeTag::Edge);
    // three values of one digit are pairwise adjacent mod 3
    CHECK(classify_small_component(g, set_of(27, {0, 1, 2})).tag == ShapeTag::Cycle3);
    CHECK(classify_small_component(g, set_of(27, {0, 3, 4, 1})).tag == ShapeTag::Cycle4);
    CHECK(classify_small_component(g, set_of(27, {0, 1, 4})).tag == ShapeTag::Path2);

    CHECK_THROWS(classify_small_component(g, set_of(27, {0, 4})));  // not connected
    CHECK_THROWS(classify_small_component(g, VertexSet(27)));       // empty
}

TEST_CASE("classification agrees with brute-force isomorphism on orders <= 4") {
    for (int n = 1; n <= 4; ++n) {
        int max_edges = n * (n - 1) / 2;
        std::vector<std::pair<int, int>> all_pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
        for (int mask = 0; mask < (1 << max_edges); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (int bit = 0; bit < max_edges; ++bit)
                if (mask & (1 << bit)) edges.push_back(all_pairs[static_cast<std::size_t>(bit)]);
            Graph g = Graph::from_edges(n, edges);
            VertexSet all(n);
            for (int v = 0; v < n; ++v) all.insert(v);
            if (components(g, VertexSet(n)).size() != 1) continue;  // skip disconnected
            auto shape = classify_small_component(g, all);
            CHECK(shape_name(shape) == oracle::shape_by_isomorphism(oracle::from_edges(n, edges)));
        }
    }
}

TEST_CASE("h-extra cut predicate") {
    auto q2 = build_kary_cube(3, 2);
    CHECK_FALSE(is_h_extra_cut(q2.graph, VertexSet(9), 0));

    VertexSet cut = neighborhood_of_set(q2.graph, set_of(9, {0, 1}));
    CHECK(is_h_extra_cut(q2.graph, cut, 1));
    CHECK(is_h_extra_cut(q2.graph, cut, 0));   // monotone downward
    CHECK_FALSE(is_h_extra_cut(q2.graph, cut, 2));

    auto q3 = build_kary_cube(3, 3);
    VertexSet big = neighborhood_of_set(q3.graph, set_of(27, {0, 3, 4, 1}));
    CHECK(is_h_extra_cut(q3.graph, big, 3));

    // removing everything leaves no components at all
    CHECK_FALSE(is_h_extra_cut(q2.graph, q2.graph.all_vertices(), 0));
}

TEST_CASE("h-extra monotonicity against the oracle on random graphs") {
    for (std::uint64_t seed = 10; seed < 16; ++seed) {
        Graph g = random_connected_graph(seed, 11, 7);
        auto adj = to_adjlist(g);
        SplitMix64 rng(seed);
        for (int trial = 0; trial < 40; ++trial) {
            VertexSet s(g.vertex_count());
            for (int v : sample_distinct(rng, g.vertex_count(), rng.int_in(0, 6)))
                s.insert(v);
            bool prev = true;
            for (int h = 0; h <= 3; ++h) {
                bool now = is_h_extra_cut(g, s, h);
                CHECK(now == oracle::is_h_extra_cut_naive(adj, as_std_set(s), h));
                if (!prev) CHECK_FALSE(now);  // true at h implies true below
                prev = now;
            }
        }
    }
}

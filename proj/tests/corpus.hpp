#ifndef CUBEKAPPA_TESTS_CORPUS_HPP
#define CUBEKAPPA_TESTS_CORPUS_HPP

// Small graphs shared by the oracle-agreement tests and the acceptance suite.

#include <utility>
#include <vector>

#include "cubekappa/cube.hpp"
#include "cubekappa/graph.hpp"
#include "cubekappa/rng.hpp"
#include "oracle.hpp"

namespace corpus {

inline cubekappa::Graph random_connected_graph(std::uint64_t seed, int n,
                                               int extra_edges) {
    cubekappa::SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(v, static_cast<int>(rng.below(static_cast<std::uint64_t>(v))));
    for (int i = 0; i < extra_edges; ++i) {
        int u = rng.int_in(0, n - 1);
        int v = rng.int_in(0, n - 1);
        if (u != v) edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    return cubekappa::Graph::from_edges(n, edges);
}

inline oracle::AdjList to_adjlist(const cubekappa::Graph& g) {
    oracle::AdjList adj(static_cast<std::size_t>(g.vertex_count()));
    for (const auto& [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    return adj;
}

/// Connected graphs on at most 12 vertices, including every k-ary n-cube
/// that fits: the cycles (n = 1), the 4- and 8-vertex hypercubes, and the
/// 9-vertex torus.
inline std::vector<cubekappa::Graph> small_graphs() {
    using cubekappa::Graph;
    std::vector<Graph> graphs;
    graphs.push_back(Graph::from_edges(2, {{0, 1}}));
    for (int len = 3; len <= 12; ++len)
        graphs.push_back(Graph::from_edges(len, oracle::cycle_edges(len)));
    graphs.push_back(Graph::from_edges(7, oracle::path_edges(7)));
    graphs.push_back(Graph::from_edges(4, oracle::complete_edges(4)));
    graphs.push_back(Graph::from_edges(6, oracle::complete_bipartite_edges(3, 3)));
    graphs.push_back(Graph::from_edges(10, oracle::petersen_edges()));
    graphs.push_back(Graph::from_edges(12, oracle::grid_edges(3, 4)));
    graphs.push_back(Graph::from_edges(12, oracle::grid_edges(2, 6)));
    graphs.push_back(cubekappa::build_kary_cube(2, 2).graph);
    graphs.push_back(cubekappa::build_kary_cube(2, 3).graph);
    graphs.push_back(cubekappa::build_kary_cube(3, 2).graph);
    for (std::uint64_t seed : {101, 102, 103, 104})
        graphs.push_back(random_connected_graph(seed, 10 + static_cast<int>(seed % 3), 9));
    return graphs;
}

} // namespace corpus

#endif

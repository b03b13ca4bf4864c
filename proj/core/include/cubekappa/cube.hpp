#ifndef CUBEKAPPA_CUBE_HPP
#define CUBEKAPPA_CUBE_HPP

#include <string>
#include <utility>
#include <vector>

#include "cubekappa/graph.hpp"

namespace cubekappa {

/// Parameters of a k-ary n-cube: radix k >= 2, dimension n >= 1,
/// vertex_count = k^n.
struct CubeMeta {
    int radix = 0;
    int dimension = 0;
    long long vertex_count = 0;
};

/// Hard cap on the vertex universe; dense adjacency rows make larger graphs
/// impractical here.
inline constexpr long long kMaxUniverseVertices = 20000;

CubeMeta make_cube_meta(int radix, int dimension);

/// Vertex index <-> digit word. Digit words are stored and printed most
/// significant digit first; digit position i contributes digit * k^i to the
/// index, so position 0 is the rightmost character of the printed word.
std::vector<int> index_to_word(const CubeMeta& meta, long long index);
long long word_to_index(const CubeMeta& meta, const std::vector<int>& digits);
std::string word_string(const CubeMeta& meta, long long index);
long long parse_word_string(const CubeMeta& meta, const std::string& text);

/// Digit of `index` at position `pos` (0 = least significant).
int digit_at(const CubeMeta& meta, long long index, int pos);

/// True iff the two words differ by +-1 (mod k) in exactly one digit.
bool cube_adjacent(const CubeMeta& meta, long long u, long long v);

struct CubeGraph {
    Graph graph;
    CubeMeta meta;
};

/// Build Q_n^k: vertices are base-k words of length n, edges join words that
/// differ by +-1 (mod k) in exactly one digit. For k = 2 the two directions
/// coincide and are kept as a single edge.
CubeGraph build_kary_cube(int radix, int dimension);

/// Partition of the cube by the value of one digit position. Classes are
/// indexed by the digit value; consecutive classes (cyclically) are joined by
/// exactly k^(n-1) cross edges.
struct SubcubePartition {
    int dimension_index = 0;
    std::vector<VertexSet> classes;
    std::vector<VertexSet> fault_slices;          // F_i = faults & classes[i]
    std::vector<int> disconnected_classes;        // I: classes[i] - F_i disconnected
    std::vector<int> connected_classes;           // J: the remainder
    std::vector<long long> cross_edge_counts;     // edges between class i and i+1 (mod k)
};

SubcubePartition partition_over_dimension(const Graph& g, const CubeMeta& meta, int j,
                                          const VertexSet* faults = nullptr);

/// The two neighbors of u across digit position j: right has digit +1,
/// left has digit -1 (mod k). For k = 2 both coincide.
struct OuterNeighbors {
    long long left = 0;
    long long right = 0;
};

OuterNeighbors outer_neighbors(const CubeMeta& meta, long long u, int j);

/// Automorphism of Q_n^k composed of per-digit reflection (x -> -x mod k),
/// per-digit translation, and a permutation of digit positions. The digit at
/// input position i lands at output position position_perm[i] after
/// reflection and translation.
struct CubeAutomorphism {
    std::vector<int> translation;      // per input position, amount mod k
    std::vector<int> position_perm;    // permutation of 0..n-1
    std::vector<bool> reflection;      // per input position

    static CubeAutomorphism identity(const CubeMeta& meta);
    static CubeAutomorphism translate(const CubeMeta& meta, int pos, int amount);
    static CubeAutomorphism swap_positions(const CubeMeta& meta, int a, int b);
    static CubeAutomorphism reflect(const CubeMeta& meta, int pos);
};

long long apply_automorphism(const CubeMeta& meta, const CubeAutomorphism& a,
                             long long vertex);

/// Generating set used for orbit computations: one translation per position,
/// adjacent position swaps, and a reflection of position 0.
std::vector<CubeAutomorphism> automorphism_generators(const CubeMeta& meta);

/// Exhaustive edge check that `a` preserves adjacency of g.
bool preserves_adjacency(const Graph& g, const CubeMeta& meta, const CubeAutomorphism& a);

VertexSet vertex_orbit(const CubeMeta& meta, const std::vector<CubeAutomorphism>& gens,
                       long long start);

/// Number of distinct edges in the orbit of `edge` under `gens`.
std::size_t edge_orbit_size(const CubeMeta& meta, const std::vector<CubeAutomorphism>& gens,
                            std::pair<long long, long long> edge);

/// Throws unless digit translations are adjacency-preserving on g and act
/// transitively; used to justify fragment-search symmetry reduction.
void require_vertex_transitive(const Graph& g, const CubeMeta& meta);

} // namespace cubekappa

#endif

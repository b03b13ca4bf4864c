#ifndef CUBEKAPPA_CONSTRUCTIONS_HPP
#define CUBEKAPPA_CONSTRUCTIONS_HPP

#include <vector>

#include "cubekappa/cube.hpp"
#include "cubekappa/graph.hpp"
#include "cubekappa/verify.hpp"

namespace cubekappa {

/// Canonical small connected fragment of a radix-3 cube whose open
/// neighborhood is an extremal fault set. The chain starts at the all-zero
/// vertex and steps through two fixed digit positions; the four-vertex
/// fragment closes into a 4-cycle.
struct Fragment {
    std::vector<long long> vertices;  // in chain order
    CubeMeta meta;
    ComponentShape induced_shape;

    VertexSet vertex_set(const Graph& g) const;
};

/// t = 2, 3 or 4 chain vertices. Uses digit positions (n-2, n-3) like the
/// canonical coordinates, falling back to (1, 0) when n = 2.
Fragment path_fragment(const CubeMeta& meta, int t);

struct ConstructionReport {
    Fragment fragment;
    VertexSet cut;
    int cut_size = 0;
    std::vector<int> layer_sizes;  // cut vertices by first adjacent fragment vertex
    CutReport residual_components;
};

/// Open neighborhood of the (h+1)-vertex fragment: sizes 4n-3, 6n-7 and
/// 8n-12 for h = 1, 2, 3. Requires radix 3 and n >= 2 (n >= 3 for h = 3).
ConstructionReport extremal_cut(const Graph& g, const CubeMeta& meta, int h);

/// True iff removing the cut leaves exactly two components, the smaller one
/// equal to the fragment, and the cut is h-extra. Throws when the report does
/// not belong to g.
bool verify_extremal_cut(const Graph& g, const ConstructionReport& report, int h);

} // namespace cubekappa

#endif

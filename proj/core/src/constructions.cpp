#include "cubekappa/constructions.hpp"

#include <stdexcept>

namespace cubekappa {

VertexSet Fragment::vertex_set(const Graph& g) const {
    VertexSet s(g.vertex_count());
    for (long long v : vertices) s.insert(static_cast<int>(v));
    return s;
}

Fragment path_fragment(const CubeMeta& meta, int t) {
    if (meta.radix != 3)
        throw std::invalid_argument("extremal fragments are specific to radix 3");
    if (t < 2 || t > 4) throw std::invalid_argument("fragment size must be 2, 3 or 4");
    if (meta.dimension < 2)
        throw std::invalid_argument("fragments need dimension >= 2");

    // Two digit positions carry the chain. A three-vertex chain inside one
    // position would close into a triangle in radix 3.
    const int p = meta.dimension >= 3 ? meta.dimension - 2 : 1;
    const int q = p - 1;
    long long step_p = 1;
    for (int i = 0; i < p; ++i) step_p *= meta.radix;
    long long step_q = step_p / meta.radix;

    Fragment frag;
    frag.meta = meta;
    frag.vertices = {0, step_p};
    if (t >= 3) frag.vertices.push_back(step_p + step_q);
    if (t == 4) frag.vertices.push_back(step_q);

    // classify the induced shape on the fragment alone; building the whole
    // cube for four vertices is wasteful at large n
    int t_count = static_cast<int>(frag.vertices.size());
    Graph::Builder small(t_count);
    for (int a = 0; a < t_count; ++a)
        for (int b = a + 1; b < t_count; ++b)
            if (cube_adjacent(meta, frag.vertices[static_cast<std::size_t>(a)],
                              frag.vertices[static_cast<std::size_t>(b)]))
                small.add_edge(a, b);
    Graph induced = small.build();
    VertexSet all_small(t_count);
    for (int v = 0; v < t_count; ++v) all_small.insert(v);
    frag.induced_shape = classify_small_component(induced, all_small);
    return frag;
}

ConstructionReport extremal_cut(const Graph& g, const CubeMeta& meta, int h) {
    if (h < 1 || h > 3) throw std::invalid_argument("h must be 1, 2 or 3");
    if (h == 3 && meta.dimension < 3)
        throw std::invalid_argument("the 3-extra construction needs dimension >= 3");
    if (g.vertex_count() != meta.vertex_count)
        throw std::invalid_argument("graph does not match cube meta");

    ConstructionReport report;
    report.fragment = path_fragment(meta, h + 1);
    VertexSet frag_set = report.fragment.vertex_set(g);
    report.cut = neighborhood_of_set(g, frag_set);
    report.cut_size = report.cut.count();

    report.layer_sizes.assign(report.fragment.vertices.size(), 0);
    for (int v = report.cut.first(); v >= 0; v = report.cut.next_after(v)) {
        for (std::size_t i = 0; i < report.fragment.vertices.size(); ++i) {
            if (g.adjacent(v, static_cast<int>(report.fragment.vertices[i]))) {
                report.layer_sizes[i]++;
                break;
            }
        }
    }

    report.residual_components = make_cut_report(g, report.cut);
    return report;
}

bool verify_extremal_cut(const Graph& g, const ConstructionReport& report, int h) {
    if (report.cut.universe_size() != g.vertex_count())
        throw std::invalid_argument("report does not belong to this graph");
    VertexSet frag_set = report.fragment.vertex_set(g);
    if (neighborhood_of_set(g, frag_set) != report.cut)
        throw std::invalid_argument("report cut is not the fragment neighborhood in g");

    auto comps = components(g, report.cut);
    if (comps.size() != 2) return false;
    bool fragment_is_side = comps[0] == frag_set || comps[1] == frag_set;
    const VertexSet& other = comps[0] == frag_set ? comps[1] : comps[0];
    if (!fragment_is_side || frag_set.count() > other.count()) return false;
    return is_h_extra_cut(g, report.cut, h);
}

} // namespace cubekappa

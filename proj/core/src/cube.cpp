#include "cubekappa/cube.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cubekappa {

namespace {

long long checked_power(int radix, int dimension) {
    long long v = 1;
    for (int i = 0; i < dimension; ++i) {
        v *= radix;
        if (v > kMaxUniverseVertices)
            throw std::invalid_argument("k^n exceeds the supported vertex universe");
    }
    return v;
}

void check_position(const CubeMeta& meta, int pos) {
    if (pos < 0 || pos >= meta.dimension)
        throw std::out_of_range("digit position out of range");
}

void check_index(const CubeMeta& meta, long long index) {
    if (index < 0 || index >= meta.vertex_count)
        throw std::out_of_range("vertex index out of range");
}

long long power(int base, int exp) {
    long long v = 1;
    while (exp-- > 0) v *= base;
    return v;
}

} // namespace

CubeMeta make_cube_meta(int radix, int dimension) {
    if (radix < 2) throw std::invalid_argument("radix must be at least 2");
    if (dimension < 1) throw std::invalid_argument("dimension must be at least 1");
    return CubeMeta{radix, dimension, checked_power(radix, dimension)};
}

std::vector<int> index_to_word(const CubeMeta& meta, long long index) {
    check_index(meta, index);
    std::vector<int> digits(static_cast<std::size_t>(meta.dimension));
    for (int pos = 0; pos < meta.dimension; ++pos) {
        digits[static_cast<std::size_t>(meta.dimension - 1 - pos)] =
            static_cast<int>(index % meta.radix);
        index /= meta.radix;
    }
    return digits;
}

long long word_to_index(const CubeMeta& meta, const std::vector<int>& digits) {
    if (static_cast<int>(digits.size()) != meta.dimension)
        throw std::invalid_argument("word length must equal the cube dimension");
    long long index = 0;
    for (int d : digits) {
        if (d < 0 || d >= meta.radix) throw std::out_of_range("digit out of range");
        index = index * meta.radix + d;
    }
    return index;
}

std::string word_string(const CubeMeta& meta, long long index) {
    auto digits = index_to_word(meta, index);
    std::string out;
    bool wide = meta.radix > 10;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (wide && i) out += '.';
        if (wide) out += std::to_string(digits[i]);
        else out += static_cast<char>('0' + digits[i]);
    }
    return out;
}

long long parse_word_string(const CubeMeta& meta, const std::string& text) {
    std::vector<int> digits;
    if (meta.radix > 10) {
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t dot = text.find('.', pos);
            std::string part = text.substr(pos, dot == std::string::npos ? dot : dot - pos);
            digits.push_back(std::stoi(part));
            if (dot == std::string::npos) break;
            pos = dot + 1;
        }
    } else {
        for (char c : text) {
            if (c < '0' || c > '9') throw std::invalid_argument("bad digit in word");
            digits.push_back(c - '0');
        }
    }
    return word_to_index(meta, digits);
}

int digit_at(const CubeMeta& meta, long long index, int pos) {
    check_index(meta, index);
    check_position(meta, pos);
    return static_cast<int>((index / power(meta.radix, pos)) % meta.radix);
}

bool cube_adjacent(const CubeMeta& meta, long long u, long long v) {
    check_index(meta, u);
    check_index(meta, v);
    int differing = 0;
    bool step_ok = false;
    for (int pos = 0; pos < meta.dimension; ++pos) {
        int du = static_cast<int>(u % meta.radix);
        int dv = static_cast<int>(v % meta.radix);
        u /= meta.radix;
        v /= meta.radix;
        if (du == dv) continue;
        ++differing;
        step_ok = (du + 1) % meta.radix == dv || (dv + 1) % meta.radix == du;
    }
    return differing == 1 && step_ok;
}

CubeGraph build_kary_cube(int radix, int dimension) {
    CubeMeta meta = make_cube_meta(radix, dimension);
    Graph::Builder b(static_cast<int>(meta.vertex_count));
    for (long long u = 0; u < meta.vertex_count; ++u) {
        long long scale = 1;
        for (int pos = 0; pos < dimension; ++pos) {
            int d = static_cast<int>((u / scale) % radix);
            int up = (d + 1) % radix;
            long long v = u + static_cast<long long>(up - d) * scale;
            // adding both +1 and -1 here would record each edge twice; the
            // builder stores sets, so k = 2 collapses to a single edge anyway
            if (v != u) b.add_edge(static_cast<int>(u), static_cast<int>(v));
            scale *= radix;
        }
    }
    return CubeGraph{b.build(), meta};
}

SubcubePartition partition_over_dimension(const Graph& g, const CubeMeta& meta, int j,
                                          const VertexSet* faults) {
    check_position(meta, j);
    if (g.vertex_count() != meta.vertex_count)
        throw std::invalid_argument("graph does not match cube meta");

    const int k = meta.radix;
    SubcubePartition part;
    part.dimension_index = j;
    part.classes.assign(static_cast<std::size_t>(k), VertexSet(g.vertex_count()));
    for (long long u = 0; u < meta.vertex_count; ++u)
        part.classes[static_cast<std::size_t>(digit_at(meta, u, j))].insert(static_cast<int>(u));

    const long long expected_cross = power(k, meta.dimension - 1);
    int pair_count = k >= 3 ? k : 1;
    part.cross_edge_counts.assign(static_cast<std::size_t>(pair_count), 0);
    for (int i = 0; i < pair_count; ++i) {
        const VertexSet& a = part.classes[static_cast<std::size_t>(i)];
        const VertexSet& b = part.classes[static_cast<std::size_t>((i + 1) % k)];
        long long cnt = 0;
        for (int v = a.first(); v >= 0; v = a.next_after(v))
            cnt += (g.neighbors(v) & b).count();
        part.cross_edge_counts[static_cast<std::size_t>(i)] = cnt;
        if (cnt != expected_cross)
            throw std::invalid_argument("cross-edge count mismatch; graph is not this cube");
    }

    if (faults) {
        if (faults->universe_size() != g.vertex_count())
            throw std::invalid_argument("fault set universe mismatch");
        part.fault_slices.reserve(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            VertexSet fi = part.classes[static_cast<std::size_t>(i)] & *faults;
            VertexSet outside = g.all_vertices() - part.classes[static_cast<std::size_t>(i)];
            auto comps = components(g, outside | fi);
            bool empty_class = part.classes[static_cast<std::size_t>(i)].count() == fi.count();
            if (!empty_class && comps.size() != 1)
                part.disconnected_classes.push_back(i);
            else
                part.connected_classes.push_back(i);
            part.fault_slices.push_back(std::move(fi));
        }
    } else {
        for (int i = 0; i < k; ++i) part.connected_classes.push_back(i);
        part.fault_slices.assign(static_cast<std::size_t>(k), VertexSet(g.vertex_count()));
    }
    return part;
}

OuterNeighbors outer_neighbors(const CubeMeta& meta, long long u, int j) {
    check_index(meta, u);
    check_position(meta, j);
    long long scale = power(meta.radix, j);
    int d = static_cast<int>((u / scale) % meta.radix);
    int right_digit = (d + 1) % meta.radix;
    int left_digit = (d + meta.radix - 1) % meta.radix;
    return OuterNeighbors{
        u + static_cast<long long>(left_digit - d) * scale,
        u + static_cast<long long>(right_digit - d) * scale,
    };
}

CubeAutomorphism CubeAutomorphism::identity(const CubeMeta& meta) {
    CubeAutomorphism a;
    a.translation.assign(static_cast<std::size_t>(meta.dimension), 0);
    a.position_perm.resize(static_cast<std::size_t>(meta.dimension));
    std::iota(a.position_perm.begin(), a.position_perm.end(), 0);
    a.reflection.assign(static_cast<std::size_t>(meta.dimension), false);
    return a;
}

CubeAutomorphism CubeAutomorphism::translate(const CubeMeta& meta, int pos, int amount) {
    check_position(meta, pos);
    auto a = identity(meta);
    a.translation[static_cast<std::size_t>(pos)] =
        ((amount % meta.radix) + meta.radix) % meta.radix;
    return a;
}

CubeAutomorphism CubeAutomorphism::swap_positions(const CubeMeta& meta, int x, int y) {
    check_position(meta, x);
    check_position(meta, y);
    auto a = identity(meta);
    std::swap(a.position_perm[static_cast<std::size_t>(x)],
              a.position_perm[static_cast<std::size_t>(y)]);
    return a;
}

CubeAutomorphism CubeAutomorphism::reflect(const CubeMeta& meta, int pos) {
    check_position(meta, pos);
    auto a = identity(meta);
    a.reflection[static_cast<std::size_t>(pos)] = true;
    return a;
}

namespace {

void validate_automorphism(const CubeMeta& meta, const CubeAutomorphism& a) {
    auto n = static_cast<std::size_t>(meta.dimension);
    if (a.translation.size() != n || a.position_perm.size() != n || a.reflection.size() != n)
        throw std::invalid_argument("automorphism arity mismatch");
    std::vector<bool> seen(n, false);
    for (int p : a.position_perm) {
        if (p < 0 || p >= meta.dimension || seen[static_cast<std::size_t>(p)])
            throw std::invalid_argument("position map is not a permutation");
        seen[static_cast<std::size_t>(p)] = true;
    }
    for (int t : a.translation)
        if (t < 0 || t >= meta.radix)
            throw std::invalid_argument("translation amount out of range");
}

} // namespace

long long apply_automorphism(const CubeMeta& meta, const CubeAutomorphism& a,
                             long long vertex) {
    validate_automorphism(meta, a);
    check_index(meta, vertex);
    long long out = 0;
    long long scale = 1;
    for (int pos = 0; pos < meta.dimension; ++pos) {
        auto i = static_cast<std::size_t>(pos);
        int d = static_cast<int>((vertex / scale) % meta.radix);
        if (a.reflection[i]) d = (meta.radix - d) % meta.radix;
        d = (d + a.translation[i]) % meta.radix;
        out += static_cast<long long>(d) * power(meta.radix, a.position_perm[i]);
        scale *= meta.radix;
    }
    return out;
}

std::vector<CubeAutomorphism> automorphism_generators(const CubeMeta& meta) {
    std::vector<CubeAutomorphism> gens;
    for (int pos = 0; pos < meta.dimension; ++pos)
        gens.push_back(CubeAutomorphism::translate(meta, pos, 1));
    for (int pos = 0; pos + 1 < meta.dimension; ++pos)
        gens.push_back(CubeAutomorphism::swap_positions(meta, pos, pos + 1));
    gens.push_back(CubeAutomorphism::reflect(meta, 0));
    return gens;
}

bool preserves_adjacency(const Graph& g, const CubeMeta& meta, const CubeAutomorphism& a) {
    if (g.vertex_count() != meta.vertex_count) return false;
    for (const auto& [u, v] : g.edges()) {
        long long iu = apply_automorphism(meta, a, u);
        long long iv = apply_automorphism(meta, a, v);
        if (!g.adjacent(static_cast<int>(iu), static_cast<int>(iv))) return false;
    }
    return true;
}

VertexSet vertex_orbit(const CubeMeta& meta, const std::vector<CubeAutomorphism>& gens,
                       long long start) {
    check_index(meta, start);
    VertexSet orbit(static_cast<int>(meta.vertex_count));
    std::vector<long long> stack{start};
    orbit.insert(static_cast<int>(start));
    while (!stack.empty()) {
        long long v = stack.back();
        stack.pop_back();
        for (const auto& gen : gens) {
            long long w = apply_automorphism(meta, gen, v);
            if (!orbit.contains(static_cast<int>(w))) {
                orbit.insert(static_cast<int>(w));
                stack.push_back(w);
            }
        }
    }
    return orbit;
}

std::size_t edge_orbit_size(const CubeMeta& meta, const std::vector<CubeAutomorphism>& gens,
                            std::pair<long long, long long> edge) {
    auto canon = [](long long a, long long b) {
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    };
    std::vector<std::pair<long long, long long>> stack{canon(edge.first, edge.second)};
    std::vector<std::pair<long long, long long>> seen = stack;
    auto known = [&](std::pair<long long, long long> e) {
        return std::find(seen.begin(), seen.end(), e) != seen.end();
    };
    while (!stack.empty()) {
        auto [u, v] = stack.back();
        stack.pop_back();
        for (const auto& gen : gens) {
            auto e = canon(apply_automorphism(meta, gen, u), apply_automorphism(meta, gen, v));
            if (!known(e)) {
                seen.push_back(e);
                stack.push_back(e);
            }
        }
    }
    return seen.size();
}

void require_vertex_transitive(const Graph& g, const CubeMeta& meta) {
    if (g.vertex_count() != meta.vertex_count)
        throw std::invalid_argument("graph does not match cube meta");
    std::vector<CubeAutomorphism> translations;
    for (int pos = 0; pos < meta.dimension; ++pos)
        translations.push_back(CubeAutomorphism::translate(meta, pos, 1));
    for (const auto& t : translations)
        if (!preserves_adjacency(g, meta, t))
            throw std::invalid_argument("digit translations do not preserve adjacency");
    if (vertex_orbit(meta, translations, 0).count() != meta.vertex_count)
        throw std::invalid_argument("translations do not act transitively");
}

} // namespace cubekappa

#include "cubekappa/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "cubekappa/rng.hpp"
#include "internal/subset_sweep.hpp"
#include "internal/wordset.hpp"

namespace cubekappa {

const char* cut_pattern_name(CutPattern p) {
    switch (p) {
        case CutPattern::Connected: return "connected";
        case CutPattern::IsolatedVertex: return "isolated-vertex";
        case CutPattern::SmallSideWeightTwo: return "small-side-weight-2";
        case CutPattern::SmallSideOrderThree: return "small-side-order-3";
        case CutPattern::TwoIsolatedVertices: return "two-isolated-vertices";
        case CutPattern::VertexPlusEdge: return "vertex-plus-edge";
        case CutPattern::ThreeIsolatedVertices: return "three-isolated-vertices";
        case CutPattern::Violation: return "violation";
    }
    return "unknown";
}

bool pattern_satisfied(CutPattern p, const std::vector<VertexSet>& comps) {
    auto order = [&](std::size_t i) { return comps[i].count(); };
    switch (p) {
        case CutPattern::Connected:
            return comps.size() <= 1;
        case CutPattern::IsolatedVertex:
            return comps.size() == 2 && order(1) == 1;
        case CutPattern::SmallSideWeightTwo:
            return (comps.size() == 2 && order(1) <= 2) ||
                   (comps.size() == 3 && order(1) == 1 && order(2) == 1);
        case CutPattern::SmallSideOrderThree:
            return comps.size() == 2 && order(1) <= 3;
        case CutPattern::TwoIsolatedVertices:
            return comps.size() == 3 && order(1) == 1 && order(2) == 1;
        case CutPattern::VertexPlusEdge:
            return comps.size() == 3 && order(1) == 2 && order(2) == 1;
        case CutPattern::ThreeIsolatedVertices:
            return comps.size() == 4 && order(1) == 1 && order(2) == 1 && order(3) == 1;
        case CutPattern::Violation:
            return comps.size() > 1;
    }
    return false;
}

CutPattern classify_cut_pattern(const std::vector<VertexSet>& comps) {
    // most specific first, so three-component splits keep their own labels
    static constexpr CutPattern kOrder[] = {
        CutPattern::Connected,           CutPattern::IsolatedVertex,
        CutPattern::TwoIsolatedVertices, CutPattern::VertexPlusEdge,
        CutPattern::ThreeIsolatedVertices, CutPattern::SmallSideWeightTwo,
        CutPattern::SmallSideOrderThree,
    };
    for (CutPattern p : kOrder)
        if (pattern_satisfied(p, comps)) return p;
    return CutPattern::Violation;
}

std::vector<CutPattern> patterns_small_side(int max_weight) {
    switch (max_weight) {
        case 1:
            return {CutPattern::IsolatedVertex};
        case 2:
            return {CutPattern::IsolatedVertex, CutPattern::SmallSideWeightTwo};
        case 3:
            return {CutPattern::IsolatedVertex,       CutPattern::SmallSideWeightTwo,
                    CutPattern::SmallSideOrderThree,  CutPattern::TwoIsolatedVertices,
                    CutPattern::VertexPlusEdge,       CutPattern::ThreeIsolatedVertices};
        default:
            throw std::invalid_argument("small-side weight must be 1, 2 or 3");
    }
}

CutReport make_cut_report(const Graph& g, const VertexSet& faults) {
    CutReport report;
    report.fault_set = faults;
    auto comps = components(g, faults);
    report.matched = classify_cut_pattern(comps);
    report.comps.reserve(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
        LabeledComponent lc;
        lc.members = comps[i];
        if (i > 0) lc.shape = classify_small_component(g, comps[i]);
        report.comps.push_back(std::move(lc));
    }
    return report;
}

namespace {

using detail::WordSet;

bool satisfies_any(const std::vector<CutPattern>& allowed,
                   const std::vector<VertexSet>& comps) {
    for (CutPattern p : allowed)
        if (pattern_satisfied(p, comps)) return true;
    return false;
}

struct SweepSlot {
    std::uint64_t checked = 0;
    std::uint64_t skipped = 0;
    std::uint64_t violations = 0;
    std::vector<ViolationRecord> retained;
    std::array<std::uint64_t, kCutPatternCount> pattern_counts{};
    int smallest_disconnect = -1;
};

void merge_slot(VerificationOutcome& out, const SweepSlot& slot) {
    out.checked_count += slot.checked;
    out.skipped_count += slot.skipped;
    out.violation_count += slot.violations;
    for (const auto& v : slot.retained)
        if (out.violations.size() < kMaxRetainedViolations) out.violations.push_back(v);
    for (int i = 0; i < kCutPatternCount; ++i)
        out.pattern_counts[static_cast<std::size_t>(i)] +=
            slot.pattern_counts[static_cast<std::size_t>(i)];
    if (slot.smallest_disconnect >= 0 &&
        (!out.smallest_disconnecting_size ||
         slot.smallest_disconnect < *out.smallest_disconnecting_size))
        out.smallest_disconnecting_size = slot.smallest_disconnect;
}

template <int W>
void inspect_fault_set(const Graph& g, const std::vector<WordSet<W>>& adj,
                       const WordSet<W>& all, const WordSet<W>& faults, int fault_size,
                       const std::vector<CutPattern>& allowed, SweepSlot& slot) {
    WordSet<W> alive = all;
    alive.andnot(faults);
    if (detail::is_connected_mask<W>(adj, alive)) {
        slot.pattern_counts[static_cast<std::size_t>(CutPattern::Connected)]++;
        return;
    }
    if (slot.smallest_disconnect < 0 || fault_size < slot.smallest_disconnect)
        slot.smallest_disconnect = fault_size;

    VertexSet fault_set = detail::to_vertex_set<W>(faults, g.vertex_count());
    auto comps = components(g, fault_set);
    CutPattern matched = classify_cut_pattern(comps);
    slot.pattern_counts[static_cast<std::size_t>(matched)]++;
    if (!satisfies_any(allowed, comps)) {
        slot.violations++;
        if (slot.retained.size() < kMaxRetainedViolations) {
            ViolationRecord rec;
            rec.detail = "disconnecting fault set outside the allowed patterns";
            rec.report = make_cut_report(g, fault_set);
            slot.retained.push_back(std::move(rec));
        }
    }
}

template <int W>
VerificationOutcome sweep_exhaustive(const Graph& g, int size_bound,
                                     const std::vector<CutPattern>& allowed,
                                     const SearchBudget& budget) {
    const int n = g.vertex_count();
    auto adj = detail::adjacency_words<W>(g);
    auto all = detail::full_set<W>(n);

    std::uint64_t planned = 0;
    for (int s = 0; s <= size_bound; ++s) {
        std::uint64_t c = detail::binomial_saturated(n, s);
        if (planned + c < planned || planned + c > budget.work_ceiling)
            throw std::invalid_argument("exhaustive sweep exceeds the work ceiling");
        planned += c;
    }

    VerificationOutcome out;
    out.scope = VerificationScope{true, size_bound, {}};

    for (int s = 0; s <= size_bound; ++s) {
        if (s == 0) {
            SweepSlot slot;
            slot.checked = 1;
            WordSet<W> empty{};
            inspect_fault_set<W>(g, adj, all, empty, 0, allowed, slot);
            merge_slot(out, slot);
            continue;
        }
        int blocks = n - s + 1;
        if (blocks <= 0) break;
        std::vector<SweepSlot> slots(static_cast<std::size_t>(blocks));
        detail::run_blocks(blocks, budget.workers, [&](int b) {
            SweepSlot& slot = slots[static_cast<std::size_t>(b)];
            detail::visit_combinations_with_first<W>(n, s, b, [&](const WordSet<W>& f) {
                slot.checked++;
                // cheap connected check dominates; full reports only on cuts
                inspect_fault_set<W>(g, adj, all, f, s, allowed, slot);
                return slot.violations < kMaxRetainedViolations;
            });
        });
        for (const auto& slot : slots) merge_slot(out, slot);
    }
    out.pass = out.violation_count == 0;
    return out;
}

/// Deterministic per-index fault-set generator: even indices draw a uniform
/// set of random size, odd ones take the neighborhood of a random connected
/// fragment and pad it with random vertices.
template <int W>
WordSet<W> sampled_fault_set(const Graph& g, const std::vector<WordSet<W>>& adj,
                             int size_bound, std::uint64_t seed, std::uint64_t index) {
    const int n = g.vertex_count();
    SplitMix64 rng = stream_for(seed, index);

    auto uniform_set = [&]() {
        int size = rng.int_in(1, std::max(1, size_bound));
        WordSet<W> f{};
        for (int v : sample_distinct(rng, n, size)) f.set(v);
        return f;
    };

    if (index % 2 == 0) return uniform_set();

    int frag_target = rng.int_in(1, 3);
    int start = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    WordSet<W> frag{};
    frag.set(start);
    WordSet<W> nb = adj[static_cast<std::size_t>(start)];
    for (int grow = 1; grow < frag_target; ++grow) {
        WordSet<W> cand = nb;
        cand.andnot(frag);
        int options = cand.popcount();
        if (options == 0) break;
        int pick = static_cast<int>(rng.below(static_cast<std::uint64_t>(options)));
        int chosen = -1;
        cand.for_each([&](int v) {
            if (pick-- == 0) chosen = v;
        });
        frag.set(chosen);
        nb |= adj[static_cast<std::size_t>(chosen)];
    }
    WordSet<W> fault = nb;
    fault.andnot(frag);
    int fault_size = fault.popcount();
    if (fault_size > size_bound) return uniform_set();

    int pad = rng.int_in(0, size_bound - fault_size);
    if (pad > 0) {
        for (int v : sample_distinct(rng, n, std::min(n, fault_size + pad + 8))) {
            if (pad == 0) break;
            if (!fault.test(v)) {
                fault.set(v);
                --pad;
            }
        }
    }
    return fault;
}

template <int W>
VerificationOutcome sweep_sampled(const Graph& g, int size_bound,
                                  const std::vector<CutPattern>& allowed,
                                  const SampleSpec& sample, const SearchBudget& budget) {
    const int n = g.vertex_count();
    auto adj = detail::adjacency_words<W>(g);
    auto all = detail::full_set<W>(n);

    VerificationOutcome out;
    out.scope = VerificationScope{false, size_bound, sample};

    const std::uint64_t chunk = 4096;
    int blocks = static_cast<int>((sample.count + chunk - 1) / chunk);
    std::vector<SweepSlot> slots(static_cast<std::size_t>(blocks));
    detail::run_blocks(blocks, budget.workers, [&](int b) {
        SweepSlot& slot = slots[static_cast<std::size_t>(b)];
        std::uint64_t lo = static_cast<std::uint64_t>(b) * chunk;
        std::uint64_t hi = std::min(sample.count, lo + chunk);
        for (std::uint64_t i = lo; i < hi; ++i) {
            WordSet<W> f = sampled_fault_set<W>(g, adj, size_bound, sample.seed, i);
            slot.checked++;
            inspect_fault_set<W>(g, adj, all, f, f.popcount(), allowed, slot);
        }
    });
    for (const auto& slot : slots) merge_slot(out, slot);
    out.pass = out.violation_count == 0;
    return out;
}

} // namespace

VerificationOutcome verify_bounded_cut_structure(const Graph& g, int size_bound,
                                                 const std::vector<CutPattern>& allowed,
                                                 const VerifyMode& mode,
                                                 const SearchBudget& budget) {
    if (size_bound < 0 || size_bound > g.vertex_count())
        throw std::invalid_argument("size bound outside the vertex universe");
    const int n = g.vertex_count();
    if (n > 256) throw std::invalid_argument("cut-structure sweep supports at most 256 vertices");
    int words = std::max(1, (n + 63) / 64);
    VerificationOutcome out;
    auto run = [&](auto wtag) {
        constexpr int W = decltype(wtag)::value;
        return mode.exhaustive
                   ? sweep_exhaustive<W>(g, size_bound, allowed, budget)
                   : sweep_sampled<W>(g, size_bound, allowed, mode.sample, budget);
    };
    switch (words) {
        case 1: out = run(std::integral_constant<int, 1>{}); break;
        case 2: out = run(std::integral_constant<int, 2>{}); break;
        case 3: out = run(std::integral_constant<int, 3>{}); break;
        default: out = run(std::integral_constant<int, 4>{}); break;
    }
    out.claim = "bounded-cut-structure";
    return out;
}

VerificationOutcome verify_common_neighbors(const CubeMeta& meta) {
    if (meta.radix != 3)
        throw std::invalid_argument("common-neighbor law is specific to radix 3");
    auto cube = build_kary_cube(meta.radix, meta.dimension);
    const Graph& g = cube.graph;

    VerificationOutcome out;
    out.claim = "common-neighbors";
    out.scope = VerificationScope{true, 0, {}};
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            out.checked_count++;
            int common = common_neighbor_count(g, u, v);
            bool ok = g.adjacent(u, v) ? common == 1 : (common == 0 || common == 2);
            if (!ok) {
                out.violation_count++;
                if (out.violations.size() < kMaxRetainedViolations) {
                    ViolationRecord rec;
                    rec.detail = "pair " + word_string(meta, u) + "," + word_string(meta, v) +
                                 " has " + std::to_string(common) + " common neighbors";
                    rec.report.fault_set = VertexSet(g.vertex_count(), {u, v});
                    out.violations.push_back(std::move(rec));
                }
            }
        }
    }
    out.pass = out.violation_count == 0;
    return out;
}

VerificationOutcome verify_subcube_union_connected(const Graph& g, const CubeMeta& meta,
                                                   int j, const SampleSpec& sample,
                                                   const SearchBudget& budget) {
    if (meta.radix != 3) throw std::invalid_argument("subcube-join check needs radix 3");
    if (meta.dimension < 4)
        throw std::invalid_argument("subcube-join hypothesis needs dimension >= 4");
    if (g.vertex_count() != meta.vertex_count)
        throw std::invalid_argument("graph does not match cube meta");

    const int n = g.vertex_count();
    const int size_bound = 8 * meta.dimension - 13;
    auto base = partition_over_dimension(g, meta, j);

    VerificationOutcome out;
    out.claim = "subcube-join";
    out.scope = VerificationScope{false, size_bound, sample};

    int words = std::max(1, (n + 63) / 64);
    if (words > 4) throw std::invalid_argument("cube too large for sampled verification");

    auto run = [&](auto wtag) {
        constexpr int W = decltype(wtag)::value;
        auto adj = detail::adjacency_words<W>(g);

        const std::uint64_t chunk = 1024;
        int blocks = static_cast<int>((sample.count + chunk - 1) / chunk);
        std::vector<SweepSlot> slots(static_cast<std::size_t>(blocks));
        detail::run_blocks(blocks, budget.workers, [&](int b) {
            SweepSlot& slot = slots[static_cast<std::size_t>(b)];
            std::uint64_t lo = static_cast<std::uint64_t>(b) * chunk;
            std::uint64_t hi = std::min(sample.count, lo + chunk);
            for (std::uint64_t i = lo; i < hi; ++i) {
                WordSet<W> f = sampled_fault_set<W>(g, adj, size_bound, sample.seed, i);
                VertexSet faults = detail::to_vertex_set<W>(f, n);
                auto part = partition_over_dimension(g, meta, j, &faults);
                slot.checked++;
                if (part.disconnected_classes.size() > 2) {
                    slot.skipped++;  // outside the claim's hypothesis
                    continue;
                }

                VertexSet joined(n);
                for (int cls : part.connected_classes)
                    joined |= part.classes[static_cast<std::size_t>(cls)];
                joined -= faults;
                auto joined_comps = components(g, g.all_vertices() - joined);
                bool joined_ok = joined_comps.size() <= 1;

                bool closure_ok = true;
                if (joined_ok && !joined.empty()) {
                    for (const auto& comp : components(g, faults)) {
                        if (comp.intersects(joined)) continue;
                        VertexSet nb = neighborhood_of_set(g, comp);
                        if (!nb.is_subset_of(faults)) {
                            closure_ok = false;
                            break;
                        }
                    }
                }

                if (!joined_ok || !closure_ok) {
                    slot.violations++;
                    if (slot.retained.size() < kMaxRetainedViolations) {
                        ViolationRecord rec;
                        rec.detail = joined_ok
                                         ? "component avoiding the joined classes leaks"
                                         : "joined fault-free classes are disconnected";
                        rec.report = make_cut_report(g, faults);
                        slot.retained.push_back(std::move(rec));
                    }
                }
            }
        });
        for (const auto& slot : slots) merge_slot(out, slot);
    };
    switch (words) {
        case 1: run(std::integral_constant<int, 1>{}); break;
        case 2: run(std::integral_constant<int, 2>{}); break;
        case 3: run(std::integral_constant<int, 3>{}); break;
        default: run(std::integral_constant<int, 4>{}); break;
    }

    out.pass = out.violation_count == 0;
    (void)base;
    return out;
}

VerificationOutcome verify_regularity_partition_transitivity(const CubeMeta& meta) {
    auto cube = build_kary_cube(meta.radix, meta.dimension);
    const Graph& g = cube.graph;
    const int k = meta.radix;
    const int n = meta.dimension;

    VerificationOutcome out;
    out.claim = "cube-basics";
    out.scope = VerificationScope{true, 0, {}};

    auto flag = [&](const std::string& detail) {
        out.violation_count++;
        if (out.violations.size() < kMaxRetainedViolations) {
            ViolationRecord rec;
            rec.detail = detail;
            rec.report.fault_set = VertexSet(g.vertex_count());
            out.violations.push_back(std::move(rec));
        }
    };

    const int expected_degree = k >= 3 ? 2 * n : n;
    for (int v = 0; v < g.vertex_count(); ++v) {
        out.checked_count++;
        if (g.degree(v) != expected_degree) {
            flag("vertex " + word_string(meta, v) + " has degree " +
                 std::to_string(g.degree(v)));
        }
    }
    long long expected_edges = static_cast<long long>(n) * meta.vertex_count / (k >= 3 ? 1 : 2);
    if (g.edge_count() != expected_edges)
        flag("edge count " + std::to_string(g.edge_count()) + " expected " +
             std::to_string(expected_edges));

    long long class_size = meta.vertex_count / k;
    for (int j = 0; j < n; ++j) {
        auto part = partition_over_dimension(g, meta, j);  // throws on bad cross counts
        for (const auto& cls : part.classes) {
            out.checked_count++;
            if (cls.count() != class_size)
                flag("partition class size mismatch in dimension " + std::to_string(j));
        }
    }

    for (long long u = 0; u < meta.vertex_count; ++u) {
        for (int j = 0; j < n; ++j) {
            out.checked_count++;
            auto [left, right] = outer_neighbors(meta, u, j);
            bool ok = g.adjacent(static_cast<int>(u), static_cast<int>(left)) &&
                      g.adjacent(static_cast<int>(u), static_cast<int>(right));
            if (k >= 3) {
                int d = digit_at(meta, u, j);
                ok = ok && left != right &&
                     digit_at(meta, left, j) == (d + k - 1) % k &&
                     digit_at(meta, right, j) == (d + 1) % k;
            } else {
                ok = ok && left == right;
            }
            if (!ok) flag("outer neighbors wrong at " + word_string(meta, u));
        }
    }

    if (meta.vertex_count <= 2048 && n >= 1) {
        auto gens = automorphism_generators(meta);
        for (const auto& gen : gens) {
            out.checked_count++;
            if (!preserves_adjacency(g, meta, gen))
                flag("generator does not preserve adjacency");
        }
        out.checked_count++;
        if (vertex_orbit(meta, gens, 0).count() != meta.vertex_count)
            flag("vertex orbit does not cover the cube");
        out.checked_count++;
        long long nb0 = outer_neighbors(meta, 0, 0).right;
        if (edge_orbit_size(meta, gens, {0, nb0}) !=
            static_cast<std::size_t>(g.edge_count()))
            flag("edge orbit does not cover all edges");
    }

    out.pass = out.violation_count == 0;
    return out;
}

} // namespace cubekappa

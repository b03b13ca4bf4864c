#include "cubekappa/solver.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>
#include <utility>

#include "internal/subset_sweep.hpp"
#include "internal/wordset.hpp"

namespace cubekappa {

const char* evidence_kind_name(EvidenceKind kind) {
    switch (kind) {
        case EvidenceKind::Exhaustive: return "exhaustive";
        case EvidenceKind::FragmentExact: return "fragment-exact";
        case EvidenceKind::BoundsOnly: return "bounds-only";
        case EvidenceKind::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

namespace {

using detail::WordSet;

constexpr int kMaxEnumerableVertices = 256;

void require_connected(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
    if (components(g, VertexSet(g.vertex_count())).size() != 1)
        throw std::invalid_argument("graph must be connected");
}

template <class Fn>
auto dispatch_words(int universe, Fn&& fn) {
    if (universe > kMaxEnumerableVertices)
        throw std::invalid_argument("enumeration engines support at most 256 vertices");
    int words = std::max(1, (universe + 63) / 64);
    switch (words) {
        case 1: return fn(std::integral_constant<int, 1>{});
        case 2: return fn(std::integral_constant<int, 2>{});
        case 3: return fn(std::integral_constant<int, 3>{});
        default: return fn(std::integral_constant<int, 4>{});
    }
}

void atomic_min(std::atomic<int>& target, int value) {
    int cur = target.load(std::memory_order_relaxed);
    while (value < cur &&
           !target.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
    }
}

// ---------------------------------------------------------------------------
// Vertex connectivity: unit-capacity max flow on the vertex-split digraph.

struct SplitFlowNetwork {
    struct Arc {
        int to;
        int cap;
        int rev;
    };

    int node_count;
    std::vector<std::vector<Arc>> arcs;
    std::vector<std::vector<int>> initial_caps;

    static int in_node(int v) { return 2 * v; }
    static int out_node(int v) { return 2 * v + 1; }

    explicit SplitFlowNetwork(const Graph& g) : node_count(2 * g.vertex_count()) {
        arcs.resize(static_cast<std::size_t>(node_count));
        for (int v = 0; v < g.vertex_count(); ++v) add_arc(in_node(v), out_node(v), 1);
        for (const auto& [u, v] : g.edges()) {
            add_arc(out_node(u), in_node(v), 1);
            add_arc(out_node(v), in_node(u), 1);
        }
        initial_caps.resize(arcs.size());
        for (std::size_t i = 0; i < arcs.size(); ++i)
            for (const Arc& a : arcs[i]) initial_caps[i].push_back(a.cap);
    }

    void add_arc(int from, int to, int cap) {
        arcs[static_cast<std::size_t>(from)].push_back(
            {to, cap, static_cast<int>(arcs[static_cast<std::size_t>(to)].size())});
        arcs[static_cast<std::size_t>(to)].push_back(
            {from, 0, static_cast<int>(arcs[static_cast<std::size_t>(from)].size()) - 1});
    }

    void reset() {
        for (std::size_t i = 0; i < arcs.size(); ++i)
            for (std::size_t j = 0; j < arcs[i].size(); ++j)
                arcs[i][j].cap = initial_caps[i][j];
    }

    // BFS augmenting paths; stops once `limit` paths are found.
    int max_flow(int source, int sink, int limit) {
        int flow = 0;
        std::vector<int> prev_node(static_cast<std::size_t>(node_count));
        std::vector<int> prev_arc(static_cast<std::size_t>(node_count));
        std::vector<int> queue(static_cast<std::size_t>(node_count));
        while (flow < limit) {
            std::fill(prev_node.begin(), prev_node.end(), -1);
            prev_node[static_cast<std::size_t>(source)] = source;
            int head = 0, tail = 0;
            queue[tail++] = source;
            bool reached = false;
            while (head < tail && !reached) {
                int u = queue[head++];
                const auto& row = arcs[static_cast<std::size_t>(u)];
                for (std::size_t j = 0; j < row.size(); ++j) {
                    const Arc& a = row[j];
                    if (a.cap <= 0 || prev_node[static_cast<std::size_t>(a.to)] >= 0) continue;
                    prev_node[static_cast<std::size_t>(a.to)] = u;
                    prev_arc[static_cast<std::size_t>(a.to)] = static_cast<int>(j);
                    if (a.to == sink) {
                        reached = true;
                        break;
                    }
                    queue[tail++] = a.to;
                }
            }
            if (!reached) break;
            for (int v = sink; v != source; v = prev_node[static_cast<std::size_t>(v)]) {
                int u = prev_node[static_cast<std::size_t>(v)];
                Arc& a = arcs[static_cast<std::size_t>(u)][static_cast<std::size_t>(
                    prev_arc[static_cast<std::size_t>(v)])];
                a.cap -= 1;
                arcs[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.rev)].cap += 1;
            }
            ++flow;
        }
        return flow;
    }
};

} // namespace

int vertex_connectivity(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("vertex connectivity needs >= 2 vertices");
    if (g.is_complete()) return n - 1;

    SplitFlowNetwork net(g);
    int best = n - 1;
    int anchor = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) < g.degree(anchor)) anchor = v;

    // A minimum cut either misses the anchor or misses one of its neighbors,
    // so pairing those sources with all their non-neighbors reaches it.
    auto consider_sources = [&](int source) {
        for (int t = 0; t < n; ++t) {
            if (t == source || g.adjacent(source, t)) continue;
            net.reset();
            best = std::min(best, net.max_flow(SplitFlowNetwork::out_node(source),
                                               SplitFlowNetwork::in_node(t), best));
            if (best == 0) return;
        }
    };
    consider_sources(anchor);
    for (int v = g.neighbors(anchor).first(); v >= 0 && best > 0;
         v = g.neighbors(anchor).next_after(v))
        consider_sources(v);
    return best;
}

namespace {

template <int W>
bool super_connected_impl(const Graph& g, int kappa, const SearchBudget& budget) {
    const int n = g.vertex_count();
    auto adj = detail::adjacency_words<W>(g);
    auto all = detail::full_set<W>(n);
    if (detail::binomial_saturated(n, kappa) > budget.work_ceiling)
        throw std::invalid_argument("minimum-cut sweep exceeds the work ceiling");

    std::atomic<bool> ok{true};
    int blocks = n - kappa + 1;
    detail::run_blocks(blocks, budget.workers, [&](int b) {
        std::uint64_t since_check = 0;
        detail::visit_combinations_with_first<W>(n, kappa, b, [&](const WordSet<W>& cut) {
            if (++since_check >= 8192) {
                since_check = 0;
                if (!ok.load(std::memory_order_relaxed)) return false;
            }
            WordSet<W> alive = all;
            alive.andnot(cut);
            WordSet<W> comp = detail::bfs_component<W>(adj, alive, alive.first());
            int comp_count = comp.popcount();
            int alive_count = alive.popcount();
            if (comp_count == alive_count) return true;  // not a cut
            WordSet<W> rest = alive;
            rest.andnot(comp);
            WordSet<W> comp2 = detail::bfs_component<W>(adj, rest, rest.first());
            int rest_count = alive_count - comp_count;
            bool two_comps = comp2.popcount() == rest_count;
            bool singleton = comp_count == 1 || rest_count == 1;
            if (!(two_comps && singleton)) {
                ok.store(false, std::memory_order_relaxed);
                return false;
            }
            return true;
        });
    });
    return ok.load();
}

} // namespace

bool is_super_connected(const Graph& g, const SearchBudget& budget) {
    if (g.vertex_count() < 3)
        throw std::invalid_argument("super-connectivity needs >= 3 vertices");
    require_connected(g);
    int kappa = vertex_connectivity(g);
    if (kappa == g.vertex_count() - 1) return true;  // complete graph: no vertex cuts
    return dispatch_words(g.vertex_count(), [&](auto w) {
        return super_connected_impl<decltype(w)::value>(g, kappa, budget);
    });
}

int common_neighbor_count(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("common neighbors need distinct vertices");
    return (g.neighbors(u) & g.neighbors(v)).count();
}

// ---------------------------------------------------------------------------
// Exhaustive h-extra connectivity.

namespace {

template <int W>
ExtraConnectivityResult exact_impl(const Graph& g, int h, const SearchBudget& budget) {
    const int n = g.vertex_count();
    auto adj = detail::adjacency_words<W>(g);
    auto all = detail::full_set<W>(n);

    int default_max = n - 2 * (h + 1);  // larger cuts cannot leave two (h+1)-components
    int max_size = std::min(budget.max_cut_size.value_or(default_max), default_max);
    max_size = std::min(max_size, n);

    ExtraConnectivityResult result;
    result.h = h;

    std::uint64_t planned = 0;
    int last_full = -1;
    for (int s = 0; s <= std::max(max_size, 0); ++s) {
        std::uint64_t size_work = detail::binomial_saturated(n, s);
        if (planned + size_work < planned || planned + size_work > budget.work_ceiling) {
            result.evidence =
                Evidence{EvidenceKind::Inconclusive, -1, -1, last_full, planned};
            return result;
        }
        planned += size_work;

        if (s == 0) {
            last_full = 0;
            continue;  // the empty set never cuts a connected graph
        }

        struct Slot {
            bool found = false;
            WordSet<W> cut{};
        };
        std::vector<Slot> slots(static_cast<std::size_t>(n - s + 1));
        std::atomic<int> best_block{INT_MAX};
        detail::run_blocks(n - s + 1, budget.workers, [&](int b) {
            if (b > best_block.load(std::memory_order_relaxed)) return;
            std::uint64_t since_check = 0;
            detail::visit_combinations_with_first<W>(n, s, b, [&](const WordSet<W>& cut) {
                if (++since_check >= 8192) {
                    since_check = 0;
                    if (b > best_block.load(std::memory_order_relaxed)) return false;
                }
                if (detail::is_h_extra_cut_mask<W>(adj, all, cut, h)) {
                    slots[static_cast<std::size_t>(b)] = {true, cut};
                    atomic_min(best_block, b);
                    return false;
                }
                return true;
            });
        });

        for (const Slot& slot : slots) {
            if (!slot.found) continue;
            VertexSet cut = detail::to_vertex_set<W>(slot.cut, n);
            result.value = s;
            result.certificate = CutCertificate{cut, components(g, cut)};
            result.evidence = Evidence{EvidenceKind::Exhaustive, s, s, s, planned};
            return result;
        }
        last_full = s;
    }

    // no h-extra cut of size <= max_size exists
    result.evidence =
        Evidence{EvidenceKind::Exhaustive, std::max(max_size, 0) + 1, -1,
                 std::max(max_size, 0), planned};
    return result;
}

} // namespace

ExtraConnectivityResult exact_extra_connectivity(const Graph& g, int h,
                                                 const SearchBudget& budget) {
    if (h < 0) throw std::invalid_argument("h must be non-negative");
    require_connected(g);
    return dispatch_words(g.vertex_count(), [&](auto w) {
        return exact_impl<decltype(w)::value>(g, h, budget);
    });
}

// ---------------------------------------------------------------------------
// Fragment search.

namespace {

template <int W>
struct FragmentOutcome {
    int best_lower = INT_MAX;   // min |N(A)| over lower-bound-qualifying fragments
    int best_upper = INT_MAX;   // min |N(A)| over fragments whose N(A) is an h-extra cut
    WordSet<W> upper_cut{};
    WordSet<W> upper_fragment{};
    bool tripped = false;
    std::uint64_t states = 0;

    void merge(const FragmentOutcome& o) {
        best_lower = std::min(best_lower, o.best_lower);
        if (o.best_upper < best_upper) {
            best_upper = o.best_upper;
            upper_cut = o.upper_cut;
            upper_fragment = o.upper_fragment;
        } else if (o.best_upper == best_upper && o.best_upper != INT_MAX) {
            int c = WordSet<W>::compare_lex(o.upper_cut, upper_cut);
            if (c < 0 || (c == 0 &&
                          WordSet<W>::compare_lex(o.upper_fragment, upper_fragment) < 0)) {
                upper_cut = o.upper_cut;
                upper_fragment = o.upper_fragment;
            }
        }
        tripped = tripped || o.tripped;
        states += o.states;
    }
};

template <int W>
struct FragmentSearcher {
    const std::vector<WordSet<W>>& adj;
    WordSet<W> all;
    int universe;
    int h;
    int cap;
    std::uint64_t quota;
    FragmentOutcome<W>& out;

    // The boundary alone may strand outside vertices in components smaller
    // than h+1; absorbing those into the cut yields a genuine h-extra cut.
    // For the smallest side of a minimum cut this absorption reproduces the
    // cut exactly, so the minimum over all fragments is kappa_h itself once
    // the sound size cap has been enumerated.
    void consider(const WordSet<W>& frag, int frag_size, const WordSet<W>& open_nb,
                  int nb_size, int rest_count, const WordSet<W>& closed) {
        if (frag_size < h + 1 || rest_count < h + 1) return;
        out.best_lower = std::min(out.best_lower, nb_size);
        if (nb_size > out.best_upper) return;  // absorption only grows the cut

        WordSet<W> cut = open_nb;
        int cut_size = nb_size;
        WordSet<W> scan = all;
        scan.andnot(closed);
        bool any_big = false;
        while (scan.any()) {
            WordSet<W> comp = detail::bfs_component<W>(adj, scan, scan.first());
            int order = comp.popcount();
            if (order < h + 1) {
                cut |= comp;
                cut_size += order;
                if (cut_size > out.best_upper) return;
            } else {
                any_big = true;
            }
            scan.andnot(comp);
        }
        if (!any_big) return;  // absorbing everything left no second side

        if (cut_size == out.best_upper) {
            int c = WordSet<W>::compare_lex(cut, out.upper_cut);
            if (c > 0 ||
                (c == 0 && WordSet<W>::compare_lex(frag, out.upper_fragment) >= 0))
                return;
        }
        out.best_upper = cut_size;
        out.upper_cut = cut;
        out.upper_fragment = frag;
    }

    // Connected-superset enumeration: candidates are popped in ascending
    // order; a popped candidate is included in one child and banned for the
    // remaining siblings, so every connected set is visited exactly once.
    void expand(const WordSet<W>& frag, int frag_size, const WordSet<W>& closed,
                const WordSet<W>& ext, const WordSet<W>& allowed) {
        if (out.tripped) return;
        if (++out.states > quota) {
            out.tripped = true;
            return;
        }

        WordSet<W> open_nb = closed;
        open_nb.andnot(frag);
        int nb_size = open_nb.popcount();
        int rest_count = universe - frag_size - nb_size;

        consider(frag, frag_size, open_nb, nb_size, rest_count, closed);

        if (frag_size >= cap) return;
        if (rest_count < h + 1) return;  // shrinks monotonically along any extension
        // each added vertex lowers the boundary by at most one
        if (nb_size - (cap - frag_size) > out.best_upper) return;

        WordSet<W> avail = ext;
        while (avail.any()) {
            int v = avail.first();
            avail.clear(v);
            WordSet<W> child = frag;
            child.set(v);
            WordSet<W> child_closed = closed;
            child_closed |= adj[static_cast<std::size_t>(v)];
            child_closed.set(v);
            WordSet<W> fresh = adj[static_cast<std::size_t>(v)];
            fresh.andnot(closed);
            fresh &= allowed;
            WordSet<W> child_ext = avail;
            child_ext |= fresh;
            expand(child, frag_size + 1, child_closed, child_ext, allowed);
            if (out.tripped) return;
        }
    }
};

template <int W>
ExtraConnectivityResult fragment_impl(const Graph& g, int h, const SearchBudget& budget,
                                      bool symmetric) {
    const int n = g.vertex_count();
    auto adj = detail::adjacency_words<W>(g);
    auto all = detail::full_set<W>(n);

    const int kappa = vertex_connectivity(g);
    // the smallest side of any cut of size >= kappa fits in half the remainder
    const int sound_cap = (n - kappa) / 2;
    int cap = std::min(budget.max_fragment_size.value_or(sound_cap), sound_cap);

    ExtraConnectivityResult result;
    result.h = h;

    if (sound_cap < h + 1) {
        // too few vertices for two components of order h+1 outside any cut
        result.evidence = Evidence{EvidenceKind::FragmentExact, -1, -1, sound_cap, 0};
        return result;
    }

    struct Task {
        WordSet<W> frag{};
        int size = 0;
        WordSet<W> closed{};
        WordSet<W> ext{};
        WordSet<W> allowed{};
    };

    std::vector<Task> tasks;
    FragmentOutcome<W> root_out;  // evaluations of the anchor sets themselves

    auto make_tasks = [&](int anchor, const WordSet<W>& allowed) {
        WordSet<W> frag{};
        frag.set(anchor);
        WordSet<W> closed = adj[static_cast<std::size_t>(anchor)];
        closed.set(anchor);
        WordSet<W> ext = adj[static_cast<std::size_t>(anchor)];
        ext &= allowed;

        FragmentSearcher<W> rootsearch{adj, all, n, h, cap,
                                       std::numeric_limits<std::uint64_t>::max(), root_out};
        WordSet<W> open_nb = closed;
        open_nb.andnot(frag);
        int nb_size = open_nb.popcount();
        rootsearch.consider(frag, 1, open_nb, nb_size, n - 1 - nb_size, closed);

        WordSet<W> avail = ext;
        while (avail.any()) {
            int v = avail.first();
            avail.clear(v);
            Task t;
            t.frag = frag;
            t.frag.set(v);
            t.size = 2;
            t.closed = closed;
            t.closed |= adj[static_cast<std::size_t>(v)];
            t.closed.set(v);
            WordSet<W> fresh = adj[static_cast<std::size_t>(v)];
            fresh.andnot(closed);
            fresh &= allowed;
            t.ext = avail;
            t.ext |= fresh;
            t.allowed = allowed;
            tasks.push_back(t);
        }
    };

    if (symmetric) {
        make_tasks(0, all);
    } else {
        for (int a = 0; a < n; ++a) {
            WordSet<W> allowed{};
            for (int v = a; v < n; ++v) allowed.set(v);
            make_tasks(a, allowed);
        }
    }

    // Deterministic first pass over tiny fragments seeds the pruning bound
    // every branch starts from, independent of scheduling.
    FragmentOutcome<W> seed_out;
    if (cap > h + 1) {
        for (const Task& t : tasks) {
            FragmentSearcher<W> s{adj, all, n, h, h + 1,
                                  std::numeric_limits<std::uint64_t>::max(), seed_out};
            if (t.size <= h + 1) s.expand(t.frag, t.size, t.closed, t.ext, t.allowed);
        }
        seed_out.best_lower = INT_MAX;  // keep only the pruning bound
        seed_out.states = 0;
    }

    std::uint64_t quota =
        std::max<std::uint64_t>(1, budget.work_ceiling /
                                       std::max<std::size_t>(1, tasks.size()));
    std::vector<FragmentOutcome<W>> outcomes(tasks.size());
    detail::run_blocks(static_cast<int>(tasks.size()), budget.workers, [&](int b) {
        auto& slot = outcomes[static_cast<std::size_t>(b)];
        slot.best_upper = seed_out.best_upper;
        slot.upper_cut = seed_out.upper_cut;
        slot.upper_fragment = seed_out.upper_fragment;
        FragmentSearcher<W> s{adj, all, n, h, cap, quota, slot};
        const Task& t = tasks[static_cast<std::size_t>(b)];
        s.expand(t.frag, t.size, t.closed, t.ext, t.allowed);
    });

    FragmentOutcome<W> merged = root_out;
    if (seed_out.best_upper != INT_MAX) {
        // the seed pass already proved this upper bound
        merged.merge(seed_out);
    }
    for (const auto& o : outcomes) merged.merge(o);

    const bool complete = !merged.tripped;
    const bool full_cap = cap == sound_cap;
    const bool have_upper = merged.best_upper != INT_MAX;

    if (have_upper) {
        VertexSet cut = detail::to_vertex_set<W>(merged.upper_cut, n);
        result.certificate = CutCertificate{cut, components(g, cut)};
    }

    if (complete && full_cap) {
        // the smallest side of any minimum h-extra cut is a fragment within
        // the sound cap whose absorbed boundary reproduces that cut, so the
        // minimum over everything enumerated is exact; no minimum at all
        // means no h-extra cut exists
        if (!have_upper) {
            result.evidence = Evidence{EvidenceKind::FragmentExact, -1, -1, cap,
                                       merged.states};
            return result;
        }
        result.value = merged.best_upper;
        result.evidence = Evidence{EvidenceKind::FragmentExact, merged.best_upper,
                                   merged.best_upper, cap, merged.states};
        return result;
    }

    // under a size cap the uncovered large-fragment case only leaves the
    // plain connectivity floor
    int floor = kappa;
    if (complete) {
        result.evidence = Evidence{EvidenceKind::BoundsOnly, floor,
                                   have_upper ? merged.best_upper : -1, cap,
                                   merged.states};
    } else {
        result.evidence = Evidence{EvidenceKind::Inconclusive, floor,
                                   have_upper ? merged.best_upper : -1, cap,
                                   merged.states};
    }
    return result;
}

} // namespace

ExtraConnectivityResult fragment_search_bounds(const Graph& g, int h,
                                               const SearchBudget& budget,
                                               const CubeMeta* symmetry) {
    if (h < 0) throw std::invalid_argument("h must be non-negative");
    require_connected(g);
    if (symmetry) require_vertex_transitive(g, *symmetry);
    return dispatch_words(g.vertex_count(), [&](auto w) {
        return fragment_impl<decltype(w)::value>(g, h, budget, symmetry != nullptr);
    });
}

} // namespace cubekappa

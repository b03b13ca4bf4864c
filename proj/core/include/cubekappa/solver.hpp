#ifndef CUBEKAPPA_SOLVER_HPP
#define CUBEKAPPA_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cubekappa/cube.hpp"
#include "cubekappa/graph.hpp"

namespace cubekappa {

/// Limits for the search engines. Work ceilings are applied at deterministic
/// granularity (whole subset sizes for the exhaustive engine, fixed per-branch
/// quotas for fragment search) so that results never depend on thread timing.
struct SearchBudget {
    std::optional<int> max_cut_size;       // exhaustive: largest |S| to try
    std::optional<int> max_fragment_size;  // fragment search: cap override
    std::uint64_t work_ceiling = 8'000'000'000ULL;
    int workers = 0;                       // 0 = all hardware threads
};

enum class EvidenceKind {
    Exhaustive,     // every subset up to searched_bound enumerated
    FragmentExact,  // fragment search completed its sound size cap; value exact
    BoundsOnly,     // certified lower and witnessed upper bounds only
    Inconclusive,   // a work ceiling tripped before the search completed
};

struct Evidence {
    EvidenceKind kind = EvidenceKind::Inconclusive;
    int lower = -1;           // certified lower bound (-1 = none recorded)
    int upper = -1;           // witnessed upper bound (-1 = none found)
    int searched_bound = -1;  // exhaustive: last size fully swept; fragment: size cap
    std::uint64_t work = 0;   // deterministic count of fully completed enumeration
};

const char* evidence_kind_name(EvidenceKind kind);

struct CutCertificate {
    VertexSet cut;
    std::vector<VertexSet> comps;
};

/// Outcome of an h-extra connectivity search. `value` is set only when the
/// search proved the exact answer; a certificate with value absent witnesses
/// the evidence's upper bound instead.
struct ExtraConnectivityResult {
    int h = 0;
    std::optional<int> value;
    std::optional<CutCertificate> certificate;
    Evidence evidence;
};

/// Exact vertex connectivity by vertex-disjoint path maximization over
/// non-adjacent pairs, with kappa(K_m) = m - 1. Requires >= 2 vertices.
int vertex_connectivity(const Graph& g);

/// True iff every minimum vertex cut leaves exactly two components, one of
/// them a singleton. Decided by enumerating all subsets of size kappa.
/// Requires a connected graph on >= 3 vertices.
bool is_super_connected(const Graph& g, const SearchBudget& budget = {});

int common_neighbor_count(const Graph& g, int u, int v);

/// Ground-truth engine: enumerates subsets in (size ascending, lexicographic)
/// order and reports the first h-extra cut found. The certificate is the
/// lexicographically smallest cut of the witnessing size regardless of worker
/// count. With no cut up to the searched bound, value is absent and the bound
/// is recorded.
ExtraConnectivityResult exact_extra_connectivity(const Graph& g, int h,
                                                 const SearchBudget& budget = {});

/// Fragment engine: enumerates connected vertex sets A with |A| >= h+1 and
/// |V - N[A]| >= h+1. Each boundary N(A), with any stranded too-small outside
/// components absorbed, is an h-extra cut; the smallest side of a minimum cut
/// is itself such a fragment, so completing the sound size cap
/// floor((|V| - kappa)/2) makes the minimum exact. Under a tighter budget the
/// result degrades to certified bounds. When `symmetry` is supplied the
/// enumeration anchors every fragment at vertex 0, which is sound only for
/// vertex-transitive graphs and is asserted against the cube's digit
/// translations.
ExtraConnectivityResult fragment_search_bounds(const Graph& g, int h,
                                               const SearchBudget& budget = {},
                                               const CubeMeta* symmetry = nullptr);

} // namespace cubekappa

#endif

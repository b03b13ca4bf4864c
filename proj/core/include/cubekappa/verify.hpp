#ifndef CUBEKAPPA_VERIFY_HPP
#define CUBEKAPPA_VERIFY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubekappa/cube.hpp"
#include "cubekappa/graph.hpp"
#include "cubekappa/solver.hpp"

namespace cubekappa {

/// Structural outcome of deleting a fault set, described by the non-largest
/// components. Matching is on component orders and shapes only.
enum class CutPattern {
    Connected,
    IsolatedVertex,         // two components, the small side a singleton
    SmallSideWeightTwo,     // small side an edge, or two separate singletons
    SmallSideOrderThree,    // two components, small side on at most 3 vertices
    TwoIsolatedVertices,    // three components, two of them singletons
    VertexPlusEdge,         // three components: a singleton and an edge
    ThreeIsolatedVertices,  // four components, three of them singletons
    Violation,
};

inline constexpr int kCutPatternCount = 8;

const char* cut_pattern_name(CutPattern p);

bool pattern_satisfied(CutPattern p, const std::vector<VertexSet>& comps);

/// First pattern satisfied in declaration order, Violation when none is.
CutPattern classify_cut_pattern(const std::vector<VertexSet>& comps);

/// Allowed-pattern sets for residual small sides of total order 1, 2 and 3.
std::vector<CutPattern> patterns_small_side(int max_weight);

struct LabeledComponent {
    VertexSet members;
    std::optional<ComponentShape> shape;  // set for every non-largest component
};

struct CutReport {
    VertexSet fault_set;
    std::vector<LabeledComponent> comps;  // size descending, min vertex ascending
    CutPattern matched = CutPattern::Connected;
};

CutReport make_cut_report(const Graph& g, const VertexSet& faults);

struct SampleSpec {
    std::uint64_t seed = 0;
    std::uint64_t count = 0;
};

struct VerificationScope {
    bool exhaustive = true;
    int size_bound = 0;
    SampleSpec sample;  // meaningful when !exhaustive
};

struct ViolationRecord {
    std::string detail;
    CutReport report;
};

inline constexpr std::size_t kMaxRetainedViolations = 16;

struct VerificationOutcome {
    std::string claim;
    VerificationScope scope;
    std::uint64_t checked_count = 0;
    std::uint64_t skipped_count = 0;   // samples outside a claim's hypothesis
    std::uint64_t violation_count = 0;
    std::vector<ViolationRecord> violations;  // first few, in deterministic order
    std::array<std::uint64_t, kCutPatternCount> pattern_counts{};
    std::optional<int> smallest_disconnecting_size;
    bool pass = false;
};

/// Adjacent vertices of Q_n^3 share exactly one neighbor; non-adjacent ones
/// share zero or two. Checked over all vertex pairs.
VerificationOutcome verify_common_neighbors(const CubeMeta& meta);

struct VerifyMode {
    bool exhaustive = true;
    SampleSpec sample;

    static VerifyMode exhaustively() { return VerifyMode{true, {}}; }
    static VerifyMode sampled(std::uint64_t seed, std::uint64_t count) {
        return VerifyMode{false, {seed, count}};
    }
};

/// Every fault set up to `size_bound` (or a seeded sample of such sets) that
/// disconnects g must satisfy one of `allowed`. Sampled mode mixes uniform
/// sets with neighborhoods of small connected fragments padded by random
/// vertices, since uniform sets almost never disconnect larger cubes.
VerificationOutcome verify_bounded_cut_structure(const Graph& g, int size_bound,
                                                 const std::vector<CutPattern>& allowed,
                                                 const VerifyMode& mode,
                                                 const SearchBudget& budget = {});

/// For sampled fault sets F with |F| <= 8n-13: whenever at most two subcube
/// classes are internally disconnected, the union of the remaining classes
/// minus their fault slices stays connected, and any component of g - F that
/// avoids it has all outside neighbors inside F. Requires radix 3 and n >= 4.
VerificationOutcome verify_subcube_union_connected(const Graph& g, const CubeMeta& meta,
                                                   int j, const SampleSpec& sample,
                                                   const SearchBudget& budget = {});

/// Degree and edge-count identities, partition class sizes and cross-edge
/// counts, outer-neighbor membership, and (at orbit-friendly sizes) single
/// vertex and edge orbits under the generated automorphisms.
VerificationOutcome verify_regularity_partition_transitivity(const CubeMeta& meta);

} // namespace cubekappa

#endif

// Acceptance suite: every release-gating check as one pass/fail line.
// Each criterion is exact; the time limits are part of the contract.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "cubekappa/cli.hpp"
#include "cubekappa/constructions.hpp"
#include "cubekappa/cube.hpp"
#include "cubekappa/graph.hpp"
#include "cubekappa/solver.hpp"
#include "cubekappa/store.hpp"
#include "cubekappa/verify.hpp"
#include "corpus.hpp"
#include "oracle.hpp"

using namespace cubekappa;

namespace {

int failures = 0;

class Criterion {
public:
    Criterion(int id, std::string title, double limit_seconds)
        : id_(id), title_(std::move(title)), limit_(limit_seconds),
          start_(std::chrono::steady_clock::now()) {}

    void require(bool ok, const std::string& detail) {
        if (!ok && problem_.empty()) problem_ = detail;
    }

    ~Criterion() {
        double elapsed = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start_)
                             .count();
        bool ok = problem_.empty() && elapsed < limit_;
        if (problem_.empty() && elapsed >= limit_)
            problem_ = "exceeded the " + std::to_string(limit_) + " s limit";
        std::printf("[%s] criterion %2d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", id_,
                    title_.c_str(), elapsed, problem_.empty() ? "" : " -- ",
                    problem_.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }

private:
    int id_;
    std::string title_;
    double limit_;
    std::chrono::steady_clock::time_point start_;
    std::string problem_;
};

std::string show(std::optional<int> v) {
    return v ? std::to_string(*v) : "none";
}

void criterion_1_classical_connectivity() {
    Criterion c(1, "kappa(Q_n^3) = 2n for n in {2,3,4}, each under a second", 3.0);
    for (int n : {2, 3, 4}) {
        auto t0 = std::chrono::steady_clock::now();
        int kappa = vertex_connectivity(build_kary_cube(3, n).graph);
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                        .count();
        c.require(kappa == 2 * n,
                  "n=" + std::to_string(n) + " gave " + std::to_string(kappa));
        c.require(dt < 1.0, "n=" + std::to_string(n) + " took " + std::to_string(dt));
    }
}

void criterion_2_super_connected() {
    Criterion c(2, "every minimum cut of Q_2^3 and Q_3^3 isolates a vertex", 60.0);
    c.require(is_super_connected(build_kary_cube(3, 2).graph), "9-vertex cube failed");
    c.require(is_super_connected(build_kary_cube(3, 3).graph), "27-vertex cube failed");
}

void criterion_3_low_order_extra() {
    Criterion c(3, "kappa_1(Q_2^3)=5, kappa_1(Q_3^3)=9, kappa_2(Q_3^3)=11, exhaustive",
                300.0);
    auto q2 = build_kary_cube(3, 2);
    auto q3 = build_kary_cube(3, 3);

    auto r12 = exact_extra_connectivity(q2.graph, 1);
    c.require(r12.value == 5 && r12.evidence.kind == EvidenceKind::Exhaustive,
              "kappa_1 of the 9-vertex cube: " + show(r12.value));

    auto r13 = exact_extra_connectivity(q3.graph, 1);
    c.require(r13.value == 9 && r13.evidence.kind == EvidenceKind::Exhaustive,
              "kappa_1 of the 27-vertex cube: " + show(r13.value));

    auto r23 = exact_extra_connectivity(q3.graph, 2);
    c.require(r23.value == 11 && r23.evidence.kind == EvidenceKind::Exhaustive,
              "kappa_2 of the 27-vertex cube: " + show(r23.value));
    c.require(r23.certificate && is_h_extra_cut(q3.graph, r23.certificate->cut, 2),
              "kappa_2 certificate does not check out");
}

void criterion_4_three_extra_at_n3() {
    Criterion c(4, "kappa_3(Q_3^3) = 12: no 3-extra cut of size <= 11 exists", 600.0);
    auto q3 = build_kary_cube(3, 3);

    auto r = exact_extra_connectivity(q3.graph, 3);
    c.require(r.value == 12, "exhaustive value: " + show(r.value));
    c.require(r.evidence.kind == EvidenceKind::Exhaustive, "evidence not exhaustive");
    c.require(r.certificate.has_value() && r.certificate->cut.count() == 12 &&
                  is_h_extra_cut(q3.graph, r.certificate->cut, 3),
              "witness of size 12 missing or invalid");

    auto construction = extremal_cut(q3.graph, q3.meta, 3);
    c.require(construction.cut_size == 12 &&
                  verify_extremal_cut(q3.graph, construction, 3),
              "canonical 12-vertex construction failed to verify");
}

void criterion_5_construction_sizes() {
    Criterion c(5, "canonical cut has 8n-12 vertices and verifies for n in 3..8", 10.0);
    for (int n = 3; n <= 8; ++n) {
        auto cube = build_kary_cube(3, n);
        auto report = extremal_cut(cube.graph, cube.meta, 3);
        c.require(report.cut_size == 8 * n - 12,
                  "n=" + std::to_string(n) + " size " + std::to_string(report.cut_size));
        c.require(report.layer_sizes ==
                      std::vector<int>{2 * n - 2, 2 * n - 3, 2 * n - 3, 2 * n - 4},
                  "n=" + std::to_string(n) + " layer sizes off");
        c.require(verify_extremal_cut(cube.graph, report, 3),
                  "n=" + std::to_string(n) + " residual structure wrong");
    }
}

void criterion_6_common_neighbors() {
    Criterion c(6, "common-neighbor law holds exhaustively for n in {2,3,4}", 1.0);
    for (int n : {2, 3, 4}) {
        auto out = verify_common_neighbors(make_cube_meta(3, n));
        c.require(out.pass, "n=" + std::to_string(n) + " violated");
        std::uint64_t pairs = out.checked_count;
        std::uint64_t vertices = 1;
        for (int i = 0; i < n; ++i) vertices *= 3;
        c.require(pairs == vertices * (vertices - 1) / 2,
                  "n=" + std::to_string(n) + " pair count " + std::to_string(pairs));
    }
}

void criterion_7_cut_structure_sweeps() {
    Criterion c(7, "small-side structure sweeps are violation-free", 600.0);
    auto q2 = build_kary_cube(3, 2);
    auto q3 = build_kary_cube(3, 3);

    auto a = verify_bounded_cut_structure(q2.graph, 4, patterns_small_side(1),
                                          VerifyMode::exhaustively());
    c.require(a.pass && a.checked_count == 256, "9-vertex sweep to 4");

    auto b = verify_bounded_cut_structure(q3.graph, 8, patterns_small_side(1),
                                          VerifyMode::exhaustively());
    c.require(b.pass && b.checked_count == 3505699, "27-vertex sweep to 8");

    auto d = verify_bounded_cut_structure(q3.graph, 10, patterns_small_side(2),
                                          VerifyMode::exhaustively());
    c.require(d.pass && d.checked_count == 16628809, "27-vertex sweep to 10");

    auto e = verify_bounded_cut_structure(q3.graph, 11, patterns_small_side(3),
                                          VerifyMode::exhaustively());
    c.require(e.pass && e.checked_count == 29666704, "27-vertex sweep to 11");
    c.require(e.smallest_disconnecting_size == 6,
              "smallest disconnecting size should equal plain connectivity");
}

void criterion_8_scale_four() {
    Criterion c(8, "81-vertex cube: honest fragment bounds plus 1e5 seeded checks",
                1800.0);
    auto q4 = build_kary_cube(3, 4);

    SearchBudget stated;
    stated.max_fragment_size = 6;         // stated budget: fragments up to 6 vertices
    stated.work_ceiling = 2'000'000'000;  // and room to finish them
    auto bounds = fragment_search_bounds(q4.graph, 3, stated, &q4.meta);
    c.require(bounds.evidence.upper == 20,
              "upper bound " + std::to_string(bounds.evidence.upper));
    bool exact20 = bounds.evidence.kind == EvidenceKind::FragmentExact &&
                   bounds.value == 20;
    bool honest = bounds.evidence.kind == EvidenceKind::BoundsOnly &&
                  bounds.evidence.lower >= vertex_connectivity(q4.graph) &&
                  bounds.evidence.lower <= 20 && !bounds.value.has_value();
    c.require(exact20 || honest, "evidence neither exact nor honestly bounded");
    c.require(bounds.certificate &&
                  is_h_extra_cut(q4.graph, bounds.certificate->cut, 3) &&
                  bounds.certificate->cut.count() == 20,
              "20-vertex witness missing or invalid");

    auto join1 = verify_subcube_union_connected(q4.graph, q4.meta, 0, {1, 100000});
    c.require(join1.pass && join1.checked_count == 100000,
              "subcube-join sampling found a violation");
    auto join2 = verify_subcube_union_connected(q4.graph, q4.meta, 0, {1, 100000});
    c.require(join1.checked_count == join2.checked_count &&
                  join1.skipped_count == join2.skipped_count &&
                  join1.violation_count == join2.violation_count &&
                  join1.pattern_counts == join2.pattern_counts,
              "subcube-join sampling is not reproducible from its seed");

    auto pat1 = verify_bounded_cut_structure(q4.graph, 19, patterns_small_side(3),
                                             VerifyMode::sampled(2, 100000));
    c.require(pat1.pass && pat1.checked_count == 100000,
              "structure sampling found a violation");
    auto pat2 = verify_bounded_cut_structure(q4.graph, 19, patterns_small_side(3),
                                             VerifyMode::sampled(2, 100000));
    c.require(pat1.pattern_counts == pat2.pattern_counts &&
                  pat1.violation_count == pat2.violation_count,
              "structure sampling is not reproducible from its seed");
    std::uint64_t disconnecting = 0;
    for (int i = 1; i < kCutPatternCount; ++i)
        disconnecting += pat1.pattern_counts[static_cast<std::size_t>(i)];
    c.require(disconnecting >= 10000, "adversarial samples rarely disconnect");
}

void criterion_9_oracle_equivalence() {
    Criterion c(9, "fragment search equals exhaustive search wherever both run", 600.0);
    for (const auto& g : corpus::small_graphs()) {
        if (components(g, VertexSet(g.vertex_count())).size() != 1) continue;
        for (int h = 0; h <= 3; ++h) {
            auto exact = exact_extra_connectivity(g, h);
            auto frag = fragment_search_bounds(g, h);
            c.require(exact.value == frag.value,
                      "corpus graph with " + std::to_string(g.vertex_count()) +
                          " vertices at h=" + std::to_string(h) + ": exhaustive " +
                          show(exact.value) + " vs fragment " + show(frag.value));
            if (g.vertex_count() <= 10 && h <= 2) {
                auto naive = oracle::extra_connectivity_naive(
                    corpus::to_adjlist(g), h, g.vertex_count() - 2 * (h + 1));
                c.require(exact.value == naive.value, "naive oracle disagrees");
            }
        }
    }
    auto q2 = build_kary_cube(3, 2);
    for (int h : {0, 1}) {
        auto exact = exact_extra_connectivity(q2.graph, h);
        auto frag = fragment_search_bounds(q2.graph, h, {}, &q2.meta);
        c.require(exact.value == frag.value, "9-vertex cube h=" + std::to_string(h));
    }
    auto q3 = build_kary_cube(3, 3);
    for (int h : {0, 1, 2, 3}) {
        auto exact = exact_extra_connectivity(q3.graph, h);
        auto frag = fragment_search_bounds(q3.graph, h, {}, &q3.meta);
        c.require(exact.value == frag.value && frag.value.has_value(),
                  "27-vertex cube h=" + std::to_string(h) + ": exhaustive " +
                      show(exact.value) + " vs fragment " + show(frag.value));
        c.require(frag.evidence.kind == EvidenceKind::FragmentExact,
                  "fragment evidence not exact at h=" + std::to_string(h));
    }
}

void criterion_10_determinism() {
    Criterion c(10, "task records are byte-identical across worker counts", 600.0);
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "cubekappa-acceptance-cache";
    fs::remove_all(dir);

    auto record_for = [&](const std::vector<std::string>& base, int workers) {
        std::vector<std::string> args = base;
        args.push_back("--workers");
        args.push_back(std::to_string(workers));
        args.push_back("--force");
        args.push_back("--cache-dir");
        args.push_back(dir.string());
        std::ostringstream out, err;
        run_command(args, out, err);
        json j = json::parse(out.str());
        j.erase("duration_ms");
        return j.dump();
    };

    const std::vector<std::vector<std::string>> tasks = {
        {"extra", "--k", "3", "--n", "3", "--h", "1"},
        {"extra", "--k", "3", "--n", "3", "--h", "3", "--mode", "fragment"},
        {"verify", "--claim", "cut-structure-1", "--k", "3", "--n", "3"},
    };
    for (const auto& task : tasks) {
        std::string one = record_for(task, 1);
        std::string two = record_for(task, 2);
        std::string four = record_for(task, 4);
        c.require(one == two && one == four,
                  "records diverge for task '" + task[0] + " " + task[2] + "'");
    }
    fs::remove_all(dir);
}

} // namespace

int main() {
    std::printf("acceptance suite, tool version %s\n", kToolVersion);
    criterion_1_classical_connectivity();
    criterion_2_super_connected();
    criterion_3_low_order_extra();
    criterion_4_three_extra_at_n3();
    criterion_5_construction_sizes();
    criterion_6_common_neighbors();
    criterion_7_cut_structure_sweeps();
    criterion_8_scale_four();
    criterion_9_oracle_equivalence();
    criterion_10_determinism();
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}

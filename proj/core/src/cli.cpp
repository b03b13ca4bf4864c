#include "cubekappa/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "cubekappa/constructions.hpp"
#include "cubekappa/cube.hpp"
#include "cubekappa/graph.hpp"
#include "cubekappa/solver.hpp"
#include "cubekappa/store.hpp"
#include "cubekappa/verify.hpp"

namespace cubekappa {
namespace {

struct Options {
    int k = 3;
    int n = 3;
    int h = 3;
    std::string mode;
    std::optional<int> bound;
    std::uint64_t seed = 0;
    std::uint64_t samples = 100000;
    std::optional<std::uint64_t> work_ceiling;
    int workers = 0;
    std::string cache_dir;
    bool force = false;
    bool with_super = false;
    bool clear_cache = false;
    std::string format = "json";
    std::string out_path;
    std::string claim;
    int dimension = 0;
};

std::string canonical_claim(const std::string& name) {
    if (name == "common-neighbors" || name == "l31") return "common-neighbors";
    if (name == "cut-structure-1" || name == "l33") return "cut-structure-1";
    if (name == "cut-structure-2" || name == "l34") return "cut-structure-2";
    if (name == "cut-structure-3" || name == "thm37" || name == "t37")
        return "cut-structure-3";
    if (name == "subcube-join" || name == "l36") return "subcube-join";
    if (name == "cube-basics" || name == "basics" || name == "l21" || name == "l23" ||
        name == "l24")
        return "cube-basics";
    throw CLI::ValidationError("--claim", "unknown claim: " + name);
}

void flatten_table(const json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            flatten_table(value, prefix.empty() ? key : prefix + "." + key, out);
    } else {
        out << prefix << " = " << j.dump() << '\n';
    }
}

void emit_record(const TaskRecord& record, const Options& opts, std::ostream& out) {
    json j = to_json(record);
    std::string rendered;
    if (opts.format == "table") {
        std::ostringstream buf;
        flatten_table(j, "", buf);
        rendered = buf.str();
    } else {
        rendered = j.dump(2) + "\n";
    }
    out << rendered;
    if (!opts.out_path.empty() && opts.out_path != "-") {
        std::ofstream file(opts.out_path, std::ios::trunc);
        if (!file) throw std::runtime_error("cannot write " + opts.out_path);
        file << rendered;
    }
}

int exit_code_for(const TaskRecord& record) {
    const json& r = record.result;
    if (r.contains("verdict") && r["verdict"] == "fail") return kExitViolation;
    if (r.contains("verified") && r["verified"] == false) return kExitViolation;
    if (r.contains("evidence") && r["evidence"].contains("kind") &&
        r["evidence"]["kind"] == "inconclusive")
        return kExitInconclusive;
    return kExitSuccess;
}

std::filesystem::path resolve_cache_dir(const Options& opts) {
    if (!opts.cache_dir.empty()) return opts.cache_dir;
    return default_cache_dir();
}

/// Runs `compute` through the cache. Worker counts and output knobs are
/// execution details, deliberately outside the key and the parameters.
template <class Compute>
int run_cached(const std::string& kind, const json& params, const Options& opts,
               std::ostream& out, std::ostream& err, Compute&& compute) {
    ResultCache cache(resolve_cache_dir(opts));
    std::string key = ResultCache::key_for(kind, params, kToolVersion);
    if (!opts.force) {
        if (auto hit = cache.lookup(key, &err)) {
            emit_record(*hit, opts, out);
            return exit_code_for(*hit);
        }
    }
    auto start = std::chrono::steady_clock::now();
    json result = compute();
    auto stop = std::chrono::steady_clock::now();

    TaskRecord record;
    record.kind = kind;
    record.parameters = params;
    record.result = std::move(result);
    record.duration_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    cache.store(key, record);
    emit_record(record, opts, out);
    return exit_code_for(record);
}

SearchBudget budget_from(const Options& opts) {
    SearchBudget budget;
    budget.workers = opts.workers;
    if (opts.work_ceiling) budget.work_ceiling = *opts.work_ceiling;
    return budget;
}

int handle_build(const Options& opts, std::ostream& out) {
    auto cube = build_kary_cube(opts.k, opts.n);
    json params;
    params["k"] = opts.k;
    params["n"] = opts.n;
    json result;
    result["vertices"] = cube.graph.vertex_count();
    result["edges"] = cube.graph.edge_count();
    result["min_degree"] = cube.graph.min_degree();
    result["max_degree"] = [&] {
        int d = 0;
        for (int v = 0; v < cube.graph.vertex_count(); ++v)
            d = std::max(d, cube.graph.degree(v));
        return d;
    }();
    TaskRecord record{"build", params, result, kToolVersion, 0.0};
    emit_record(record, opts, out);
    return kExitSuccess;
}

int handle_kappa(const Options& opts, std::ostream& out, std::ostream& err) {
    json params;
    params["k"] = opts.k;
    params["n"] = opts.n;
    params["super"] = opts.with_super;
    return run_cached("kappa", params, opts, out, err, [&] {
        auto cube = build_kary_cube(opts.k, opts.n);
        json result;
        result["kappa"] = vertex_connectivity(cube.graph);
        if (opts.with_super)
            result["super_connected"] = is_super_connected(cube.graph, budget_from(opts));
        return result;
    });
}

int handle_extra(const Options& opts, std::ostream& out, std::ostream& err) {
    std::string mode = opts.mode.empty() ? "exhaustive" : opts.mode;
    if (mode != "exhaustive" && mode != "fragment")
        throw CLI::ValidationError("--mode", "extra supports exhaustive or fragment");
    json params;
    params["k"] = opts.k;
    params["n"] = opts.n;
    params["h"] = opts.h;
    params["mode"] = mode;
    if (opts.bound) params["bound"] = *opts.bound;
    return run_cached("extra", params, opts, out, err, [&] {
        auto cube = build_kary_cube(opts.k, opts.n);
        SearchBudget budget = budget_from(opts);
        ExtraConnectivityResult res;
        if (mode == "exhaustive") {
            budget.max_cut_size = opts.bound;
            res = exact_extra_connectivity(cube.graph, opts.h, budget);
        } else {
            budget.max_fragment_size = opts.bound;
            // keep unbounded fragment sweeps interactive; the library default
            // ceiling is meant for scripted exhaustive runs
            if (!opts.work_ceiling) budget.work_ceiling = 400'000'000ULL;
            res = fragment_search_bounds(cube.graph, opts.h, budget, &cube.meta);
        }
        return extra_result_json(res, &cube.meta);
    });
}

int handle_construct(const Options& opts, std::ostream& out, std::ostream& err) {
    json params;
    params["k"] = opts.k;
    params["n"] = opts.n;
    params["h"] = opts.h;
    return run_cached("construct", params, opts, out, err, [&] {
        auto cube = build_kary_cube(opts.k, opts.n);
        auto report = extremal_cut(cube.graph, cube.meta, opts.h);
        json result = construction_json(report, cube.meta);
        result["verified"] = verify_extremal_cut(cube.graph, report, opts.h);
        return result;
    });
}

int handle_verify(const Options& opts, std::ostream& out, std::ostream& err) {
    std::string claim = canonical_claim(opts.claim);
    std::string mode = opts.mode.empty()
                           ? (claim == "subcube-join" ? "sample" : "exhaustive")
                           : opts.mode;
    if (mode != "exhaustive" && mode != "sample")
        throw CLI::ValidationError("--mode", "verify supports exhaustive or sample");

    json params;
    params["k"] = opts.k;
    params["n"] = opts.n;
    params["claim"] = claim;
    params["mode"] = mode;
    int weight = claim == "cut-structure-1" ? 1 : claim == "cut-structure-2" ? 2 : 3;
    std::optional<int> bound;
    if (claim.rfind("cut-structure-", 0) == 0) {
        int default_bound = weight == 1   ? 4 * opts.n - 4
                            : weight == 2 ? 6 * opts.n - 8
                                          : 8 * opts.n - 13;
        bound = opts.bound.value_or(default_bound);
        params["bound"] = *bound;
    }
    if (mode == "sample" || claim == "subcube-join") {
        params["seed"] = opts.seed;
        params["samples"] = opts.samples;
    }
    if (claim == "subcube-join") params["dimension"] = opts.dimension;

    return run_cached("verify", params, opts, out, err, [&] {
        auto meta = make_cube_meta(opts.k, opts.n);
        SearchBudget budget = budget_from(opts);
        VerificationOutcome outcome;
        if (claim == "common-neighbors") {
            outcome = verify_common_neighbors(meta);
        } else if (claim == "cube-basics") {
            outcome = verify_regularity_partition_transitivity(meta);
        } else if (claim == "subcube-join") {
            auto cube = build_kary_cube(opts.k, opts.n);
            outcome = verify_subcube_union_connected(
                cube.graph, cube.meta, opts.dimension, {opts.seed, opts.samples}, budget);
        } else {
            auto cube = build_kary_cube(opts.k, opts.n);
            VerifyMode vmode = mode == "exhaustive"
                                   ? VerifyMode::exhaustively()
                                   : VerifyMode::sampled(opts.seed, opts.samples);
            outcome = verify_bounded_cut_structure(
                cube.graph, *bound, patterns_small_side(weight), vmode, budget);
            outcome.claim = claim;
        }
        return verification_json(outcome, &meta);
    });
}

int handle_export(const Options& opts, std::ostream& out) {
    GraphFileFormat format;
    if (opts.format == "edgelist") format = GraphFileFormat::EdgeList;
    else if (opts.format == "dimacs") format = GraphFileFormat::Dimacs;
    else throw CLI::ValidationError("--format", "export supports edgelist or dimacs");
    if (opts.out_path.empty())
        throw CLI::ValidationError("--out", "export needs a destination (use - for stdout)");

    auto cube = build_kary_cube(opts.k, opts.n);
    if (opts.out_path == "-") {
        export_graph(cube.graph, format, out);
        return kExitSuccess;
    }
    export_graph_file(cube.graph, format, opts.out_path);

    json params;
    params["k"] = opts.k;
    params["n"] = opts.n;
    params["format"] = opts.format;
    json result;
    result["destination"] = opts.out_path;
    result["vertices"] = cube.graph.vertex_count();
    result["edges"] = cube.graph.edge_count();
    TaskRecord record{"export", params, result, kToolVersion, 0.0};
    Options plain = opts;
    plain.out_path.clear();  // --out already holds the graph file
    emit_record(record, plain, out);
    return kExitSuccess;
}

int handle_cache(const Options& opts, std::ostream& out) {
    ResultCache cache(resolve_cache_dir(opts));
    json result;
    result["directory"] = cache.dir().string();
    if (opts.clear_cache) {
        result["cleared"] = cache.clear();
    } else {
        json arr = json::array();
        for (const auto& [key, record] : cache.entries()) {
            json item;
            item["key"] = key;
            item["task"] = record.kind;
            item["parameters"] = record.parameters;
            arr.push_back(item);
        }
        result["entries"] = arr;
    }
    TaskRecord record{"cache", json::object(), result, kToolVersion, 0.0};
    emit_record(record, opts, out);
    return kExitSuccess;
}

void add_common_flags(CLI::App* cmd, Options& opts, bool with_h) {
    cmd->set_help_flag("--help", "print this help message");  // frees -h for --h
    cmd->add_option("--k", opts.k, "cube radix")->check(CLI::Range(2, 64));
    cmd->add_option("--n", opts.n, "cube dimension")->check(CLI::Range(1, 32));
    if (with_h) cmd->add_option("--h", opts.h, "extra-connectivity order h");
    cmd->add_option("--workers", opts.workers, "worker threads (0 = all)");
    cmd->add_option("--format", opts.format, "output format: json or table");
    cmd->add_option("--out", opts.out_path, "also write the record to this file");
    cmd->add_option("--cache-dir", opts.cache_dir, "cache directory override");
    cmd->add_flag("--force", opts.force, "recompute even on a cache hit");
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
    Options opts;
    CLI::App app{"exact connectivity toolkit for k-ary n-cube networks"};
    app.name("cube-kappa");
    app.set_help_flag("--help", "print this help message");
    app.require_subcommand(1);

    auto* build = app.add_subcommand("build", "construct a cube and report its shape");
    add_common_flags(build, opts, false);

    auto* kappa = app.add_subcommand("kappa", "exact vertex connectivity");
    add_common_flags(kappa, opts, false);
    kappa->add_flag("--super", opts.with_super,
                    "also decide whether every minimum cut isolates a vertex");

    auto* extra = app.add_subcommand("extra", "h-extra connectivity");
    add_common_flags(extra, opts, true);
    extra->add_option("--mode", opts.mode, "exhaustive or fragment");
    extra->add_option("--bound", opts.bound,
                      "max cut size (exhaustive) or fragment cap (fragment)");
    extra->add_option("--work-ceiling", opts.work_ceiling,
                      "enumeration step limit before reporting inconclusive");

    auto* construct =
        app.add_subcommand("construct", "extremal fault set from a canonical fragment");
    add_common_flags(construct, opts, true);

    auto* verify = app.add_subcommand("verify", "run one verifiable claim");
    add_common_flags(verify, opts, false);
    verify->add_option("--claim", opts.claim,
                       "common-neighbors | cut-structure-1 | cut-structure-2 | "
                       "cut-structure-3 | subcube-join | cube-basics")
        ->required();
    verify->add_option("--mode", opts.mode, "exhaustive or sample");
    verify->add_option("--bound", opts.bound, "fault-set size bound override");
    verify->add_option("--seed", opts.seed, "sample seed");
    verify->add_option("--samples", opts.samples, "sample count");
    verify->add_option("--dimension", opts.dimension, "partition digit position");

    auto* exportc = app.add_subcommand("export", "write the cube as a graph file");
    exportc->set_help_flag("--help", "print this help message");
    exportc->add_option("--k", opts.k, "cube radix")->check(CLI::Range(2, 64));
    exportc->add_option("--n", opts.n, "cube dimension")->check(CLI::Range(1, 32));
    exportc->add_option("--format", opts.format, "edgelist or dimacs")->required();
    exportc->add_option("--out", opts.out_path, "destination path, - for stdout")
        ->required();
    exportc->add_option("--cache-dir", opts.cache_dir, "cache directory override");

    auto* cachec = app.add_subcommand("cache", "inspect or clear the result cache");
    cachec->set_help_flag("--help", "print this help message");
    cachec->add_option("--cache-dir", opts.cache_dir, "cache directory override");
    cachec->add_option("--format", opts.format, "output format: json or table");
    cachec->add_flag("--clear", opts.clear_cache, "remove all cached entries");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        err << app.help();
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(build)) return handle_build(opts, out);
        if (app.got_subcommand(kappa)) return handle_kappa(opts, out, err);
        if (app.got_subcommand(extra)) return handle_extra(opts, out, err);
        if (app.got_subcommand(construct)) return handle_construct(opts, out, err);
        if (app.got_subcommand(verify)) return handle_verify(opts, out, err);
        if (app.got_subcommand(exportc)) return handle_export(opts, out);
        if (app.got_subcommand(cachec)) return handle_cache(opts, out);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    err << "error: no subcommand given\n" << app.help();
    return kExitUsage;
}

} // namespace cubekappa

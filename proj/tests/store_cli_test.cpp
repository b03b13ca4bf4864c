#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "cubekappa/cli.hpp"
#include "cubekappa/store.hpp"

using namespace cubekappa;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("cubekappa-test-" + std::to_string(std::rand()) +
                std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args, const fs::path& cache_dir) {
    args.push_back("--cache-dir");
    args.push_back(cache_dir.string());
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

json payload_without_duration(const std::string& text) {
    json j = json::parse(text);
    j.erase("duration_ms");
    return j;
}

} // namespace

TEST_CASE("task records round-trip through json") {
    TaskRecord record;
    record.kind = "extra";
    record.parameters = {{"k", 3}, {"n", 2}, {"h", 1}};
    record.result = {{"value", 5}};
    record.duration_ms = 12.5;

    json j = to_json(record);
    TaskRecord back = record_from_json(j);
    CHECK(back.kind == record.kind);
    CHECK(back.parameters == record.parameters);
    CHECK(back.result == record.result);
    CHECK(record_payload(back) == record_payload(record));
    CHECK(json::parse(j.dump()) == j);
}

TEST_CASE("cache stores, hits, and survives corruption") {
    TempDir tmp;
    ResultCache cache(tmp.path);

    TaskRecord record;
    record.kind = "kappa";
    record.parameters = {{"k", 3}, {"n", 2}};
    record.result = {{"kappa", 4}};

    std::string key = ResultCache::key_for(record.kind, record.parameters, kToolVersion);
    CHECK_FALSE(cache.lookup(key).has_value());
    cache.store(key, record);

    auto hit = cache.lookup(key);
    REQUIRE(hit.has_value());
    CHECK(record_payload(*hit) == record_payload(record));
    CHECK(cache.entries().size() == 1);

    // a version bump must change the key
    CHECK(ResultCache::key_for(record.kind, record.parameters, "9.9.9") != key);

    // corrupt the entry on disk: the lookup reports and misses
    {
        std::ofstream f(tmp.path / (key + ".json"), std::ios::trunc);
        f << "{ not json";
    }
    std::ostringstream warn;
    CHECK_FALSE(cache.lookup(key, &warn).has_value());
    CHECK(warn.str().find("corrupt") != std::string::npos);

    cache.store(key, record);  // overwrite repairs it
    CHECK(cache.lookup(key).has_value());

    CHECK(cache.clear() == 1);
    CHECK(cache.entries().empty());
}

TEST_CASE("graph files export deterministically and re-import") {
    auto triangle = build_kary_cube(3, 1);
    std::ostringstream out;
    export_graph(triangle.graph, GraphFileFormat::EdgeList, out);
    CHECK(out.str() == "p 3 3\n0 1\n0 2\n1 2\n");

    auto q2 = build_kary_cube(3, 2);
    std::ostringstream el;
    export_graph(q2.graph, GraphFileFormat::EdgeList, el);
    std::istringstream back(el.str());
    Graph imported = import_graph(back);
    std::ostringstream again;
    export_graph(imported, GraphFileFormat::EdgeList, again);
    CHECK(again.str() == el.str());

    auto q3 = build_kary_cube(3, 3);
    std::ostringstream dim;
    export_graph(q3.graph, GraphFileFormat::Dimacs, dim);
    CHECK(dim.str().rfind("p edge 27 81\n", 0) == 0);
    std::istringstream dimback(dim.str());
    Graph dimported = import_graph(dimback);
    std::ostringstream dimagain;
    export_graph(dimported, GraphFileFormat::Dimacs, dimagain);
    CHECK(dimagain.str() == dim.str());
}

TEST_CASE("cli computes, caches, and honors --force") {
    TempDir tmp;
    auto first = cli({"extra", "--k", "3", "--n", "2", "--h", "1"}, tmp.path);
    CHECK(first.exit_code == kExitSuccess);
    json j1 = json::parse(first.out);
    CHECK(j1["result"]["value"] == 5);
    CHECK(j1["result"]["evidence"]["kind"] == "exhaustive");

    // certificate lists digit words, not indices
    for (const auto& w : j1["result"]["certificate"]["cut"]) {
        CHECK(w.is_string());
        CHECK(w.get<std::string>().size() == 2);
    }

    auto second = cli({"extra", "--k", "3", "--n", "2", "--h", "1"}, tmp.path);
    CHECK(second.out == first.out);  // byte-identical cached payload

    auto forced = cli({"extra", "--k", "3", "--n", "2", "--h", "1", "--force"}, tmp.path);
    CHECK(payload_without_duration(forced.out) == payload_without_duration(first.out));
}

TEST_CASE("cli exit codes") {
    TempDir tmp;

    auto usage = cli({"extra", "--nonsense"}, tmp.path);
    CHECK(usage.exit_code == kExitUsage);
    CHECK_FALSE(usage.err.empty());

    auto no_sub = cli({}, tmp.path);
    CHECK(no_sub.exit_code == kExitUsage);

    auto ok = cli({"kappa", "--k", "3", "--n", "2"}, tmp.path);
    CHECK(ok.exit_code == kExitSuccess);

    // one past the law: the sweep finds an edge-isolating 5-cut
    auto violated = cli({"verify", "--claim", "cut-structure-1", "--k", "3", "--n", "2",
                         "--bound", "5"},
                        tmp.path);
    CHECK(violated.exit_code == kExitViolation);
    json vj = json::parse(violated.out);
    CHECK(vj["result"]["verdict"] == "fail");

    auto inconclusive = cli({"extra", "--k", "3", "--n", "3", "--h", "2",
                             "--work-ceiling", "1000"},
                            tmp.path);
    CHECK(inconclusive.exit_code == kExitInconclusive);

    auto help = cli({"--help"}, tmp.path);
    CHECK(help.exit_code == kExitSuccess);
    CHECK(help.out.find("cube-kappa") != std::string::npos);
}

TEST_CASE("cache directory resolution prefers the environment variable") {
    TempDir tmp;
    setenv("CUBE_KAPPA_CACHE", tmp.path.c_str(), 1);
    CHECK(default_cache_dir() == tmp.path);
    unsetenv("CUBE_KAPPA_CACHE");
    CHECK(default_cache_dir() != tmp.path);
}

TEST_CASE("cli verify claims pass at small scale") {
    TempDir tmp;
    auto cn = cli({"verify", "--claim", "common-neighbors", "--k", "3", "--n", "2"},
                  tmp.path);
    CHECK(cn.exit_code == kExitSuccess);
    CHECK(json::parse(cn.out)["result"]["checked_count"] == 36);

    auto l33 = cli({"verify", "--claim", "l33", "--k", "3", "--n", "2"}, tmp.path);
    CHECK(l33.exit_code == kExitSuccess);
    json lj = json::parse(l33.out);
    CHECK(lj["parameters"]["claim"] == "cut-structure-1");
    CHECK(lj["parameters"]["bound"] == 4);

    auto basics = cli({"verify", "--claim", "cube-basics", "--k", "3", "--n", "2"},
                      tmp.path);
    CHECK(basics.exit_code == kExitSuccess);

    // the short alias resolves to the widest structure sweep
    auto t37 = cli({"verify", "--claim", "thm37", "--k", "3", "--n", "2"}, tmp.path);
    CHECK(t37.exit_code == kExitSuccess);
    json tj = json::parse(t37.out);
    CHECK(tj["parameters"]["claim"] == "cut-structure-3");
    CHECK(tj["parameters"]["bound"] == 3);  // 8n-13 at n=2
    CHECK(tj["result"]["verdict"] == "pass");
}

TEST_CASE("cli export writes both graph file formats") {
    TempDir tmp;
    auto dest = tmp.path / "q13.edges";
    auto run = cli({"export", "--k", "3", "--n", "1", "--format", "edgelist", "--out",
                    dest.string()},
                   tmp.path);
    CHECK(run.exit_code == kExitSuccess);
    std::ifstream in(dest);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == "p 3 3\n0 1\n0 2\n1 2\n");

    std::ostringstream out, err;
    int code = run_command({"export", "--k", "3", "--n", "2", "--format", "dimacs",
                            "--out", "-"},
                           out, err);
    CHECK(code == kExitSuccess);
    CHECK(out.str().rfind("p edge 9 18\n", 0) == 0);
}

TEST_CASE("cli cache subcommand lists and clears") {
    TempDir tmp;
    cli({"kappa", "--k", "3", "--n", "2"}, tmp.path);
    auto listed = cli({"cache"}, tmp.path);
    CHECK(listed.exit_code == kExitSuccess);
    json lj = json::parse(listed.out);
    CHECK(lj["result"]["entries"].size() == 1);

    auto cleared = cli({"cache", "--clear"}, tmp.path);
    CHECK(json::parse(cleared.out)["result"]["cleared"] == 1);
    auto relisted = cli({"cache"}, tmp.path);
    CHECK(json::parse(relisted.out)["result"]["entries"].empty());
}

TEST_CASE("worker counts leave the task record bytes unchanged") {
    TempDir tmp;
    auto w1 = cli({"extra", "--k", "3", "--n", "3", "--h", "1", "--workers", "1",
                   "--force"},
                  tmp.path);
    auto w2 = cli({"extra", "--k", "3", "--n", "3", "--h", "1", "--workers", "2",
                   "--force"},
                  tmp.path);
    auto w4 = cli({"extra", "--k", "3", "--n", "3", "--h", "1", "--workers", "4",
                   "--force"},
                  tmp.path);
    CHECK(payload_without_duration(w1.out) == payload_without_duration(w2.out));
    CHECK(payload_without_duration(w1.out) == payload_without_duration(w4.out));
}

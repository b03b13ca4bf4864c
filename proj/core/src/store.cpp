#include "cubekappa/store.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace cubekappa {

json to_json(const TaskRecord& record) {
    json j = record_payload(record);
    j["duration_ms"] = record.duration_ms;
    return j;
}

json record_payload(const TaskRecord& record) {
    json j;
    j["task"] = record.kind;
    j["parameters"] = record.parameters;
    j["result"] = record.result;
    j["tool_version"] = record.tool_version;
    return j;
}

TaskRecord record_from_json(const json& j) {
    TaskRecord record;
    record.kind = j.at("task").get<std::string>();
    record.parameters = j.at("parameters");
    record.result = j.at("result");
    record.tool_version = j.at("tool_version").get<std::string>();
    record.duration_ms = j.value("duration_ms", 0.0);
    return record;
}

json vertex_set_json(const VertexSet& s, const CubeMeta* meta) {
    json arr = json::array();
    for (int v = s.first(); v >= 0; v = s.next_after(v)) {
        if (meta) arr.push_back(word_string(*meta, v));
        else arr.push_back(v);
    }
    return arr;
}

json evidence_json(const Evidence& e) {
    json j;
    j["kind"] = evidence_kind_name(e.kind);
    if (e.lower >= 0) j["lower"] = e.lower;
    if (e.upper >= 0) j["upper"] = e.upper;
    if (e.searched_bound >= 0) j["searched_bound"] = e.searched_bound;
    return j;
}

json extra_result_json(const ExtraConnectivityResult& r, const CubeMeta* meta) {
    json j;
    j["h"] = r.h;
    if (r.value) j["value"] = *r.value;
    else j["value"] = nullptr;
    j["evidence"] = evidence_json(r.evidence);
    if (r.certificate) {
        json cert;
        cert["cut"] = vertex_set_json(r.certificate->cut, meta);
        json comps = json::array();
        for (const auto& c : r.certificate->comps) comps.push_back(vertex_set_json(c, meta));
        cert["components"] = comps;
        j["certificate"] = cert;
    }
    return j;
}

json cut_report_json(const CutReport& r, const CubeMeta* meta) {
    json j;
    j["fault_set"] = vertex_set_json(r.fault_set, meta);
    j["pattern"] = cut_pattern_name(r.matched);
    json comps = json::array();
    for (const auto& lc : r.comps) {
        json c;
        c["order"] = lc.members.count();
        c["members"] = vertex_set_json(lc.members, meta);
        if (lc.shape) c["shape"] = shape_name(*lc.shape);
        comps.push_back(c);
    }
    j["components"] = comps;
    return j;
}

json verification_json(const VerificationOutcome& v, const CubeMeta* meta) {
    json j;
    j["claim"] = v.claim;
    json scope;
    scope["mode"] = v.scope.exhaustive ? "exhaustive" : "sample";
    scope["bound"] = v.scope.size_bound;
    if (!v.scope.exhaustive) {
        scope["seed"] = v.scope.sample.seed;
        scope["count"] = v.scope.sample.count;
    }
    j["scope"] = scope;
    j["checked_count"] = v.checked_count;
    if (v.skipped_count) j["skipped_count"] = v.skipped_count;
    j["violation_count"] = v.violation_count;
    if (!v.violations.empty()) {
        json arr = json::array();
        for (const auto& rec : v.violations) {
            json item;
            item["detail"] = rec.detail;
            item["report"] = cut_report_json(rec.report, meta);
            arr.push_back(item);
        }
        j["violations"] = arr;
    }
    json patterns;
    for (int i = 0; i < kCutPatternCount; ++i) {
        auto count = v.pattern_counts[static_cast<std::size_t>(i)];
        if (count) patterns[cut_pattern_name(static_cast<CutPattern>(i))] = count;
    }
    j["pattern_counts"] = patterns;
    if (v.smallest_disconnecting_size)
        j["smallest_disconnecting_size"] = *v.smallest_disconnecting_size;
    j["verdict"] = v.pass ? "pass" : "fail";
    return j;
}

json construction_json(const ConstructionReport& r, const CubeMeta& meta) {
    json j;
    json frag = json::array();
    for (long long v : r.fragment.vertices) frag.push_back(word_string(meta, v));
    j["fragment"] = frag;
    j["fragment_shape"] = shape_name(r.fragment.induced_shape);
    j["cut"] = vertex_set_json(r.cut, &meta);
    j["cut_size"] = r.cut_size;
    j["layer_sizes"] = r.layer_sizes;
    j["residual"] = cut_report_json(r.residual_components, &meta);
    return j;
}

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::string ResultCache::key_for(const std::string& kind, const json& parameters,
                                 const std::string& version) {
    json key;
    key["task"] = kind;
    key["parameters"] = parameters;
    key["tool_version"] = version;
    std::uint64_t h = fnv1a64(key.dump());
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::filesystem::path ResultCache::path_for(const std::string& key) const {
    return dir_ / (key + ".json");
}

std::optional<TaskRecord> ResultCache::lookup(const std::string& key,
                                              std::ostream* warnings) const {
    auto path = path_for(key);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        json j = json::parse(in);
        return record_from_json(j);
    } catch (const std::exception& e) {
        if (warnings)
            *warnings << "warning: corrupt cache entry " << path.string()
                      << " (" << e.what() << "); recomputing\n";
        return std::nullopt;
    }
}

void ResultCache::store(const std::string& key, const TaskRecord& record) const {
    auto path = path_for(key);
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cache directory is not writable: " +
                                           dir_.string());
        out << to_json(record).dump(2) << '\n';
    }
    std::filesystem::rename(tmp, path);
}

std::vector<std::pair<std::string, TaskRecord>> ResultCache::entries() const {
    std::vector<std::pair<std::string, TaskRecord>> out;
    if (!std::filesystem::exists(dir_)) return out;
    for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
        if (entry.path().extension() != ".json") continue;
        std::ifstream in(entry.path());
        try {
            out.emplace_back(entry.path().stem().string(),
                             record_from_json(json::parse(in)));
        } catch (const std::exception&) {
            // ignored here; lookup reports corruption when the key is hit
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::size_t ResultCache::clear() const {
    std::size_t removed = 0;
    if (!std::filesystem::exists(dir_)) return removed;
    for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
        if (entry.path().extension() == ".json") {
            std::filesystem::remove(entry.path());
            ++removed;
        }
    }
    return removed;
}

std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("CUBE_KAPPA_CACHE"); env && *env)
        return std::filesystem::path(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "cube-kappa";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "cube-kappa";
    return std::filesystem::path(".cube-kappa-cache");
}

void export_graph(const Graph& g, GraphFileFormat format, std::ostream& out) {
    auto edges = g.edges();  // (u, v) with u < v, ascending
    if (format == GraphFileFormat::EdgeList) {
        out << "p " << g.vertex_count() << ' ' << edges.size() << '\n';
        for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
    } else {
        out << "p edge " << g.vertex_count() << ' ' << edges.size() << '\n';
        for (const auto& [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    }
}

void export_graph_file(const Graph& g, GraphFileFormat format,
                       const std::filesystem::path& destination) {
    std::ofstream out(destination, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + destination.string());
    export_graph(g, format, out);
    if (!out) throw std::runtime_error("write failure on " + destination.string());
}

Graph import_graph(std::istream& in) {
    std::string tag;
    if (!(in >> tag) || tag != "p") throw std::runtime_error("missing graph header");
    std::string maybe_edge;
    in >> maybe_edge;
    bool dimacs = maybe_edge == "edge";
    long long vertex_count = 0, edge_count = 0;
    if (dimacs) {
        in >> vertex_count >> edge_count;
    } else {
        vertex_count = std::stoll(maybe_edge);
        in >> edge_count;
    }
    if (!in) throw std::runtime_error("bad graph header");
    Graph::Builder b(static_cast<int>(vertex_count));
    for (long long i = 0; i < edge_count; ++i) {
        long long u, v;
        if (dimacs) {
            std::string e;
            in >> e >> u >> v;
            if (e != "e") throw std::runtime_error("bad edge line");
            --u;
            --v;
        } else {
            in >> u >> v;
        }
        if (!in) throw std::runtime_error("truncated edge list");
        b.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return b.build();
}

Graph import_graph_file(const std::filesystem::path& source) {
    std::ifstream in(source);
    if (!in) throw std::runtime_error("cannot read " + source.string());
    return import_graph(in);
}

} // namespace cubekappa

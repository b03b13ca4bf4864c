#ifndef CUBEKAPPA_STORE_HPP
#define CUBEKAPPA_STORE_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cubekappa/constructions.hpp"
#include "cubekappa/cube.hpp"
#include "cubekappa/graph.hpp"
#include "cubekappa/solver.hpp"
#include "cubekappa/verify.hpp"

namespace cubekappa {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

/// One executed task: what ran, with which parameters, and what came out.
/// Serializes with stable field order; duration is excluded from cache keys
/// and from reproducibility comparisons.
struct TaskRecord {
    std::string kind;
    json parameters;
    json result;
    std::string tool_version = kToolVersion;
    double duration_ms = 0.0;
};

json to_json(const TaskRecord& record);
/// Without duration: the part that must reproduce bit-for-bit.
json record_payload(const TaskRecord& record);
TaskRecord record_from_json(const json& j);

/// Serialization helpers. When `meta` is given, vertices render as digit
/// words, which stay stable across index-codec changes and can be read
/// against coordinate tuples by hand.
json vertex_set_json(const VertexSet& s, const CubeMeta* meta);
json evidence_json(const Evidence& e);
json extra_result_json(const ExtraConnectivityResult& r, const CubeMeta* meta);
json cut_report_json(const CutReport& r, const CubeMeta* meta);
json verification_json(const VerificationOutcome& v, const CubeMeta* meta);
json construction_json(const ConstructionReport& r, const CubeMeta& meta);

std::uint64_t fnv1a64(const std::string& text);

/// File cache keyed by (task kind, canonical parameters, tool version).
/// Writes are atomic (temp file + rename); corrupt entries are reported to
/// the warning stream and treated as misses so callers recompute and
/// overwrite them.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir);

    static std::string key_for(const std::string& kind, const json& parameters,
                               const std::string& version);

    std::optional<TaskRecord> lookup(const std::string& key,
                                     std::ostream* warnings = nullptr) const;
    void store(const std::string& key, const TaskRecord& record) const;

    std::vector<std::pair<std::string, TaskRecord>> entries() const;
    std::size_t clear() const;

    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
    std::filesystem::path path_for(const std::string& key) const;
};

/// CUBE_KAPPA_CACHE when set, otherwise a cube-kappa directory under the
/// user's cache home.
std::filesystem::path default_cache_dir();

enum class GraphFileFormat { EdgeList, Dimacs };

/// EdgeList: "p V E" then "u v" per edge, u < v, pairs ascending.
/// Dimacs: "p edge V E" then "e u+1 v+1" lines. Both newline-terminated.
void export_graph(const Graph& g, GraphFileFormat format, std::ostream& out);
void export_graph_file(const Graph& g, GraphFileFormat format,
                       const std::filesystem::path& destination);
Graph import_graph(std::istream& in);
Graph import_graph_file(const std::filesystem::path& source);

} // namespace cubekappa

#endif

#pragma once

// Domain and config documents, CSV tables, SVG rendering and atomic file output.

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "vislab/domain.hpp"

namespace vislab {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// {"kind": "...", <shape fields>, "tol": ...}. Unknown fields throw InvalidArgument.
Json domain_to_json(const DomainSpec& d);
DomainSpec domain_from_json(const Json& j);

/// Throws InvalidArgument naming the first key of j not in allowed.
void reject_unknown(const Json& j, const std::vector<std::string>& allowed, const std::string& where);

struct ExperimentConfig {
    std::string experiment;
    std::optional<DomainSpec> domain;
    Json params = Json::object();
    std::string output_dir;
    std::uint64_t seed = 1;
    Json source;             // the validated document, used for hashing
};

ExperimentConfig parse_experiment_config(const Json& j);

/// FNV-1a 64 over the canonical (sorted-key, compact) dump.
std::uint64_t fnv1a64(const std::string& bytes);
std::string config_hash(const Json& j);

Json read_json_file(const std::filesystem::path& p);
/// Writes to a sibling temporary file, then renames over the target.
void write_atomic(const std::filesystem::path& p, const std::string& content);

/// Shortest round-trip decimal for doubles.
std::string fmt(double v);

struct CsvTable {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> r);
    std::string str() const;
};

struct SvgOverlay {
    std::vector<Complex> points;
    std::string stroke = "#c0392b";
    double width = 1.5;          // in pixels
    bool closed = false;
    bool markers = false;        // draw the points as dots instead of a polyline
};

struct SvgOptions {
    int pixels = 600;
    double h = 0.0;              // mask shading step; 0 disables shading
    double boundary_res = 0.0;   // 0: window / 400
    std::size_t max_boundary_points = 40000;
    std::vector<std::pair<std::string, std::string>> meta;
};

/// SVG 1.1 document: shaded interior mask, boundary samples and overlays.
std::string render_svg(const DomainSpec& d, const Box& window, const std::vector<SvgOverlay>& overlays,
                       const SvgOptions& opt);

}  // namespace vislab

#pragma once

// Named experiments and their output bundles.

#include <filesystem>
#include <string>
#include <vector>

#include "vislab/io.hpp"

namespace vislab {

struct Bundle {
    std::string experiment;
    std::string hash;
    Json summary;
    std::vector<std::pair<std::string, std::string>> files;  // file name, content
    bool pass = true;
};

const std::vector<std::string>& experiment_names();

/// InvalidArgument for unknown experiments or parameters.
Bundle run_experiment(const ExperimentConfig& c);

/// Every file plus summary.json, each written atomically.
void write_bundle(const std::filesystem::path& dir, const Bundle& b);

struct RenderConfig {
    DomainSpec domain;
    Box window;
    double h = 0.0;
    std::vector<SvgOverlay> overlays;
    std::string output;
    int pixels = 600;
    Json source;
};

RenderConfig parse_render_config(const Json& j);
std::string render_document(const RenderConfig& r);

}  // namespace vislab

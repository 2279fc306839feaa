// lab: experiment runner and renderer.

#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "vislab/distance.hpp"
#include "vislab/experiments.hpp"
#include "vislab/takagi.hpp"

using namespace vislab;

namespace {

constexpr int kOk = 0, kUsage = 2, kResolution = 3, kInternal = 4;

Complex parse_point(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw InvalidArgument("expected x,y but got '" + s + "'");
    try {
        std::size_t a = 0, b = 0;
        const double x = std::stod(s.substr(0, comma), &a);
        const double y = std::stod(s.substr(comma + 1), &b);
        if (a != comma || b != s.size() - comma - 1) throw std::invalid_argument(s);
        return {x, y};
    } catch (const std::logic_error&) {
        throw InvalidArgument("expected x,y but got '" + s + "'");
    }
}

int cmd_run(const std::string& path) {
    const Json doc = read_json_file(path);
    const auto cfg = parse_experiment_config(doc);
    const Bundle b = run_experiment(cfg);
    write_bundle(cfg.output_dir, b);
    std::printf("%s %s %s -> %s\n", b.experiment.c_str(), b.pass ? "pass" : "fail", b.hash.c_str(), cfg.output_dir.c_str());
    return kOk;
}

int cmd_render(const std::string& path) {
    const auto r = parse_render_config(read_json_file(path));
    write_atomic(r.output, render_document(r));
    std::printf("%s %s\n", r.output.c_str(), config_hash(r.source).c_str());
    return kOk;
}

int cmd_takagi(double t, double tol) {
    if (!std::isfinite(t)) throw InvalidArgument("--t must be finite");
    if (!(tol > 0.0)) throw InvalidArgument("--tol must be positive");
    const Json out{{"t", t}, {"tol", tol}, {"value", takagi::eval(t, tol)}, {"terms", takagi::truncation_terms(tol)}};
    std::printf("%s\n", out.dump().c_str());
    return kOk;
}

int cmd_distance(const std::string& path, const std::string& from, const std::string& to, double h) {
    const Json doc = read_json_file(path);
    reject_unknown(doc, {"schema_version", "domain", "window", "comparisons"}, "domain document");
    if (!doc.contains("schema_version") || doc.at("schema_version") != kSchemaVersion)
        throw InvalidArgument("domain document: schema_version must be " + std::to_string(kSchemaVersion));
    if (!doc.contains("domain")) throw InvalidArgument("domain document: missing domain");
    const DomainSpec d = domain_from_json(doc.at("domain"));
    Box window = default_window(d);
    if (doc.contains("window")) {
        const auto& w = doc.at("window");
        if (!w.is_array() || w.size() != 4) throw InvalidArgument("window must be [x0, y0, x1, y1]");
        window = {w[0].get<double>(), w[1].get<double>(), w[2].get<double>(), w[3].get<double>()};
    }
    std::vector<DomainSpec> cmps;
    if (doc.contains("comparisons"))
        for (const auto& c : doc.at("comparisons")) cmps.push_back(domain_from_json(c));
    if (!(h > 0.0)) throw InvalidArgument("--h must be positive");
    const Complex z = parse_point(from), w = parse_point(to);
    const auto g = weigh(d, build_grid(d, window, h));
    const auto iv = distance_interval(d, z, w, g, accepted_comparisons(d, cmps, window));
    Json out{{"domain", kind_name(d)},
             {"from", {z.real(), z.imag()}},
             {"to", {w.real(), w.imag()}},
             {"lower", iv.lower},
             {"upper", iv.upper},
             {"method_lower", iv.method_lower},
             {"method_upper", iv.method_upper},
             {"grid_h", h},
             {"config_hash", config_hash(doc)},
             {"convention", kConventionTag}};
    if (has_exact_metric(d)) out["exact"] = distance_exact(d, z, w);
    std::printf("%s\n", out.dump().c_str());
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"visibility lab"};
    app.require_subcommand(1);

    std::string run_path, render_path, dom_path, from, to;
    double t = 0.0, tol = takagi::kDefaultTol, h = 0.0;

    auto* run = app.add_subcommand("run", "run a named experiment");
    run->add_option("config", run_path, "experiment config (JSON)")->required();
    auto* render = app.add_subcommand("render", "render a domain to SVG");
    render->add_option("config", render_path, "render config (JSON)")->required();
    auto* tk = app.add_subcommand("takagi", "evaluate the Takagi function");
    tk->add_option("--t", t, "argument")->required();
    tk->add_option("--tol", tol, "truncation tolerance");
    auto* dist = app.add_subcommand("distance", "certified distance interval");
    dist->set_help_flag("--help", "print this help");
    dist->add_option("--domain", dom_path, "domain document (JSON)")->required();
    dist->add_option("--from", from, "x,y")->required();
    dist->add_option("--to", to, "x,y")->required();
    dist->add_option("--h", h, "grid spacing")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*run) return cmd_run(run_path);
        if (*render) return cmd_render(render_path);
        if (*tk) return cmd_takagi(t, tol);
        if (*dist) return cmd_distance(dom_path, from, to, h);
        return kUsage;
    } catch (const InvalidArgument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kUsage;
    } catch (const PreconditionError& e) {
        std::fprintf(stderr, "precondition failed: %s\n", e.what());
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        std::fprintf(stderr, "bad document: %s\n", e.what());
        return kUsage;
    } catch (const ResolutionError& e) {
        std::fprintf(stderr, "resolution error: %s\n", e.what());
        return kResolution;
    } catch (const BandError& e) {
        std::fprintf(stderr, "unresolved boundary band: %s\n", e.what());
        return kResolution;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return kInternal;
    }
}

#include "vislab/experiments.hpp"

#include <functional>

#include "experiment_kit.hpp"
#include "vislab/geodesic.hpp"

namespace vislab {
namespace detail {

namespace {

double as_number(const Json& v, const std::string& key) {
    if (!v.is_number()) throw InvalidArgument("params." + key + ": expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw InvalidArgument("params." + key + ": not finite");
    return x;
}

const Json& as_array(const Json& v, const std::string& key, std::size_t exact = 0) {
    if (!v.is_array() || v.empty()) throw InvalidArgument("params." + key + ": expected a non-empty array");
    if (exact && v.size() != exact) throw InvalidArgument("params." + key + ": wrong length");
    return v;
}

}  // namespace

Params::Params(const Json& j, std::vector<std::string> allowed, const std::string& experiment) : j_(j) {
    reject_unknown(j, allowed, experiment + " params");
}

double Params::num(const std::string& key, double fallback) const {
    return j_.contains(key) ? as_number(j_.at(key), key) : fallback;
}

int Params::integer(const std::string& key, int fallback) const {
    if (!j_.contains(key)) return fallback;
    const auto& v = j_.at(key);
    if (!v.is_number_integer()) throw InvalidArgument("params." + key + ": expected an integer");
    return v.get<int>();
}

std::vector<double> Params::nums(const std::string& key, std::vector<double> fallback) const {
    if (!j_.contains(key)) return fallback;
    std::vector<double> out;
    for (const auto& v : as_array(j_.at(key), key)) out.push_back(as_number(v, key));
    return out;
}

std::vector<int> Params::ints(const std::string& key, std::vector<int> fallback) const {
    if (!j_.contains(key)) return fallback;
    std::vector<int> out;
    for (const auto& v : as_array(j_.at(key), key)) {
        if (!v.is_number_integer()) throw InvalidArgument("params." + key + ": expected integers");
        out.push_back(v.get<int>());
    }
    return out;
}

Complex Params::point(const std::string& key, Complex fallback) const {
    if (!j_.contains(key)) return fallback;
    const auto& a = as_array(j_.at(key), key, 2);
    return {as_number(a[0], key), as_number(a[1], key)};
}

Box Params::box(const std::string& key, Box fallback) const {
    if (!j_.contains(key)) return fallback;
    const auto& a = as_array(j_.at(key), key, 4);
    const Box b{as_number(a[0], key), as_number(a[1], key), as_number(a[2], key), as_number(a[3], key)};
    if (!(b.x1 > b.x0 && b.y1 > b.y0)) throw InvalidArgument("params." + key + ": empty box");
    return b;
}

Kit::Kit(const ExperimentConfig& c) : cfg(c), hash(config_hash(c.source)), rng(c.seed) {}

void Kit::note_truncation(const std::map<std::string, long long>& t) {
    for (const auto& [k, v] : t) truncation[k] = std::max(truncation[k], v);
}

std::vector<std::pair<std::string, std::string>> Kit::meta() const {
    std::vector<std::pair<std::string, std::string>> m{
        {"experiment", cfg.experiment},
        {"config-hash", hash},
        {"seed", std::to_string(cfg.seed)},
        {"grid-h", fmt(grid_h)},
    };
    std::string t;
    for (const auto& [k, v] : truncation) t += (t.empty() ? "" : " ") + k + "=" + std::to_string(v);
    m.emplace_back("truncation", t.empty() ? "none" : t);
    m.emplace_back("convention", kConventionTag);
    return m;
}

CsvTable Kit::table(std::vector<std::string> header) const {
    CsvTable t;
    t.header = std::move(header);
    return t;
}

void Kit::add_csv(const std::string& name, CsvTable t) {
    t.meta = meta();
    t.meta.emplace_back("table", name);
    files_.emplace_back(name, t.str());
}

void Kit::add_svg(const std::string& name, const DomainSpec& d, const Box& window, const std::vector<SvgOverlay>& ov,
                  double shade_h) {
    SvgOptions o;
    o.h = shade_h;
    o.meta = meta();
    files_.emplace_back(name, render_svg(d, window, ov, o));
}

Bundle Kit::finish(Json results, bool pass) {
    Bundle b;
    b.experiment = cfg.experiment;
    b.hash = hash;
    b.pass = pass;
    Json trunc = Json::object();
    for (const auto& [k, v] : truncation) trunc[k] = v;
    b.summary = {
        {"schema_version", kSchemaVersion},
        {"experiment", cfg.experiment},
        {"config_hash", hash},
        {"seed", cfg.seed},
        {"grid_h", grid_h},
        {"truncation", trunc},
        {"convention", kConventionTag},
        {"results", std::move(results)},
        {"pass", pass},
    };
    if (cfg.domain) b.summary["domain"] = domain_to_json(*cfg.domain);
    Json names = Json::array();
    for (const auto& f : files_) names.push_back(f.first);
    b.summary["files"] = names;
    b.files = std::move(files_);
    return b;
}

DomainSpec domain_or(const ExperimentConfig& c, DomainSpec fallback) { return c.domain ? *c.domain : fallback; }

std::string cpx(Complex z) { return fmt(z.real()) + " " + fmt(z.imag()); }

}  // namespace detail

namespace {

using Runner = std::function<Bundle(const ExperimentConfig&)>;

const std::vector<std::pair<std::string, Runner>>& registry() {
    static const std::vector<std::pair<std::string, Runner>> r{
        {"takagi-non-goldilocks", detail::takagi_non_goldilocks},
        {"sector-slope", detail::sector_slope_experiment},
        {"comb-nonvisibility", detail::comb_nonvisibility},
        {"vt-visibility", detail::vt_visibility},
        {"gromov-disk", detail::gromov_disk},
        {"royden-disks", detail::royden_disks},
        {"end-profile-ut", detail::end_profile_ut},
        {"local-connectivity", detail::local_connectivity},
        {"cantor-slit", detail::cantor_slit},
        {"reparam-suite", detail::reparam_suite},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& experiment_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& e : registry()) n.push_back(e.first);
        return n;
    }();
    return names;
}

Bundle run_experiment(const ExperimentConfig& c) {
    for (const auto& [name, run] : registry())
        if (name == c.experiment) return run(c);
    throw InvalidArgument("unknown experiment '" + c.experiment + "'");
}

void write_bundle(const std::filesystem::path& dir, const Bundle& b) {
    std::filesystem::create_directories(dir);
    for (const auto& [name, content] : b.files) write_atomic(dir / name, content);
    write_atomic(dir / "summary.json", b.summary.dump(2) + "\n");
}

RenderConfig parse_render_config(const Json& j) {
    reject_unknown(j, {"schema_version", "domain", "window", "h", "overlays", "output", "pixels"}, "render config");
    if (!j.contains("schema_version") || !j.at("schema_version").is_number_integer() ||
        j.at("schema_version").get<int>() != kSchemaVersion)
        throw InvalidArgument("render config: schema_version must be " + std::to_string(kSchemaVersion));
    if (!j.contains("domain")) throw InvalidArgument("render config: missing domain");
    RenderConfig r;
    r.source = j;
    r.domain = domain_from_json(j.at("domain"));
    Json sub = Json::object();
    for (const char* k : {"window", "h", "pixels"})
        if (j.contains(k)) sub[k] = j.at(k);
    const detail::Params p(sub, {"window", "h", "pixels"}, "render");
    r.window = p.box("window", default_window(r.domain));
    r.h = p.num("h", 0.0);
    if (r.h < 0.0) throw InvalidArgument("render config: h must be non-negative");
    r.pixels = p.integer("pixels", 600);
    if (r.pixels < 16 || r.pixels > 8192) throw InvalidArgument("render config: pixels out of range");
    r.output = j.value("output", std::string("render.svg"));

    if (j.contains("overlays")) {
        if (!j.at("overlays").is_array()) throw InvalidArgument("render config: overlays must be an array");
        for (const auto& o : j.at("overlays")) {
            reject_unknown(o, {"type", "from", "to", "points", "stroke", "width", "samples"}, "overlay");
            const std::string type = o.value("type", std::string());
            SvgOverlay ov;
            if (o.contains("stroke")) ov.stroke = o.at("stroke").get<std::string>();
            Json os = Json::object();
            for (const char* k : {"from", "to", "width", "samples"})
                if (o.contains(k)) os[k] = o.at(k);
            const detail::Params op(os, {"from", "to", "width", "samples"}, "overlay");
            ov.width = op.num("width", 1.5);
            if (type == "disk-geodesic") {
                const auto g = disk_geodesic(op.point("from", 0.0), op.point("to", 0.0));
                ov.points = g.sample(op.integer("samples", 256));
            } else if (type == "polyline" || type == "points") {
                if (!o.contains("points") || !o.at("points").is_array())
                    throw InvalidArgument("overlay: points must be an array");
                for (const auto& q : o.at("points")) {
                    if (!q.is_array() || q.size() != 2 || !q[0].is_number() || !q[1].is_number())
                        throw InvalidArgument("overlay: each point must be [x, y]");
                    ov.points.emplace_back(q[0].get<double>(), q[1].get<double>());
                }
                ov.markers = type == "points";
            } else {
                throw InvalidArgument("overlay: unknown type '" + type + "'");
            }
            r.overlays.push_back(std::move(ov));
        }
    }
    return r;
}

std::string render_document(const RenderConfig& r) {
    SvgOptions o;
    o.pixels = r.pixels;
    o.h = r.h;
    o.meta = {{"config-hash", config_hash(r.source)}, {"grid-h", fmt(r.h)}, {"convention", kConventionTag}};
    return render_svg(r.domain, r.window, r.overlays, o);
}

}  // namespace vislab

#include "vislab/io.hpp"

#include "boundary_pieces.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace vislab {

namespace {

Json pt(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex get_pt(const Json& j, const char* key) {
    const Json& v = j.at(key);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        throw InvalidArgument(std::string("domain: field '") + key + "' must be [x, y]");
    return {v[0].get<double>(), v[1].get<double>()};
}

template <class T>
T get_or(const Json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception&) {
        throw InvalidArgument(std::string("field '") + key + "' has the wrong type");
    }
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw InvalidArgument("domain: " + msg);
}

}  // namespace

void reject_unknown(const Json& j, const std::vector<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) throw InvalidArgument(where + ": expected an object");
    for (const auto& [k, v] : j.items())
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
            throw InvalidArgument(where + ": unknown field '" + k + "'");
}

Json domain_to_json(const DomainSpec& d) {
    Json j = std::visit(
        detail::overloaded{
            [](const shapes::Disk& s) { return Json{{"center", pt(s.center)}, {"radius", s.radius}}; },
            [](const shapes::HalfPlane& s) { return Json{{"normal", pt(s.normal)}, {"offset", s.offset}}; },
            [](const shapes::Sector& s) {
                Json o{{"vertex", pt(s.vertex)}, {"axis", pt(s.axis)}, {"half_angle", s.half_angle}};
                if (s.truncation) o["truncation"] = *s.truncation;
                return o;
            },
            [](const shapes::Cusp& s) { return Json{{"x0", s.x0}, {"r0", s.r0}}; },
            [](const shapes::Strip& s) { return Json{{"width", s.width}}; },
            [](const shapes::Annulus& s) { return Json{{"r_inner", s.r_inner}}; },
            [](const shapes::TakagiTrunc& s) { return Json{{"x0", s.x0}, {"r1", s.r1}}; },
            [](const shapes::CantorSlit& s) { return Json{{"depth", s.depth}}; },
            [](const shapes::RadialSlit& s) { return Json{{"n_spokes_limit", s.n_spokes_limit}}; },
            [](const shapes::MultiSlit& s) {
                Json arr = Json::array();
                for (const auto& sl : s.slits) {
                    Json iv = Json::array();
                    for (const auto& [a, b] : sl.intervals) iv.push_back({a, b});
                    arr.push_back({{"y", sl.y}, {"intervals", iv}});
                }
                return Json{{"slits", arr}};
            },
            [](const shapes::SpokeAccretion& s) { return Json{{"n_limit", s.n_limit}, {"nu_limit", s.nu_limit}}; },
            [](const auto&) { return Json::object(); },
        },
        d.shape);
    j["kind"] = kind_name(d);
    j["tol"] = d.tol;
    return j;
}

DomainSpec domain_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw InvalidArgument("domain: object with a string 'kind' expected");
    const std::string kind = j["kind"];
    auto fields = [&](std::vector<std::string> extra) {
        extra.push_back("kind");
        extra.push_back("tol");
        reject_unknown(j, extra, "domain " + kind);
    };
    const double tol = get_or(j, "tol", takagi::kDefaultTol);
    require(tol > 0.0, "tol must be positive");
    Shape s;
    if (kind == "Disk") {
        fields({"center", "radius"});
        shapes::Disk v;
        if (j.contains("center")) v.center = get_pt(j, "center");
        v.radius = get_or(j, "radius", 1.0);
        require(v.radius > 0.0, "radius must be positive");
        s = v;
    } else if (kind == "HalfPlane") {
        fields({"normal", "offset"});
        shapes::HalfPlane v;
        if (j.contains("normal")) v.normal = get_pt(j, "normal");
        require(std::abs(std::abs(v.normal) - 1.0) < 1e-12, "normal must be a unit vector");
        v.offset = get_or(j, "offset", 0.0);
        s = v;
    } else if (kind == "Sector") {
        fields({"vertex", "axis", "half_angle", "truncation"});
        shapes::Sector v;
        if (j.contains("vertex")) v.vertex = get_pt(j, "vertex");
        if (j.contains("axis")) v.axis = get_pt(j, "axis");
        require(std::abs(std::abs(v.axis) - 1.0) < 1e-12, "axis must be a unit vector");
        v.half_angle = get_or(j, "half_angle", kPi / 4);
        require(v.half_angle > 0.0 && v.half_angle < kPi, "half_angle must lie in (0, pi)");
        if (j.contains("truncation") && !j["truncation"].is_null()) v.truncation = get_or(j, "truncation", 0.0);
        s = v;
    } else if (kind == "Cusp") {
        fields({"x0", "r0"});
        shapes::Cusp v{get_or(j, "x0", 0.0), get_or(j, "r0", 0.01)};
        require(v.r0 > 0.0, "r0 must be positive");
        s = v;
    } else if (kind == "Strip") {
        fields({"width"});
        shapes::Strip v{get_or(j, "width", 1.0)};
        require(v.width > 0.0, "width must be positive");
        s = v;
    } else if (kind == "Annulus") {
        fields({"r_inner"});
        shapes::Annulus v{get_or(j, "r_inner", 0.5)};
        require(v.r_inner > 0.0 && v.r_inner < 1.0, "r_inner must lie in (0, 1)");
        s = v;
    } else if (kind == "TakagiTrunc") {
        fields({"x0", "r1"});
        shapes::TakagiTrunc v{get_or(j, "x0", 0.0), get_or(j, "r1", 0.5)};
        require(v.r1 > 0.0, "r1 must be positive");
        s = v;
    } else if (kind == "CantorSlit") {
        fields({"depth"});
        shapes::CantorSlit v{get_or(j, "depth", 6)};
        require(v.depth >= 0 && v.depth <= 20, "depth must lie in [0, 20]");
        s = v;
    } else if (kind == "RadialSlit") {
        fields({"n_spokes_limit"});
        shapes::RadialSlit v{get_or(j, "n_spokes_limit", 32)};
        require(v.n_spokes_limit >= 1, "n_spokes_limit must be >= 1");
        s = v;
    } else if (kind == "MultiSlit") {
        fields({"slits"});
        shapes::MultiSlit v;
        for (const auto& sj : j.value("slits", Json::array())) {
            reject_unknown(sj, {"y", "intervals"}, "domain MultiSlit slit");
            shapes::HSlit sl;
            sl.y = get_or(sj, "y", 0.0);
            for (const auto& iv : sj.value("intervals", Json::array())) {
                require(iv.is_array() && iv.size() == 2, "slit interval must be [a, b]");
                const double a = iv[0].get<double>(), b = iv[1].get<double>();
                require(a <= b, "slit interval must have a <= b");
                sl.intervals.emplace_back(a, b);
            }
            v.slits.push_back(sl);
        }
        s = v;
    } else if (kind == "SpokeAccretion") {
        fields({"n_limit", "nu_limit"});
        shapes::SpokeAccretion v{get_or(j, "n_limit", 8), get_or(j, "nu_limit", 8)};
        require(v.n_limit >= 1 && v.nu_limit >= 1, "limits must be >= 1");
        s = v;
    } else if (kind == "PuncturedDisk") {
        fields({});
        s = shapes::PuncturedDisk{};
    } else if (kind == "TakagiGraph") {
        fields({});
        s = shapes::TakagiGraph{};
    } else if (kind == "UT") {
        fields({});
        s = shapes::UT{};
    } else if (kind == "VT") {
        fields({});
        s = shapes::VT{};
    } else if (kind == "CombD1") {
        fields({});
        s = shapes::CombD1{};
    } else if (kind == "CombD2") {
        fields({});
        s = shapes::CombD2{};
    } else if (kind == "SlitTakagi") {
        fields({});
        s = shapes::SlitTakagi{};
    } else {
        throw InvalidArgument("domain: unknown kind '" + kind + "'");
    }
    return DomainSpec(std::move(s), tol);
}

ExperimentConfig parse_experiment_config(const Json& j) {
    reject_unknown(j, {"schema_version", "experiment", "domain", "params", "output_dir", "seed"}, "config");
    if (!j.contains("schema_version") || !j["schema_version"].is_number_integer())
        throw InvalidArgument("config: integer 'schema_version' required");
    if (j["schema_version"].get<int>() != kSchemaVersion)
        throw InvalidArgument("config: unsupported schema_version " + j["schema_version"].dump());
    if (!j.contains("experiment") || !j["experiment"].is_string()) throw InvalidArgument("config: 'experiment' required");
    ExperimentConfig c;
    c.experiment = j["experiment"];
    if (j.contains("domain")) c.domain = domain_from_json(j["domain"]);
    if (j.contains("params")) {
        if (!j["params"].is_object()) throw InvalidArgument("config: 'params' must be an object");
        c.params = j["params"];
    }
    c.output_dir = get_or<std::string>(j, "output_dir", "out/" + c.experiment);
    c.seed = get_or<std::uint64_t>(j, "seed", 1);
    c.source = j;
    return c;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string config_hash(const Json& j) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(j.dump())));
    return buf;
}

Json read_json_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw InvalidArgument("cannot open " + p.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InvalidArgument("malformed JSON in " + p.string() + ": " + e.what());
    }
}

void write_atomic(const std::filesystem::path& p, const std::string& content) {
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    auto tmp = p;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw LabError("cannot write " + tmp.string());
        out << content;
        if (!out.flush()) throw LabError("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, p);
}

std::string fmt(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

void CsvTable::add_row(std::vector<std::string> r) {
    if (r.size() != header.size()) throw LabError("csv: row width does not match header");
    rows.push_back(std::move(r));
}

std::string CsvTable::str() const {
    std::ostringstream o;
    for (const auto& [k, v] : meta) o << "# " << k << ": " << v << "\n";
    for (std::size_t i = 0; i < header.size(); ++i) o << (i ? "," : "") << header[i];
    o << "\n";
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) o << (i ? "," : "") << r[i];
        o << "\n";
    }
    return o.str();
}

namespace {

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (const char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const DomainSpec& d, const Box& window, const std::vector<SvgOverlay>& overlays,
                       const SvgOptions& opt) {
    if (!(window.width() > 0.0 && window.height() > 0.0) || !std::isfinite(window.width()) || !std::isfinite(window.height()))
        throw InvalidArgument("render: window must be finite with positive extent");
    const double W = opt.pixels;
    const double H = std::max(1.0, std::round(opt.pixels * window.height() / window.width()));
    const double sx = W / window.width(), sy = H / window.height();
    auto X = [&](double x) { return px((x - window.x0) * sx); };
    auto Y = [&](double y) { return px((window.y1 - y) * sy); };

    const double res = opt.boundary_res > 0.0 ? opt.boundary_res : std::max(window.width(), window.height()) / 400.0;
    const BoundaryCloud cloud = sample_boundary(d, window, res, false);

    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << px(W) << "\" height=\"" << px(H)
      << "\" viewBox=\"0 0 " << px(W) << " " << px(H) << "\">\n";
    o << "<title>" << xml_escape(kind_name(d)) << "</title>\n<metadata>\n";
    for (const auto& [k, v] : opt.meta) o << xml_escape(k) << ": " << xml_escape(v) << "\n";
    for (const auto& [k, v] : cloud.truncation) o << "boundary-truncation-" << xml_escape(k) << ": " << v << "\n";
    o << "boundary-resolution: " << fmt(res) << "\n";
    o << "window: " << fmt(window.x0) << "," << fmt(window.y0) << "," << fmt(window.x1) << "," << fmt(window.y1) << "\n";
    o << "</metadata>\n<rect x=\"0\" y=\"0\" width=\"" << px(W) << "\" height=\"" << px(H) << "\" fill=\"#ffffff\"/>\n";

    if (opt.h > 0.0) {
        const int nx = static_cast<int>(std::floor(window.width() / opt.h)) + 1;
        const int ny = static_cast<int>(std::floor(window.height() / opt.h)) + 1;
        if (static_cast<double>(nx) * ny > 2e7) throw ResolutionError("render: shading lattice too large");
        o << "<g fill=\"#dbe9f6\" stroke=\"none\">\n";
        for (int j = 0; j < ny; ++j) {
            const double y = window.y0 + j * opt.h;
            int run = -1;
            for (int i = 0; i <= nx; ++i) {
                const bool in = i < nx && contains(d, {window.x0 + i * opt.h, y}) == Membership::inside;
                if (in && run < 0) run = i;
                if (!in && run >= 0) {
                    const double xa = window.x0 + (run - 0.5) * opt.h, xb = window.x0 + (i - 0.5) * opt.h;
                    o << "<rect x=\"" << X(xa) << "\" y=\"" << Y(y + 0.5 * opt.h) << "\" width=\"" << px((xb - xa) * sx)
                      << "\" height=\"" << px(opt.h * sy) << "\"/>\n";
                    run = -1;
                }
            }
        }
        o << "</g>\n";
    }

    const std::size_t stride = cloud.points.size() / std::max<std::size_t>(1, opt.max_boundary_points) + 1;
    o << "<path fill=\"none\" stroke=\"#1b2631\" stroke-width=\"1.2\" stroke-linecap=\"round\" d=\"";
    for (std::size_t k = 0; k < cloud.points.size(); k += stride)
        o << "M" << X(cloud.points[k].real()) << " " << Y(cloud.points[k].imag()) << "h0";
    o << "\"/>\n";

    for (const auto& ov : overlays) {
        if (ov.points.empty()) continue;
        if (ov.markers) {
            o << "<g fill=\"" << ov.stroke << "\">\n";
            for (const auto& z : ov.points)
                o << "<circle cx=\"" << X(z.real()) << "\" cy=\"" << Y(z.imag()) << "\" r=\"" << px(ov.width) << "\"/>\n";
            o << "</g>\n";
            continue;
        }
        o << "<polyline fill=\"none\" stroke=\"" << ov.stroke << "\" stroke-width=\"" << px(ov.width) << "\" points=\"";
        for (std::size_t k = 0; k < ov.points.size(); ++k)
            o << (k ? " " : "") << X(ov.points[k].real()) << "," << Y(ov.points[k].imag());
        if (ov.closed) o << " " << X(ov.points[0].real()) << "," << Y(ov.points[0].imag());
        o << "\"/>\n";
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace vislab

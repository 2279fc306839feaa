// Experiments built on the grid: paths, components, ends.

#include <random>

#include "experiment_kit.hpp"
#include "vislab/geodesic.hpp"
#include "vislab/topology.hpp"
#include "vislab/visibility.hpp"

namespace vislab::detail {

namespace {

Json rows_json(const VisibilityVerdict& v) {
    Json rows = Json::array();
    for (const auto& r : v.rows)
        rows.push_back({{"n", r.n}, {"connected", r.connected}, {"upper", r.upper}, {"min_dtb", r.min_dtb},
                        {"depth", r.depth}, {"nodes", r.nodes}});
    return {{"verdict", to_string(v.verdict)}, {"core", v.core}, {"rows", rows}};
}

void add_rows(CsvTable& t, const std::string& run, const VisibilityVerdict& v) {
    for (const auto& r : v.rows)
        t.add_row({run, std::to_string(r.n), cpx(r.z), cpx(r.w), r.connected ? "1" : "0", fmt(r.upper), fmt(r.min_dtb),
                   fmt(r.depth), std::to_string(r.nodes)});
}

const std::vector<std::string> kVisHeader{"run", "n", "z", "w", "connected", "upper", "min_dtb", "depth", "nodes"};

std::vector<SvgOverlay> path_overlays(const WeightedGrid& g, const std::vector<std::pair<Complex, Complex>>& ep,
                                      const std::vector<std::string>& colors) {
    std::vector<SvgOverlay> out;
    for (std::size_t i = 0; i < ep.size(); ++i) {
        try {
            out.push_back({shortest_path(g, ep[i].first, ep[i].second).curve.p, colors[i % colors.size()], 1.2});
        } catch (const ResolutionError&) {
        }
    }
    return out;
}

const std::vector<std::string> kColors{"#c0392b", "#d68910", "#1e8449", "#6c3483", "#2e86c1"};

}  // namespace

Bundle comb_nonvisibility(const ExperimentConfig& c) {
    Kit kit(c);
    const Params p(c.params,
                   {"h", "n_list", "core", "window", "xi1_y", "xi2_y", "secondary_y", "visit_radius", "visit_n_min",
                    "visit_n_max", "visit_min_count", "svg_h"},
                   c.experiment);
    const DomainSpec d = domain_or(c, DomainSpec{shapes::CombD1{}});
    if (!d.as<shapes::CombD1>()) throw InvalidArgument("comb-nonvisibility needs a CombD1 domain");
    const double h = p.num("h", 1.0 / 2048), core = p.num("core", 0.05);
    const auto ns = p.ints("n_list", {4, 8, 16});
    const Box window = p.box("window", Box{0, 0, 1, 1});
    const double y1 = p.num("xi1_y", 0.25), y2 = p.num("xi2_y", 0.125), ys = p.num("secondary_y", 0.75);
    const double vr = p.num("visit_radius", 0.24);
    const int vmin = p.integer("visit_n_min", 4), vmax = p.integer("visit_n_max", 16), vcount = p.integer("visit_min_count", 3);
    for (const int n : ns)
        if (n < 1) throw InvalidArgument("params.n_list entries must be positive");
    if (vmin < 1 || vmax < vmin) throw InvalidArgument("params.visit_n_min/visit_n_max out of order");

    kit.grid_h = h;
    const auto g = weigh(d, build_grid(d, window, h));
    long long resolved = 0;
    for (long long n = 1; 1.0 / (n * (n + 1.0)) >= 2 * h; ++n) resolved = n;
    kit.truncation["comb_gap_index_resolved"] = resolved;

    std::vector<std::pair<Complex, Complex>> primary, secondary;
    for (const int n : ns) {
        const double x = comb_gap_midpoint(n);
        primary.push_back({{x, y1}, {x, y2}});
        secondary.push_back({{x, y1}, {x, ys}});
    }
    const auto v1 = visibility_probe(g, ns, primary, core);
    const auto v2 = visibility_probe(g, ns, secondary, core);
    CsvTable t = kit.table(kVisHeader);
    add_rows(t, "primary", v1);
    add_rows(t, "secondary", v2);

    std::vector<Complex> seq;
    for (int n = vmin; n <= vmax; ++n) seq.push_back({comb_gap_midpoint(n), y1});
    const auto visits = finite_component_visit_check(d, {0.0, y1}, vr, seq, h);
    CsvTable vt = kit.table({"n", "z", "label", "distinct", "flag"});
    for (std::size_t i = 0; i < seq.size(); ++i)
        vt.add_row({std::to_string(vmin + static_cast<int>(i)), cpx(seq[i]), std::to_string(visits.labels[i]),
                    std::to_string(visits.distinct[i]), visits.flags[i]});

    bool bottleneck_ok = true, monotone = true;
    for (const auto& r : v1.rows) bottleneck_ok = bottleneck_ok && r.connected && r.min_dtb <= 1.0 / r.n;
    for (std::size_t i = 1; i < visits.distinct.size(); ++i) monotone = monotone && visits.distinct[i] >= visits.distinct[i - 1];
    const int final_count = visits.distinct.empty() ? 0 : visits.distinct.back();
    const bool pass = v1.verdict == VisibilityClass::escaping && bottleneck_ok && monotone && final_count >= vcount;

    kit.add_csv("visibility.csv", std::move(t));
    kit.add_csv("visits.csv", std::move(vt));
    auto ov = path_overlays(g, primary, kColors);
    ov.push_back({seq, "#17202a", 1.5, false, true});
    kit.add_svg("comb.svg", d, window, ov, p.num("svg_h", 1.0 / 256));

    Json res{{"primary", rows_json(v1)},
             {"secondary", rows_json(v2)},
             {"pair", {{"xi1", {0.0, y1}}, {"xi2", {0.0, y2}}}},
             {"min_dtb_within_inverse_n", bottleneck_ok},
             {"visit_counts", visits.distinct},
             {"visit_components", visits.components},
             {"visit_monotone", monotone},
             {"verdict", to_string(v1.verdict)}};
    return kit.finish(std::move(res), pass);
}

Bundle vt_visibility(const ExperimentConfig& c) {
    Kit kit(c);
    const Params p(c.params,
                   {"h", "n_list", "core", "window", "target_a", "target_b", "disk_h", "disk_n_list", "disk_core",
                    "disk_tolerance"},
                   c.experiment);
    const DomainSpec d = domain_or(c, DomainSpec{shapes::VT{}});
    const double h = p.num("h", 1.0 / 64), core = p.num("core", 0.1);
    const auto ns = p.ints("n_list", {2, 3, 4});
    const Box window = p.box("window", Box{-1.5, -2.5, 6.5, 1.75});
    const Complex a = p.point("target_a", {0.5, 1.5}), b = p.point("target_b", {4.5, 1.5});
    const double dh = p.num("disk_h", 1.0 / 256), dcore = p.num("disk_core", 0.3), dtol = p.num("disk_tolerance", 0.05);
    const auto dns = p.ints("disk_n_list", {2, 3, 4, 5, 6});
    for (const int n : ns)
        if (n < 1 || n > 40) throw InvalidArgument("params.n_list entries must lie in [1, 40]");
    for (const int n : dns)
        if (n < 1 || n > 40) throw InvalidArgument("params.disk_n_list entries must lie in [1, 40]");

    kit.grid_h = h;
    const auto g = weigh(d, build_grid(d, window, h));
    std::vector<std::pair<Complex, Complex>> ep;
    for (const int n : ns) {
        const double s = std::ldexp(1.0, -n);
        ep.push_back({a - Complex(0, s), b - Complex(0, s)});
    }
    const auto v = visibility_probe(g, ns, ep, core);

    const DomainSpec disk{shapes::Disk{}};
    const auto gd = weigh(disk, build_grid(disk, Box{-1, -1, 1, 1}, dh));
    std::vector<std::pair<Complex, Complex>> dep;
    for (const int n : dns) {
        const double s = std::ldexp(1.0, -n);
        dep.push_back({1.0 - s, -1.0 + s});
    }
    const auto vd = visibility_probe(gd, dns, dep, dcore);
    const double last_depth = vd.rows.back().depth;
    const bool disk_ok = vd.verdict == VisibilityClass::visible_at_scale && std::abs(last_depth - 1.0) <= dtol;

    CsvTable t = kit.table(kVisHeader);
    add_rows(t, "vt", v);
    add_rows(t, "disk", vd);
    kit.add_csv("visibility.csv", std::move(t));
    kit.add_svg("vt.svg", d, window, path_overlays(g, ep, kColors), 1.0 / 32);

    Json res{{"vt", rows_json(v)},
             {"disk", rows_json(vd)},
             {"disk_h", dh},
             {"disk_last_depth", last_depth},
             {"disk_tolerance", dtol},
             {"targets", {{a.real(), a.imag()}, {b.real(), b.imag()}}},
             {"verdict", to_string(v.verdict)}};
    return kit.finish(std::move(res), v.verdict == VisibilityClass::visible_at_scale && disk_ok);
}

Bundle end_profile_ut(const ExperimentConfig& c) {
    Kit kit(c);
    const Params p(c.params, {"radii", "margin", "h", "min_count", "min_count_radius"}, c.experiment);
    const DomainSpec d = domain_or(c, DomainSpec{shapes::UT{}});
    const auto radii = p.nums("radii", {4, 6, 8, 10, 14});
    const double margin = p.num("margin", 2.0), h = p.num("h", 1.0 / 8);
    const int min_count = p.integer("min_count", 3);
    const double at = p.num("min_count_radius", 10.0);
    std::vector<double> outer;
    for (const double r : radii) outer.push_back(r + margin);
    kit.grid_h = h;
    const auto prof = end_profile(d, radii, outer, h);

    CsvTable t = kit.table({"R", "R_outer", "count"});
    bool monotone = true, reached = false;
    for (std::size_t i = 0; i < prof.counts.size(); ++i) {
        t.add_row({fmt(prof.radii[i]), fmt(prof.margins[i]), std::to_string(prof.counts[i])});
        if (i) monotone = monotone && prof.counts[i] >= prof.counts[i - 1];
        if (prof.radii[i] == at) reached = prof.counts[i] >= min_count;
    }
    kit.add_csv("ends.csv", std::move(t));
    const double rmax = outer.back();
    std::vector<SvgOverlay> circles;
    for (const double r : radii) {
        std::vector<Complex> pts;
        for (int k = 0; k < 256; ++k) pts.push_back(std::polar(r, 2 * kPi * k / 256));
        circles.push_back({pts, "#7f8c8d", 1.0, true});
    }
    kit.add_svg("ends.svg", d, Box{-rmax, -rmax, rmax, rmax}, circles, 0.0);

    Json res{{"counts", prof.counts}, {"radii", prof.radii}, {"outer_radii", prof.margins},
             {"nondecreasing", monotone}, {"count_at_radius_ok", reached}, {"min_count", min_count},
             {"min_count_radius", at}};
    return kit.finish(std::move(res), monotone && reached);
}

Bundle local_connectivity(const ExperimentConfig& c) {
    Kit kit(c);
    const Params p(c.params, {"samples", "eps", "delta", "res", "negative_point"}, c.experiment);
    if (c.domain) throw InvalidArgument("local-connectivity compares fixed domains; drop the domain field");
    const int samples = p.integer("samples", 50);
    const double eps = p.num("eps", 0.2), delta = p.num("delta", 0.05), res = p.num("res", 1.0 / 1024);
    const Complex neg = p.point("negative_point", {0.0, 0.25});
    if (samples < 1 || !(eps > delta && delta > 0.0 && res > 0.0)) throw InvalidArgument("local-connectivity: need eps > delta > 0, res > 0");
    kit.grid_h = res;

    const DomainSpec tg{shapes::TakagiGraph{}}, comb{shapes::CombD1{}};
    std::uniform_real_distribution<double> U(0.0, 1.0);
    CsvTable t = kit.table({"domain", "p", "components", "vacuous", "pass"});
    bool graph_ok = true;
    std::vector<Complex> pts;
    for (int i = 0; i < samples; ++i) {
        const double x = U(kit.rng);
        const Complex pt(x, takagi::eval(x));
        const auto cloud = sample_boundary(tg, Box::around(pt, eps + 0.01), res);
        kit.note_truncation(cloud.truncation);
        const auto v = local_connectivity_probe(cloud.points, res, pt, eps, delta, 2 * res);
        graph_ok = graph_ok && v.pass && !v.vacuous;
        pts.push_back(pt);
        t.add_row({"TakagiGraph", cpx(pt), std::to_string(v.components), v.vacuous ? "1" : "0", v.pass ? "1" : "0"});
    }
    const auto cc = sample_boundary(comb, Box::around(neg, eps + 0.01), res);
    kit.note_truncation(cc.truncation);
    const auto vn = local_connectivity_probe(cc.points, res, neg, eps, delta, 2 * res);
    t.add_row({"CombD1", cpx(neg), std::to_string(vn.components), vn.vacuous ? "1" : "0", vn.pass ? "1" : "0"});
    kit.add_csv("local_connectivity.csv", std::move(t));
    kit.add_svg("takagi_graph.svg", tg, Box{-0.05, -0.1, 1.05, 1.0}, {SvgOverlay{pts, "#c0392b", 2.0, false, true}}, 0.0);

    const bool comb_fails = !vn.pass && !vn.vacuous;
    Json res_json{{"graph_points_pass", graph_ok}, {"comb_fails", comb_fails}, {"comb_components", vn.components},
                  {"eps", eps}, {"delta", delta}, {"res", res}, {"samples", samples}};
    return kit.finish(std::move(res_json), graph_ok && comb_fails);
}

Bundle cantor_slit(const ExperimentConfig& c) {
    Kit kit(c);
    const Params p(c.params, {"depth", "scales", "points_per_interval"}, c.experiment);
    const DomainSpec d = domain_or(c, DomainSpec{shapes::CantorSlit{6}});
    const auto* cs = d.as<shapes::CantorSlit>();
    if (!cs) throw InvalidArgument("cantor-slit needs a CantorSlit domain");
    const int depth = p.integer("depth", cs->depth), per = p.integer("points_per_interval", 10);
    if (depth < 1 || depth > 14 || per < 2) throw InvalidArgument("cantor-slit: depth in [1, 14], points_per_interval >= 2");
    const double s = std::pow(3.0, -(depth + 1));
    const auto scales = p.nums("scales", {s, s / 3});
    kit.truncation["cantor_depth"] = depth;
    kit.grid_h = scales.front();

    std::vector<Complex> set;
    for (const auto& [a, b] : cantor_intervals(depth))
        for (int i = 0; i < per; ++i) set.emplace_back(a + (b - a) * i / (per - 1), 0.0);
    const auto diam = totally_disconnected_probe(set, scales);
    const double bound = std::pow(3.0, -depth);
    CsvTable t = kit.table({"scale", "max_component_diameter", "bound", "pass"});
    bool pass = true;
    for (std::size_t i = 0; i < scales.size(); ++i) {
        const bool ok = diam[i] <= bound * (1 + 1e-12);
        pass = pass && ok;
        t.add_row({fmt(scales[i]), fmt(diam[i]), fmt(bound), ok ? "1" : "0"});
    }
    kit.add_csv("cantor.csv", std::move(t));
    kit.add_svg("cantor.svg", d, default_window(d), {}, 0.0);

    Json res{{"depth", depth}, {"scales", scales}, {"max_diameters", diam}, {"bound", bound}};
    return kit.finish(std::move(res), pass);
}

}  // namespace vislab::detail

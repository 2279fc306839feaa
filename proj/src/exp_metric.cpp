// Experiments built on closed forms and certified quadrature.

#include <random>

#include "experiment_kit.hpp"
#include "vislab/curves.hpp"
#include "vislab/distance.hpp"
#include "vislab/geodesic.hpp"
#include "vislab/visibility.hpp"

namespace vislab::detail {

namespace {

std::vector<double> dyadic_hs(int k_min, int k_max) {
    if (k_min < 1 || k_max > 40 || k_max - k_min < 2) throw InvalidArgument("need 1 <= k_min, k_max <= 40, at least 3 levels");
    std::vector<double> hs;
    for (int k = k_min; k <= k_max; ++k) hs.push_back(std::ldexp(1.0, -k));
    return hs;
}

Json goldilocks_json(const GoldilocksReport& r, double fit_tol) {
    return {
        {"M", r.M},
        {"alpha", r.alpha},
        {"t0", r.t0},
        {"cusp_r0", r.cusp_r0},
        {"lower_slope", r.lower_slope},
        {"exact_slope", r.exact_slope},
        {"coefficient", r.bound_coefficient},
        {"fit_tolerance", fit_tol},
        {"slope_ok", r.lower_slope >= r.bound_coefficient - fit_tol},
        {"growth_slope_cusp", r.growth_slope_cusp},
        {"growth_slope_domain", r.growth_slope_domain},
        {"cusp_ratio_min", r.cusp_ratio_min},
        {"cusp_ratio_max", r.cusp_ratio_max},
        {"h_min", r.rows.back().h},
        {"h_max", r.rows.front().h},
    };
}

}  // namespace

Bundle takagi_non_goldilocks(const ExperimentConfig& c) {
    Kit kit(c);
    const Params p(c.params,
                   {"M", "k_min", "k_max", "fit_tolerance", "control_M", "control_k_min", "control_k_max",
                    "control_fit_tolerance", "separation", "ratio_c"},
                   c.experiment);
    const DomainSpec d = domain_or(c, DomainSpec{shapes::TakagiTrunc{0.0, 0.5}});
    const double M = p.num("M", 5.0), Mc = p.num("control_M", 1.0);
    const double tol = p.num("fit_tolerance", 0.1), tol_c = p.num("control_fit_tolerance", 0.05);
    const double sep_needed = p.num("separation", 0.5), ratio_c = p.num("ratio_c", 0.5);
    if (!(ratio_c > 0.0 && ratio_c <= 1.0)) throw InvalidArgument("params.ratio_c must lie in (0, 1]");

    const auto main = goldilocks_growth_probe(d, M, dyadic_hs(p.integer("k_min", 7), p.integer("k_max", 11)));
    const auto ctrl = goldilocks_growth_probe(d, Mc, dyadic_hs(p.integer("control_k_min", 4), p.integer("control_k_max", 9)));
    kit.truncation["takagi_terms"] = takagi::truncation_terms(d.tol);
    kit.truncation["holder_lattice_level"] = 12;
    kit.truncation["threshold_grid_level"] = 12;

    CsvTable t = kit.table({"run", "M", "h", "log_inv_h", "dtb_lower", "dtb_upper", "dtb_cusp", "cusp_ratio", "lower",
                            "exact_sector", "upper"});
    for (const auto* r : {&main, &ctrl})
        for (const auto& row : r->rows)
            t.add_row({r == &main ? "main" : "control", fmt(r->M), fmt(row.h), fmt(std::log(1.0 / row.h)),
                       fmt(row.dtb_lower), fmt(row.dtb_upper), fmt(row.dtb_cusp), fmt(row.dtb_cusp / (row.h * row.h)),
                       fmt(row.lower), fmt(row.exact_sector), fmt(row.upper)});
    kit.add_csv("goldilocks.csv", std::move(t));

    const double growth = std::max(main.growth_slope_cusp, main.growth_slope_domain);
    const double separation = main.lower_slope - growth;
    const bool ratio_ok = main.cusp_ratio_min >= ratio_c && main.cusp_ratio_max <= 1.0 / ratio_c &&
                          ctrl.cusp_ratio_min >= ratio_c && ctrl.cusp_ratio_max <= 1.0 / ratio_c;
    const bool pass = main.lower_slope >= main.bound_coefficient - tol && ctrl.lower_slope >= ctrl.bound_coefficient - tol_c &&
                      separation >= sep_needed && ratio_ok;

    std::vector<Complex> probes;
    for (const auto& row : ctrl.rows) probes.push_back(ctrl.base + Complex(0, row.h));
    SvgOverlay marks{probes, "#c0392b", 2.0, false, true};
    SvgOverlay axis{{ctrl.base, ctrl.z0}, "#7f8c8d", 1.0};
    kit.add_svg("domain.svg", d, Box{main.x0 - 0.5, -0.05, main.x0 + 0.5, 1.1}, {axis, marks}, 1.0 / 128);

    Json res{{"main", goldilocks_json(main, tol)},
             {"control", goldilocks_json(ctrl, tol_c)},
             {"alpha1_growth_slope", growth},
             {"separation", separation},
             {"separation_required", sep_needed},
             {"ratio_c", ratio_c},
             {"cusp_ratio_ok", ratio_ok},
             {"base", {main.base.real(), main.base.imag()}},
             {"z0", {main.z0.real(), main.z0.imag()}},
             {"verdict", pass ? "not-goldilocks-at-scale" : "indeterminate"}};
    return kit.finish(std::move(res), pass);
}

Bundle sector_slope_experiment(const ExperimentConfig& c) {
    Kit kit(c);
    if (c.domain) throw InvalidArgument("sector-slope builds its sector from M; drop the domain field");
    const Params p(c.params, {"M", "k_min", "k_max", "p0", "fit_tolerance", "quadrature_steps"}, c.experiment);
    const double M = p.num("M", 1.0), p0 = p.num("p0", 1.0), tol = p.num("fit_tolerance", 0.05);
    const int steps = p.integer("quadrature_steps", 512);
    if (!(M > 0.0) || !(p0 > 0.0) || steps < 8) throw InvalidArgument("sector-slope: need M > 0, p0 > 0, quadrature_steps >= 8");
    const auto hs = dyadic_hs(p.integer("k_min", 4), p.integer("k_max", 9));
    const auto s = sector_slope(M, hs, p0);
    const DomainSpec sector{shapes::Sector{0.0, Complex(0, 1), s.alpha, std::nullopt}};
    const auto density = exact_backend(sector);

    CsvTable t = kit.table({"h", "log_inv_h", "lower", "exact", "upper"});
    std::vector<double> x, up;
    bool enclosed = true;
    for (const double h : hs) {
        // geometric spacing along the axis keeps the quadrature uniform in log height
        std::vector<Complex> pts;
        for (int i = 0; i <= steps; ++i) pts.emplace_back(0.0, p0 * std::pow(h / p0, static_cast<double>(i) / steps));
        const double upper = kob_length(sector, Curve::polyline(pts), density).upper;
        const double lower = sector_axis_distance(s.alpha, p0, h);
        const double exact = distance_exact(sector, Complex(0, p0), Complex(0, h));
        enclosed = enclosed && lower <= exact * (1 + 1e-9) && exact <= upper * (1 + 1e-9);
        t.add_row({fmt(h), fmt(std::log(1.0 / h)), fmt(lower), fmt(exact), fmt(upper)});
        x.push_back(std::log(1.0 / h));
        up.push_back(upper);
    }
    kit.add_csv("sector.csv", std::move(t));
    const double upper_slope = ols_slope(x, up);

    std::vector<Complex> probes;
    for (const double h : hs) probes.emplace_back(0.0, h);
    kit.add_svg("sector.svg", sector, Box{-1.0, -0.1, 1.0, 1.2},
                {SvgOverlay{{0.0, Complex(0, p0)}, "#7f8c8d", 1.0}, SvgOverlay{probes, "#c0392b", 2.0, false, true}},
                1.0 / 128);

    const bool lower_ok = s.lower_slope >= s.bound_coefficient - tol;
    const bool exact_ok = std::abs(s.exact_slope - s.exact_coefficient) <= 0.01 * s.exact_coefficient;
    Json res{{"M", M},
             {"alpha", s.alpha},
             {"p0", p0},
             {"lower_slope", s.lower_slope},
             {"exact_slope", s.exact_slope},
             {"upper_slope", upper_slope},
             {"bound_coefficient", s.bound_coefficient},
             {"exact_coefficient", s.exact_coefficient},
             {"fit_tolerance", tol},
             {"lower_ok", lower_ok},
             {"exact_ok", exact_ok},
             {"enclosed", enclosed},
             {"fit_tail", {hs.front(), hs.back()}}};
    return kit.finish(std::move(res), lower_ok && exact_ok && enclosed);
}

Bundle gromov_disk(const ExperimentConfig& c) {
    Kit kit(c);
    if (c.domain) throw InvalidArgument("gromov-disk always uses the unit disk; drop the domain field");
    const Params p(c.params, {"k_min", "k_max", "deep_exponents", "triples", "cauchy_tolerance", "ceiling"}, c.experiment);
    const DomainSpec disk{shapes::Disk{}};
    const auto be = exact_distance_backend(disk);
    const double ceiling = p.num("ceiling", 5.0), cauchy_tol = p.num("cauchy_tolerance", 1e-3);
    const int triples = p.integer("triples", 20);
    if (triples < 1) throw InvalidArgument("params.triples must be positive");

    const auto ts = dyadic_hs(p.integer("k_min", 8), p.integer("k_max", 12));
    std::vector<double> deep;
    for (const int e : p.ints("deep_exponents", {1, 2, 3, 4, 5})) deep.push_back(std::pow(10.0, -e));
    const auto bounded = gromov_limit_probe(1.0, -1.0, Complex(0, 1), Complex(0, -1), 0.0, ts, be, ceiling);
    const auto diverg = gromov_limit_probe(1.0, -1.0, 1.0, -1.0, 0.0, deep, be, ceiling);

    CsvTable t = kit.table({"pair", "t", "z", "w", "lo", "hi", "value"});
    for (const auto* g : {&bounded, &diverg})
        for (std::size_t i = 0; i < g->ts.size(); ++i) {
            const auto& s = g->samples[i];
            t.add_row({g == &bounded ? "1|i" : "1|1", fmt(g->ts[i]), cpx(s.z), cpx(s.w), fmt(s.lo), fmt(s.hi), fmt(s.value())});
        }
    kit.add_csv("gromov.csv", std::move(t));

    // symmetry and basepoint moves on random triples
    std::uniform_real_distribution<double> U(-0.65, 0.65);
    CsvTable q = kit.table({"z", "w", "o", "o2", "difference", "bound", "symmetric"});
    bool sym_ok = true, qi_ok = true;
    for (int k = 0; k < triples; ++k) {
        const Complex z(U(kit.rng), U(kit.rng)), w(U(kit.rng), U(kit.rng)), o(U(kit.rng), U(kit.rng)), o2(U(kit.rng), U(kit.rng));
        const auto a = gromov_product(z, w, o, be), b = gromov_product(w, z, o, be), m = gromov_product(z, w, o2, be);
        const bool sym = a.lo == b.lo && a.hi == b.hi;
        const double diff = std::abs(a.value() - m.value()), bound = be(o, o2).upper;
        sym_ok = sym_ok && sym;
        qi_ok = qi_ok && diff <= bound + 1e-12;
        q.add_row({cpx(z), cpx(w), cpx(o), cpx(o2), fmt(diff), fmt(bound), sym ? "1" : "0"});
    }
    kit.add_csv("basepoint.csv", std::move(q));

    const double r = 1.0 - ts.back();
    kit.add_svg("disk.svg", disk, Box{-1.1, -1.1, 1.1, 1.1},
                {SvgOverlay{disk_geodesic(r, Complex(0, r)).sample(256), "#c0392b", 1.5},
                 SvgOverlay{{r, Complex(0, r), 0.0}, "#1f618d", 2.5, false, true}},
                0.0);

    const bool pass = bounded.verdict == GromovClass::bounded && bounded.cauchy_tail <= cauchy_tol &&
                      diverg.verdict == GromovClass::divergent && sym_ok && qi_ok;
    Json res{{"bounded_pair", {{"verdict", to_string(bounded.verdict)}, {"cauchy_tail", bounded.cauchy_tail},
                               {"last_value", bounded.samples.back().value()}}},
             {"divergent_pair", {{"verdict", to_string(diverg.verdict)}, {"last_lo", diverg.samples.back().lo},
                                 {"ceiling", ceiling}}},
             {"cauchy_tolerance", cauchy_tol},
             {"symmetry_exact", sym_ok},
             {"basepoint_bound_holds", qi_ok},
             {"triples", triples}};
    return kit.finish(std::move(res), pass);
}

Bundle royden_disks(const ExperimentConfig& c) {
    Kit kit(c);
    if (c.domain) throw InvalidArgument("royden-disks uses concentric disks; drop the domain field");
    const Params p(c.params, {"outer_radius", "inner_radius", "samples", "sample_radius", "resolution", "residual_tolerance"},
                   c.experiment);
    const double R = p.num("outer_radius", 2.0), r = p.num("inner_radius", 1.0);
    const double sr = p.num("sample_radius", 0.5), res = p.num("resolution", 1e-3), rtol = p.num("residual_tolerance", 1e-9);
    const int n = p.integer("samples", 100);
    if (!(R > r && r > 0.0) || !(sr >= 0.0 && sr < r) || !(res > 0.0) || n < 1)
        throw InvalidArgument("royden-disks: need outer_radius > inner_radius > sample_radius >= 0, resolution > 0, samples >= 1");
    const DomainSpec outer{shapes::Disk{0.0, R}}, inner{shapes::Disk{0.0, r}};
    const Box win{-R, -R, R, R};

    std::vector<Complex> zs{0.0};
    std::uniform_real_distribution<double> U(0.0, 1.0);
    while (static_cast<int>(zs.size()) < n + 1) {
        const Complex z(sr * (2 * U(kit.rng) - 1), sr * (2 * U(kit.rng) - 1));
        if (std::abs(z) <= sr) zs.push_back(z);
    }
    const auto rep = royden_check(outer, inner, zs, win, res);
    const auto fit = refined_royden_fit(outer, inner, std::vector<Complex>(zs.begin() + 1, zs.end()), win, res);
    kit.truncation["boundary_samples"] = static_cast<long long>(std::ceil(2 * kPi * r / res));

    CsvTable t = kit.table({"z", "kappa_inner", "kappa_outer", "k", "factor", "slack", "holds"});
    for (const auto& s : rep.samples)
        t.add_row({cpx(s.z), fmt(s.kappa_inner), fmt(s.kappa_outer_hi), fmt(s.k), fmt(s.factor), fmt(s.slack),
                   s.holds ? "1" : "0"});
    kit.add_csv("royden.csv", std::move(t));

    std::vector<Complex> pts(zs.begin(), zs.end());
    kit.add_svg("disks.svg", outer, win.expanded(0.1), {SvgOverlay{pts, "#c0392b", 1.5, false, true}}, 0.0);

    const auto& c0 = rep.samples.front();
    const double residual = std::abs(c0.kappa_inner - c0.factor * c0.kappa_outer_hi);
    bool sampled_ok = true;
    for (std::size_t i = 1; i < rep.samples.size(); ++i) sampled_ok = sampled_ok && rep.samples[i].holds;
    Json res_json{{"center_residual", residual},
                  {"residual_tolerance", rtol},
                  {"center_k", c0.k},
                  {"center_factor", c0.factor},
                  {"samples", n},
                  {"sampled_hold", sampled_ok},
                  {"refined_L", fit.L},
                  {"refined_min_k", fit.min_k},
                  {"resolution", res}};
    return kit.finish(std::move(res_json), residual < rtol && sampled_ok);
}

Bundle reparam_suite(const ExperimentConfig& c) {
    Kit kit(c);
    if (c.domain) throw InvalidArgument("reparam-suite always uses the unit disk; drop the domain field");
    const Params p(c.params, {"polylines", "vertices", "pieces", "kappa", "perturbations"}, c.experiment);
    const int lines = p.integer("polylines", 20), verts = p.integer("vertices", 6), pieces = p.integer("pieces", 64);
    const int perturbs = p.integer("perturbations", 20);
    const double kappa = p.num("kappa", 0.02);
    if (lines < 1 || verts < 2 || pieces < 4 || perturbs < 1) throw InvalidArgument("reparam-suite: counts too small");
    const DomainSpec disk{shapes::Disk{}};
    const auto density = exact_backend(disk);
    const auto dist = exact_distance_backend(disk);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    auto in_disk = [&](double rad) {
        for (;;) {
            const Complex z(rad * U(kit.rng), rad * U(kit.rng));
            if (std::abs(z) <= rad) return z;
        }
    };

    CsvTable t = kit.table({"kind", "index", "speed_min", "speed_max", "length", "enclosure_lo", "enclosure_hi", "pass"});
    bool speeds_ok = true, length_ok = true, geo_ok = true, perturb_ok = true;
    std::vector<SvgOverlay> drawn;
    for (int i = 0; i < lines; ++i) {
        std::vector<Complex> pts;
        Complex prev = in_disk(0.8);
        for (int v = 1; v < verts; ++v) {
            const Complex next = in_disk(0.8);
            for (int k = 0; k < pieces; ++k) pts.push_back(prev + (next - prev) * (static_cast<double>(k) / pieces));
            prev = next;
        }
        pts.push_back(prev);
        const Curve c0 = Curve::polyline(pts);
        const Curve u = reparametrize_unit_speed(disk, c0, density);
        const auto sp = midpoint_speeds(u, density);
        const auto [mn, mx] = std::minmax_element(sp.begin(), sp.end());
        const auto enc = kob_length(disk, c0, density);
        const double len = u.t_end() - u.t_begin();
        const bool ok_s = *mn >= 0.98 && *mx <= 1.02;
        const bool ok_l = len >= enc.lower - enc.width() && len <= enc.upper + enc.width();
        speeds_ok = speeds_ok && ok_s;
        length_ok = length_ok && ok_l;
        t.add_row({"polyline", std::to_string(i), fmt(*mn), fmt(*mx), fmt(len), fmt(enc.lower), fmt(enc.upper),
                   ok_s && ok_l ? "1" : "0"});
    }
    for (int i = 0; i < lines; ++i) {
        const Complex a = in_disk(0.9), b = in_disk(0.9);
        if (std::abs(a - b) < 1e-3) continue;
        const Curve g = reparametrize_unit_speed(disk, Curve::polyline(disk_geodesic(a, b).sample(257)), density);
        const auto rep = check_almost_geodesic(g, 1.0, kappa, dist, density);
        geo_ok = geo_ok && rep.pass;
        if (drawn.size() < 8) drawn.push_back({g.p, "#c0392b", 1.2});
        t.add_row({"geodesic", std::to_string(i), "", "", fmt(g.t_end()), fmt(dist(a, b).lower), fmt(dist(a, b).upper),
                   rep.pass ? "1" : "0"});
    }
    std::bernoulli_distribution stop(0.4);
    for (int i = 0; i < perturbs; ++i) {
        std::vector<double> ts{0.0};
        std::vector<Complex> pts{in_disk(0.5)};
        for (int k = 0; k < 20; ++k) {
            ts.push_back(ts.back() + 0.1 + 0.5 * std::abs(U(kit.rng)));
            pts.push_back(stop(kit.rng) ? pts.back() : in_disk(0.5));
        }
        const Curve cv(ts, pts);
        const double eps = 0.01 + 0.5 * std::abs(U(kit.rng));
        const Curve q = perturb_nonstationary(cv, eps);
        const double disp = sup_displacement(cv, q);
        bool moving = true;
        for (std::size_t k = 0; k + 1 < q.size(); ++k) moving = moving && q.p[k + 1] != q.p[k];
        const bool ok = disp <= eps / 3 + 1e-12 && moving;
        perturb_ok = perturb_ok && ok;
        t.add_row({"perturbation", std::to_string(i), "", "", fmt(disp), "0", fmt(eps / 3), ok ? "1" : "0"});
    }
    kit.add_csv("reparam.csv", std::move(t));
    kit.add_svg("geodesics.svg", disk, Box{-1.1, -1.1, 1.1, 1.1}, drawn, 0.0);

    const bool pass = speeds_ok && length_ok && geo_ok && perturb_ok;
    Json res{{"speeds_in_band", speeds_ok},
             {"length_within_enclosure", length_ok},
             {"geodesics_almost_geodesic", geo_ok},
             {"kappa", kappa},
             {"perturbation_ok", perturb_ok}};
    return kit.finish(std::move(res), pass);
}

}  // namespace vislab::detail

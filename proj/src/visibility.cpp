#include "vislab/visibility.hpp"

#include <algorithm>
#include <set>

#include "vislab/topology.hpp"

namespace vislab {

GromovSample gromov_product(Complex z, Complex w, Complex o, const DistanceBackend& dist) {
    const DistanceInterval zo = dist(z, o), wo = dist(w, o), zw = dist(z, w);
    GromovSample s{o, z, w};
    s.lo = 0.5 * ((zo.lower + wo.lower) - zw.upper);
    s.hi = 0.5 * ((zo.upper + wo.upper) - zw.lower);
    return s;
}

const char* to_string(GromovClass c) {
    switch (c) {
        case GromovClass::bounded: return "bounded";
        case GromovClass::divergent: return "divergent";
        default: return "indeterminate";
    }
}

const char* to_string(VisibilityClass c) {
    switch (c) {
        case VisibilityClass::visible_at_scale: return "visible-at-scale";
        case VisibilityClass::escaping: return "escaping";
        default: return "indeterminate";
    }
}

GromovLimit gromov_limit_probe(Complex xi1, Complex dir1, Complex xi2, Complex dir2, Complex o,
                               const std::vector<double>& ts, const DistanceBackend& dist, double ceiling) {
    if (ts.size() < 4) throw PreconditionError("gromov_limit_probe: need at least four approach steps");
    for (std::size_t i = 1; i < ts.size(); ++i)
        if (!(ts[i] < ts[i - 1])) throw PreconditionError("gromov_limit_probe: steps must decrease");
    GromovLimit out;
    out.ts = ts;
    out.ceiling = ceiling;
    for (const double t : ts) out.samples.push_back(gromov_product(xi1 + t * dir1, xi2 + t * dir2, o, dist));
    const std::size_t n = out.samples.size();
    out.cauchy_tail = std::abs(out.samples[n - 1].value() - out.samples[n - 2].value());
    double early = -kInfinity, late = -kInfinity;
    for (std::size_t i = 0; i < n; ++i) {
        double& m = i + 3 < n ? early : late;
        m = std::max(m, out.samples[i].hi);
    }
    if (out.samples.back().lo > ceiling)
        out.verdict = GromovClass::divergent;
    else if (late <= early + 0.1)
        out.verdict = GromovClass::bounded;
    return out;
}

VisibilityVerdict visibility_probe(const WeightedGrid& g, const std::vector<int>& ns,
                                   const std::vector<std::pair<Complex, Complex>>& endpoints, double core) {
    if (ns.size() != endpoints.size()) throw InvalidArgument("visibility_probe: one endpoint pair per n");
    VisibilityVerdict v;
    v.core = core;
    bool all_visible = !ns.empty(), all_connected = !ns.empty();
    for (std::size_t i = 0; i < ns.size(); ++i) {
        VisibilityRow r;
        r.n = ns[i];
        r.z = endpoints[i].first;
        r.w = endpoints[i].second;
        try {
            const PathResult p = shortest_path(g, r.z, r.w);
            r.connected = true;
            r.upper = p.upper;
            r.min_dtb = p.min_dtb;
            r.depth = p.max_dtb;
            r.nodes = p.nodes.size();
        } catch (const DisconnectedError&) {
            all_connected = false;
        }
        all_visible = all_visible && r.connected && r.depth >= core;
        v.rows.push_back(r);
    }
    bool decreasing = all_connected;
    for (std::size_t i = 1; i < v.rows.size(); ++i) decreasing = decreasing && v.rows[i].depth < v.rows[i - 1].depth;
    if (all_visible)
        v.verdict = VisibilityClass::visible_at_scale;
    else if (decreasing && !v.rows.empty() && v.rows.back().depth < core)
        v.verdict = VisibilityClass::escaping;
    return v;
}

double ols_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw InvalidArgument("ols_slope: need two or more paired values");
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= x.size();
    my /= y.size();
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    if (sxx == 0.0) throw InvalidArgument("ols_slope: abscissae are all equal");
    return sxy / sxx;
}

namespace {

std::vector<double> log_inv(const std::vector<double>& hs) {
    std::vector<double> out;
    for (const double h : hs) out.push_back(std::log(1.0 / h));
    return out;
}

// Length of the vertical segment a -> b under hi = 1/dtb, padded by the Lipschitz bound.
double vertical_upper(const DomainSpec& d, Complex a, Complex b) {
    const double top = b.imag();
    double y = a.imag(), total = 0.0;
    double da = dist_to_boundary(d, {a.real(), y}, 1e-2).lower();
    while (y < top) {
        const double step = std::min(0.5 * da, top - y);
        const double y1 = y + step;
        const double db = dist_to_boundary(d, {a.real(), y1}, 1e-2).lower();
        const double room = std::min(da, db) - 0.5 * step;
        if (!(room > 0.0)) throw ResolutionError("vertical_upper: segment too close to the boundary");
        total += step / room;
        y = y1;
        da = db;
    }
    return total;
}

}  // namespace

SectorSlope sector_slope(double M, const std::vector<double>& hs, double p0) {
    if (!(M > 0.0)) throw InvalidArgument("sector_slope: M must be positive");
    SectorSlope s;
    s.M = M;
    s.alpha = std::atan(1.0 / M);
    s.bound_coefficient = kPi / (8.0 * s.alpha);
    s.exact_coefficient = kPi / (4.0 * s.alpha);
    const DomainSpec sector{shapes::Sector{0.0, Complex(0, 1), s.alpha, std::nullopt}};
    std::vector<double> lo, ex;
    for (const double h : hs) {
        lo.push_back(sector_axis_distance(s.alpha, p0, h));
        ex.push_back(distance_exact(sector, Complex(0, p0), Complex(0, h)));
    }
    const auto x = log_inv(hs);
    s.lower_slope = ols_slope(x, lo);
    s.exact_slope = ols_slope(x, ex);
    return s;
}

GoldilocksReport goldilocks_growth_probe(const DomainSpec& d, double M, const std::vector<double>& hs, double p0) {
    const auto* tt = d.as<shapes::TakagiTrunc>();
    if (!tt) throw PreconditionError("goldilocks_growth_probe: needs a TakagiTrunc domain");
    GoldilocksReport r;
    r.x0 = tt->x0;
    r.M = M;
    r.alpha = std::atan(1.0 / M);
    r.bound_coefficient = kPi / (8.0 * r.alpha);
    const double scaled = std::ldexp(r.x0, 30);
    if (scaled != std::floor(scaled)) throw PreconditionError("goldilocks_growth_probe: x0 must be dyadic");
    const takagi::Dyadic x0d{static_cast<std::int64_t>(scaled), 30};

    std::vector<double> grid;
    for (int k = 1; k <= 12; ++k) grid.push_back(std::ldexp(1.0, -k));
    const auto t0 = takagi::sector_threshold_search(x0d, M, grid);
    if (!t0 || !(*t0 > 0.0)) throw PreconditionError("goldilocks_growth_probe: sector threshold search failed");
    r.t0 = std::min(*t0, tt->r1);
    for (const double h : hs)
        if (!(h > 0.0 && h < r.t0 / 2)) throw PreconditionError("goldilocks_growth_probe: h outside (0, t0/2)");

    const auto m34 = takagi::holder_constant_lattice(0.75, 12);
    r.cusp_r0 = takagi::cusp_radius(m34);
    if (!takagi::cusp_containment_check(r.x0, r.cusp_r0, 4096, m34).contained)
        throw PreconditionError("goldilocks_growth_probe: cusp not inscribed");
    const DomainSpec cusp{shapes::Cusp{r.x0, r.cusp_r0}};

    const double base_y = takagi::eval_dyadic(x0d);
    r.base = {r.x0, base_y};
    r.z0 = r.base + Complex(0, p0);
    if (contains(d, r.z0) != Membership::inside) throw PreconditionError("goldilocks_growth_probe: z0 not inside");
    const DomainSpec sector{shapes::Sector{r.base, Complex(0, 1), r.alpha, std::nullopt}};

    std::vector<double> lo, ex, gc, gd;
    for (const double h : hs) {
        GoldilocksRow row;
        row.h = h;
        const Complex u = r.base + Complex(0, h);
        const DtbValue dv = dist_to_boundary(d, u, 1e-3);
        row.dtb_lower = dv.lower();
        row.dtb_upper = dv.upper();
        row.dtb_cusp = dist_to_boundary(cusp, u, 1e-6).value;
        row.lower = sector_axis_distance(r.alpha, p0, h);
        row.exact_sector = distance_exact(sector, r.z0, u);
        row.upper = vertical_upper(d, u, r.z0);
        r.rows.push_back(row);
        lo.push_back(row.lower);
        ex.push_back(row.exact_sector);
        gc.push_back(0.5 * std::log(1.0 / row.dtb_cusp));
        gd.push_back(0.5 * std::log(1.0 / row.dtb_lower));
    }
    const auto x = log_inv(hs);
    r.lower_slope = ols_slope(x, lo);
    r.exact_slope = ols_slope(x, ex);
    r.growth_slope_cusp = ols_slope(x, gc);
    r.growth_slope_domain = ols_slope(x, gd);
    r.cusp_ratio_min = kInfinity;
    r.cusp_ratio_max = 0.0;
    for (const auto& row : r.rows) {
        const double q = row.dtb_cusp / (row.h * row.h);
        r.cusp_ratio_min = std::min(r.cusp_ratio_min, q);
        r.cusp_ratio_max = std::max(r.cusp_ratio_max, q);
    }
    return r;
}

VisitReport finite_component_visit_check(const DomainSpec& d, Complex p, double r, const std::vector<Complex>& seq,
                                         double h) {
    GridOptions opt;
    opt.margin_factor = 1.0 / std::sqrt(2.0);
    opt.clip = std::make_pair(p, r);
    const GridMask m = build_grid(d, Box::around(p, r), h, opt);
    const auto lab = components(m);
    VisitReport out;
    out.components = lab.count;
    std::set<int> seen;
    for (const auto& z : seq) {
        int label = -1;
        if (!(std::abs(z - p) < r)) {
            out.flags.push_back("outside-ball");
        } else if (const auto k = m.snap(z)) {
            label = lab.labels[*k];
            out.flags.push_back("ok");
        } else {
            out.flags.push_back("unresolved");
        }
        if (label >= 0) seen.insert(label);
        out.labels.push_back(label);
        out.distinct.push_back(static_cast<int>(seen.size()));
    }
    return out;
}

}  // namespace vislab

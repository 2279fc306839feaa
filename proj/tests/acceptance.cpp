// One line per acceptance criterion; nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <deque>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "vislab/curves.hpp"
#include "vislab/distance.hpp"
#include "vislab/experiments.hpp"
#include "vislab/topology.hpp"
#include "vislab/visibility.hpp"

using namespace vislab;

namespace {

// Collects failed conditions and a few headline numbers.
struct Tally {
    bool ok = true;
    std::string failed;
    std::string notes;

    void require(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        failed += (failed.empty() ? "" : "; ") + what;
    }
    void note(const std::string& k, double v) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%s=%.6g", k.c_str(), v);
        notes += (notes.empty() ? "" : " ") + std::string(buf);
    }
};

double disk_oracle(Complex z, Complex w) { return std::atanh(std::abs((z - w) / (1.0 - std::conj(z) * w))); }

double ols(const std::vector<double>& x, const std::vector<double>& y) {
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) mx += x[i], my += y[i];
    mx /= x.size();
    my /= y.size();
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) sxy += (x[i] - mx) * (y[i] - my), sxx += (x[i] - mx) * (x[i] - mx);
    return sxy / sxx;
}

const DomainSpec kDisk{shapes::Disk{}};

Tally takagi_suite() {
    Tally t;
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> U(-4.0, 4.0);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double x = U(rng);
        const double r = std::abs(takagi::eval(x) - std::abs(x - std::nearbyint(x)) - 0.5 * takagi::eval(2 * x));
        worst = std::max(worst, r);
    }
    t.note("functional_residual", worst);
    t.require(worst <= 2e-12, "functional equation");
    t.require(std::abs(takagi::eval(1.0 / 3) - 2.0 / 3) <= 1e-10, "T(1/3)");
    t.require(std::abs(takagi::eval(0.5) - 0.5) <= 1e-10, "T(1/2)");
    t.require(std::abs(takagi::eval(0.25) - 0.5) <= 1e-10, "T(1/4)");
    std::vector<double> hs;
    for (int k = 1; k <= 12; ++k) hs.push_back(std::ldexp(1.0, -k));
    const auto q = takagi::dyadic_slope_divergence(takagi::Dyadic{0, 0}, takagi::Side::right, hs);
    // T(2^-k) = sum_{j<k} 2^-j 2^(j-k) = k 2^-k
    for (int k = 1; k <= 12; ++k) {
        t.require(q[k - 1] == static_cast<double>(k), "dyadic quotient k=" + std::to_string(k));
        t.require(takagi::eval(hs[k - 1]) / hs[k - 1] == static_cast<double>(k), "direct quotient k=" + std::to_string(k));
    }
    return t;
}

Tally disk_distance() {
    Tally t;
    const std::vector<std::pair<Complex, Complex>> pairs{{0.0, 0.5}, {0.5, -0.5}};
    const std::vector<double> expect{std::atanh(0.5), std::atanh(0.8)};
    std::vector<std::vector<double>> gaps(pairs.size());
    for (const double h : {1.0 / 64, 1.0 / 128, 1.0 / 256}) {
        const auto g = weigh(kDisk, build_grid(kDisk, Box{-1, -1, 1, 1}, h));
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const auto iv = distance_interval(kDisk, pairs[i].first, pairs[i].second, g, {kDisk});
            const double o = disk_oracle(pairs[i].first, pairs[i].second);
            t.require(std::abs(o - expect[i]) <= 1e-14, "oracle identity");
            t.require(iv.lower == o || std::abs(iv.lower - o) <= 1e-14 * o, "lower equals exact");
            t.require(iv.contains(o), "enclosure");
            gaps[i].push_back(iv.upper - iv.lower);
            if (h == 1.0 / 256) {
                t.require(iv.upper <= 1.1 * o, "upper within 10%");
                t.note("rel_excess_" + std::to_string(i), iv.upper / o - 1);
            }
        }
    }
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t k = 1; k < gaps[i].size(); ++k) {
            const double ratio = gaps[i][k - 1] / gaps[i][k];
            t.require(ratio >= 1.5, "gap shrink pair " + std::to_string(i));
            if (k + 1 == gaps[i].size()) t.note("shrink_" + std::to_string(i), ratio);
        }
    return t;
}

Tally sector_slope_check() {
    Tally t;
    std::vector<double> hs, x;
    for (int k = 4; k <= 9; ++k) {
        hs.push_back(std::ldexp(1.0, -k));
        x.push_back(k * std::log(2.0));
    }
    for (const double M : {1.0, 5.0}) {
        const double alpha = std::atan(1.0 / M);
        const auto s = sector_slope(M, hs);
        // power map z -> (z/i)^(pi/(2 alpha)) onto the right half-plane, density 1/(2x)
        const double beta = kPi / (2 * alpha);
        const DomainSpec sector{shapes::Sector{0.0, Complex(0, 1), alpha, std::nullopt}};
        std::vector<double> ex;
        for (const double h : hs) {
            const double o = 0.5 * std::abs(std::log(std::pow(1.0, beta) / std::pow(h, beta)));
            ex.push_back(o);
            t.require(std::abs(distance_exact(sector, Complex(0, 1), Complex(0, h)) - o) <= 1e-9 * o, "pullback distance");
        }
        const std::string m = M == 1.0 ? "M1" : "M5";
        t.require(s.lower_slope >= kPi / (8 * alpha) - 0.05, m + " lower slope");
        t.require(std::abs(s.exact_slope - kPi / (4 * alpha)) <= 0.01 * kPi / (4 * alpha), m + " exact slope");
        t.require(std::abs(ols(x, ex) - s.exact_slope) <= 1e-9 * s.exact_slope, m + " oracle slope");
        t.note(m + "_lower", s.lower_slope);
        t.note(m + "_exact", s.exact_slope);
    }
    return t;
}

Tally royden_equality() {
    Tally t;
    const DomainSpec outer{shapes::Disk{0.0, 2.0}};
    const Box win{-2, -2, 2, 2};
    std::vector<Complex> zs{0.0};
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> U(-0.5, 0.5);
    while (zs.size() < 101) {
        const Complex z(U(rng), U(rng));
        if (std::abs(z) <= 0.5) zs.push_back(z);
    }
    const auto rep = royden_check(outer, kDisk, zs, win, 1e-3);
    const auto& c = rep.samples.front();
    // kappa_unit(0) = 1, kappa_radius2(0) = 1/2, k = atanh(1/2), coth k = 2
    const double oracle_residual = std::abs(1.0 - (1.0 / std::tanh(std::atanh(0.5))) * 0.5);
    const double residual = std::abs(c.kappa_inner - c.factor * c.kappa_outer_hi);
    t.note("center_residual", residual);
    t.require(residual < 1e-9, "center residual");
    t.require(oracle_residual < 1e-12, "oracle residual");
    int oracle_hold = 0;
    for (std::size_t i = 1; i < rep.samples.size(); ++i) {
        const auto& s = rep.samples[i];
        t.require(s.holds, "library inequality");
        const double r = std::abs(s.z);
        const double ki = 1.0 / (1.0 - r * r), ko = 2.0 / (4.0 - r * r);
        const double k = std::atanh(2.0 * (1.0 - r) / (4.0 - r));
        oracle_hold += ki <= ko / std::tanh(k) * (1 + 1e-12);
        t.require(std::abs(s.kappa_inner - ki) <= 1e-12 * ki, "inner density");
        t.require(s.k >= k - 1e-9, "separation not below the infimum");
    }
    t.require(oracle_hold == 100, "oracle inequality");
    return t;
}

Tally non_goldilocks() {
    Tally t;
    const DomainSpec d{shapes::TakagiTrunc{0.0, 0.5}};
    std::vector<double> hs, x;
    for (int k = 7; k <= 11; ++k) {
        hs.push_back(std::ldexp(1.0, -k));
        x.push_back(k * std::log(2.0));
    }
    const auto r = goldilocks_growth_probe(d, 5.0, hs);
    const double c = 0.5;
    std::vector<double> g_cusp, g_dom, lower;
    for (const auto& row : r.rows) {
        const double ratio = row.dtb_cusp / (row.h * row.h);
        t.require(ratio >= c && ratio <= 1.0 / c, "cusp dtb ratio");
        t.require(row.dtb_cusp <= row.dtb_upper, "cusp inscribed");
        g_cusp.push_back(0.5 * std::log(1.0 / row.dtb_cusp));
        g_dom.push_back(0.5 * std::log(1.0 / row.dtb_lower));
        lower.push_back(row.lower);
        // sector axis bound: pi/(4 alpha) log(p0/h), p0 = 1
        t.require(std::abs(row.lower - kPi / (4 * r.alpha) * std::log(1.0 / row.h)) <= 1e-9 * row.lower, "lower bound formula");
        t.require(row.lower <= row.upper, "bounds ordered");
    }
    const double lower_slope = ols(x, lower);
    const double growth = std::max(ols(x, g_cusp), ols(x, g_dom));
    t.note("ratio_min", r.cusp_ratio_min);
    t.note("ratio_max", r.cusp_ratio_max);
    t.note("lower_slope", lower_slope);
    t.note("alpha1_slope", growth);
    t.require(std::abs(lower_slope - r.lower_slope) <= 1e-9, "slope agrees with probe");
    t.require(lower_slope - growth >= 0.5, "separation");
    return t;
}

Tally comb_nonvisibility() {
    Tally t;
    const DomainSpec comb{shapes::CombD1{}};
    const double h = 1.0 / 2048;
    const auto g = weigh(comb, build_grid(comb, Box{0, 0, 1, 1}, h));
    const std::vector<int> ns{4, 8, 16};
    std::vector<std::pair<Complex, Complex>> ep;
    for (const int n : ns) {
        const double x = 0.5 * (1.0 / n + 1.0 / (n + 1));
        ep.push_back({{x, 0.25}, {x, 0.125}});
    }
    const auto v = visibility_probe(g, ns, ep, 0.05);
    t.require(v.verdict == VisibilityClass::escaping, "escaping verdict");
    double prev = kInfinity;
    for (const auto& r : v.rows) {
        t.require(r.connected, "path found");
        t.require(r.min_dtb <= 1.0 / r.n, "min dtb <= 1/n");
        // the gap between slits 1/(n+1) and 1/n is 1/(n(n+1)) wide
        t.require(r.depth <= 0.5 / (r.n * (r.n + 1.0)) + 1e-12, "path stays in the gap");
        t.require(r.min_dtb < prev, "min dtb strictly decreasing");
        prev = r.min_dtb;
    }
    std::vector<Complex> seq;
    for (int n = 4; n <= 16; ++n) seq.push_back({0.5 * (1.0 / n + 1.0 / (n + 1)), 0.25});
    const auto visits = finite_component_visit_check(comb, {0.0, 0.25}, 0.24, seq, h);
    for (std::size_t i = 1; i < visits.distinct.size(); ++i)
        t.require(visits.distinct[i] >= visits.distinct[i - 1], "visit count nondecreasing");
    t.require(visits.distinct.back() >= 3, "visit count >= 3 by n = 16");
    t.note("visits_n16", visits.distinct.back());
    t.note("depth_n16", v.rows.back().depth);
    return t;
}

Tally positive_controls() {
    Tally t;
    const auto gd = weigh(kDisk, build_grid(kDisk, Box{-1, -1, 1, 1}, 1.0 / 256));
    std::vector<int> ns{2, 3, 4, 5, 6};
    std::vector<std::pair<Complex, Complex>> ep;
    for (const int n : ns) ep.push_back({1.0 - std::ldexp(1.0, -n), -1.0 + std::ldexp(1.0, -n)});
    const auto vd = visibility_probe(gd, ns, ep, 0.3);
    // the exact geodesic is the diameter, deepest point 0 with dtb 1
    const double oracle = 1.0 - std::abs(disk_geodesic(ep.back().first, ep.back().second).at(0.5));
    t.require(std::abs(oracle - 1.0) <= 1e-12, "oracle depth");
    t.require(std::abs(vd.rows.back().depth - oracle) <= 0.05, "disk depth within 5%");
    t.require(vd.verdict == VisibilityClass::visible_at_scale, "disk visible");
    t.note("disk_depth", vd.rows.back().depth);

    const DomainSpec vt{shapes::VT{}};
    const auto g = weigh(vt, build_grid(vt, Box{-1.5, -2.5, 6.5, 1.75}, 1.0 / 64));
    ns = {2, 3, 4};
    ep.clear();
    for (const int n : ns) {
        const double s = std::ldexp(1.0, -n);
        ep.push_back({Complex(0.5, 1.5 - s), Complex(4.5, 1.5 - s)});
    }
    const auto v = visibility_probe(g, ns, ep, 0.1);
    t.require(v.verdict == VisibilityClass::visible_at_scale, "VT visible");
    double least = kInfinity;
    for (const auto& r : v.rows) least = std::min(least, r.depth);
    t.note("vt_min_depth", least);
    return t;
}

Tally gromov_check() {
    Tally t;
    const auto be = exact_distance_backend(kDisk);
    std::vector<double> ts;
    for (int k = 8; k <= 12; ++k) ts.push_back(std::ldexp(1.0, -k));
    const auto b = gromov_limit_probe(1.0, -1.0, Complex(0, 1), Complex(0, -1), 0.0, ts, be);
    t.require(b.verdict == GromovClass::bounded, "(1,i) bounded");
    t.require(b.cauchy_tail <= 1e-3, "cauchy tail");
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const auto& s = b.samples[i];
        const double o = 0.5 * (disk_oracle(s.z, 0.0) + disk_oracle(s.w, 0.0) - disk_oracle(s.z, s.w));
        t.require(std::abs(s.value() - o) <= 1e-9, "product matches closed form");
    }
    const auto d = gromov_limit_probe(1.0, -1.0, 1.0, -1.0, 0.0, {1e-1, 1e-2, 1e-3, 1e-4, 1e-5}, be);
    t.require(d.verdict == GromovClass::divergent, "(1,1) divergent");
    t.require(d.samples.back().lo > 5.0, "exceeds 5 at r = 1 - 1e-5");
    t.note("tail", b.cauchy_tail);
    t.note("deep_lo", d.samples.back().lo);

    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> U(-0.65, 0.65);
    for (int k = 0; k < 20; ++k) {
        const Complex z(U(rng), U(rng)), w(U(rng), U(rng)), o(U(rng), U(rng)), o2(U(rng), U(rng));
        const auto a = gromov_product(z, w, o, be), r = gromov_product(w, z, o, be), m = gromov_product(z, w, o2, be);
        t.require(a.lo == r.lo && a.hi == r.hi, "symmetry");
        t.require(std::abs(a.value() - m.value()) <= be(o, o2).upper + 1e-12, "basepoint bound");
        t.require(be(o, o2).upper >= disk_oracle(o, o2) - 1e-12, "bound is an upper bound");
    }
    return t;
}

// 8-neighbour breadth-first flood fill.
std::pair<std::vector<int>, int> flood_fill(const std::vector<std::uint8_t>& sel, int nx, int ny) {
    std::vector<int> lab(sel.size(), -1);
    int count = 0;
    for (std::size_t s = 0; s < sel.size(); ++s) {
        if (!sel[s] || lab[s] >= 0) continue;
        std::deque<std::size_t> q{s};
        lab[s] = count;
        while (!q.empty()) {
            const auto k = q.front();
            q.pop_front();
            const int i = static_cast<int>(k % nx), j = static_cast<int>(k / nx);
            for (int a = i - 1; a <= i + 1; ++a)
                for (int b = j - 1; b <= j + 1; ++b) {
                    if (a < 0 || b < 0 || a >= nx || b >= ny) continue;
                    const std::size_t m = static_cast<std::size_t>(b) * nx + a;
                    if (sel[m] && lab[m] < 0) {
                        lab[m] = count;
                        q.push_back(m);
                    }
                }
        }
        ++count;
    }
    return {lab, count};
}

double hausdorff_brute(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    auto dir = [](const auto& x, const auto& y) {
        double s = 0.0;
        for (const auto& p : x) {
            double m = kInfinity;
            for (const auto& q : y) m = std::min(m, std::abs(p - q));
            s = std::max(s, m);
        }
        return s;
    };
    return std::max(dir(a, b), dir(b, a));
}

Tally topology_suite() {
    Tally t;
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const int nx = 5 + trial % 29, ny = 6 + trial % 19;
        std::bernoulli_distribution on(0.25 + 0.5 * (trial % 7) / 6.0);
        std::vector<std::uint8_t> sel(static_cast<std::size_t>(nx) * ny);
        for (auto& v : sel) v = on(rng);
        const auto uf = components(sel, nx, ny, Box{0, 0, 1, 1}, 1.0);
        const auto [ff, count] = flood_fill(sel, nx, ny);
        t.require(uf.count == count, "component count");
        std::set<std::pair<int, int>> pairs;
        for (std::size_t k = 0; k < sel.size(); ++k) {
            t.require((uf.labels[k] < 0) == (ff[k] < 0), "excluded cells");
            if (ff[k] >= 0) pairs.emplace(uf.labels[k], ff[k]);
        }
        t.require(static_cast<int>(pairs.size()) == count, "same partition");
    }

    std::uniform_real_distribution<double> U(-1, 1);
    auto cloud = [&](int n) {
        std::vector<Complex> c;
        for (int i = 0; i < n; ++i) c.emplace_back(U(rng), U(rng));
        return c;
    };
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = cloud(40 + trial), b = cloud(30 + 2 * trial), c = cloud(25);
        const double ab = hausdorff_distance_euclidean(a, b), ba = hausdorff_distance_euclidean(b, a);
        t.require(hausdorff_distance_euclidean(a, a) == 0.0, "identity");
        t.require(ab == ba, "symmetry");
        t.require(ab > 0.0, "positivity");
        t.require(ab <= hausdorff_distance_euclidean(a, c) + hausdorff_distance_euclidean(c, b) + 1e-15, "triangle");
        t.require(std::abs(ab - hausdorff_brute(a, b)) <= 1e-15, "brute force");
    }

    const double res = 1.0 / 1024, eps = 0.2, delta = 0.05;
    const DomainSpec tg{shapes::TakagiGraph{}};
    std::uniform_real_distribution<double> X(0.0, 1.0);
    int passes = 0;
    for (int i = 0; i < 50; ++i) {
        const double x = X(rng);
        const Complex p(x, takagi::eval(x));
        const auto v = local_connectivity_probe(sample_boundary(tg, Box::around(p, eps + 0.01), res).points, res, p, eps,
                                                delta, 2 * res);
        passes += v.pass && !v.vacuous;
    }
    t.require(passes == 50, "Takagi graph locally connected");
    const DomainSpec comb{shapes::CombD1{}};
    const Complex q(0.0, 0.25);
    const auto vc = local_connectivity_probe(sample_boundary(comb, Box::around(q, eps + 0.01), res).points, res, q, eps,
                                             delta, 2 * res);
    t.require(!vc.pass && !vc.vacuous, "comb fails at (0,1/4)");
    t.note("comb_components", vc.components);

    std::vector<Complex> cantor;
    for (const auto& [a, b] : cantor_intervals(6))
        for (int i = 0; i <= 9; ++i) cantor.emplace_back(a + (b - a) * i / 9, 0.0);
    const double dmax = totally_disconnected_probe(cantor, {std::pow(3.0, -7)})[0];
    t.require(cantor_intervals(6).size() == 64, "64 intervals at depth 6");
    t.require(dmax <= std::pow(3.0, -6) * (1 + 1e-12), "Cantor component diameter");
    t.note("cantor_diam", dmax);
    return t;
}

Tally curve_calculus() {
    Tally t;
    const auto density = exact_backend(kDisk);
    const auto dist = exact_distance_backend(kDisk);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> U(-1, 1);
    auto in_disk = [&](double r) {
        for (;;) {
            const Complex z(r * U(rng), r * U(rng));
            if (std::abs(z) <= r) return z;
        }
    };
    double smin = kInfinity, smax = 0.0;
    for (int i = 0; i < 20; ++i) {
        std::vector<Complex> pts;
        Complex a = in_disk(0.8);
        for (int v = 0; v < 5; ++v) {
            const Complex b = in_disk(0.8);
            for (int k = 0; k < 64; ++k) pts.push_back(a + (b - a) * (k / 64.0));
            a = b;
        }
        pts.push_back(a);
        const Curve c = Curve::polyline(pts);
        const Curve u = reparametrize_unit_speed(kDisk, c, density);
        for (const double v : midpoint_speeds(u, density)) smin = std::min(smin, v), smax = std::max(smax, v);
        const auto enc = kob_length(kDisk, c, density);
        const double len = u.t_end() - u.t_begin();
        t.require(std::abs(len - 0.5 * (enc.lower + enc.upper)) <= enc.width() + 1e-12, "length within enclosure");
        t.require(u.p == c.p, "trace preserved");
    }
    t.require(smin >= 0.98 && smax <= 1.02, "midpoint speeds");
    t.note("speed_min", smin);
    t.note("speed_max", smax);
    for (int i = 0; i < 20; ++i) {
        const Complex a = in_disk(0.9), b = in_disk(0.9);
        const Curve g = reparametrize_unit_speed(kDisk, Curve::polyline(disk_geodesic(a, b).sample(257)), density);
        t.require(check_almost_geodesic(g, 1.0, 0.02, dist, density).pass, "geodesic is (1, 0.02)-almost-geodesic");
        t.require(std::abs(g.t_end() - disk_oracle(a, b)) <= 1e-3 * (1 + disk_oracle(a, b)), "geodesic length");
    }
    std::bernoulli_distribution stop(0.4);
    for (int i = 0; i < 50; ++i) {
        std::vector<double> ts{0.0};
        std::vector<Complex> pts{in_disk(0.5)};
        for (int k = 0; k < 20; ++k) {
            ts.push_back(ts.back() + 0.1 + std::abs(U(rng)));
            pts.push_back(stop(rng) ? pts.back() : in_disk(0.5));
        }
        const Curve c(ts, pts);
        const double eps = 0.01 + 0.5 * std::abs(U(rng));
        const Curve q = perturb_nonstationary(c, eps);
        double disp = 0.0;
        for (std::size_t k = 0; k < c.size(); ++k) disp = std::max(disp, std::abs(c.p[k] - q.p[k]));
        t.require(disp <= eps / 3 + 1e-12, "displacement <= eps/3");
        for (std::size_t k = 0; k + 1 < q.size(); ++k) t.require(q.p[k + 1] != q.p[k], "non-vanishing slope");
    }
    return t;
}

Tally end_profile_check() {
    Tally t;
    const DomainSpec ut{shapes::UT{}};
    const auto prof = end_profile(ut, {4, 6, 8, 10}, {6, 8, 10, 12}, 1.0 / 8);
    for (std::size_t i = 1; i < prof.counts.size(); ++i) t.require(prof.counts[i] >= prof.counts[i - 1], "nondecreasing");
    t.require(prof.counts.back() >= 3, "at least 3 at R = 10");
    t.note("count_R10", prof.counts.back());
    bool rejected = false;
    try {
        end_profile(kDisk, {0.5}, {0.9}, 1.0 / 8);
    } catch (const PreconditionError&) {
        rejected = true;
    }
    t.require(rejected, "bounded input rejected");
    return t;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Tally determinism() {
    Tally t;
    const auto root = std::filesystem::temp_directory_path() / "vislab_acceptance";
    std::filesystem::remove_all(root);
    int compared = 0;
    for (const auto& name : experiment_names()) {
        const Json doc{{"schema_version", kSchemaVersion}, {"experiment", name}, {"seed", 11}};
        for (const char* run : {"a", "b"}) write_bundle(root / run / name, run_experiment(parse_experiment_config(doc)));
        for (const auto& e : std::filesystem::directory_iterator(root / "a" / name)) {
            const auto ext = e.path().extension();
            if (ext != ".csv" && ext != ".svg") continue;
            const auto other = root / "b" / name / e.path().filename();
            t.require(std::filesystem::exists(other) && slurp(e.path()) == slurp(other), name + "/" + e.path().filename().string());
            ++compared;
        }
    }
    t.require(compared >= 20, "enough files compared");
    t.note("files_compared", compared);
    std::filesystem::remove_all(root);
    return t;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget;  // seconds
        std::function<Tally()> run;
    };
    const std::vector<Criterion> all{
        {1, "takagi suite", 1, takagi_suite},
        {2, "disk distance oracle", 30, disk_distance},
        {3, "sector slope", 60, sector_slope_check},
        {4, "royden equality", 10, royden_equality},
        {5, "non-goldilocks", 120, non_goldilocks},
        {6, "comb non-visibility", 120, comb_nonvisibility},
        {7, "visibility positive controls", 180, positive_controls},
        {8, "gromov product", 10, gromov_check},
        {9, "topology suite", 60, topology_suite},
        {10, "curve calculus", 30, curve_calculus},
        {11, "end profile", 60, end_profile_check},
        {12, "determinism", 600, determinism},
    };
    int failures = 0;
    for (const auto& c : all) {
        const auto start = std::chrono::steady_clock::now();
        Tally t;
        try {
            t = c.run();
        } catch (const std::exception& e) {
            t.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        t.require(secs < c.budget, "runtime budget");
        failures += !t.ok;
        std::printf("criterion %d: %s  %s  [%.2fs / %gs] %s%s%s\n", c.id, t.ok ? "PASS" : "FAIL", c.name, secs, c.budget,
                    t.notes.c_str(), t.ok ? "" : "  failed: ", t.failed.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failures, all.size());
    return failures == 0 ? 0 : 1;
}

#include "boundary_pieces.hpp"

#include <cstdint>

namespace vislab::detail {

namespace {

// Distance from p to the segment (a,b) in the (u,v) chart.
double chart_segment(double pu, double pv, double au, double av, double bu, double bv) {
    return segment_distance({pu, pv}, {au, av}, {bu, bv});
}

}  // namespace

DtbValue takagi_arc_distance(const TArc& arc, Complex z, double rel_tol, double cap) {
    const Complex w = z - arc.origin;
    const double uz = dot(w, arc.e1);
    const double vz = dot(w, arc.e2);

    double lo = std::max(arc.u0, uz - cap);
    double hi = std::min(arc.u1, uz + cap);
    if (lo > hi) return {kInf, 0.0};

    // Upper bound from the nearest admissible abscissa.
    const double uc = std::clamp(uz, lo, hi);
    double d_up = std::hypot(uz - uc, vz - takagi::eval(uc, 1e-15)) + 1e-15;
    if (d_up > cap && std::isfinite(cap)) {
        // The graph can still come within cap; search the whole window around uz.
        d_up = cap;
    }

    // Chord positions k*2^-e stay exact only while k fits in the mantissa.
    const double umag = std::abs(uz) + d_up + 2.0;
    const int e_max = std::clamp(50 - static_cast<int>(std::ceil(std::log2(umag))), 4, 50);
    constexpr double kMaxChords = 4e6;

    double est = d_up;
    DtbValue best{d_up, d_up};
    for (int iter = 0; iter < 64; ++iter) {
        lo = std::max(arc.u0, uz - d_up);
        hi = std::min(arc.u1, uz + d_up);
        if (lo > hi) return {kInf, 0.0};

        const double target = 1.5 * rel_tol * std::max(est, 1e-300);
        int e = std::clamp(static_cast<int>(std::ceil(-std::log2(target))), 4, e_max);
        while (e > 4 && std::ldexp(hi - lo, e) > kMaxChords) --e;
        const double s = std::ldexp(1.0, -e);
        const auto k0 = static_cast<std::int64_t>(std::floor(std::ldexp(lo, e)));
        const auto k1 = static_cast<std::int64_t>(std::ceil(std::ldexp(hi, e)));

        double d_poly = kInf;
        double t_prev = takagi::eval_dyadic(k0, e);
        for (std::int64_t k = k0; k < std::max(k1, k0 + 1); ++k) {
            const double t_next = takagi::eval_dyadic(k + 1, e);
            const double a = static_cast<double>(k) * s;
            const double b = a + s;
            const double ca = std::max(a, arc.u0);
            const double cb = std::min(b, arc.u1);
            if (ca <= cb) {
                const double slope = (t_next - t_prev) / s;
                const double ta = t_prev + slope * (ca - a);
                const double tb = t_prev + slope * (cb - a);
                d_poly = std::min(d_poly, chart_segment(uz, vz, ca, ta, cb, tb));
            }
            t_prev = t_next;
        }
        if (!std::isfinite(d_poly)) return {kInf, 0.0};

        const double err = 2.0 / 3.0 * s;
        if (err <= best.error || iter == 0) best = {d_poly, err};
        if (d_poly - err > cap) return {kInf, 0.0};
        d_up = std::min(d_up, d_poly + err);
        if (err <= rel_tol * d_poly || e == e_max || d_poly == 0.0) return best;

        const double lower = d_poly - err;
        est = std::min(est, lower > 0.0 ? lower : d_poly / 8.0);
    }
    return best;
}

double cusp_arc_distance(const CuspArc& c, Complex z) {
    const double dx = z.real() - c.x0;
    const double dy = z.imag() - c.t0;
    const double umax = std::sqrt(c.r0);
    double best = kInf;
    for (const double sigma : {-1.0, 1.0}) {
        auto f = [&](double u) {
            const double px = sigma * u * u;
            return std::hypot(dx - px, dy - u);
        };
        constexpr int n = 256;
        int ibest = 0;
        double fbest = kInf;
        for (int i = 0; i <= n; ++i) {
            const double v = f(umax * i / n);
            if (v < fbest) {
                fbest = v;
                ibest = i;
            }
        }
        double a = umax * std::max(0, ibest - 1) / n;
        double b = umax * std::min(n, ibest + 1) / n;
        const double g = (std::sqrt(5.0) - 1.0) / 2.0;
        double x1 = b - g * (b - a), x2 = a + g * (b - a);
        double f1 = f(x1), f2 = f(x2);
        for (int it = 0; it < 80; ++it) {
            if (f1 < f2) {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - g * (b - a);
                f1 = f(x1);
            } else {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + g * (b - a);
                f2 = f(x2);
            }
        }
        best = std::min({best, fbest, f1, f2});
    }
    return best;
}

std::optional<Seg> clip_segment(const Seg& s, const Box& w) {
    double t0 = 0.0, t1 = 1.0;
    const Complex d = s.b - s.a;
    const double p[4] = {-d.real(), d.real(), -d.imag(), d.imag()};
    const double q[4] = {s.a.real() - w.x0, w.x1 - s.a.real(), s.a.imag() - w.y0, w.y1 - s.a.imag()};
    for (int i = 0; i < 4; ++i) {
        if (p[i] == 0.0) {
            if (q[i] < 0.0) return std::nullopt;
            continue;
        }
        const double r = q[i] / p[i];
        if (p[i] < 0.0) {
            t0 = std::max(t0, r);
        } else {
            t1 = std::min(t1, r);
        }
        if (t0 > t1) return std::nullopt;
    }
    return Seg{s.a + t0 * d, s.a + t1 * d};
}

}  // namespace vislab::detail

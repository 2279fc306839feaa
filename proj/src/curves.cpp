#include "vislab/curves.hpp"

#include <array>

namespace vislab {

Curve::Curve(std::vector<double> params, std::vector<Complex> points) : t(std::move(params)), p(std::move(points)) {
    if (t.size() != p.size()) throw InvalidArgument("curve: params and points differ in length");
    if (t.empty()) throw InvalidArgument("curve: empty");
    for (std::size_t i = 1; i < t.size(); ++i) {
        if (!(t[i] > t[i - 1])) throw InvalidArgument("curve: params must be strictly increasing");
    }
}

Complex Curve::at(double s) const {
    if (s <= t.front()) return p.front();
    if (s >= t.back()) return p.back();
    const auto it = std::upper_bound(t.begin(), t.end(), s);
    const std::size_t i = static_cast<std::size_t>(it - t.begin()) - 1;
    const double u = (s - t[i]) / (t[i + 1] - t[i]);
    return p[i] + (p[i + 1] - p[i]) * u;
}

Curve Curve::segment(Complex a, Complex b, int n) {
    if (n < 1) throw InvalidArgument("curve: need at least one piece");
    std::vector<double> t(n + 1);
    std::vector<Complex> p(n + 1);
    for (int i = 0; i <= n; ++i) {
        t[i] = double(i) / n;
        p[i] = a + (b - a) * t[i];
    }
    p[n] = b;
    return {std::move(t), std::move(p)};
}

Curve Curve::polyline(const std::vector<Complex>& pts) {
    std::vector<double> t{0.0};
    std::vector<Complex> p{pts.at(0)};
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const double len = std::abs(pts[i] - p.back());
        if (len == 0.0) continue;
        t.push_back(t.back() + len);
        p.push_back(pts[i]);
    }
    return {std::move(t), std::move(p)};
}

std::vector<std::pair<double, double>> segment_lengths(const DomainSpec& d, const Curve& c,
                                                       const DensityBackend& density, int pieces) {
    if (pieces < 1) throw InvalidArgument("kob_length: pieces must be >= 1");
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        bool ok = contains(d, c.p[i]) == Membership::inside && contains(d, c.p[i + 1]) == Membership::inside;
        for (int k = 1; ok && k < 2 * pieces; ++k) {
            ok = contains(d, c.p[i] + (c.p[i + 1] - c.p[i]) * (k / (2.0 * pieces))) == Membership::inside;
        }
        if (!ok) bad.push_back(i);
    }
    if (c.size() == 1 && contains(d, c.p[0]) != Membership::inside) bad.push_back(0);
    if (!bad.empty()) {
        std::string msg = "curve leaves the interior on segments";
        for (std::size_t k = 0; k < std::min<std::size_t>(bad.size(), 20); ++k) msg += " " + std::to_string(bad[k]);
        throw BandError(msg);
    }

    std::vector<std::pair<double, double>> out;
    out.reserve(c.segments());
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        const Complex a = c.p[i], b = c.p[i + 1];
        const double len = std::abs(b - a) / pieces;
        double lo = 0.0, hi = 0.0;
        if (len > 0.0) {
            DensityBound prev = density(a);
            for (int k = 0; k < pieces; ++k) {
                const DensityBound mid = density(a + (b - a) * ((k + 0.5) / pieces));
                const DensityBound next = density(a + (b - a) * (double(k + 1) / pieces));
                lo += std::min({prev.lo, mid.lo, next.lo}) * len;
                hi += std::max({prev.hi, mid.hi, next.hi}) * len;
                prev = next;
            }
        }
        out.emplace_back(lo, hi);
    }
    return out;
}

DistanceInterval kob_length(const DomainSpec& d, const Curve& c, const DensityBackend& density, int pieces) {
    DistanceInterval out{0.0, 0.0, "segment-quadrature-lo", "segment-quadrature-hi", 0.0};
    for (const auto& [lo, hi] : segment_lengths(d, c, density, pieces)) {
        out.lower += lo;
        out.upper += hi;
    }
    return out;
}

namespace {

// 8-point Gauss-Legendre nodes and weights on [-1,1].
constexpr std::array<double, 8> kGLx = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                                        -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                                        0.7966664774136267,  0.9602898564975363};
constexpr std::array<double, 8> kGLw = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                                        0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                                        0.2223810344533745, 0.1012285362903763};

double gl_segment(const DensityBackend& density, Complex a, Complex b, int pieces) {
    double s = 0.0;
    for (int k = 0; k < pieces; ++k) {
        const Complex pa = a + (b - a) * (double(k) / pieces);
        const Complex pb = a + (b - a) * (double(k + 1) / pieces);
        const double half = std::abs(pb - pa) / 2.0;
        for (std::size_t j = 0; j < kGLx.size(); ++j) {
            const Complex m = (pa + pb) / 2.0 + (pb - pa) / 2.0 * kGLx[j];
            s += kGLw[j] * density(m).hi * half;
        }
    }
    return s;
}

}  // namespace

Curve reparametrize_unit_speed(const DomainSpec& d, const Curve& c, const DensityBackend& density) {
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        if (c.p[i] == c.p[i + 1]) throw InvalidArgument("reparametrize_unit_speed: zero-length segment " + std::to_string(i));
        if (contains(d, c.p[i]) != Membership::inside) throw BandError("reparametrize_unit_speed: curve leaves the interior");
    }
    if (c.size() < 2) throw InvalidArgument("reparametrize_unit_speed: need at least one segment");
    std::vector<double> F{0.0};
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        if (!density(c.p[i]).exact) throw InvalidArgument("reparametrize_unit_speed: exact density required");
        F.push_back(F.back() + gl_segment(density, c.p[i], c.p[i + 1], 4));
    }
    return {std::move(F), c.p};
}

std::vector<double> midpoint_speeds(const Curve& c, const DensityBackend& density) {
    std::vector<double> v;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        const Complex m = (c.p[i] + c.p[i + 1]) / 2.0;
        v.push_back(density(m).hi * std::abs(c.p[i + 1] - c.p[i]) / (c.t[i + 1] - c.t[i]));
    }
    return v;
}

Curve perturb_nonstationary(const Curve& c, double eps, std::vector<std::size_t> stationary) {
    if (!(eps > 0.0)) throw InvalidArgument("perturb_nonstationary: epsilon must be positive");
    if (stationary.empty()) {
        for (std::size_t i = 0; i + 1 < c.size(); ++i) {
            if (c.p[i] == c.p[i + 1]) stationary.push_back(i);
        }
    }
    if (stationary.empty()) return c;
    std::vector<bool> flag(c.segments(), false);
    double measure = 0.0;
    for (const auto i : stationary) {
        if (i >= c.segments()) throw InvalidArgument("perturb_nonstationary: segment index out of range");
        if (!flag[i]) measure += c.t[i + 1] - c.t[i];
        flag[i] = true;
    }
    const double delta = eps / (3.0 * measure);
    Curve out = c;
    double shift = 0.0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        if (flag[i]) shift += delta * (c.t[i + 1] - c.t[i]);
        out.p[i + 1] = c.p[i + 1] + shift;
    }
    return out;
}

double sup_displacement(const Curve& a, const Curve& b) {
    // Both are piecewise linear, so the sup over the merged breakpoints is exact.
    std::vector<double> ts = a.t;
    ts.insert(ts.end(), b.t.begin(), b.t.end());
    double m = 0.0;
    for (const double s : ts) m = std::max(m, std::abs(a.at(s) - b.at(s)));
    return m;
}

std::vector<std::size_t> pair_grid(std::size_t n, std::size_t max_pairs) {
    std::size_t m = n;
    while (m > 2 && m * (m - 1) / 2 > max_pairs) --m;
    std::vector<std::size_t> idx;
    if (m == n) {
        for (std::size_t i = 0; i < n; ++i) idx.push_back(i);
        return idx;
    }
    for (std::size_t k = 0; k < m; ++k) idx.push_back(static_cast<std::size_t>(std::llround(double(k) * (n - 1) / (m - 1))));
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return idx;
}

GeodesicReport check_almost_geodesic(const Curve& c, double lambda, double kappa, const DistanceBackend& dist,
                                     const DensityBackend& density, double tolerance) {
    if (lambda < 1.0 || kappa < 0.0) throw InvalidArgument("check_almost_geodesic: need lambda >= 1, kappa >= 0");
    GeodesicReport r{lambda, kappa, tolerance};
    r.slack = r.strict_slack = kInfinity;
    const auto idx = pair_grid(c.size());
    for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            const double s = c.t[idx[a]], t = c.t[idx[b]];
            const DistanceInterval k = dist(c.p[idx[a]], c.p[idx[b]]);
            const double below = std::abs(s - t) / lambda - kappa;
            const double above = lambda * std::abs(s - t) + kappa;
            const double fav = std::min(k.upper - below, above - k.lower);
            const double strict = std::min(k.lower - below, above - k.upper);
            if (fav < r.slack) {
                r.slack = fav;
                r.worst_pair = {s, t};
            }
            r.strict_slack = std::min(r.strict_slack, strict);
            ++r.pairs_checked;
        }
    }
    r.clause_i = r.slack >= -tolerance;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        const Complex m = (c.p[i] + c.p[i + 1]) / 2.0;
        const double speed_lo = density(m).lo * std::abs(c.p[i + 1] - c.p[i]) / (c.t[i + 1] - c.t[i]);
        if (speed_lo > lambda + tolerance) r.clause_ii = false;
    }
    r.pass = r.clause_i && r.clause_ii;
    return r;
}

GeodesicReport check_lk_geodesic(const DomainSpec& d, const Curve& c, double lambda, double kappa,
                                 const DistanceBackend& dist, const DensityBackend& density, double tolerance) {
    if (lambda < 1.0 || kappa < 0.0) throw InvalidArgument("check_lk_geodesic: need lambda >= 1, kappa >= 0");
    GeodesicReport r{lambda, kappa, tolerance};
    r.slack = r.strict_slack = kInfinity;
    const auto seg = segment_lengths(d, c, density);
    std::vector<double> lo{0.0}, hi{0.0};
    for (const auto& [a, b] : seg) {
        lo.push_back(lo.back() + a);
        hi.push_back(hi.back() + b);
    }
    const auto idx = pair_grid(c.size());
    for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            const std::size_t i = idx[a], j = idx[b];
            const DistanceInterval k = dist(c.p[i], c.p[j]);
            const double fav = lambda * k.upper + kappa - (lo[j] - lo[i]);
            const double strict = lambda * k.lower + kappa - (hi[j] - hi[i]);
            if (fav < r.slack) {
                r.slack = fav;
                r.worst_pair = {c.t[i], c.t[j]};
            }
            r.strict_slack = std::min(r.strict_slack, strict);
            ++r.pairs_checked;
        }
    }
    r.clause_i = r.slack >= -tolerance;
    r.pass = r.clause_i;
    return r;
}

DistanceInterval curve_hausdorff_distance(const Curve& a, const Curve& b, const DistanceBackend& dist) {
    DistanceInterval out{0.0, 0.0, "hausdorff-of-lower", "hausdorff-of-upper", 0.0};
    auto directed = [&](const Curve& x, const Curve& y) {
        for (const auto p : x.p) {
            double lo = kInfinity, hi = kInfinity;
            for (const auto q : y.p) {
                const DistanceInterval k = dist(p, q);
                lo = std::min(lo, k.lower);
                hi = std::min(hi, k.upper);
                out.grid_h = std::max(out.grid_h, k.grid_h);
            }
            out.lower = std::max(out.lower, lo);
            out.upper = std::max(out.upper, hi);
        }
    };
    directed(a, b);
    directed(b, a);
    return out;
}

}  // namespace vislab

#include <cmath>

#include "boundary_pieces.hpp"

namespace vislab {

using takagi::eval;

namespace {

double sector_margin(const shapes::Sector& s, Complex z) {
    const Complex w = (z - s.vertex) * std::conj(s.axis / std::abs(s.axis));
    const double a = s.half_angle;
    const double below = -(w * std::polar(1.0, -a)).imag();  // > 0 on the inner side of the ray at angle +a
    const double above = (w * std::polar(1.0, a)).imag();    // > 0 on the inner side of the ray at angle -a
    double m = a <= kPi / 2 ? std::min(below, above) : std::max(below, above);
    if (s.truncation) m = std::min(m, *s.truncation - std::abs(w.imag()));
    return m;
}

double tooth_margin(int n, double x, double y, double tx, double ty) {
    const double a = 4.0 * n;
    const double bottom = std::min({x - a, a + 1.0 - x, y - (6.0 - tx)});
    const double sides = std::min({y - 6.0, x - (a - ty), a + 1.0 + ty - x});
    return std::max(bottom, sides);
}

double box_margin(int n, double x, double y, double tx, double ty) {
    const double a = 4.0 * n;
    const double horiz = std::min({x - a, a + 1.0 - x, y - (2.0 - tx), 3.0 + tx - y});
    const double vert = std::min({y - 2.0, 3.0 - y, x - (a - ty), a + 1.0 + ty - x});
    return std::max(horiz, vert);
}

int nearest_tooth(double x) { return static_cast<int>(std::lround((x - 0.5) / 4.0)); }

// Max over nearby teeth of the inside-ness of the removed set.
double removed_teeth(double x, double y, bool boxes) {
    const double tx = eval(x), ty = eval(y);
    const int nc = nearest_tooth(x);
    double m = -detail::kInf;
    for (int n = nc - 2; n <= nc + 2; ++n) {
        m = std::max(m, tooth_margin(n, x, y, tx, ty));
        if (boxes) m = std::max(m, box_margin(n, x, y, tx, ty));
    }
    return m;
}

}  // namespace

double spoke_gap_radius(int n) {
    if (n < 1) throw InvalidArgument("spoke_gap_radius: n must be >= 1");
    return 1.0 / (2.0 * n * (n + 1.0));
}

namespace detail {

double square_margin(Complex z) {
    return std::min({z.real(), 1.0 - z.real(), z.imag(), 1.0 - z.imag()});
}

// Distance to the comb slits x = 1/j, j >= 2, y in [ylo, yhi].
double comb_slits(Complex z, double ylo, double yhi) {
    const double x = z.real();
    if (x <= 0.0) return kInf;
    const auto jc = static_cast<long long>(std::floor(1.0 / x));
    double d = kInf;
    for (long long j = std::max(2LL, jc - 1); j <= std::max(2LL, jc + 2); ++j) {
        const double sx = 1.0 / static_cast<double>(j);
        d = std::min(d, segment_distance(z, {sx, ylo}, {sx, yhi}));
    }
    return d;
}

double cantor_slit_distance(Complex z, int depth) {
    thread_local int cached_depth = -1;
    thread_local std::vector<std::pair<double, double>> iv;
    if (depth != cached_depth) {
        iv = cantor_intervals(depth);
        cached_depth = depth;
    }
    // Intervals are sorted; check the neighbours of the insertion point.
    const auto it = std::lower_bound(iv.begin(), iv.end(), z.real(),
                                     [](const auto& p, double x) { return p.second < x; });
    const auto i = static_cast<std::ptrdiff_t>(it - iv.begin());
    const auto n = static_cast<std::ptrdiff_t>(iv.size());
    double d = kInf;
    for (std::ptrdiff_t j = std::max<std::ptrdiff_t>(0, i - 1); j < std::min(n, i + 2); ++j) {
        d = std::min(d, segment_distance(z, {iv[j].first, 0.0}, {iv[j].second, 0.0}));
    }
    return d;
}

double radial_slits(Complex z, int n) {
    double d = segment_distance(z, 0.0, 0.5);
    for (int nu = 1; nu <= n; ++nu) d = std::min(d, segment_distance(z, 0.0, std::polar(0.5, 1.0 / nu)));
    return d;
}

double multislit_distance(const shapes::MultiSlit& m, Complex z) {
    double d = kInf;
    for (const auto& s : m.slits) {
        for (const auto& [a, b] : s.intervals) d = std::min(d, segment_distance(z, {a, s.y}, {b, s.y}));
    }
    return d;
}

// Segments of the spoke-accretion teeth T_n, nu <= nu_limit.
std::vector<Seg> spoke_segments(const shapes::SpokeAccretion& s) {
    std::vector<Seg> out;
    for (int n = 1; n <= s.n_limit; ++n) {
        const double rn = spoke_gap_radius(n);
        for (int nu = 1; nu <= s.nu_limit; ++nu) {
            const double x = 1.0 / n - rn / nu;
            const double top = std::sqrt(std::max(0.0, 1.0 / (double(n) * n) - x * x));
            out.push_back({{x, 0.0}, {x, top}});
        }
    }
    return out;
}

}  // namespace detail

double membership_margin(const DomainSpec& d, Complex z) {
    const double x = z.real(), y = z.imag();
    return std::visit(
        detail::overloaded{
            [&](const shapes::Disk& s) { return s.radius - std::abs(z - s.center); },
            [&](const shapes::HalfPlane& s) { return dot(z, s.normal / std::abs(s.normal)) - s.offset; },
            [&](const shapes::Sector& s) { return sector_margin(s, z); },
            [&](const shapes::Cusp& s) {
                return std::min(s.r0 - std::abs(x - s.x0), y - eval(s.x0) - std::sqrt(std::abs(x - s.x0)));
            },
            [&](const shapes::Strip& s) { return s.width / 2 - std::abs(y); },
            [&](const shapes::Annulus& s) {
                const double r = std::abs(z);
                return std::min(1.0 - r, r - s.r_inner);
            },
            [&](const shapes::PuncturedDisk&) {
                const double r = std::abs(z);
                return std::min(1.0 - r, r);
            },
            [&](const shapes::TakagiGraph&) { return y - eval(x); },
            [&](const shapes::TakagiTrunc& s) {
                return std::min({s.r1 - std::abs(x - s.x0), 1.25 - y, y - eval(x)});
            },
            [&](const shapes::UT&) { return -removed_teeth(x, y, false); },
            [&](const shapes::VT&) { return -removed_teeth(x, y, true); },
            [&](const shapes::CombD1&) { return std::min(detail::square_margin(z), detail::comb_slits(z, 0.0, 0.5)); },
            [&](const shapes::CombD2&) { return std::min(detail::square_margin(z), detail::comb_slits(z, 0.25, 0.75)); },
            [&](const shapes::CantorSlit& s) {
                const double tx = eval(x);
                const double base = std::min({1.0 - std::abs(x), y - (-2.0 + tx), (2.0 - tx) - y});
                return std::min(base, detail::cantor_slit_distance(z, s.depth));
            },
            [&](const shapes::RadialSlit& s) {
                return std::min(1.0 - std::abs(z), detail::radial_slits(z, s.n_spokes_limit));
            },
            [&](const shapes::MultiSlit& s) { return detail::multislit_distance(s, z); },
            [&](const shapes::SlitTakagi&) {
                double m = y - eval(x);
                const long kc = std::lround(y);
                for (long k = std::max(4L, kc - 1); k <= std::max(4L, kc + 1); ++k) {
                    m = std::min(m, std::abs(z - Complex(0.0, double(k))) - 1.0 / 3.0);
                }
                return m;
            },
            [&](const shapes::SpokeAccretion& s) {
                double m = y;
                for (const auto& seg : detail::spoke_segments(s)) m = std::min(m, segment_distance(z, seg.a, seg.b));
                return m;
            },
        },
        d.shape);
}

Membership contains(const DomainSpec& d, Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return Membership::outside;
    const double m = membership_margin(d, z);
    if (m > 2.0 * d.tol) return Membership::inside;
    if (m < -2.0 * d.tol) return Membership::outside;
    return Membership::band;
}

const char* to_string(Membership m) {
    switch (m) {
        case Membership::inside: return "inside";
        case Membership::outside: return "outside";
        case Membership::band: return "band";
    }
    return "?";
}

}  // namespace vislab

#include <array>

#include "boundary_pieces.hpp"

namespace vislab {

using detail::Circ;
using detail::CuspArc;
using detail::kInf;
using detail::Piece;
using detail::Seg;
using detail::TArc;

namespace {

constexpr std::array<const char*, std::variant_size_v<Shape>> kNames = {
    "Disk",   "HalfPlane", "Sector", "Cusp",       "Strip",      "Annulus",    "PuncturedDisk",
    "TakagiGraph", "TakagiTrunc", "UT", "VT", "CombD1", "CombD2", "CantorSlit",
    "RadialSlit", "MultiSlit", "SlitTakagi", "SpokeAccretion"};

using Trunc = std::map<std::string, long long>;

Complex box_center(const Box& w) { return {(w.x0 + w.x1) / 2, (w.y0 + w.y1) / 2}; }
double box_diag(const Box& w) { return std::hypot(w.width(), w.height()); }

// A line through p in direction dir, long enough to cover the window.
Seg long_line(Complex p, Complex dir, const Box& w) {
    const double L = std::abs(p - box_center(w)) + box_diag(w) + 1.0;
    dir /= std::abs(dir);
    return {p - L * dir, p + L * dir};
}
Seg long_ray(Complex p, Complex dir, const Box& w) {
    const double L = std::abs(p - box_center(w)) + box_diag(w) + 1.0;
    return {p, p + L * dir / std::abs(dir)};
}

void sector_pieces(const shapes::Sector& s, const Box& w, std::vector<Piece>& out) {
    const Complex ax = s.axis / std::abs(s.axis);
    const double a = s.half_angle;
    for (const double sg : {1.0, -1.0}) {
        const Complex dir = ax * std::polar(1.0, sg * a);
        if (!s.truncation) {
            out.emplace_back(long_ray(s.vertex, dir, w));
            continue;
        }
        const double t0 = *s.truncation;
        const double rcut = t0 / std::sin(a);
        const Complex corner = s.vertex + rcut * dir;
        out.emplace_back(Seg{s.vertex, corner});
        out.emplace_back(long_ray(corner, ax, w));
    }
}

void tooth_pieces(int n, const Box& w, bool box, std::vector<Piece>& out) {
    const double a = 4.0 * n;
    if (!box) {
        out.emplace_back(TArc{{0.0, 6.0}, {1.0, 0.0}, {0.0, -1.0}, a, a + 1.0});
        out.emplace_back(TArc{{a, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, 6.0, kInf});
        out.emplace_back(TArc{{a + 1.0, 0.0}, {0.0, 1.0}, {1.0, 0.0}, 6.0, kInf});
        return;
    }
    (void)w;
    out.emplace_back(TArc{{0.0, 2.0}, {1.0, 0.0}, {0.0, -1.0}, a, a + 1.0});
    out.emplace_back(TArc{{0.0, 3.0}, {1.0, 0.0}, {0.0, 1.0}, a, a + 1.0});
    out.emplace_back(TArc{{a, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, 2.0, 3.0});
    out.emplace_back(TArc{{a + 1.0, 0.0}, {0.0, 1.0}, {1.0, 0.0}, 2.0, 3.0});
}

void teeth_in_window(const Box& w, bool boxes, std::vector<Piece>& out, Trunc& tr) {
    constexpr double bulge = takagi::kMaxValue;
    const bool teeth_rows = w.y1 >= 6.0 - bulge;
    const bool box_rows = boxes && w.y1 >= 2.0 - bulge && w.y0 <= 3.0 + bulge;
    if (!teeth_rows && !box_rows) return;
    const auto n0 = static_cast<long long>(std::ceil((w.x0 - 1.0 - bulge) / 4.0));
    const auto n1 = static_cast<long long>(std::floor((w.x1 + bulge) / 4.0));
    if (n1 - n0 > 1'000'000) throw ResolutionError("window spans too many teeth");
    for (long long n = n0; n <= n1; ++n) {
        if (teeth_rows) tooth_pieces(static_cast<int>(n), w, false, out);
        if (box_rows) tooth_pieces(static_cast<int>(n), w, true, out);
    }
    if (n0 <= n1) {
        tr["tooth_index_min"] = n0;
        tr["tooth_index_max"] = n1;
    }
}

void square_sides(std::vector<Piece>& out) {
    out.emplace_back(Seg{{0, 0}, {1, 0}});
    out.emplace_back(Seg{{1, 0}, {1, 1}});
    out.emplace_back(Seg{{1, 1}, {0, 1}});
    out.emplace_back(Seg{{0, 1}, {0, 0}});
}

void comb_pieces(const Box& w, double ylo, double yhi, double res, std::vector<Piece>& out, Trunc& tr) {
    square_sides(out);
    if (w.x1 <= 0.0 || w.y1 < ylo || w.y0 > yhi) return;
    const double xmin = std::max(w.x0, res);
    const auto j0 = std::max(2LL, static_cast<long long>(std::ceil(1.0 / w.x1)));
    const auto j1 = static_cast<long long>(std::floor(1.0 / xmin));
    for (long long j = j0; j <= j1; ++j) {
        const double x = 1.0 / static_cast<double>(j);
        out.emplace_back(Seg{{x, ylo}, {x, yhi}});
    }
    if (w.x0 < res) tr["comb_slit_index_max"] = j1;
}

std::vector<Piece> pieces_in(const DomainSpec& d, const Box& w, double res, Trunc& tr) {
    std::vector<Piece> out;
    std::visit(
        detail::overloaded{
            [&](const shapes::Disk& s) { out.emplace_back(Circ{s.center, s.radius}); },
            [&](const shapes::HalfPlane& s) {
                const Complex n = s.normal / std::abs(s.normal);
                out.emplace_back(long_line(n * s.offset, n * Complex(0, 1), w));
            },
            [&](const shapes::Sector& s) { sector_pieces(s, w, out); },
            [&](const shapes::Cusp& s) {
                const double t0 = takagi::eval(s.x0);
                out.emplace_back(CuspArc{s.x0, t0, s.r0});
                const double top = t0 + std::sqrt(s.r0);
                for (const double sg : {-1.0, 1.0}) out.emplace_back(long_ray({s.x0 + sg * s.r0, top}, {0, 1}, w));
            },
            [&](const shapes::Strip& s) {
                out.emplace_back(long_line({0, s.width / 2}, 1.0, w));
                out.emplace_back(long_line({0, -s.width / 2}, 1.0, w));
            },
            [&](const shapes::Annulus& s) {
                out.emplace_back(Circ{0.0, 1.0});
                out.emplace_back(Circ{0.0, s.r_inner});
            },
            [&](const shapes::PuncturedDisk&) {
                out.emplace_back(Circ{0.0, 1.0});
                out.emplace_back(Seg{0.0, 0.0});
            },
            [&](const shapes::TakagiGraph&) {
                if (w.y1 >= 0.0 && w.y0 <= takagi::kMaxValue) out.emplace_back(TArc{0.0, 1.0, {0, 1}, -kInf, kInf});
            },
            [&](const shapes::TakagiTrunc& s) {
                const double xl = s.x0 - s.r1, xr = s.x0 + s.r1;
                out.emplace_back(TArc{0.0, 1.0, {0, 1}, xl, xr});
                out.emplace_back(Seg{{xl, takagi::eval(xl)}, {xl, 1.25}});
                out.emplace_back(Seg{{xr, takagi::eval(xr)}, {xr, 1.25}});
                out.emplace_back(Seg{{xl, 1.25}, {xr, 1.25}});
            },
            [&](const shapes::UT&) { teeth_in_window(w, false, out, tr); },
            [&](const shapes::VT&) { teeth_in_window(w, true, out, tr); },
            [&](const shapes::CombD1&) { comb_pieces(w, 0.0, 0.5, res, out, tr); },
            [&](const shapes::CombD2&) { comb_pieces(w, 0.25, 0.75, res, out, tr); },
            [&](const shapes::CantorSlit& s) {
                out.emplace_back(TArc{{0, 2}, 1.0, {0, -1}, -1.0, 1.0});
                out.emplace_back(TArc{{0, -2}, 1.0, {0, 1}, -1.0, 1.0});
                out.emplace_back(Seg{{-1, -2}, {-1, 2}});
                out.emplace_back(Seg{{1, -2}, {1, 2}});
                for (const auto& [a, b] : cantor_intervals(s.depth)) {
                    if (b >= w.x0 && a <= w.x1) out.emplace_back(Seg{{a, 0}, {b, 0}});
                }
                tr["cantor_depth"] = s.depth;
            },
            [&](const shapes::RadialSlit& s) {
                out.emplace_back(Circ{0.0, 1.0});
                out.emplace_back(Seg{0.0, 0.5});
                for (int nu = 1; nu <= s.n_spokes_limit; ++nu) out.emplace_back(Seg{0.0, std::polar(0.5, 1.0 / nu)});
                tr["radial_spokes"] = s.n_spokes_limit;
            },
            [&](const shapes::MultiSlit& s) {
                for (const auto& sl : s.slits) {
                    for (const auto& [a, b] : sl.intervals) out.emplace_back(Seg{{a, sl.y}, {b, sl.y}});
                }
            },
            [&](const shapes::SlitTakagi&) {
                if (w.y1 >= 0.0 && w.y0 <= takagi::kMaxValue) out.emplace_back(TArc{0.0, 1.0, {0, 1}, -kInf, kInf});
                if (w.x0 > 1.0 / 3 || w.x1 < -1.0 / 3) return;
                const auto k0 = std::max(4LL, static_cast<long long>(std::ceil(w.y0 - 1.0 / 3)));
                const auto k1 = static_cast<long long>(std::floor(w.y1 + 1.0 / 3));
                if (k1 - k0 > 1'000'000) throw ResolutionError("window spans too many disks");
                for (long long k = k0; k <= k1; ++k) out.emplace_back(Circ{{0.0, double(k)}, 1.0 / 3});
                if (k0 <= k1) tr["disk_index_max"] = k1;
            },
            [&](const shapes::SpokeAccretion& s) {
                out.emplace_back(long_line(0.0, 1.0, w));
                for (const auto& seg : detail::spoke_segments(s)) out.emplace_back(seg);
                tr["spoke_n_limit"] = s.n_limit;
                tr["spoke_nu_limit"] = s.nu_limit;
            },
        },
        d.shape);
    return out;
}

bool closed_form_dtb(const DomainSpec& d) {
    return std::visit(
        detail::overloaded{
            [](const shapes::Disk&) { return true; }, [](const shapes::HalfPlane&) { return true; },
            [](const shapes::Strip&) { return true; }, [](const shapes::Annulus&) { return true; },
            [](const shapes::PuncturedDisk&) { return true; }, [](const shapes::CombD1&) { return true; },
            [](const shapes::CombD2&) { return true; }, [](const shapes::RadialSlit&) { return true; },
            [](const shapes::MultiSlit&) { return true; }, [](const shapes::SpokeAccretion&) { return true; },
            [](const auto&) { return false; }},
        d.shape);
}

}  // namespace

std::string kind_name(const DomainSpec& d) { return kNames[d.shape.index()]; }

bool is_simply_connected(const DomainSpec& d) {
    return std::visit(
        detail::overloaded{
            [](const shapes::Annulus&) { return false; }, [](const shapes::PuncturedDisk&) { return false; },
            [](const shapes::VT&) { return false; }, [](const shapes::CombD2&) { return false; },
            [](const shapes::CantorSlit&) { return false; }, [](const shapes::RadialSlit&) { return false; },
            [](const shapes::MultiSlit&) { return false; }, [](const shapes::SlitTakagi&) { return false; },
            
            [](const auto&) { return true; }},
        d.shape);
}

bool is_bounded(const DomainSpec& d) {
    return std::visit(
        detail::overloaded{
            [](const shapes::Disk&) { return true; }, [](const shapes::Annulus&) { return true; },
            [](const shapes::PuncturedDisk&) { return true; }, [](const shapes::TakagiTrunc&) { return true; },
            [](const shapes::CombD1&) { return true; }, [](const shapes::CombD2&) { return true; },
            [](const shapes::CantorSlit&) { return true; }, [](const shapes::RadialSlit&) { return true; },
            
            [](const auto&) { return false; }},
        d.shape);
}

DtbValue dist_to_boundary(const DomainSpec& d, Complex z, double rel_tol) {
    if (contains(d, z) != Membership::inside) throw InvalidArgument("dist_to_boundary: point is not interior");
    if (!(rel_tol > 0.0)) throw InvalidArgument("dist_to_boundary: rel_tol must be positive");
    if (closed_form_dtb(d)) return {membership_margin(d, z), 0.0};

    double R = std::max(std::abs(membership_margin(d, z)), 1e-9);
    for (int it = 0; it < 200; ++it, R *= 2.0) {
        Trunc tr;
        const auto pieces = pieces_in(d, Box::around(z, R), 0.0, tr);
        detail::MinDistance acc(z, rel_tol);
        // Exact pieces first so the Takagi searches start with a tight cap.
        for (const auto& p : pieces) {
            if (!std::holds_alternative<TArc>(p)) std::visit([&](const auto& q) { acc.add(q); }, p);
        }
        for (const auto& p : pieces) {
            if (const auto* t = std::get_if<TArc>(&p)) acc.add(*t);
        }
        const DtbValue v = acc.result();
        if (v.value <= R) return v;
    }
    throw ResolutionError("dist_to_boundary: no boundary found");
}

namespace {

void push_if_inside(const Box& w, Complex p, std::vector<Complex>& out) {
    if (w.contains(p)) out.push_back(p);
}

constexpr std::size_t kMaxPoints = 50'000'000;

void check_budget(double n) {
    if (!(n < static_cast<double>(kMaxPoints))) throw ResolutionError("sample_boundary: too many points");
}

void sample_seg(const Seg& s, const Box& w, double res, std::vector<Complex>& out) {
    const auto c = detail::clip_segment(s, w);
    if (!c) return;
    const double len = std::abs(c->b - c->a);
    if (len == 0.0) {
        push_if_inside(w, c->a, out);
        return;
    }
    const double n = std::max(1.0, std::ceil(len / res));
    check_budget(n);
    const auto m = static_cast<long long>(n);
    for (long long i = 0; i <= m; ++i) out.push_back(c->a + (c->b - c->a) * (double(i) / double(m)));
}

void sample_circ(const Circ& c, const Box& w, double res, std::vector<Complex>& out) {
    if (!w.intersects(Box::around(c.c, c.r))) return;
    const double n = std::max(3.0, std::ceil(2 * kPi * c.r / res));
    check_budget(n);
    const auto m = static_cast<long long>(n);
    for (long long i = 0; i < m; ++i) push_if_inside(w, c.c + std::polar(c.r, 2 * kPi * double(i) / double(m)), out);
}

Complex arc_point(const TArc& a, double u) { return a.origin + u * a.e1 + takagi::eval(u) * a.e2; }

void refine_between(const TArc& a, double u0, Complex p0, double u1, Complex p1, double res, int depth,
                    const Box& w, std::vector<Complex>& out) {
    if (depth >= 40 || std::abs(p1 - p0) <= res) return;
    const double um = 0.5 * (u0 + u1);
    const Complex pm = arc_point(a, um);
    refine_between(a, u0, p0, um, pm, res, depth + 1, w, out);
    push_if_inside(w, pm, out);
    refine_between(a, um, pm, u1, p1, res, depth + 1, w, out);
}

void sample_tarc(const TArc& a, const Box& w, double res, bool refine, std::vector<Complex>& out) {
    double plo = kInf, phi = -kInf;
    for (const Complex c : {Complex(w.x0, w.y0), Complex(w.x1, w.y0), Complex(w.x0, w.y1), Complex(w.x1, w.y1)}) {
        const double u = dot(c - a.origin, a.e1);
        plo = std::min(plo, u);
        phi = std::max(phi, u);
    }
    const double lo = std::max(plo, a.u0), hi = std::min(phi, a.u1);
    if (lo > hi) return;
    std::vector<double> us;
    const double k0 = std::ceil(lo / res), k1 = std::floor(hi / res);
    check_budget(k1 - k0);
    if (lo == a.u0 && k0 * res != lo) us.push_back(lo);
    for (double k = k0; k <= k1; k += 1.0) us.push_back(k * res);
    if (hi == a.u1 && k1 * res != hi) us.push_back(hi);
    Complex prev{};
    for (std::size_t i = 0; i < us.size(); ++i) {
        const Complex p = arc_point(a, us[i]);
        if (refine && i > 0) refine_between(a, us[i - 1], prev, us[i], p, res, 0, w, out);
        push_if_inside(w, p, out);
        prev = p;
    }
}

void sample_cusp(const CuspArc& c, const Box& w, double res, std::vector<Complex>& out) {
    const double umax = std::sqrt(c.r0);
    const double n = std::max(1.0, std::ceil(umax * std::sqrt(4 * c.r0 + 1) / res));
    check_budget(n);
    const auto m = static_cast<long long>(n);
    for (long long i = m; i >= 1; --i) {
        const double u = umax * double(i) / double(m);
        push_if_inside(w, {c.x0 - u * u, c.t0 + u}, out);
    }
    push_if_inside(w, {c.x0, c.t0}, out);
    for (long long i = 1; i <= m; ++i) {
        const double u = umax * double(i) / double(m);
        push_if_inside(w, {c.x0 + u * u, c.t0 + u}, out);
    }
}

}  // namespace

BoundaryCloud sample_boundary(const DomainSpec& d, const Box& window, double resolution, bool refine) {
    if (!(resolution > 0.0) || !std::isfinite(resolution)) throw InvalidArgument("sample_boundary: resolution must be positive");
    if (!(window.x1 >= window.x0 && window.y1 >= window.y0)) throw InvalidArgument("sample_boundary: malformed window");
    BoundaryCloud cloud;
    cloud.window = window;
    cloud.resolution = resolution;
    const auto pieces = pieces_in(d, window, resolution, cloud.truncation);
    for (const auto& p : pieces) {
        std::visit(detail::overloaded{
                       [&](const Seg& s) { sample_seg(s, window, resolution, cloud.points); },
                       [&](const Circ& c) { sample_circ(c, window, resolution, cloud.points); },
                       [&](const TArc& a) { sample_tarc(a, window, resolution, refine, cloud.points); },
                       [&](const CuspArc& c) { sample_cusp(c, window, resolution, cloud.points); },
                   },
                   p);
        if (cloud.points.size() > kMaxPoints) throw ResolutionError("sample_boundary: too many points");
    }
    return cloud;
}

std::vector<std::pair<double, double>> cantor_intervals(int depth) {
    if (depth < 0 || depth > 20) throw InvalidArgument("cantor_intervals: depth must lie in [0,20]");
    std::vector<std::int64_t> starts{0};
    for (int k = 0; k < depth; ++k) {
        std::vector<std::int64_t> next;
        next.reserve(starts.size() * 2);
        for (const auto s : starts) {
            next.push_back(3 * s);
            next.push_back(3 * s + 2);
        }
        starts = std::move(next);
    }
    const double scale = std::pow(3.0, depth);
    std::vector<std::pair<double, double>> out;
    out.reserve(starts.size());
    for (const auto s : starts) out.emplace_back(double(s) / scale - 0.5, double(s + 1) / scale - 0.5);
    return out;
}

Box default_window(const DomainSpec& d) {
    return std::visit(
        detail::overloaded{
            [](const shapes::Disk& s) { return Box::around(s.center, 1.1 * s.radius); },
            [](const shapes::HalfPlane& s) {
                const Complex n = s.normal / std::abs(s.normal);
                return Box::around(n * (s.offset + 1.0), 2.0);
            },
            [](const shapes::Sector& s) { return Box::around(s.vertex, 1.0); },
            [](const shapes::Cusp& s) {
                const double t0 = takagi::eval(s.x0), q = std::sqrt(s.r0);
                return Box{s.x0 - 1.2 * s.r0, t0 - 0.2 * q, s.x0 + 1.2 * s.r0, t0 + 1.5 * q};
            },
            [](const shapes::Strip& s) { return Box{-2 * s.width, -s.width, 2 * s.width, s.width}; },
            [](const shapes::TakagiGraph&) { return Box{0.0, -0.2, 1.0, 1.2}; },
            [](const shapes::TakagiTrunc& s) { return Box{s.x0 - s.r1 - 0.1, -0.1, s.x0 + s.r1 + 0.1, 1.35}; },
            [](const shapes::UT&) { return Box{-6.0, -2.0, 10.0, 10.0}; },
            [](const shapes::VT&) { return Box{-6.0, -2.0, 10.0, 10.0}; },
            [](const shapes::CombD1&) { return Box{-0.1, -0.1, 1.1, 1.1}; },
            [](const shapes::CombD2&) { return Box{-0.1, -0.1, 1.1, 1.1}; },
            [](const shapes::CantorSlit&) { return Box{-1.2, -2.2, 1.2, 2.2}; },
            [](const shapes::MultiSlit& s) {
                Box b{-1.0, -1.0, 1.0, 1.0};
                for (const auto& sl : s.slits) {
                    for (const auto& [a, c] : sl.intervals) {
                        b.x0 = std::min(b.x0, a - 1.0);
                        b.x1 = std::max(b.x1, c + 1.0);
                        b.y0 = std::min(b.y0, sl.y - 1.0);
                        b.y1 = std::max(b.y1, sl.y + 1.0);
                    }
                }
                return b;
            },
            [](const shapes::SlitTakagi&) { return Box{-2.0, -0.5, 2.0, 8.0}; },
            [](const shapes::SpokeAccretion&) { return Box{-0.2, -0.1, 1.2, 1.2}; },
            [](const auto&) { return Box{-1.1, -1.1, 1.1, 1.1}; }},
        d.shape);
}

}  // namespace vislab

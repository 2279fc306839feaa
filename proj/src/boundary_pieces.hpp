#pragma once

// Boundary primitives shared by the domain zoo: segments, circles, affine copies
// of the Takagi graph and the square-root cusp curve.

#include <limits>
#include <optional>
#include <variant>
#include <vector>

#include "vislab/domain.hpp"

namespace vislab::detail {

struct Seg {
    Complex a, b;
};
struct Circ {
    Complex c;
    double r;
};
/// origin + u*e1 + T(u)*e2 for u in [u0,u1]; e1, e2 orthonormal.
struct TArc {
    Complex origin;
    Complex e1;
    Complex e2;
    double u0;
    double u1;
};
/// y = t0 + |x-x0|^(1/2), |x-x0| <= r0.
struct CuspArc {
    double x0;
    double t0;
    double r0;
};

using Piece = std::variant<Seg, Circ, TArc, CuspArc>;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Distance to a Takagi arc, searched only within `cap` of z. value=+inf when nothing is within cap.
DtbValue takagi_arc_distance(const TArc& arc, Complex z, double rel_tol, double cap = kInf);
double cusp_arc_distance(const CuspArc& arc, Complex z);

/// Running minimum over boundary pieces.
class MinDistance {
public:
    MinDistance(Complex z, double rel_tol) : z_(z), rel_(rel_tol) {}

    void add(const Seg& s) { take(segment_distance(z_, s.a, s.b), 0.0); }
    void add(const Circ& c) { take(std::abs(std::abs(z_ - c.c) - c.r), 0.0); }
    void add(const CuspArc& c) { take(cusp_arc_distance(c, z_), 0.0); }
    void add(const TArc& t) {
        const DtbValue v = takagi_arc_distance(t, z_, rel_, best_ + err_);
        take(v.value, v.error);
    }
    void add_value(double v) { take(v, 0.0); }
    DtbValue result() const { return {best_, err_}; }

private:
    void take(double v, double e) {
        if (v < best_) {
            best_ = v;
            err_ = e;
        }
    }
    Complex z_;
    double rel_;
    double best_ = kInf;
    double err_ = 0.0;
};

/// Long stand-in for a ray from a in direction dir, long enough for queries near z.
inline Seg ray(Complex a, Complex dir, Complex z, double extra = 10.0) {
    return {a, a + dir / std::abs(dir) * (std::abs(z - a) + extra)};
}

std::vector<Seg> spoke_segments(const shapes::SpokeAccretion& s);
double square_margin(Complex z);
double comb_slits(Complex z, double ylo, double yhi);
double cantor_slit_distance(Complex z, int depth);
double radial_slits(Complex z, int n);
double multislit_distance(const shapes::MultiSlit& m, Complex z);

/// Part of [a,b] inside the window (Liang-Barsky).
std::optional<Seg> clip_segment(const Seg& s, const Box& w);

}  // namespace vislab::detail

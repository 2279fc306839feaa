#pragma once

// Planar hyperbolic domains: the model domains with closed-form hyperbolic
// structure and the Takagi / comb / slit constructions, all behind one
// membership / distance-to-boundary / boundary-sampling contract.

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vislab/takagi.hpp"
#include "vislab/types.hpp"

namespace vislab {

namespace shapes {

struct Disk {
    Complex center{0.0, 0.0};
    double radius = 1.0;
};
/// { z : <z, normal> > offset }, normal a unit vector pointing into the domain.
struct HalfPlane {
    Complex normal{0.0, 1.0};
    double offset = 0.0;
};
/// { vertex + axis * w : |arg w| < half_angle }, optionally cut to |Im w| < truncation.
struct Sector {
    Complex vertex{0.0, 0.0};
    Complex axis{1.0, 0.0};
    double half_angle = kPi / 4;
    std::optional<double> truncation;
};
/// { |x-x0| < r0, y > T(x0) + |x-x0|^(1/2) }
struct Cusp {
    double x0 = 0.0;
    double r0 = 0.01;
};
/// { |Im z| < width/2 }
struct Strip {
    double width = 1.0;
};
/// { r_inner < |z| < 1 }
struct Annulus {
    double r_inner = 0.5;
};
struct PuncturedDisk {};
/// { y > T(x) }
struct TakagiGraph {};
/// { |x-x0| < r1, T(x) < y < 5/4 }
struct TakagiTrunc {
    double x0 = 0.0;
    double r1 = 0.5;
};
/// Complement of the Takagi-edged half-strips H_n above height 6.
struct UT {};
/// UT with the Takagi-edged boxes S_n at heights [2,3] removed.
struct VT {};
/// Unit square minus slits Re z = 1/j, 0 <= Im z <= 1/2, j >= 2.
struct CombD1 {};
/// Unit square minus slits Re z = 1/j, 1/4 <= Im z <= 3/4, j >= 2.
struct CombD2 {};
/// Takagi-edged rectangle over [-1,1] minus the depth-d middle-thirds Cantor set shifted by -1/2.
struct CantorSlit {
    int depth = 6;
};
/// Unit disk minus [0,1/2] and the spokes r e^{i/nu}, 0 <= r <= 1/2, nu <= n_spokes_limit.
struct RadialSlit {
    int n_spokes_limit = 32;
};
struct HSlit {
    double y = 0.0;
    std::vector<std::pair<double, double>> intervals;
};
/// Plane minus finitely many horizontal closed slits.
struct MultiSlit {
    std::vector<HSlit> slits;
};
/// { y > T(x) } minus the closed disks D(ki, 1/3), k >= 4.
struct SlitTakagi {};
/// Upper half-plane minus the tooth families T_n, n <= n_limit, nu <= nu_limit.
struct SpokeAccretion {
    int n_limit = 8;
    int nu_limit = 8;
};

}  // namespace shapes

using Shape = std::variant<shapes::Disk, shapes::HalfPlane, shapes::Sector, shapes::Cusp, shapes::Strip,
                           shapes::Annulus, shapes::PuncturedDisk, shapes::TakagiGraph, shapes::TakagiTrunc,
                           shapes::UT, shapes::VT, shapes::CombD1, shapes::CombD2, shapes::CantorSlit,
                           shapes::RadialSlit, shapes::MultiSlit, shapes::SlitTakagi, shapes::SpokeAccretion>;

struct DomainSpec {
    Shape shape;
    double tol = takagi::kDefaultTol;  // indeterminacy band is 2*tol wide

    DomainSpec() = default;
    DomainSpec(Shape s, double t = takagi::kDefaultTol) : shape(std::move(s)), tol(t) {}
    template <class S>
    const S* as() const { return std::get_if<S>(&shape); }
};

std::string kind_name(const DomainSpec& d);
bool is_simply_connected(const DomainSpec& d);
bool is_bounded(const DomainSpec& d);
/// Spacing of the spoke-accretion families used for both construction and sampling.
double spoke_gap_radius(int n);

enum class Membership { inside, outside, band };
const char* to_string(Membership m);

/// Signed inside-ness: positive inside, negative outside, |.| small near the boundary.
double membership_margin(const DomainSpec& d, Complex z);
Membership contains(const DomainSpec& d, Complex z);

struct DtbValue {
    double value = 0.0;
    double error = 0.0;
    double lower() const { return std::max(0.0, value - error); }
    double upper() const { return value + error; }
};

/// Euclidean distance to the boundary. rel_tol bounds error/value for Takagi pieces;
/// closed-form pieces are exact. Throws InvalidArgument unless contains(d,z) == inside.
DtbValue dist_to_boundary(const DomainSpec& d, Complex z, double rel_tol = 1e-3);

struct BoundaryCloud {
    std::vector<Complex> points;
    Box window;
    double resolution = 0.0;
    std::map<std::string, long long> truncation;
};

/// Points on the boundary inside the window. Closed-form pieces are sampled with gaps
/// <= resolution; Takagi pieces on the lattice of step `resolution`, refined by dyadic
/// bisection until consecutive gaps are <= resolution when `refine` is set.
BoundaryCloud sample_boundary(const DomainSpec& d, const Box& window, double resolution, bool refine = true);

/// Middle-thirds Cantor intervals of the given depth, shifted by -1/2.
std::vector<std::pair<double, double>> cantor_intervals(int depth);

/// A default viewing window that contains the interesting part of the domain.
Box default_window(const DomainSpec& d);

}  // namespace vislab

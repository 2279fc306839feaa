#pragma once

// Gromov products, visibility probes against a dtb core, the Goldilocks growth
// experiment on Takagi domains and component visit counting.

#include <string>
#include <vector>

#include "vislab/distance.hpp"

namespace vislab {

struct GromovSample {
    Complex o, z, w;
    double lo = 0.0;
    double hi = 0.0;
    double value() const { return 0.5 * (lo + hi); }
};

/// (z|w)_o = 1/2 (k(z,o) + k(w,o) - k(z,w)), propagated through the distance intervals.
GromovSample gromov_product(Complex z, Complex w, Complex o, const DistanceBackend& dist);

enum class GromovClass { bounded, divergent, indeterminate };
const char* to_string(GromovClass c);

struct GromovLimit {
    std::vector<double> ts;
    std::vector<GromovSample> samples;
    GromovClass verdict = GromovClass::indeterminate;
    double ceiling = 5.0;
    double cauchy_tail = 0.0;   // |v_last - v_prev| of the midpoint values
};

/// Approaches xi_k + t * dir_k for each t (decreasing). Divergent when the last lower
/// endpoint exceeds the ceiling; bounded when the max upper endpoint over the last three
/// t exceeds the max over the earlier ones by at most 0.1.
GromovLimit gromov_limit_probe(Complex xi1, Complex dir1, Complex xi2, Complex dir2, Complex o,
                               const std::vector<double>& ts, const DistanceBackend& dist, double ceiling = 5.0);

enum class VisibilityClass { visible_at_scale, escaping, indeterminate };
const char* to_string(VisibilityClass c);

struct VisibilityRow {
    int n = 0;
    Complex z, w;
    bool connected = false;
    double upper = 0.0;      // grid length of the path
    double min_dtb = 0.0;    // shallowest node
    double depth = 0.0;      // deepest node: the path meets {dtb >= depth}
    std::size_t nodes = 0;
};

struct VisibilityVerdict {
    std::vector<VisibilityRow> rows;
    double core = 0.0;
    VisibilityClass verdict = VisibilityClass::indeterminate;
};

/// One shortest path per (n, endpoints). Visible-at-scale when every depth reaches the core c;
/// escaping when the depths strictly decrease and the last one is below c.
VisibilityVerdict visibility_probe(const WeightedGrid& g, const std::vector<int>& ns,
                                   const std::vector<std::pair<Complex, Complex>>& endpoints, double core);

/// Midpoint of the gap between the comb slits at 1/(n+1) and 1/n.
inline double comb_gap_midpoint(int n) { return 0.5 * (1.0 / n + 1.0 / (n + 1)); }

double ols_slope(const std::vector<double>& x, const std::vector<double>& y);

struct GoldilocksRow {
    double h = 0.0;
    double dtb_lower = 0.0;      // true domain
    double dtb_upper = 0.0;
    double dtb_cusp = 0.0;       // inscribed cusp
    double lower = 0.0;          // sector comparison, localized domain
    double exact_sector = 0.0;   // pullback distance in the comparison sector
    double upper = 0.0;          // vertical segment quadrature
};

struct GoldilocksReport {
    double x0 = 0.0;
    double M = 0.0;
    double alpha = 0.0;          // atan(1/M)
    double t0 = 0.0;
    double cusp_r0 = 0.0;
    Complex base, z0;
    std::vector<GoldilocksRow> rows;
    double lower_slope = 0.0;
    double exact_slope = 0.0;
    double bound_coefficient = 0.0;   // pi / (8 alpha)
    double growth_slope_cusp = 0.0;   // slope of 1/2 log(1/dtb_cusp) vs log(1/h)
    double growth_slope_domain = 0.0; // same with the domain dtb lower bound
    double cusp_ratio_min = 0.0;      // dtb_cusp / h^2 over the rows
    double cusp_ratio_max = 0.0;
};

/// d must be TakagiTrunc with dyadic x0. PreconditionError when the sector threshold search
/// fails, an h is not in (0, t0/2), or the cusp is not inscribed.
GoldilocksReport goldilocks_growth_probe(const DomainSpec& d, double M, const std::vector<double>& hs, double p0 = 1.0);

struct SectorSlope {
    double M = 0.0;
    double alpha = 0.0;
    double lower_slope = 0.0;    // closed-form axis bound
    double exact_slope = 0.0;    // pullback distance
    double bound_coefficient = 0.0;
    double exact_coefficient = 0.0;
};

/// Axis points vertex + i*p0 and vertex + i*h of the sector of half-angle atan(1/M).
SectorSlope sector_slope(double M, const std::vector<double>& hs, double p0 = 1.0);

struct VisitReport {
    std::vector<int> labels;     // -1: skipped
    std::vector<int> distinct;   // running count of distinct labels
    std::vector<std::string> flags;
    int components = 0;
};

/// Labels each sequence point by its component of B(p,r) ∩ Ω on the grid of step h.
VisitReport finite_component_visit_check(const DomainSpec& d, Complex p, double r, const std::vector<Complex>& seq,
                                         double h);

}  // namespace vislab

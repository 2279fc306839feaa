#pragma once

// Piecewise-linear curves and the almost-geodesic / (lambda,kappa)-geodesic checks.

#include <optional>
#include <vector>

#include "vislab/metric.hpp"

namespace vislab {

struct Curve {
    std::vector<double> t;
    std::vector<Complex> p;

    Curve() = default;
    Curve(std::vector<double> params, std::vector<Complex> points);

    std::size_t size() const { return t.size(); }
    std::size_t segments() const { return t.empty() ? 0 : t.size() - 1; }
    double t_begin() const { return t.front(); }
    double t_end() const { return t.back(); }
    Complex at(double s) const;

    /// Straight segment a->b with n equal pieces on [0,1].
    static Curve segment(Complex a, Complex b, int n);
    /// Points joined in order, parametrized by cumulative Euclidean length.
    static Curve polyline(const std::vector<Complex>& pts);
};

/// Kobayashi length enclosure. Each segment is split into `pieces` parts and bounded
/// by the min / max of lo / hi over the part's end and midpoints.
/// Throws BandError listing the segments that leave the interior.
DistanceInterval kob_length(const DomainSpec& d, const Curve& c, const DensityBackend& density, int pieces = 4);

/// Per-segment [lower, upper] lengths, same quadrature as kob_length.
std::vector<std::pair<double, double>> segment_lengths(const DomainSpec& d, const Curve& c,
                                                       const DensityBackend& density, int pieces = 4);

/// New parameters F(t_i) = Kobayashi length up to t_i, starting at 0. Points are unchanged.
/// Throws InvalidArgument on zero-length segments or a non-exact backend.
Curve reparametrize_unit_speed(const DomainSpec& d, const Curve& c, const DensityBackend& density);

/// kappa(mid)|dp|/dt on each segment, using the backend's hi.
std::vector<double> midpoint_speeds(const Curve& c, const DensityBackend& density);

/// Zero-velocity segments get slope delta*1 with delta = eps / (3 * total flagged length).
/// An empty index list flags every zero-length segment.
Curve perturb_nonstationary(const Curve& c, double eps, std::vector<std::size_t> stationary = {});

double sup_displacement(const Curve& a, const Curve& b);

struct GeodesicReport {
    double lambda = 1.0;
    double kappa = 0.0;
    double tolerance = 1e-3;
    std::pair<double, double> worst_pair{0.0, 0.0};
    double slack = 0.0;         // favourable-side slack; pass iff >= -tolerance
    double strict_slack = 0.0;  // unfavourable-side slack; >= -tolerance means certified pass
    bool clause_i = true;
    bool clause_ii = true;
    bool pass = true;
    std::size_t pairs_checked = 0;
};

/// Parameter indices used for the pair grid: all of them, or ~sqrt(max_pairs) evenly spaced.
std::vector<std::size_t> pair_grid(std::size_t n, std::size_t max_pairs = 10000);

GeodesicReport check_almost_geodesic(const Curve& c, double lambda, double kappa, const DistanceBackend& dist,
                                     const DensityBackend& density, double tolerance = 1e-3);

GeodesicReport check_lk_geodesic(const DomainSpec& d, const Curve& c, double lambda, double kappa,
                                 const DistanceBackend& dist, const DensityBackend& density,
                                 double tolerance = 1e-3);

/// Two-sided Hausdorff distance between the vertex sets under the distance enclosures.
DistanceInterval curve_hausdorff_distance(const Curve& a, const Curve& b, const DistanceBackend& dist);

}  // namespace vislab

#pragma once

// Kobayashi-Royden density and distance with the normalization kappa_disk(0) = 1.
// Model domains are handled exactly through their covering maps; everything else
// gets two-sided bounds from comparison domains and distance to the boundary.

#include <functional>
#include <string>
#include <vector>

#include "vislab/domain.hpp"

namespace vislab {

inline constexpr const char* kConventionTag = "kobayashi-normalization: disk-unit";

struct DensityBound {
    double lo = 0.0;
    double hi = 0.0;
    bool exact = false;
    std::vector<std::string> tags;  // e.g. "koebe:quarter-bound", "no-lower-comparison"
};

/// Disk, HalfPlane, untruncated Sector, Strip, Annulus, PuncturedDisk.
bool has_exact_metric(const DomainSpec& d);

/// Exact density. Throws InvalidArgument if z is not interior or d has no exact metric.
DensityBound density_exact(const DomainSpec& d, Complex z);
double density_value(const DomainSpec& d, Complex z);

/// Exact Kobayashi distance on a model domain; symmetric bit for bit.
double distance_exact(const DomainSpec& d, Complex z, Complex w);

/// Sampled check that every inside point of `inner` in the window is not outside `outer`.
bool verify_inclusion(const DomainSpec& inner, const DomainSpec& outer, const Box& window, int per_side = 64);

/// Two-sided density bounds from dtb and enclosing model domains.
DensityBound density_bounds(const DomainSpec& d, Complex z, const std::vector<DomainSpec>& comparisons);

using DensityBackend = std::function<DensityBound(Complex)>;

struct DistanceInterval {
    double lower = 0.0;
    double upper = 0.0;
    std::string method_lower = "none";
    std::string method_upper = "none";
    double grid_h = 0.0;

    double width() const { return upper - lower; }
    bool contains(double v, double slack = 0.0) const { return v >= lower - slack && v <= upper + slack; }
};

using DistanceBackend = std::function<DistanceInterval(Complex, Complex)>;

/// Point intervals from distance_exact.
DistanceBackend exact_distance_backend(const DomainSpec& d);

DensityBackend exact_backend(const DomainSpec& d);
DensityBackend bounds_backend(const DomainSpec& d, std::vector<DomainSpec> comparisons = {});
/// Exact when available, bounds otherwise.
DensityBackend default_backend(const DomainSpec& d, std::vector<DomainSpec> comparisons = {});

/// Axis distance in a sector of half-angle alpha between heights p and q along the axis.
inline double sector_axis_distance(double alpha, double p, double q) {
    return kPi / (4.0 * alpha) * std::abs(std::log(p / q));
}

}  // namespace vislab

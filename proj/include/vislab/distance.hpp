#pragma once

// Two-sided Kobayashi distance enclosures, Royden localization checks and the
// boundary separation probe.

#include <map>
#include <memory>
#include <mutex>

#include "vislab/geodesic.hpp"

namespace vislab {

/// Comparisons that are model domains and contain d on the sampled window.
std::vector<DomainSpec> accepted_comparisons(const DomainSpec& d, const std::vector<DomainSpec>& comparisons,
                                             const Box& window);

/// upper: grid shortest path; lower: max of the exact comparison distances (exact if d is a model).
/// InvalidArgument if z or w has no flagged node within h.
DistanceInterval distance_interval(const DomainSpec& d, Complex z, Complex w, const WeightedGrid& g,
                                   const std::vector<DomainSpec>& comparisons);

/// Caches single-source grid searches. Queries are symmetric: the search runs from the
/// lower-indexed node.
class GridOracle {
public:
    GridOracle(DomainSpec d, WeightedGrid g, std::vector<DomainSpec> comparisons = {});
    DistanceInterval query(Complex z, Complex w) const;
    DistanceBackend backend() const;
    const WeightedGrid& grid() const { return g_; }
    const std::vector<DomainSpec>& comparisons() const { return cmp_; }

private:
    DomainSpec d_;
    WeightedGrid g_;
    std::vector<DomainSpec> cmp_;
    mutable std::map<std::size_t, std::vector<double>> cache_;
    mutable std::mutex mu_;
};

/// Lower bound from exact comparison distances only; 0 with method "none" if none apply.
DistanceInterval comparison_lower(const DomainSpec& d, Complex z, Complex w, const std::vector<DomainSpec>& comparisons);

/// k_outer(z, outer \ inner) estimated as the min over boundary samples of inner that lie
/// inside outer. Returns kInfinity when no such sample exists.
double separation_distance(const DomainSpec& outer, const DomainSpec& inner, Complex z, const Box& window, double res);

struct RoydenSample {
    Complex z;
    double kappa_inner = 0.0;     // hi of the inner density
    double kappa_outer_lo = 0.0;
    double kappa_outer_hi = 0.0;
    double k = 0.0;               // separation distance
    double factor = 1.0;          // coth(k), 1 at k = inf
    double slack = 0.0;           // factor * kappa_outer - kappa_inner
    bool exact = false;
    bool holds = false;
};

struct RoydenReport {
    std::vector<RoydenSample> samples;
    bool all_hold = true;
};

/// InvalidArgument if a sample is not inside inner or inner leaves outer on the window.
RoydenReport royden_check(const DomainSpec& outer, const DomainSpec& inner, const std::vector<Complex>& samples,
                          const Box& window, double res = 1e-3);

struct RoydenFit {
    double L = 0.0;
    double min_k = 0.0;
    std::size_t samples = 0;
};

/// Least L with kappa_inner <= (1 + L e^{-k}) kappa_outer at every sample.
/// PreconditionError if the separation is not positive.
RoydenFit refined_royden_fit(const DomainSpec& outer, const DomainSpec& inner, const std::vector<Complex>& samples,
                             const Box& window, double res = 1e-3);

struct BspReport {
    std::vector<double> radii;
    std::vector<double> lower;    // min over sampled pairs of the certified lower bound
    double threshold = 0.0;
    bool separated = false;
};

/// PreconditionError if p == q.
BspReport bsp_probe(const DomainSpec& d, Complex p, Complex q, const std::vector<double>& radii,
                    const std::vector<DomainSpec>& comparisons, double threshold = 1e-3, int per_axis = 12);

}  // namespace vislab

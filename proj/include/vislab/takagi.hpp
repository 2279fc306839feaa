#pragma once

// Takagi (blancmange) function T(t) = sum_j 2^-j dist(2^j t, Z) and the
// structural checks built on it: Hoelder estimates, cusp containment,
// narrow-sector thresholds and one-sided dyadic difference quotients.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "vislab/types.hpp"

namespace vislab::takagi {

inline constexpr double kDefaultTol = 1e-12;
inline constexpr double kMaxValue = 2.0 / 3.0;

/// Exact dyadic rational num / 2^exp.
struct Dyadic {
    std::int64_t num = 0;
    int exp = 0;

    double value() const { return std::ldexp(static_cast<double>(num), -exp); }
    friend bool operator==(const Dyadic&, const Dyadic&) = default;
};

inline double dist_to_int(double x) { return std::abs(x - std::nearbyint(x)); }

/// Number of series terms J with 2^-J <= tol.
int truncation_terms(double tol);

/// T(t) with absolute error <= tol. Throws InvalidArgument for non-finite t or tol <= 0.
double eval(double t, double tol = kDefaultTol);

/// T at k / 2^level, summed exactly (all terms of index >= level vanish).
double eval_dyadic(std::int64_t k, int level);
inline double eval_dyadic(Dyadic x) { return eval_dyadic(x.num, x.exp); }

struct HolderEstimate {
    double s = 0;
    double m_s = 0;
    std::size_t sample_count = 0;
};

/// max |T(x)-T(y)| / |x-y|^s over the supplied pairs. Pairs with x == y are skipped.
HolderEstimate holder_constant(double s, std::span<const std::pair<double, double>> pairs,
                               double tol = kDefaultTol);

/// Same quotient over all pairs of the lattice k 2^-level in [0,1].
HolderEstimate holder_constant_lattice(double s, int level);

/// Radius r0 with m * r0^(1/4) = safety < 1.
double cusp_radius(const HolderEstimate& m34, double safety = 0.9);

struct CuspReport {
    double x0 = 0;
    double r0 = 0;
    std::size_t samples = 0;
    double min_margin = 0;
    double argmin_x = 0;
    bool contained = false;
    bool precondition_met = false;
};

/// Samples the lower boundary y = T(x0) + |x-x0|^(1/2) of the cusp V_{x0,r0} and
/// reports min (T(x0) + |x-x0|^(1/2) - T(x)).
CuspReport cusp_containment_check(double x0, double r0, std::size_t n_samples,
                                  const HolderEstimate& m34);

/// Largest t0 in t_grid with T(x) > T(x0) + M|x-x0| for all sampled 0 < |x-x0| < t0.
std::optional<double> sector_threshold_search(Dyadic x0, double M, std::span<const double> t_grid);

enum class Side { left, right };

/// (T(x0 +- h) - T(x0)) / (+-h) for each h. h_list must be strictly decreasing and positive.
std::vector<double> dyadic_slope_divergence(Dyadic x0, Side side, std::span<const double> h_list);

}  // namespace vislab::takagi

#include "vislab/distance.hpp"

#include <algorithm>

namespace vislab {

namespace {

std::size_t snap_or_throw(const DomainSpec& d, const GridMask& m, Complex z, const char* what) {
    if (contains(d, z) != Membership::inside) throw InvalidArgument(std::string(what) + ": point is not inside the domain");
    const auto k = m.snap(z);
    if (!k) throw ResolutionError(std::string(what) + ": point has no flagged grid node within h");
    return *k;
}

Box hull(Complex a, Complex b, double pad) {
    return Box{std::min(a.real(), b.real()) - pad, std::min(a.imag(), b.imag()) - pad,
               std::max(a.real(), b.real()) + pad, std::max(a.imag(), b.imag()) + pad};
}

double coth(double k) { return std::isinf(k) ? 1.0 : 1.0 / std::tanh(k); }

}  // namespace

std::vector<DomainSpec> accepted_comparisons(const DomainSpec& d, const std::vector<DomainSpec>& comparisons,
                                             const Box& window) {
    std::vector<DomainSpec> out;
    for (const auto& c : comparisons)
        if (has_exact_metric(c) && verify_inclusion(d, c, window)) out.push_back(c);
    return out;
}

DistanceInterval comparison_lower(const DomainSpec& d, Complex z, Complex w, const std::vector<DomainSpec>& comparisons) {
    DistanceInterval r;
    if (has_exact_metric(d)) {
        r.lower = distance_exact(d, z, w);
        r.method_lower = "exact";
        return r;
    }
    for (const auto& c : comparisons) {
        if (contains(c, z) != Membership::inside || contains(c, w) != Membership::inside) continue;
        const double v = distance_exact(c, z, w);
        if (v > r.lower || r.method_lower == "none") {
            r.lower = std::max(r.lower, v);
            r.method_lower = "comparison:" + kind_name(c);
        }
    }
    return r;
}

DistanceInterval distance_interval(const DomainSpec& d, Complex z, Complex w, const WeightedGrid& g,
                                   const std::vector<DomainSpec>& comparisons) {
    GridOracle o(d, g, comparisons);
    return o.query(z, w);
}

GridOracle::GridOracle(DomainSpec d, WeightedGrid g, std::vector<DomainSpec> comparisons)
    : d_(std::move(d)), g_(std::move(g)), cmp_(accepted_comparisons(d_, comparisons, g_.mask.window)) {}

DistanceInterval GridOracle::query(Complex z, Complex w) const {
    std::size_t a = snap_or_throw(d_, g_.mask, z, "distance_interval");
    std::size_t b = snap_or_throw(d_, g_.mask, w, "distance_interval");
    if (b < a) std::swap(a, b);
    double up;
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(a);
        if (it == cache_.end()) it = cache_.emplace(a, distances_from(g_, a)).first;
        up = it->second[b];
    }
    if (!std::isfinite(up)) throw DisconnectedError("distance_interval: endpoints lie in different grid components");
    const Complex za = g_.mask.node(a), wb = g_.mask.node(b);
    DistanceInterval r = comparison_lower(d_, za, wb, cmp_);
    r.upper = up;
    r.method_upper = "grid-dijkstra";
    r.grid_h = g_.mask.h;
    if (r.lower > r.upper) r.lower = r.upper;  // only on model domains, from quadrature rounding
    return r;
}

DistanceBackend GridOracle::backend() const {
    return [this](Complex z, Complex w) { return query(z, w); };
}

double separation_distance(const DomainSpec& outer, const DomainSpec& inner, Complex z, const Box& window, double res) {
    if (!has_exact_metric(outer)) throw PreconditionError("separation_distance: outer domain needs an exact metric");
    const BoundaryCloud cloud = sample_boundary(inner, window, res);
    double k = kInfinity;
    for (const auto& b : cloud.points) {
        if (contains(outer, b) != Membership::inside) continue;
        k = std::min(k, distance_exact(outer, z, b));
    }
    return k;
}

RoydenReport royden_check(const DomainSpec& outer, const DomainSpec& inner, const std::vector<Complex>& samples,
                          const Box& window, double res) {
    if (!verify_inclusion(inner, outer, window)) throw InvalidArgument("royden_check: inner is not contained in outer");
    const auto in_be = default_backend(inner, {outer});
    const auto out_be = default_backend(outer);
    RoydenReport rep;
    for (const auto& z : samples) {
        if (contains(inner, z) != Membership::inside) throw InvalidArgument("royden_check: sample outside inner domain");
        RoydenSample s;
        s.z = z;
        const DensityBound ki = in_be(z), ko = out_be(z);
        s.kappa_inner = ki.hi;
        s.kappa_outer_lo = ko.lo;
        s.kappa_outer_hi = ko.hi;
        s.exact = ki.exact && ko.exact;
        s.k = separation_distance(outer, inner, z, window, res);
        s.factor = coth(s.k);
        // Sampled k can only overestimate the infimum, which shrinks the factor: a pass is certified.
        s.slack = s.factor * (s.exact ? ko.hi : ko.lo) - s.kappa_inner;
        s.holds = s.slack >= -1e-9 * std::max(1.0, s.kappa_inner);
        rep.all_hold = rep.all_hold && s.holds;
        rep.samples.push_back(s);
    }
    return rep;
}

RoydenFit refined_royden_fit(const DomainSpec& outer, const DomainSpec& inner, const std::vector<Complex>& samples,
                             const Box& window, double res) {
    const RoydenReport rep = royden_check(outer, inner, samples, window, res);
    RoydenFit fit;
    fit.min_k = kInfinity;
    for (const auto& s : rep.samples) {
        fit.min_k = std::min(fit.min_k, s.k);
        if (!(s.k > 0.0)) throw PreconditionError("refined_royden_fit: separation is not positive");
        ++fit.samples;
        if (std::isinf(s.k)) continue;
        const double ratio = s.kappa_inner / s.kappa_outer_lo;
        fit.L = std::max(fit.L, (ratio - 1.0) * std::exp(s.k));
    }
    return fit;
}

BspReport bsp_probe(const DomainSpec& d, Complex p, Complex q, const std::vector<double>& radii,
                    const std::vector<DomainSpec>& comparisons, double threshold, int per_axis) {
    if (std::abs(p - q) == 0.0) throw PreconditionError("bsp_probe: boundary points must differ");
    const double rmax = radii.empty() ? 0.0 : *std::max_element(radii.begin(), radii.end());
    const auto cmp = accepted_comparisons(d, comparisons, hull(p, q, rmax + 1e-3));
    auto disk_points = [&](Complex c, double r) {
        std::vector<Complex> pts;
        for (int j = 0; j < per_axis; ++j)
            for (int i = 0; i < per_axis; ++i) {
                const Complex z = c + Complex(r * (2.0 * (i + 0.5) / per_axis - 1.0), r * (2.0 * (j + 0.5) / per_axis - 1.0));
                if (std::abs(z - c) < r && contains(d, z) == Membership::inside) pts.push_back(z);
            }
        return pts;
    };
    BspReport rep;
    rep.radii = radii;
    rep.threshold = threshold;
    rep.separated = !radii.empty();
    for (const double r : radii) {
        const auto zs = disk_points(p, r), ws = disk_points(q, r);
        double lo = zs.empty() || ws.empty() ? std::numeric_limits<double>::quiet_NaN() : kInfinity;
        for (const auto& z : zs)
            for (const auto& w : ws) lo = std::min(lo, comparison_lower(d, z, w, cmp).lower);
        rep.lower.push_back(lo);
        rep.separated = rep.separated && lo >= threshold;
    }
    return rep;
}

}  // namespace vislab

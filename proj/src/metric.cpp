#include "vislab/metric.hpp"

#include "boundary_pieces.hpp"

namespace vislab {

namespace {

void require_inside(const DomainSpec& d, Complex z, const char* what) {
    if (contains(d, z) != Membership::inside) throw InvalidArgument(std::string(what) + ": point is not interior");
}

// atanh(num/den) where den^2 - num^2 = prod, kept accurate when the ratio is near 1.
double atanh_ratio(double num, double den, double prod) {
    const double rho = num / den;
    if (rho < 0.5) return std::atanh(rho);
    return std::log(num + den) - 0.5 * std::log(prod);
}

// Right half-plane distance via the pseudo-hyperbolic ratio.
double rhp_distance(Complex a, Complex b) {
    return atanh_ratio(std::abs(a - b), std::abs(a + std::conj(b)), 4.0 * a.real() * b.real());
}

double sector_distance(const shapes::Sector& s, Complex z, Complex w) {
    const Complex u = std::conj(s.axis / std::abs(s.axis));
    const Complex la = std::log((z - s.vertex) * u), lb = std::log((w - s.vertex) * u);
    // The common scale cancels in the half-plane distance.
    const double m = 0.5 * (la.real() + lb.real());
    const double beta = kPi / (2.0 * s.half_angle);
    return rhp_distance(std::exp(beta * (la - m)), std::exp(beta * (lb - m)));
}

// Strip {|Im| < W/2} to the right half-plane, shifted by a common real offset.
double strip_distance(double W, Complex a, Complex b) {
    const double mid = 0.5 * (a.real() + b.real());
    const Complex pa = std::exp(kPi * (a - mid) / W);
    const Complex pb = std::exp(kPi * (b - mid) / W);
    return rhp_distance(pa, pb);
}

// Minimum over the deck translations by 2*pi*k along `dir` of `base`.
template <class F>
double min_over_lifts(Complex a, Complex b, Complex dir, double offset, F base) {
    const double k0 = std::round(-offset / (2 * kPi));
    double best = detail::kInf;
    for (double k = k0 - 1; k <= k0 + 1; k += 1.0) best = std::min(best, base(a, b + dir * (2 * kPi * k)));
    return best;
}

}  // namespace

bool has_exact_metric(const DomainSpec& d) {
    if (const auto* s = d.as<shapes::Sector>()) return !s->truncation && s->half_angle > 0 && s->half_angle <= kPi;
    return d.as<shapes::Disk>() || d.as<shapes::HalfPlane>() || d.as<shapes::Strip>() || d.as<shapes::Annulus>() ||
           d.as<shapes::PuncturedDisk>();
}

double density_value(const DomainSpec& d, Complex z) {
    if (!has_exact_metric(d)) throw InvalidArgument("density_exact: " + kind_name(d) + " has no closed form");
    require_inside(d, z, "density_exact");
    if (const auto* s = d.as<shapes::Disk>()) return s->radius / (s->radius * s->radius - std::norm(z - s->center));
    if (d.as<shapes::HalfPlane>()) return 1.0 / (2.0 * membership_margin(d, z));
    if (const auto* s = d.as<shapes::Sector>()) {
        const Complex w = (z - s->vertex) * std::conj(s->axis / std::abs(s->axis));
        const double beta = kPi / (2.0 * s->half_angle);
        return beta / (2.0 * std::abs(w) * std::cos(beta * std::arg(w)));
    }
    if (const auto* s = d.as<shapes::Strip>()) return kPi / (2.0 * s->width * std::cos(kPi * z.imag() / s->width));
    if (const auto* s = d.as<shapes::Annulus>()) {
        const double a = std::log(s->r_inner), W = -a;
        const double r = std::abs(z);
        return kPi / (2.0 * W * r * std::cos(kPi * (std::log(r) - a / 2) / W));
    }
    const double r = std::abs(z);
    return 1.0 / (2.0 * r * std::log(1.0 / r));
}

DensityBound density_exact(const DomainSpec& d, Complex z) {
    const double v = density_value(d, z);
    return {v, v, true, {}};
}

double distance_exact(const DomainSpec& d, Complex z, Complex w) {
    if (!has_exact_metric(d)) throw InvalidArgument("distance_exact: " + kind_name(d) + " has no closed form");
    require_inside(d, z, "distance_exact");
    require_inside(d, w, "distance_exact");
    if (z == w) return 0.0;
    // Fixed argument order makes the result exactly symmetric.
    if (std::make_pair(w.real(), w.imag()) < std::make_pair(z.real(), z.imag())) std::swap(z, w);

    if (const auto* s = d.as<shapes::Disk>()) {
        const Complex a = (z - s->center) / s->radius, b = (w - s->center) / s->radius;
        return atanh_ratio(std::abs(a - b), std::abs(1.0 - std::conj(a) * b), (1.0 - std::norm(a)) * (1.0 - std::norm(b)));
    }
    if (const auto* s = d.as<shapes::HalfPlane>()) {
        const Complex n = s->normal / std::abs(s->normal);
        return rhp_distance((z - s->offset * n) * std::conj(n), (w - s->offset * n) * std::conj(n));
    }
    if (const auto* s = d.as<shapes::Sector>()) return sector_distance(*s, z, w);
    if (const auto* s = d.as<shapes::Strip>()) return strip_distance(s->width, z, w);
    if (const auto* s = d.as<shapes::Annulus>()) {
        const double a = std::log(s->r_inner), W = -a;
        const Complex I(0, 1);
        const Complex ea = I * (std::log(z) - a / 2), eb = I * (std::log(w) - a / 2);
        return min_over_lifts(ea, eb, -1.0, (eb - ea).real() * -1.0,
                              [W](Complex p, Complex q) { return strip_distance(W, p, q); });
    }
    const Complex pa = -std::log(z), pb = -std::log(w);
    return min_over_lifts(pa, pb, Complex(0, 1), (pb - pa).imag(), rhp_distance);
}

bool verify_inclusion(const DomainSpec& inner, const DomainSpec& outer, const Box& window, int per_side) {
    for (int i = 0; i < per_side; ++i) {
        for (int j = 0; j < per_side; ++j) {
            const Complex z{window.x0 + window.width() * (i + 0.5) / per_side,
                            window.y0 + window.height() * (j + 0.5) / per_side};
            if (contains(inner, z) == Membership::inside && contains(outer, z) == Membership::outside) return false;
        }
    }
    return true;
}

DensityBound density_bounds(const DomainSpec& d, Complex z, const std::vector<DomainSpec>& comparisons) {
    require_inside(d, z, "density_bounds");
    const DtbValue dtb = dist_to_boundary(d, z);
    DensityBound out;
    out.hi = 1.0 / dtb.lower();
    if (has_exact_metric(d)) {
        const double k = density_value(d, z);
        out.hi = std::min(out.hi, k);
    }
    bool compared = false;
    const Box near = Box::around(z, 2.0 * dtb.upper() + 1e-3);
    for (const auto& c : comparisons) {
        if (!has_exact_metric(c) || contains(c, z) != Membership::inside || !verify_inclusion(d, c, near)) {
            out.tags.push_back("comparison-rejected:" + kind_name(c));
            continue;
        }
        out.lo = std::max(out.lo, density_value(c, z));
        compared = true;
    }
    if (is_simply_connected(d)) {
        const double koebe = 1.0 / (4.0 * dtb.upper());
        if (koebe > out.lo) {
            out.lo = koebe;
            out.tags.emplace_back("koebe:quarter-bound");
        }
    } else if (!compared) {
        out.tags.emplace_back("warning:no-lower-comparison");
    }
    out.lo = std::min(out.lo, out.hi);
    out.exact = out.lo == out.hi;
    return out;
}

DensityBackend exact_backend(const DomainSpec& d) {
    if (!has_exact_metric(d)) throw InvalidArgument("exact backend requires a model domain");
    return [d](Complex z) { return density_exact(d, z); };
}

DensityBackend bounds_backend(const DomainSpec& d, std::vector<DomainSpec> comparisons) {
    return [d, comparisons = std::move(comparisons)](Complex z) { return density_bounds(d, z, comparisons); };
}

DistanceBackend exact_distance_backend(const DomainSpec& d) {
    if (!has_exact_metric(d)) throw InvalidArgument("exact distance requires a model domain");
    return [d](Complex z, Complex w) {
        const double v = distance_exact(d, z, w);
        return DistanceInterval{v, v, "exact", "exact", 0.0};
    };
}

DensityBackend default_backend(const DomainSpec& d, std::vector<DomainSpec> comparisons) {
    return has_exact_metric(d) ? exact_backend(d) : bounds_backend(d, std::move(comparisons));
}

}  // namespace vislab

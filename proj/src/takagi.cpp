#include "vislab/takagi.hpp"

#include <limits>

namespace vislab::takagi {

int truncation_terms(double tol) {
    if (!(tol > 0.0) || !std::isfinite(tol)) throw InvalidArgument("takagi: tol must be positive");
    return std::max(0, static_cast<int>(std::ceil(std::log2(1.0 / tol))));
}

double eval(double t, double tol) {
    if (!std::isfinite(t)) throw InvalidArgument("takagi: non-finite argument");
    const int terms = truncation_terms(tol);
    // Doubling modulo one is exact in binary floating point.
    double x = t - std::floor(t);
    double scale = 1.0;
    double sum = 0.0;
    for (int j = 0; j <= terms && x != 0.0; ++j) {
        sum += scale * dist_to_int(x);
        x *= 2.0;
        x -= std::floor(x);
        scale *= 0.5;
    }
    return sum;
}

double eval_dyadic(std::int64_t k, int level) {
    if (level < 0 || level > 62) throw InvalidArgument("takagi: dyadic level out of range");
    if (level == 0) return 0.0;
    const std::uint64_t n = std::uint64_t{1} << level;
    std::int64_t r = k % static_cast<std::int64_t>(n);
    if (r < 0) r += static_cast<std::int64_t>(n);
    std::uint64_t m = static_cast<std::uint64_t>(r);
    double sum = 0.0;
    for (int j = 0; j < level && m != 0; ++j) {
        const std::uint64_t d = std::min(m, n - m);
        sum += std::ldexp(static_cast<double>(d), -level - j);
        m = (m << 1) & (n - 1);
    }
    return sum;
}

HolderEstimate holder_constant(double s, std::span<const std::pair<double, double>> pairs,
                               double tol) {
    if (!(s > 0.0 && s < 1.0)) throw InvalidArgument("holder_constant: s must lie in (0,1)");
    if (pairs.empty()) throw InvalidArgument("holder_constant: empty sample");
    HolderEstimate est{s, 0.0, 0};
    for (const auto& [x, y] : pairs) {
        if (x == y) continue;
        const double q = std::abs(eval(x, tol) - eval(y, tol)) / std::pow(std::abs(x - y), s);
        est.m_s = std::max(est.m_s, q);
        ++est.sample_count;
    }
    if (est.sample_count == 0) throw InvalidArgument("holder_constant: no distinct pairs");
    return est;
}

HolderEstimate holder_constant_lattice(double s, int level) {
    if (!(s > 0.0 && s < 1.0)) throw InvalidArgument("holder_constant: s must lie in (0,1)");
    if (level < 1 || level > 16) throw InvalidArgument("holder_constant: lattice level out of range");
    const std::size_t n = std::size_t{1} << level;
    std::vector<double> values(n + 1), denom(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        values[k] = eval_dyadic(static_cast<std::int64_t>(k), level);
        denom[k] = k == 0 ? 0.0 : std::pow(std::ldexp(static_cast<double>(k), -level), s);
    }
    HolderEstimate est{s, 0.0, 0};
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) {
            est.m_s = std::max(est.m_s, std::abs(values[j] - values[i]) / denom[j - i]);
        }
    }
    est.sample_count = n * (n + 1) / 2;
    return est;
}

double cusp_radius(const HolderEstimate& m34, double safety) {
    if (!(m34.m_s > 0.0)) throw InvalidArgument("cusp_radius: Hoelder constant must be positive");
    return std::pow(safety / m34.m_s, 4.0);
}

CuspReport cusp_containment_check(double x0, double r0, std::size_t n_samples,
                                  const HolderEstimate& m34) {
    if (!(r0 > 0.0)) throw InvalidArgument("cusp_containment_check: r0 must be positive");
    if (n_samples == 0) throw InvalidArgument("cusp_containment_check: no samples");
    CuspReport rep;
    rep.x0 = x0;
    rep.r0 = r0;
    rep.samples = n_samples;
    rep.precondition_met = m34.m_s * std::pow(r0, 0.25) < 1.0;
    rep.min_margin = std::numeric_limits<double>::infinity();
    const double t0 = eval(x0);
    for (std::size_t i = 0; i < n_samples; ++i) {
        const double x = x0 - r0 + 2.0 * r0 * (static_cast<double>(i) + 0.5) / static_cast<double>(n_samples);
        const double margin = t0 + std::sqrt(std::abs(x - x0)) - eval(x);
        if (margin < rep.min_margin) {
            rep.min_margin = margin;
            rep.argmin_x = x;
        }
    }
    rep.contained = rep.min_margin > 0.0;
    return rep;
}

std::optional<double> sector_threshold_search(Dyadic x0, double M, std::span<const double> t_grid) {
    if (!(M > 0.0)) throw InvalidArgument("sector_threshold_search: M must be positive");
    if (t_grid.empty()) return std::nullopt;
    const auto [tmin_it, tmax_it] = std::minmax_element(t_grid.begin(), t_grid.end());
    if (!(*tmin_it > 0.0)) throw InvalidArgument("sector_threshold_search: grid must be positive");
    const double res = std::ldexp(*tmin_it, -10);
    const double tmax = *tmax_it;
    const double c = x0.value();
    const double tc = eval_dyadic(x0);

    // Smallest sampled offset at which the sector inequality fails.
    double violation = std::numeric_limits<double>::infinity();
    for (std::int64_t k = 1;; ++k) {
        const double d = static_cast<double>(k) * res;
        if (d >= tmax) break;
        const double bound = tc + M * d;
        if (!(eval(c + d) > bound) || !(eval(c - d) > bound)) {
            violation = d;
            break;
        }
    }
    std::optional<double> best;
    for (double t : t_grid) {
        if (t <= violation && (!best || t > *best)) best = t;
    }
    return best;
}

std::vector<double> dyadic_slope_divergence(Dyadic x0, Side side, std::span<const double> h_list) {
    for (std::size_t i = 0; i < h_list.size(); ++i) {
        if (!(h_list[i] > 0.0) || (i > 0 && !(h_list[i] < h_list[i - 1]))) {
            throw InvalidArgument("dyadic_slope_divergence: h_list must be strictly decreasing and positive");
        }
    }
    const double c = x0.value();
    const double tc = eval_dyadic(x0);
    std::vector<double> out;
    out.reserve(h_list.size());
    for (double h : h_list) {
        const double step = side == Side::right ? h : -h;
        out.push_back((eval(c + step) - tc) / step);
    }
    return out;
}

}  // namespace vislab::takagi

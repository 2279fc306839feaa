#include "vislab/grid.hpp"

#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace vislab {

std::size_t GridMask::flagged_count() const {
    std::size_t n = 0;
    for (const auto f : flag) n += f;
    return n;
}

std::optional<std::size_t> GridMask::snap(Complex z) const {
    const int ic = static_cast<int>(std::lround((z.real() - window.x0) / h));
    const int jc = static_cast<int>(std::lround((z.imag() - window.y0) / h));
    std::optional<std::size_t> best;
    double bd = h * (1.0 + 1e-12);
    for (int j = jc - 1; j <= jc + 1; ++j) {
        for (int i = ic - 1; i <= ic + 1; ++i) {
            if (i < 0 || j < 0 || i >= nx || j >= ny) continue;
            const std::size_t k = index(i, j);
            if (!flag[k]) continue;
            const double dd = std::abs(node(i, j) - z);
            if (dd < bd || (dd == bd && best && k < *best)) {
                bd = dd;
                best = k;
            }
        }
    }
    return best;
}

GridMask build_grid(const DomainSpec& d, const Box& window, double h, const GridOptions& opt) {
    if (!(h > 0.0) || !std::isfinite(h)) throw InvalidArgument("build_grid: h must be positive");
    if (!(window.width() >= 0.0 && window.height() >= 0.0)) throw InvalidArgument("build_grid: malformed window");
    GridMask g;
    g.window = window;
    g.h = h;
    g.margin = opt.margin_factor * h;
    const double fx = std::floor(window.width() / h + 1e-9) + 1.0;
    const double fy = std::floor(window.height() / h + 1e-9) + 1.0;
    if (fx * fy > 6e7) throw ResolutionError("build_grid: lattice too large");
    g.nx = static_cast<int>(fx);
    g.ny = static_cast<int>(fy);
    const auto n = static_cast<std::size_t>(g.nx) * static_cast<std::size_t>(g.ny);
    g.flag.assign(n, 0);
    g.dtb.assign(n, 0.0);
    g.member.assign(n, static_cast<std::uint8_t>(Membership::outside));

    auto work = [&](int j) {
        for (int i = 0; i < g.nx; ++i) {
            const std::size_t k = g.index(i, j);
            const Complex z = g.node(i, j);
            if (opt.clip && !(std::abs(z - opt.clip->first) < opt.clip->second)) continue;
            const Membership m = contains(d, z);
            g.member[k] = static_cast<std::uint8_t>(m);
            if (m != Membership::inside) continue;
            const double lo = dist_to_boundary(d, z, opt.dtb_rel_tol).lower();
            g.dtb[k] = lo;
            g.flag[k] = lo > g.margin;
        }
    };
    unsigned nt = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    nt = std::min<unsigned>(nt, static_cast<unsigned>(g.ny));
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mu;
    for (unsigned t = 0; t < nt; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (int j = static_cast<int>(t); j < g.ny; j += static_cast<int>(nt)) work(j);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
    if (g.flagged_count() == 0) throw ResolutionError("build_grid: no interior nodes at this resolution");
    return g;
}

}  // namespace vislab

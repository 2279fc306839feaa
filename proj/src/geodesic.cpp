#include "vislab/geodesic.hpp"

#include <algorithm>
#include <queue>

namespace vislab {

double WeightedGrid::edge_weight(std::size_t a, std::size_t b, double len) const {
    if (dtb_weights) {
        const double room = std::min(mask.dtb[a], mask.dtb[b]) - 0.5 * len;
        return room > 0.0 ? len / room : kInfinity;
    }
    return len * std::max(hi[a], hi[b]);
}

WeightedGrid weigh(const DomainSpec& d, GridMask mask) {
    WeightedGrid g;
    g.dtb_weights = !has_exact_metric(d);
    g.hi.assign(mask.size(), kInfinity);
    for (std::size_t k = 0; k < mask.size(); ++k) {
        if (!mask.flag[k]) continue;
        g.hi[k] = g.dtb_weights ? 1.0 / mask.dtb[k] : density_value(d, mask.node(k));
    }
    g.mask = std::move(mask);
    return g;
}

namespace {

struct Search {
    std::vector<double> dist;
    std::vector<std::size_t> prev;
};

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

Search dijkstra(const WeightedGrid& g, std::size_t src, std::size_t stop = kNone) {
    const GridMask& m = g.mask;
    Search s{std::vector<double>(m.size(), kInfinity), std::vector<std::size_t>(m.size(), kNone)};
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    s.dist[src] = 0.0;
    pq.emplace(0.0, src);
    const double diag = m.h * std::sqrt(2.0);
    while (!pq.empty()) {
        const auto [du, u] = pq.top();
        pq.pop();
        if (du > s.dist[u]) continue;
        if (u == stop) break;
        const int i = m.col(u), j = m.row(u);
        for (int n = 0; n < 8; ++n) {
            const int a = i + kNbr[n][0], b = j + kNbr[n][1];
            if (a < 0 || b < 0 || a >= m.nx || b >= m.ny) continue;
            const std::size_t v = m.index(a, b);
            if (!m.flag[v]) continue;
            const double nd = du + g.edge_weight(u, v, n < 4 ? m.h : diag);
            if (nd < s.dist[v]) {
                s.dist[v] = nd;
                s.prev[v] = u;
                pq.emplace(nd, v);
            }
        }
    }
    return s;
}

}  // namespace

std::vector<double> distances_from(const WeightedGrid& g, std::size_t source) {
    if (source >= g.mask.size() || !g.mask.flag[source]) throw InvalidArgument("distances_from: source is not a flagged node");
    return dijkstra(g, source).dist;
}

PathResult shortest_path(const WeightedGrid& g, Complex z, Complex w) {
    const auto s = g.mask.snap(z);
    const auto t = g.mask.snap(w);
    if (!s || !t) throw InvalidArgument("shortest_path: endpoint has no flagged node within h");
    const Search r = dijkstra(g, *s, *t);
    if (!std::isfinite(r.dist[*t])) throw DisconnectedError("shortest_path: endpoints lie in different grid components");
    PathResult out;
    for (std::size_t k = *t; k != kNone; k = r.prev[k]) out.nodes.push_back(k);
    std::reverse(out.nodes.begin(), out.nodes.end());
    std::vector<Complex> pts;
    out.min_dtb = kInfinity;
    out.max_dtb = 0.0;
    for (const auto k : out.nodes) {
        pts.push_back(g.mask.node(k));
        out.min_dtb = std::min(out.min_dtb, g.mask.dtb[k]);
        out.max_dtb = std::max(out.max_dtb, g.mask.dtb[k]);
    }
    out.curve = Curve::polyline(pts);
    out.upper = r.dist[*t];
    return out;
}

Complex DiskGeodesic::at(double s) const {
    if (diameter) return a + (b - a) * s;
    const double ta = std::arg(a - center);
    const double dt = std::remainder(std::arg(b - center) - ta, 2.0 * kPi);
    return center + std::polar(radius, ta + s * dt);
}

std::vector<Complex> DiskGeodesic::sample(int n) const {
    std::vector<Complex> out;
    for (int i = 0; i <= n; ++i) out.push_back(at(static_cast<double>(i) / n));
    return out;
}

double DiskGeodesic::min_modulus() const {
    if (diameter) return segment_distance(0.0, a, b);
    const double ta = std::arg(a - center);
    const double dt = std::remainder(std::arg(b - center) - ta, 2.0 * kPi);
    const double toward = std::remainder(std::arg(-center) - ta, 2.0 * kPi);
    const bool inside = dt >= 0 ? (toward >= 0 && toward <= dt) : (toward <= 0 && toward >= dt);
    if (inside) return std::abs(center) - radius;
    return std::min(std::abs(a), std::abs(b));
}

DiskGeodesic disk_geodesic(Complex a, Complex b) {
    constexpr double slack = 1e-12;
    if (std::abs(a) > 1.0 + slack || std::abs(b) > 1.0 + slack) throw InvalidArgument("disk_geodesic: endpoint outside the closed disk");
    if (std::abs(a - b) == 0.0) throw InvalidArgument("disk_geodesic: coincident endpoints");
    DiskGeodesic g{a, b};
    // Orthogonality: Re(conj(c) p) = (1 + |p|^2) / 2 for both endpoints.
    const double det = cross(a, b);
    if (std::abs(det) <= 1e-14 * std::abs(a) * std::abs(b) || std::abs(a) == 0.0 || std::abs(b) == 0.0) {
        g.diameter = true;
        return g;
    }
    const double ra = 0.5 * (1.0 + std::norm(a)), rb = 0.5 * (1.0 + std::norm(b));
    const double cx = (ra * b.imag() - rb * a.imag()) / det;
    const double cy = (rb * a.real() - ra * b.real()) / det;
    g.center = {cx, cy};
    g.radius = std::sqrt(std::max(0.0, std::norm(g.center) - 1.0));
    return g;
}

bool region_reg(Complex x1, Complex x2, Complex z) {
    if (!(std::abs(z) < 1.0)) return false;
    const DiskGeodesic g = disk_geodesic(x1, x2);
    if (g.diameter) {
        const double s1 = cross(x2 - x1, Complex(1.0, 0.0) - x1);
        const double sz = cross(x2 - x1, z - x1);
        return s1 * sz > 0.0;
    }
    const bool one_in = std::abs(Complex(1.0, 0.0) - g.center) < g.radius;
    const bool z_in = std::abs(z - g.center) < g.radius;
    return one_in == z_in && std::abs(std::abs(z - g.center) - g.radius) > 0.0;
}

std::vector<PathResult> geodesic_ray_family(const WeightedGrid& g, Complex o, const std::vector<Complex>& targets) {
    std::vector<PathResult> out;
    out.reserve(targets.size());
    for (const auto& q : targets) out.push_back(shortest_path(g, o, q));
    return out;
}

double initial_arc_deviation(const Curve& a, const Curve& b, double T) {
    if (!(T >= 0.0)) throw InvalidArgument("initial_arc_deviation: T must be non-negative");
    double sup = 0.0;
    auto probe = [&](double s) { sup = std::max(sup, std::abs(a.at(a.t_begin() + s) - b.at(b.t_begin() + s))); };
    for (const double s : a.t) if (s - a.t_begin() <= T) probe(s - a.t_begin());
    for (const double s : b.t) if (s - b.t_begin() <= T) probe(s - b.t_begin());
    probe(T);
    return sup;
}

}  // namespace vislab

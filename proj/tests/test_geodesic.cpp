#include <random>

#include "doctest.h"
#include "vislab/geodesic.hpp"

using namespace vislab;

namespace {

const DomainSpec kDisk{shapes::Disk{}};

GridMask disk_mask(double h) { return build_grid(kDisk, Box{-1, -1, 1, 1}, h); }

// Bellman-Ford relaxation to a fixed point over the same edge set.
std::vector<double> relax_oracle(const WeightedGrid& g, std::size_t src) {
    const GridMask& m = g.mask;
    std::vector<double> d(m.size(), kInfinity);
    d[src] = 0.0;
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t u = 0; u < m.size(); ++u) {
            if (!m.flag[u] || !std::isfinite(d[u])) continue;
            for (int di = -1; di <= 1; ++di)
                for (int dj = -1; dj <= 1; ++dj) {
                    if (!di && !dj) continue;
                    const int a = m.col(u) + di, b = m.row(u) + dj;
                    if (a < 0 || b < 0 || a >= m.nx || b >= m.ny) continue;
                    const std::size_t v = m.index(a, b);
                    if (!m.flag[v]) continue;
                    const double len = std::hypot(di * m.h, dj * m.h);
                    const double nd = d[u] + len * std::max(g.hi[u], g.hi[v]);
                    if (nd < d[v] - 1e-15) {
                        d[v] = nd;
                        changed = true;
                    }
                }
        }
    }
    return d;
}

}  // namespace

TEST_CASE("disk grid node count matches lattice count") {
    for (double h : {1.0 / 16, 1.0 / 32, 1.0 / 64}) {
        const GridMask m = disk_mask(h);
        std::size_t expect = 0;
        const int n = static_cast<int>(std::lround(2.0 / h));
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n; ++i) expect += std::hypot(-1 + i * h, -1 + j * h) < 1.0 - h;
        CHECK(m.flagged_count() == expect);
        const double area = kPi * (1 - h) * (1 - h) / (h * h);
        CHECK(std::abs(m.flagged_count() - area) <= 2 * kPi / h);
    }
    CHECK_THROWS_AS(build_grid(kDisk, Box{-1, -1, 1, 1}, 2.5), ResolutionError);
    CHECK_THROWS_AS(build_grid(kDisk, Box{-1, -1, 1, 1}, -1.0), InvalidArgument);
}

TEST_CASE("dijkstra agrees with relaxation oracle") {
    const WeightedGrid g = weigh(kDisk, disk_mask(0.1));
    CHECK_FALSE(g.dtb_weights);
    const auto src = *g.mask.snap(0.0);
    const auto d = distances_from(g, src);
    const auto o = relax_oracle(g, src);
    for (std::size_t k = 0; k < d.size(); ++k) {
        if (!g.mask.flag[k]) continue;
        CHECK(d[k] == doctest::Approx(o[k]).epsilon(1e-12));
    }
}

TEST_CASE("grid distances satisfy the triangle inequality") {
    const GridMask m = build_grid(kDisk, Box{-0.7, -0.7, 0.7, 0.7}, 0.1);
    CHECK(m.nx == 15);
    const WeightedGrid g = weigh(kDisk, m);
    std::vector<std::size_t> nodes;
    for (std::size_t k = 0; k < m.size(); ++k)
        if (m.flag[k]) nodes.push_back(k);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, nodes.size() - 1);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = nodes[pick(rng)], b = nodes[pick(rng)], c = nodes[pick(rng)];
        const auto da = distances_from(g, a), db = distances_from(g, b);
        CHECK(da[c] <= da[b] + db[c] + 1e-12);
        CHECK(da[b] == doctest::Approx(db[a]).epsilon(1e-12));
        CHECK(da[b] >= distance_exact(kDisk, m.node(a), m.node(b)) - 1e-12);
    }
}

TEST_CASE("disk shortest path bounds the exact distance from above") {
    const WeightedGrid g = weigh(kDisk, disk_mask(1.0 / 64));
    const PathResult p = shortest_path(g, 0.0, 0.5);
    const double exact = std::atanh(0.5);
    CHECK(p.upper >= exact);
    CHECK(p.upper <= 1.1 * exact);
    CHECK(p.curve.p.front() == Complex(0.0, 0.0));
    CHECK(p.curve.p.back() == Complex(0.5, 0.0));
    CHECK(p.min_dtb == doctest::Approx(0.5));
    CHECK(p.max_dtb == doctest::Approx(1.0));

    const PathResult again = shortest_path(g, 0.0, 0.5);
    CHECK(again.nodes == p.nodes);

    CHECK_THROWS_AS(shortest_path(g, 0.0, 1.5), InvalidArgument);
}

TEST_CASE("dtb-weighted grid is conservative on the half-plane") {
    const DomainSpec hp{shapes::HalfPlane{}};
    GridMask m = build_grid(hp, Box{-1, 0, 1, 2}, 1.0 / 32);
    WeightedGrid g = weigh(hp, m);
    g.dtb_weights = true;
    for (std::size_t k = 0; k < m.size(); ++k)
        if (m.flag[k]) g.hi[k] = 1.0 / m.dtb[k];
    const PathResult p = shortest_path(g, {0, 0.5}, {0, 1.5});
    // 1/dtb dominates the half-plane density 1/(2y), so the path length bounds 2x the exact distance.
    CHECK(p.upper >= 2.0 * distance_exact(hp, {0, 0.5}, {0, 1.5}));
}

TEST_CASE("split grid reports disconnection") {
    GridMask m = disk_mask(0.1);
    for (int j = 0; j < m.ny; ++j) m.flag[m.index(m.nx / 2, j)] = 0;
    const WeightedGrid g = weigh(kDisk, m);
    CHECK_THROWS_AS(shortest_path(g, {-0.5, 0}, {0.5, 0}), DisconnectedError);
}

TEST_CASE("disk geodesics are orthogonal arcs") {
    const DiskGeodesic g = disk_geodesic(1.0, Complex(0, 1));
    CHECK(std::norm(g.center) == doctest::Approx(g.radius * g.radius + 1.0));
    double brute = kInfinity;
    for (const auto& z : g.sample(200000)) brute = std::min(brute, std::abs(z));
    CHECK(g.min_modulus() == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-9));
    CHECK(brute == doctest::Approx(g.min_modulus()).epsilon(1e-8));

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> U(-0.7, 0.7);
    for (int trial = 0; trial < 100; ++trial) {
        const Complex a(U(rng), U(rng)), b(U(rng), U(rng));
        const DiskGeodesic arc = disk_geodesic(a, b);
        CHECK(std::abs(arc.at(0.0) - a) < 1e-12);
        CHECK(std::abs(arc.at(1.0) - b) < 1e-12);
        const Complex m = arc.at(0.37);
        const double sum = distance_exact(kDisk, a, m) + distance_exact(kDisk, m, b);
        CHECK(sum == doctest::Approx(distance_exact(kDisk, a, b)).epsilon(1e-9));
    }
    const DiskGeodesic dia = disk_geodesic(-0.5, 0.5);
    CHECK(dia.diameter);
    CHECK(dia.min_modulus() == 0.0);
    CHECK_THROWS_AS(disk_geodesic(0.2, 0.2), InvalidArgument);
    CHECK_THROWS_AS(disk_geodesic(0.2, 2.0), InvalidArgument);
}

TEST_CASE("region between a boundary arc and its geodesic") {
    const Complex x1 = std::polar(1.0, -kPi / 4), x2 = std::polar(1.0, kPi / 4);
    CHECK(region_reg(x1, x2, 0.9));
    CHECK_FALSE(region_reg(x1, x2, 0.0));
    CHECK_FALSE(region_reg(x1, x2, -0.9));
    CHECK_FALSE(region_reg(x1, x2, 1.2));
    const Complex y1 = Complex(0, -1), y2 = Complex(0, 1);
    CHECK(region_reg(y1, y2, 0.3));
    CHECK_FALSE(region_reg(y1, y2, -0.3));
}

TEST_CASE("initial arc deviation") {
    const Curve a = Curve::polyline({0.0, 1.0});
    const Curve b = Curve::polyline({0.0, Complex(0, 1)});
    CHECK(initial_arc_deviation(a, a, 1.0) == 0.0);
    CHECK(initial_arc_deviation(a, b, 0.5) == doctest::Approx(0.5 * std::sqrt(2.0)));
    const WeightedGrid g = weigh(kDisk, disk_mask(1.0 / 32));
    const auto fam = geodesic_ray_family(g, 0.0, {0.5, Complex(0.5, 0.03125)});
    CHECK(fam.size() == 2);
    CHECK(initial_arc_deviation(fam[0].curve, fam[1].curve, 0.25) <= 0.1);
}

#include <random>

#include "doctest.h"
#include "vislab/metric.hpp"

using namespace vislab;

namespace {

// Oracle: numerically integrate density along the straight segment (an upper bound)
double segment_length(const DomainSpec& d, Complex a, Complex b, int n = 20000) {
    double s = 0;
    for (int i = 0; i < n; ++i) {
        const Complex m = a + (b - a) * ((i + 0.5) / n);
        s += density_value(d, m) * std::abs(b - a) / n;
    }
    return s;
}

// Oracle: composition of the explicit power map with the half-plane density.
double sector_density_by_composition(double alpha, Complex z) {
    const double beta = kPi / (2 * alpha);
    const Complex phi = std::pow(z, beta);
    const double dphi = beta * std::pow(std::abs(z), beta - 1);
    return dphi / (2 * phi.real());
}

}  // namespace

TEST_CASE("density normalisation") {
    CHECK(density_value({shapes::Disk{}}, 0.0) == 1.0);
    CHECK(density_value({shapes::HalfPlane{}}, {0, 1}) == doctest::Approx(0.5).epsilon(1e-15));
    // Cayley pullback: disk density at (z-i)/(z+i) times |derivative|
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> X(-3, 3), Y(0.01, 3);
    for (int i = 0; i < 100; ++i) {
        const Complex z{X(rng), Y(rng)};
        const Complex I(0, 1);
        const Complex c = (z - I) / (z + I);
        const double deriv = std::abs(2.0 * I / ((z + I) * (z + I)));
        CHECK(density_value({shapes::HalfPlane{}}, z) == doctest::Approx(deriv / (1 - std::norm(c))).epsilon(1e-12));
    }
    shapes::Sector s{0.0, 1.0, kPi / 4, std::nullopt};
    CHECK(density_value({s}, 1.0) == doctest::Approx(sector_density_by_composition(kPi / 4, 1.0)).epsilon(1e-12));
    for (double a : {0.2, 0.5, 1.0, 1.4}) {
        shapes::Sector t{0.0, 1.0, a, std::nullopt};
        const Complex z = std::polar(0.7, 0.3 * a);
        CHECK(density_value({t}, z) == doctest::Approx(sector_density_by_composition(a, z)).epsilon(1e-12));
    }
    CHECK(density_value({shapes::PuncturedDisk{}}, 0.5) == doctest::Approx(1.0 / (2 * 0.5 * std::log(2.0))));
}

TEST_CASE("exact distances match closed forms") {
    const DomainSpec disk{shapes::Disk{}};
    CHECK(distance_exact(disk, 0.0, 0.5) == doctest::Approx(std::atanh(0.5)).epsilon(1e-14));
    CHECK(distance_exact(disk, 0.5, -0.5) == doctest::Approx(std::atanh(0.8)).epsilon(1e-14));
    CHECK(distance_exact({shapes::HalfPlane{}}, {0, 1}, {0, 2}) == doctest::Approx(0.5 * std::log(2.0)));
    shapes::Sector s{0.0, 1.0, kPi / 4, std::nullopt};
    CHECK(distance_exact({s}, 1.0, std::exp(-1.0)) == doctest::Approx(1.0).epsilon(1e-14));
    for (double M : {1.0, 5.0}) {
        const double alpha = std::atan(1.0 / M);
        shapes::Sector v{0.0, {0, 1}, alpha, std::nullopt};
        CHECK(distance_exact({v}, {0, 0.3}, {0, 0.001}) ==
              doctest::Approx(sector_axis_distance(alpha, 0.3, 0.001)).epsilon(1e-12));
    }
}

TEST_CASE("exact distances are symmetric metrics dominated by segment length") {
    std::vector<DomainSpec> models{{shapes::Disk{}},
                                   {shapes::HalfPlane{}},
                                   {shapes::Sector{0.0, 1.0, 0.6, std::nullopt}},
                                   {shapes::Strip{1.0}},
                                   {shapes::Annulus{0.3}},
                                   {shapes::PuncturedDisk{}}};
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> U(-1, 1);
    for (const auto& d : models) {
        std::vector<Complex> pts;
        while (pts.size() < 12) {
            const Complex z{U(rng), U(rng)};
            if (contains(d, z) == Membership::inside && membership_margin(d, z) > 0.02) pts.push_back(z);
        }
        for (const auto a : pts) {
            for (const auto b : pts) {
                CHECK(distance_exact(d, a, b) == distance_exact(d, b, a));
                for (const auto c : pts) {
                    CHECK(distance_exact(d, a, c) <= distance_exact(d, a, b) + distance_exact(d, b, c) + 1e-12);
                }
            }
        }
        // Segments are admissible curves, so their length bounds the distance from above.
        for (std::size_t i = 1; i < pts.size(); ++i) {
            const Complex a = pts[i - 1], b = pts[i];
            bool seg_inside = true;
            for (int k = 0; k <= 200; ++k) seg_inside &= contains(d, a + (b - a) * (k / 200.0)) == Membership::inside;
            if (seg_inside) CHECK(distance_exact(d, a, b) <= segment_length(d, a, b) * (1 + 1e-6));
        }
    }
}

TEST_CASE("density matches infinitesimal distance") {
    std::vector<std::pair<DomainSpec, Complex>> cases{{{shapes::Strip{2.0}}, {0.3, 0.4}},
                                                      {{shapes::Annulus{0.4}}, {0.1, 0.6}},
                                                      {{shapes::PuncturedDisk{}}, {0.2, -0.1}}};
    for (const auto& [d, z] : cases) {
        for (const Complex dir : {Complex(1, 0), Complex(0, 1), Complex(0.6, 0.8)}) {
            const double eps = 1e-6;
            CHECK(distance_exact(d, z, z + eps * dir) / eps == doctest::Approx(density_value(d, z)).epsilon(1e-5));
        }
    }
}

TEST_CASE("density bounds") {
    const DomainSpec disk{shapes::Disk{}};
    const auto self = density_bounds(disk, 0.0, {disk});
    CHECK(self.lo == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(self.hi == doctest::Approx(1.0).epsilon(1e-12));

    const DomainSpec trunc{shapes::TakagiTrunc{0.0, 0.5}};
    const DomainSpec sector{shapes::Sector{0.0, {0, 1}, kPi / 4, std::nullopt}};
    const Complex z{0.0, 0.25};
    const auto tb = density_bounds(trunc, z, {sector});
    CHECK(tb.lo >= density_value(sector, z) - 1e-15);
    CHECK(tb.lo <= tb.hi);
    CHECK(tb.hi == doctest::Approx(1.0 / dist_to_boundary(trunc, z).lower()));

    const auto comb = density_bounds({shapes::CombD2{}}, {0.7, 0.8}, {});
    CHECK(comb.lo == 0.0);
    CHECK(comb.hi == doctest::Approx(1.0 / 0.2));
    CHECK(std::find(comb.tags.begin(), comb.tags.end(), "warning:no-lower-comparison") != comb.tags.end());

    // Comparison that does not contain the domain is rejected.
    const auto bad = density_bounds(trunc, z, {DomainSpec{shapes::Disk{{0, 0.25}, 0.1}}});
    CHECK(bad.tags.front().rfind("comparison-rejected", 0) == 0);
    CHECK_THROWS_AS(density_exact({shapes::UT{}}, {2.5, 7}), InvalidArgument);
}

#include <random>
#include <vector>

#include "doctest.h"
#include "vislab/takagi.hpp"

using namespace vislab;
namespace tk = vislab::takagi;

namespace {

// Oracle: series summed in long double with fmodl, independent of the doubling trick.
double series_oracle(long double t, int terms = 60) {
    long double sum = 0.0L, p = 1.0L;
    for (int j = 0; j < terms; ++j) {
        long double x = fmodl(t * p, 1.0L);
        if (x < 0) x += 1.0L;
        sum += std::min(x, 1.0L - x) / p;
        p *= 2.0L;
    }
    return static_cast<double>(sum);
}

}  // namespace

TEST_CASE("takagi values at small rationals") {
    CHECK(tk::eval(0.0) == 0.0);
    CHECK(tk::eval(0.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(tk::eval(0.25) == doctest::Approx(0.5).epsilon(1e-15));
    // geometric series 1/3 * sum 2^-j
    CHECK(std::abs(tk::eval(1.0 / 3.0) - 2.0 / 3.0) <= 1e-12);
}

TEST_CASE("takagi agrees with the direct series") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(-3.0, 3.0);
    for (int i = 0; i < 2000; ++i) {
        const double t = U(rng);
        CHECK(std::abs(tk::eval(t, 1e-12) - series_oracle(t)) <= 2e-12);
    }
}

TEST_CASE("takagi functional equation, periodicity, symmetry, range") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    const double tol = 1e-12;
    for (int i = 0; i < 10000; ++i) {
        const double t = U(rng);
        const double T = tk::eval(t, tol);
        CHECK(std::abs(T - tk::dist_to_int(t) - tk::eval(2 * t, tol) / 2) <= 2 * tol + 1e-15);
        CHECK(std::abs(T - tk::eval(t + 1.0, tol)) <= 2 * tol + 1e-15);
        CHECK(std::abs(T - tk::eval(1.0 - t, tol)) <= 2 * tol + 1e-15);
        CHECK(T >= 0.0);
        CHECK(T <= 2.0 / 3.0 + tol);
    }
}

TEST_CASE("takagi rejects bad input") {
    CHECK_THROWS_AS(tk::eval(std::nan(""), 1e-12), InvalidArgument);
    CHECK_THROWS_AS(tk::eval(INFINITY, 1e-12), InvalidArgument);
    CHECK_THROWS_AS(tk::eval(0.3, 0.0), InvalidArgument);
    CHECK_THROWS_AS(tk::eval(0.3, -1.0), InvalidArgument);
}

TEST_CASE("truncation depth meets tolerance") {
    for (double tol : {1e-3, 1e-6, 1e-9, 1e-12}) {
        const int J = tk::truncation_terms(tol);
        CHECK(std::ldexp(1.0, -J) <= tol);
        CHECK(std::ldexp(1.0, -(J - 1)) > tol);
    }
}

TEST_CASE("dyadic evaluation is exact against the series") {
    for (int level = 1; level <= 12; ++level) {
        for (std::int64_t k = -5; k <= (1 << level) + 5; k += std::max(1, (1 << level) / 37)) {
            const double t = std::ldexp(double(k), -level);
            CHECK(tk::eval_dyadic(k, level) == doctest::Approx(series_oracle(t)).epsilon(1e-14));
        }
    }
    // T(2^-k) = k 2^-k
    for (int k = 1; k <= 40; ++k) CHECK(tk::eval_dyadic(1, k) == std::ldexp(double(k), -k));
}

TEST_CASE("holder quotient examples") {
    std::vector<std::pair<double, double>> one{{0.0, 0.5}};
    CHECK(tk::holder_constant(0.75, one).m_s == doctest::Approx(0.5 * std::pow(2.0, 0.75)));
    std::vector<std::pair<double, double>> period{{0.0, 1.0}};
    CHECK(tk::holder_constant(0.5, period).m_s == 0.0);
    std::vector<std::pair<double, double>> same{{0.3, 0.3}};
    CHECK_THROWS_AS(tk::holder_constant(0.5, same), InvalidArgument);
    CHECK_THROWS_AS(tk::holder_constant(0.5, std::span<const std::pair<double, double>>{}), InvalidArgument);
    CHECK_THROWS_AS(tk::holder_constant(1.0, one), InvalidArgument);
}

TEST_CASE("holder estimates grow with the sample and stabilise under refinement") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    std::vector<std::pair<double, double>> pairs;
    double prev = 0.0;
    for (int round = 0; round < 5; ++round) {
        for (int i = 0; i < 200; ++i) pairs.emplace_back(U(rng), U(rng));
        const double m = tk::holder_constant(0.75, pairs).m_s;
        CHECK(m >= prev);
        prev = m;
    }
    const double a = tk::holder_constant_lattice(0.75, 11).m_s;
    const double b = tk::holder_constant_lattice(0.75, 12).m_s;
    CHECK(a > 0.0);
    CHECK(b >= a);
    CHECK((b - a) / b <= 0.05);
}

TEST_CASE("cusp containment") {
    const auto m = tk::holder_constant_lattice(0.75, 10);
    const double r0 = tk::cusp_radius(m);
    CHECK(m.m_s * std::pow(r0, 0.25) < 1.0);
    for (double x0 : {0.0, 0.5, 0.3}) {
        const auto rep = tk::cusp_containment_check(x0, r0, 20000, m);
        CHECK(rep.precondition_met);
        CHECK(rep.contained);
        CHECK(rep.min_margin > 0.0);
    }
    const auto bad = tk::cusp_containment_check(0.0, 10.0, 1000, m);
    CHECK_FALSE(bad.precondition_met);
    CHECK(bad.samples == 1000);
}

TEST_CASE("sector threshold search") {
    const std::vector<double> grid{1.0 / 2, 1.0 / 4, 1.0 / 8, 1.0 / 16, 1.0 / 32, 1.0 / 64};
    CHECK(tk::sector_threshold_search({0, 0}, 1.0, grid).has_value());
    CHECK(tk::sector_threshold_search({1, 2}, 2.0, grid).has_value());
    const std::vector<double> coarse{1.0 / 2, 1.0 / 4};
    CHECK_FALSE(tk::sector_threshold_search({0, 0}, 1e6, coarse).has_value());
    // A returned threshold really satisfies the inequality on a finer independent sample.
    const auto t0 = tk::sector_threshold_search({0, 0}, 3.0, grid);
    REQUIRE(t0.has_value());
    for (int i = 1; i < 5000; ++i) {
        const double x = *t0 * i / 5000.0;
        CHECK(series_oracle(x) > 3.0 * x);
        CHECK(series_oracle(-x) > 3.0 * x);
    }
}

TEST_CASE("dyadic slope divergence") {
    std::vector<double> h;
    for (int k = 1; k <= 12; ++k) h.push_back(std::ldexp(1.0, -k));
    const auto right = tk::dyadic_slope_divergence({0, 0}, tk::Side::right, h);
    const auto left = tk::dyadic_slope_divergence({0, 0}, tk::Side::left, h);
    for (int k = 1; k <= 12; ++k) {
        CHECK(right[k - 1] == doctest::Approx(double(k)).epsilon(1e-9));
        CHECK(left[k - 1] == doctest::Approx(-double(k)).epsilon(1e-9));
    }
    std::vector<double> h2(h.begin() + 1, h.end());
    const auto half = tk::dyadic_slope_divergence({1, 1}, tk::Side::right, h2);
    for (std::size_t i = 1; i < half.size(); ++i) CHECK(half[i] > half[i - 1]);
    const std::vector<double> bad{0.1, 0.2};
    CHECK_THROWS_AS(tk::dyadic_slope_divergence({0, 0}, tk::Side::right, bad), InvalidArgument);
}

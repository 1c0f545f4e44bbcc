#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "displab/finite_diff.hpp"
#include "displab/grid.hpp"
#include "displab/quadrature.hpp"
#include "displab/region.hpp"

using namespace displab;
namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("adaptive quadrature on polynomials") {
    CHECK(std::abs(integrate_adaptive([](double x) { return x * x; }, 0.0, 1.0, 1e-10) -
                   1.0 / 3.0) < 1e-10);
    // normalization of the uniform density and its second moment
    CHECK(integrate_adaptive([](double) { return 1.0; }, -0.5, 0.5, 1e-12) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(integrate_adaptive([](double v) { return v * v; }, -0.5, 0.5, 1e-12) ==
          doctest::Approx(1.0 / 12.0).epsilon(1e-10));
}

TEST_CASE("adaptive quadrature splits at declared kinks") {
    const auto f = [](double x) { return std::abs(x - 0.3); };
    const std::array<double, 1> kinks{0.3};
    const double exact = 0.5 * (0.3 * 0.3 + 0.7 * 0.7);
    CHECK(std::abs(integrate_adaptive(f, 0.0, 1.0, 1e-12, kinks) - exact) < 1e-12);
}

TEST_CASE("adaptive quadrature reports non-convergence") {
    const auto f = [](double x) { return 1.0 / (std::abs(x - 0.5) + 1e-300); };
    CHECK_THROWS_AS(integrate_adaptive(f, 0.0, 1.0, 1e-6), AccuracyError);
    try {
        integrate_adaptive(f, 0.0, 1.0, 1e-6);
    } catch (const AccuracyError& e) {
        CHECK(std::isfinite(e.best_estimate));
    }
}

TEST_CASE("grid invariants") {
    CHECK_THROWS(Grid1D(1.0, 0.0, 10));
    CHECK_THROWS(Grid1D(0.0, 1.0, 2));
    const Grid1D g(0.0, 1.0, 5);
    CHECK(g.spacing() == doctest::Approx(0.25));
    CHECK(g.node(4) == doctest::Approx(1.0));
}

TEST_CASE("central differences exact on quadratics") {
    const RealField f = [](const ChainPoint& p) {
        return p.t * p.t + p.x() * p.x() + p.x() * p.v();
    };
    const auto p = ChainPoint::xvt(0.4, -0.2, 1.0);
    CHECK(std::abs(fd::partial_time(f, p, 1e-4) - 2.0) < 1e-10);
    CHECK(std::abs(fd::partial(f, p, fd::Coord::X, 1e-4) - (2.0 * 0.4 - 0.2)) < 1e-10);
    CHECK(std::abs(fd::second(f, p, fd::Coord::X, 1e-4) - 2.0) < 1e-5);
    const RealField c = [](const ChainPoint&) { return 3.25; };
    CHECK(fd::second(c, p, fd::Coord::V, 1e-4) == 0.0);
}

TEST_CASE("first derivative of a cubic") {
    const RealField f = [](const ChainPoint& p) { return p.x() * p.x() * p.x(); };
    CHECK(std::abs(fd::partial(f, ChainPoint::xt(2.0, 0.0), fd::Coord::X, 1e-4) - 12.0) <
          1e-6);
}

TEST_CASE("time derivative of the cubic phase") {
    const double e = kPi * kPi / 2.0;
    const RealField phase = [e](const ChainPoint& p) { return e * p.t * p.t * p.t / 3.0; };
    CHECK(std::abs(fd::partial_time(phase, ChainPoint::at_t(1.0), 1e-4) - e) < 1e-7);
}

TEST_CASE("chain derivative annihilates transported fields") {
    const double g = kPi;
    const RealField f = [g](const ChainPoint& p) {
        return std::cos(g * (p.x() - p.v() * p.t));
    };
    for (double v : {-0.4, 0.1, 0.45}) {
        const auto p = ChainPoint::xvt(0.2, v, 0.7);
        const std::array<double, 1> mult{v};
        CHECK(std::abs(fd::chain_partial(f, p, 1, mult, 1e-5)) < 1e-8);
    }
}

TEST_CASE("chain derivative with zero multipliers reduces to d/dt") {
    const RealField f = [](const ChainPoint& p) { return std::sin(p.t) + p.x(); };
    const auto p = ChainPoint::xvt(0.3, 0.2, 0.9);
    const std::array<double, 2> mult{0.0, 0.0};
    CHECK(fd::chain_partial(f, p, 1, mult, 1e-5) ==
          doctest::Approx(fd::partial_time(f, p, 1e-5)).epsilon(1e-12));
}

TEST_CASE("velocity laplacian of the characteristic cosine") {
    const double g = 3.0 * kPi, t = 0.8, x = 0.1;
    const RealField f = [g](const ChainPoint& p) {
        return std::cos(g * (p.x() - p.v() * p.t));
    };
    const auto p = ChainPoint::xvt(x, 0.05, t);
    const double expected = -g * g * t * t * std::cos(g * (x - 0.05 * t));
    CHECK(fd::second(f, p, fd::Coord::V, 1e-4) ==
          doctest::Approx(expected).epsilon(1e-6));
}

TEST_CASE("convergence order on synthetic residuals") {
    const std::array<double, 4> hs{1e-2, 5e-3, 2.5e-3, 1.25e-3};
    CHECK(fd::convergence_order([](double h) { return 3.0 * h * h; }, hs) ==
          doctest::Approx(2.0).epsilon(0.05));
    CHECK(fd::convergence_order([](double h) { return 0.7 * h; }, hs) ==
          doctest::Approx(1.0).epsilon(0.05));
    CHECK_THROWS_AS(
        fd::convergence_order([](double h) { return h; }, std::array<double, 2>{1e-2, 5e-3}),
        std::domain_error);
}

TEST_CASE("region decomposition at t = 0 is the rectangle") {
    const auto r = region_decompose(1.0, 1.0, 0.0);
    CHECK(r.omega1.empty());
    CHECK(r.omega3.empty());
    CHECK(r.omega2.x_lo == doctest::Approx(-0.5));
    CHECK(r.omega2.x_hi == doctest::Approx(0.5));
    CHECK(r.omega2.v_lo(0.0) == doctest::Approx(-0.5));
    CHECK(r.omega2.v_hi(0.0) == doctest::Approx(0.5));
    CHECK(r.area() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("region decomposition central band at t = 1/2") {
    const auto r = region_decompose(1.0, 1.0, 0.5);
    CHECK(r.omega2.x_lo == doctest::Approx(-0.25));
    CHECK(r.omega2.x_hi == doctest::Approx(0.25));
    CHECK(r.area() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("region decomposition rejects bad inputs") {
    CHECK_THROWS_AS(region_decompose(0.0, 1.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(region_decompose(1.0, -1.0, 0.5), std::domain_error);
}

TEST_CASE("region area is conserved for random shapes and times") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> scale(0.2, 3.0), time(0.0, 5.0);
    for (int i = 0; i < 100; ++i) {
        const double dx = scale(rng), dv = scale(rng), t = time(rng);
        const auto r = region_decompose(dx, dv, t);
        CHECK(std::abs(r.area() - dx * dv) <= 1e-12 * dx * dv);
    }
}

TEST_CASE("region v-slice matches membership") {
    const auto r = region_decompose(1.0, 1.0, 1.7);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> xs(-1.4, 1.4), vs(-0.5, 0.5);
    for (int i = 0; i < 200; ++i) {
        const double x = xs(rng), v = vs(rng);
        const auto slice = r.v_slice(x);
        const bool inside = slice && v > slice->first && v < slice->second;
        const bool eta_inside = std::abs(x - v * r.t) < 0.5 && std::abs(v) < 0.5;
        CHECK(inside == eta_inside);
    }
}

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "displab/quadrature.hpp"
#include "displab/well.hpp"
#include "oracles.hpp"

using namespace displab;
namespace {
constexpr double kPi = std::numbers::pi;

WellParams unit_params(int n) {
    WellParams p;
    p.n = n;
    return p;
}

double random_support_x(std::mt19937_64& rng, const WellParams& p, double t) {
    std::uniform_real_distribution<double> u(-0.999, 0.999);
    return u(rng) * p.support_halfwidth(t);
}
}  // namespace

TEST_CASE("well energies at unit parameters") {
    const auto p0 = unit_params(0);
    CHECK(energy_even(p0) == doctest::Approx(kPi * kPi / 2.0).epsilon(1e-14));
    CHECK(energy_odd(p0, 1) == doctest::Approx(2.0 * kPi * kPi).epsilon(1e-14));
    const auto p1 = unit_params(1);
    CHECK(energy_even(p0) < energy_odd(p0, 1));
    CHECK(energy_odd(p0, 1) < energy_even(p1));
    CHECK_THROWS_AS(energy_odd(p0, 0), std::domain_error);
}

TEST_CASE("psi12 peak, walls, and cubic phase") {
    const auto p = unit_params(0);
    const auto peak = psi12(p, 0.0, 0.0, 0.0);
    CHECK(peak.real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(peak.imag() == 0.0);
    CHECK(std::abs(psi12(p, 0.5, 0.0, 0.0)) == 0.0);       // eta = eta0
    CHECK(std::abs(psi12(p, 0.2 + 0.5, 0.4, 1.25)) ==
          doctest::Approx(std::abs(psi12(p, 0.2, 0.0, 0.0))).epsilon(1e-12));
    const auto at_center = psi12(p, 0.0, 0.0, 1.0);
    CHECK(std::arg(at_center) ==
          doctest::Approx(-energy_even(p) / 3.0).epsilon(1e-12));
}

TEST_CASE("f12 is positive, transported, and peaked at the characteristic") {
    const auto p = unit_params(1);
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> vs(-0.499, 0.499), ts(0.0, 2.5), ds(0.0, 1.5);
    for (int i = 0; i < 300; ++i) {
        const double v = vs(rng), t = ts(rng);
        const double x = v * t + 0.998 * (vs(rng));  // keep eta inside the well
        const double val = f12(p, x, v, t);
        CHECK(val >= 0.0);
        const double shift = ds(rng);
        CHECK(f12(p, x + v * shift, v, t + shift) == doctest::Approx(val).epsilon(1e-9));
    }
    CHECK(f12(p, 0.3 * 0.8, 0.3, 0.8) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("f1 closed-form spot values") {
    const auto p0 = unit_params(0);
    CHECK(f1(p0, 0.0, 0.0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(f1(p0, 0.0, 2.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(f1(p0, 3.0, 2.0) == 0.0);
    // small-t middle branch converges to the initial profile
    for (double x : {-0.3, 0.05, 0.4})
        CHECK(f1(p0, x, 1e-8) == doctest::Approx(f1(p0, x, 0.0)).epsilon(1e-6));
}

TEST_CASE("f1 and f2 are the quadrature marginals of f12") {
    std::mt19937_64 rng(2024);
    for (int n : {0, 1}) {
        const auto p = unit_params(n);
        for (int branch = 0; branch < 3; ++branch) {
            std::uniform_real_distribution<double> ts =
                branch == 0 ? std::uniform_real_distribution<double>(0.0, 0.0)
                : branch == 1 ? std::uniform_real_distribution<double>(0.02, 0.98)
                              : std::uniform_real_distribution<double>(1.02, 3.0);
            for (int i = 0; i < 40; ++i) {
                const double t = ts(rng);
                const double x = random_support_x(rng, p, t);
                const double oracle = oracles::moment_quadrature(p, x, t, 0);
                CHECK(std::abs(f1(p, x, t) - oracle) < 1e-6);
            }
        }
        // x-integration of f12 at fixed v recovers the flat velocity marginal
        for (double v : {-0.3, 0.1, 0.45}) {
            const double t = 0.7;
            const double val = integrate_adaptive(
                [&](double x) { return f12(p, x, v, t); }, v * t - 0.5 * p.dx,
                v * t + 0.5 * p.dx, 1e-10);
            CHECK(val == doctest::Approx(f2(p, v)).epsilon(1e-8));
        }
    }
    const auto p = unit_params(0);
    CHECK(f2(p, 0.2) == doctest::Approx(1.0));
    CHECK(f2(p, 0.7) == 0.0);
    // stay clear of the rect edge: its value jumps there and adaptive Simpson
    // correctly refuses a jump sitting on a panel endpoint
    CHECK(integrate_adaptive([&](double v) { return f2(p, v); }, -0.5 + 1e-9, 0.5 - 1e-9,
                             1e-10) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("flux and second-moment flux match the quadrature oracle") {
    std::mt19937_64 rng(77);
    for (int n : {0, 1}) {
        const auto p = unit_params(n);
        for (int branch = 0; branch < 2; ++branch) {
            std::uniform_real_distribution<double> ts =
                branch == 0 ? std::uniform_real_distribution<double>(0.02, 0.98)
                            : std::uniform_real_distribution<double>(1.02, 3.0);
            for (int i = 0; i < 40; ++i) {
                const double t = ts(rng);
                const double x = random_support_x(rng, p, t);
                CHECK(std::abs(flux_v(p, x, t) - oracles::moment_quadrature(p, x, t, 1)) <
                      1e-6);
                CHECK(std::abs(flux_v2(p, x, t) - oracles::moment_quadrature(p, x, t, 2)) <
                      1e-6);
            }
        }
    }
}

TEST_CASE("branch seams agree where both forms apply") {
    const auto p = unit_params(0);
    const double t = 1.0;  // crossover time: both branch sets coincide
    for (double x : {-0.9, -0.4, 0.1, 0.6}) {
        CHECK(f1(p, x, t - 1e-9) == doctest::Approx(f1(p, x, t + 1e-9)).epsilon(1e-6));
        CHECK(flux_v(p, x, t - 1e-9) ==
              doctest::Approx(flux_v(p, x, t + 1e-9)).epsilon(1e-6));
    }
}

TEST_CASE("mean velocity: rest at t = 0, linear profile in the late band") {
    const auto p = unit_params(0);
    for (double x : {-0.4, 0.0, 0.3}) CHECK(mean_v(p, x, 0.0) == 0.0);
    CHECK_THROWS_AS(mean_v(p, 5.0, 0.3), UndefinedFieldError);
    for (double t : {1.5, 1.9, 2.5})
        for (double x : {-0.2, 0.1, 0.3}) {
            if (2.0 * std::abs(x) >= t * p.dv - p.dx) continue;
            CHECK(mean_v(p, x, t) == doctest::Approx(x / t).epsilon(1e-12));
        }
}

TEST_CASE("second moment and variance") {
    const auto p = unit_params(0);
    for (double x : {-0.3, 0.0, 0.25})
        CHECK(mean_v2(p, x, 0.0) == doctest::Approx(1.0 / 12.0).epsilon(1e-12));
    std::mt19937_64 rng(5150);
    std::uniform_real_distribution<double> ts(0.05, 2.5);
    for (int i = 0; i < 120; ++i) {
        const double t = ts(rng);
        const double x = random_support_x(rng, p, t);
        const double m1 = mean_v(p, x, t);
        CHECK(mean_v2(p, x, t) >= m1 * m1 - 1e-12);
    }
}

TEST_CASE("pressure: initial profile, positivity, quadrature oracle") {
    for (int n : {0, 1}) {
        const auto p = unit_params(n);
        const double g = p.g_n();
        for (double x : {-0.2, 0.05, 0.31}) {
            const double c = std::cos(g * x);
            CHECK(pressure(p, x, 0.0) ==
                  doctest::Approx(c * c / 6.0).epsilon(1e-12));
        }
        std::mt19937_64 rng(31 + n);
        std::uniform_real_distribution<double> ts(0.05, 2.5);
        for (int i = 0; i < 60; ++i) {
            const double t = ts(rng);
            const double x = random_support_x(rng, p, t);
            const double pr = pressure(p, x, t);
            CHECK(pr >= -1e-12);
            const double u = mean_v(p, x, t);
            const double oracle = integrate_adaptive(
                [&](double v) {
                    const double d = v - u;
                    return d * d * f12(p, x, v, t);
                },
                oracles::v_slice(p, x, t)->first, oracles::v_slice(p, x, t)->second, 1e-10);
            CHECK(std::abs(pr - oracle) < 1e-6);
        }
    }
}

TEST_CASE("second-rank quantum potential is t^2 E_n") {
    const auto p = unit_params(0);
    CHECK(quantum_potential_rank2(p, 0.0) == 0.0);
    CHECK(quantum_potential_rank2(p, 1.0) ==
          doctest::Approx(kPi * kPi / 2.0).epsilon(1e-14));
    // finite-difference |psi| curvature oracle at interior points
    const double h = 1e-4;
    for (double t : {0.6, 1.4})
        for (double v : {-0.2, 0.15}) {
            const double x = v * t + 0.1;
            const auto mod = [&](double vv) { return std::abs(psi12(p, x, vv, t)); };
            const double curv = (mod(v + h) - 2.0 * mod(v) + mod(v - h)) / (h * h);
            const double q = -0.5 * p.hbar2 * p.hbar2 / p.mass * curv / mod(v);
            CHECK(q == doctest::Approx(quantum_potential_rank2(p, t)).epsilon(1e-5));
        }
}

TEST_CASE("first-rank quantum potential") {
    const auto p = unit_params(0);
    const double g = p.g_n();
    // initial instant: |cos| curvature gives a constant
    CHECK(quantum_potential_rank1(p, 0.17, 0.0, 1e-4) ==
          doctest::Approx(0.5 * g * g).epsilon(1e-6));
    // flat central band at late times
    CHECK(std::abs(quantum_potential_rank1(p, 0.05, 2.2, 1e-4)) < 1e-8);
    // parity
    for (double x : {0.2, 0.6})
        CHECK(quantum_potential_rank1(p, x, 0.8, 1e-4) ==
              doctest::Approx(quantum_potential_rank1(p, -x, 0.8, 1e-4)).epsilon(1e-8));
    CHECK_THROWS_AS(quantum_potential_rank1(p, 4.0, 0.5, 1e-4), UndefinedFieldError);
}

TEST_CASE("first-rank phase: even symmetry and gradient consistency") {
    const auto p = unit_params(0);
    const double tol = 1e-11;
    for (double t : {0.4, 1.3}) {
        CHECK(phase1(p, 0.0, t, tol) == 0.0);
        for (double frac : {0.2, 0.55, 0.85}) {
            const double x = frac * p.support_halfwidth(t);
            // the phase is the 0-based primitive of the odd flow velocity,
            // hence even in x
            CHECK(phase1(p, x, t, tol) ==
                  doctest::Approx(phase1(p, -x, t, tol)).epsilon(1e-9));
            const double h = 1e-5;
            const double grad =
                (phase1(p, x + h, t, tol) - phase1(p, x - h, t, tol)) / (2.0 * h);
            CHECK(p.hbar1 / p.mass * grad ==
                  doctest::Approx(mean_v(p, x, t)).epsilon(1e-6));
        }
    }
    CHECK_THROWS_AS(phase1(p, 3.0, 0.4, tol), UndefinedFieldError);
}

TEST_CASE("Hamilton function and classical potential pipeline") {
    const auto p = unit_params(0);
    const double fd_h = 1e-4, tol = 1e-12;
    // motion-law consistency: -(1/m) dV/dx equals the convective derivative
    for (double t : {0.5, 1.5})
        for (double x : {0.12, 0.31}) {
            const double hx = 1e-3;
            const double lhs = -(potential_v1(p, x + hx, t, fd_h, tol) -
                                 potential_v1(p, x - hx, t, fd_h, tol)) /
                               (2.0 * hx) / p.mass;
            const double ht = 1e-4;
            const double dudt =
                (mean_v(p, x, t + ht) - mean_v(p, x, t - ht)) / (2.0 * ht);
            const double dudx =
                (mean_v(p, x + ht, t) - mean_v(p, x - ht, t)) / (2.0 * ht);
            const double rhs = dudt + mean_v(p, x, t) * dudx;
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-3));
        }
    // parity: H and V even in x
    for (double x : {0.2, 0.5}) {
        CHECK(hamilton1(p, x, 0.8, fd_h, tol) ==
              doctest::Approx(hamilton1(p, -x, 0.8, fd_h, tol)).epsilon(1e-9));
        CHECK(potential_v1(p, x, 0.8, fd_h, tol) ==
              doctest::Approx(potential_v1(p, -x, 0.8, fd_h, tol)).epsilon(1e-9));
    }
}

TEST_CASE("pressure-gradient force matches the potential gradient") {
    const auto p = unit_params(0);
    const double fd_h = 1e-4, tol = 1e-12;
    for (double t : {0.5, 1.5})
        for (double x : {0.12, 0.31}) {
            const double hx = 1e-3;
            const double dv1 = (potential_v1(p, x + hx, t, fd_h, tol) -
                                potential_v1(p, x - hx, t, fd_h, tol)) /
                               (2.0 * hx);
            CHECK(force_pressure(p, x, t, 1e-4) ==
                  doctest::Approx(-dv1).epsilon(1e-3));
            // oddness
            CHECK(force_pressure(p, -x, t, 1e-4) ==
                  doctest::Approx(-force_pressure(p, x, t, 1e-4)).epsilon(1e-6));
        }
}

TEST_CASE("second-rank Hamilton-Jacobi identity is analytic") {
    for (int n : {0, 1}) {
        const auto p = unit_params(n);
        const double e = energy_even(p);
        for (double t : {0.0, 0.3, 1.0, 2.4}) {
            const double dphi_dt = -e * t * t / p.hbar2;
            const double lhs = -p.hbar2 * dphi_dt;
            CHECK(std::abs(lhs - hamilton12(p, t)) <= 1e-12 * std::max(1.0, e * t * t));
        }
    }
}

TEST_CASE("momentum-space pair: rect profile and sinc image") {
    const auto p = unit_params(0);
    for (double v : {-0.3, 0.0, 0.42}) {
        const auto val = psi2(p, v, 0.7);
        CHECK(std::norm(val) == doctest::Approx(f2(p, v)).epsilon(1e-14));
    }
    CHECK(std::norm(psi2(p, 0.9, 0.7)) == 0.0);
    CHECK(std::abs(psi2_position(p, 0.0, 0.3)) ==
          doctest::Approx(p.mass * std::sqrt(p.dv / (2.0 * kPi * p.hbar1))).epsilon(1e-14));
    // numerical inverse Fourier image of the rect profile
    for (double x : {0.0, 0.8, 2.3, 5.1}) {
        const double re = integrate_adaptive(
            [&](double v) { return std::cos(p.mass * x * v / p.hbar1) / std::sqrt(p.dv); },
            -0.5 * p.dv, 0.5 * p.dv, 1e-10);
        const double im = integrate_adaptive(
            [&](double v) { return std::sin(p.mass * x * v / p.hbar1) / std::sqrt(p.dv); },
            -0.5 * p.dv, 0.5 * p.dv, 1e-10);
        const auto numeric =
            p.mass / std::sqrt(2.0 * kPi * p.hbar1) * std::complex<double>(re, im);
        CHECK(std::abs(numeric - psi2_position(p, x, 0.0)) < 1e-4);
    }
    // caller-supplied time phase is passed through
    const auto shifted = psi2(p, 0.1, 2.0, [](double t) { return 0.25 * t; });
    CHECK(std::arg(shifted) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("normalization over the decomposed region") {
    for (int n : {0, 1}) {
        const auto p = unit_params(n);
        for (double t : {0.0, 0.5, 1.0, 2.0})
            CHECK(std::abs(oracles::region_normalization(p, t, 1e-8) - 1.0) < 1e-6);
    }
}

TEST_CASE("odd eigenfunctions vanish at the walls and are odd") {
    const auto p = unit_params(0);
    CHECK(psi_eta_odd(p, 1, 0.5) == 0.0);
    CHECK(psi_eta_odd(p, 1, 0.2) == doctest::Approx(-psi_eta_odd(p, 1, -0.2)));
    CHECK(psi_eta_even(p, 0.3) == doctest::Approx(psi_eta_even(p, -0.3)));
}

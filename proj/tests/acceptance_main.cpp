// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exit code is the number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "displab/eigensolve.hpp"
#include "displab/figures.hpp"
#include "displab/oscillator.hpp"
#include "displab/quadrature.hpp"
#include "displab/verify.hpp"
#include "displab/well.hpp"
#include "../tests/oracles.hpp"

using namespace displab;

namespace {

constexpr double kPi = std::numbers::pi;

struct Harness {
    int failures = 0;

    void run(int id, const std::string& label, const std::function<std::string()>& body) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            detail = body();
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        if (!detail.empty() && detail[0] == '!') {
            ok = false;
            detail = detail.substr(1);
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] criterion %2d: %s — %s (%.2fs)\n", ok ? "PASS" : "FAIL", id,
                    label.c_str(), detail.c_str(), secs);
        if (!ok) ++failures;
    }
};

std::string fail(const std::string& msg) { return "!" + msg; }

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), pattern, a, b);
    return buf;
}

WellParams state(int n) {
    WellParams p;
    p.n = n;
    return p;
}

}  // namespace

int main() {
    Harness h;

    // 1. Normalization of the second-rank state over the decomposed region.
    h.run(1, "normalization of f12 over the phase region", [] {
        const auto start = std::chrono::steady_clock::now();
        double worst = 0.0;
        for (int n : {0, 1})
            for (double t : {0.0, 0.5, 1.0, 2.0})
                worst = std::max(worst,
                                 std::abs(oracles::region_normalization(state(n), t, 1e-8) -
                                          1.0));
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (worst > 1e-6) return fail(fmt("max |integral - 1| = %.2e > 1e-6", worst));
        if (secs > 5.0) return fail(fmt("runtime %.2fs exceeds 5s", secs));
        return fmt("max |integral - 1| = %.2e", worst);
    });

    // 2. Closed-form marginals against the v-quadrature of the state.
    h.run(2, "marginal and moment closed forms vs quadrature", [] {
        const auto start = std::chrono::steady_clock::now();
        std::mt19937_64 rng(20260810);
        double worst = 0.0;
        for (int n : {0, 1}) {
            const auto p = state(n);
            for (int branch = 0; branch < 3; ++branch) {
                for (int i = 0; i < 100; ++i) {
                    double t = 0.0;
                    if (branch == 1)
                        t = std::uniform_real_distribution<double>(0.02, 0.98)(rng);
                    else if (branch == 2)
                        t = std::uniform_real_distribution<double>(1.02, 3.0)(rng);
                    const double x =
                        std::uniform_real_distribution<double>(-0.999, 0.999)(rng) *
                        p.support_halfwidth(t);
                    worst = std::max(
                        worst, std::abs(f1(p, x, t) - oracles::moment_quadrature(p, x, t, 0)));
                    worst = std::max(worst, std::abs(flux_v(p, x, t) -
                                                     oracles::moment_quadrature(p, x, t, 1)));
                    worst = std::max(worst, std::abs(flux_v2(p, x, t) -
                                                     oracles::moment_quadrature(p, x, t, 2)));
                }
            }
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (worst > 1e-6) return fail(fmt("max abs deviation %.2e > 1e-6", worst));
        if (secs > 30.0) return fail(fmt("runtime %.1fs exceeds 30s", secs));
        return fmt("max abs deviation %.2e over 1800 points", worst);
    });

    // 3. The exact state solves its second-rank equation at stencil order.
    h.run(3, "Schrodinger residual of the exact state", [] {
        VerifyOptions o;
        o.estimate_order = true;
        double worst_linf = 0.0, worst_order = 10.0;
        for (int n : {0, 1}) {
            const auto F = make_well_fields(state(n), o);
            const auto r = residual_schrodinger_rank2(F, o);
            worst_linf = std::max(worst_linf, r.linf);
            if (r.order) worst_order = std::min(worst_order, *r.order);
        }
        if (worst_linf > 1e-4) return fail(fmt("relative Linf %.2e > 1e-4", worst_linf));
        if (worst_order < 1.9) return fail(fmt("order %.2f < 1.9", worst_order));
        return fmt("Linf = %.2e, order = %.2f", worst_linf, worst_order);
    });

    // 4. Continuity at both ranks.
    h.run(4, "continuity residuals (rank 2 and rank 1)", [] {
        VerifyOptions o;
        o.estimate_order = true;
        const auto F = make_well_fields(state(0), o);
        const auto F1 = make_well_fields(state(1), o);
        const auto r2a = residual_continuity_rank2(F, o);
        const auto r2b = residual_continuity_rank2(F1, o);
        const auto r1 = residual_continuity_rank1(F, o);
        const double linf2 = std::max(r2a.linf, r2b.linf);
        if (linf2 > 1e-8) return fail(fmt("rank-2 Linf %.2e > 1e-8", linf2));
        if (r1.linf > 1e-4) return fail(fmt("rank-1 Linf %.2e > 1e-4", r1.linf));
        if (!r1.order || *r1.order < 1.9)
            return fail(fmt("rank-1 order %.2f < 1.9", r1.order.value_or(0.0)));
        return fmt("rank-2 Linf %.2e, rank-1 order %.2f", linf2, *r1.order);
    });

    // 5. Second-rank Hamilton-Jacobi identity, analytic.
    h.run(5, "Hamilton-Jacobi rank 2 analytic identity", [] {
        double worst = 0.0;
        for (int n : {0, 1}) {
            const auto p = state(n);
            const double e = energy_even(p);
            for (double t : {0.0, 0.3, 0.7, 1.0, 1.6, 2.4}) {
                const double dphi_dt = -e * t * t / p.hbar2;
                for (double v : {-0.4, 0.0, 0.4}) {
                    const double lhs = -p.hbar2 * (dphi_dt + v * 0.0);
                    worst = std::max(worst, std::abs(lhs - hamilton12(p, t)) /
                                                std::max(1.0, e * t * t));
                }
            }
        }
        if (worst > 1e-12) return fail(fmt("max deviation %.2e > 1e-12", worst));
        return fmt("max deviation %.2e", worst);
    });

    // 6. Pressure law with mutation sensitivity.
    h.run(6, "pressure law and 1% mutation sensitivity", [] {
        const VerifyOptions o;
        auto F = make_well_fields(state(0), o);
        const auto clean = residual_pressure_gradient(F, o);
        if (clean.linf > 1e-3) return fail(fmt("relative Linf %.2e > 1e-3", clean.linf));
        const RealField p_clean = F.pressure1;
        const double bump = 0.01 * clean.scale;
        F.pressure1 = [p_clean, bump](const ChainPoint& q) {
            return p_clean(q) + bump * q.x();
        };
        const auto dirty = residual_pressure_gradient(F, o);
        if (dirty.linf < 10.0 * clean.linf)
            return fail(fmt("mutation gain %.1fx < 10x", dirty.linf / clean.linf));
        return fmt("Linf %.2e, mutation gain %.0fx", clean.linf, dirty.linf / clean.linf);
    });

    // 7. Energy conservation law with the quadrature third moment.
    h.run(7, "energy law with quadrature third moment", [] {
        const VerifyOptions o;
        double worst = 0.0;
        for (int n : {0, 1}) {
            const auto F = make_well_fields(state(n), o);
            worst = std::max(worst, residual_energy_law_rank1(F, o).linf);
        }
        if (worst > 1e-3) return fail(fmt("scaled residual %.2e > 1e-3", worst));
        return fmt("scaled residual %.2e", worst);
    });

    // 8. Free-well spectrum and parity alternation.
    h.run(8, "eigensolver reproduces the free-well spectrum", [] {
        const auto start = std::chrono::steady_clock::now();
        const auto res = solve_spectrum(PotentialSpec::free_well(), 0.5, 1.0, 1.0, 6, 2000);
        const double e0 = kPi * kPi / 2.0;   // hbar2^2 pi^2 / (8 m eta0^2)
        const double e1 = 2.0 * kPi * kPi;   // hbar2^2 pi^2 / (2 m eta0^2)
        const double err0 = std::abs(res.eigenvalues[0] - e0) / e0;
        const double err1 = std::abs(res.eigenvalues[1] - e1) / e1;
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (err0 > 1e-4 || err1 > 1e-4)
            return fail(fmt("relative errors %.2e, %.2e exceed 1e-4", err0, err1));
        for (int j = 0; j < 6; ++j)
            if (res.parity[j] != (j % 2 == 0 ? Parity::Even : Parity::Odd))
                return fail("parity alternation broken at state " + std::to_string(j));
        if (secs > 2.0) return fail(fmt("runtime %.2fs exceeds 2s", secs));
        return fmt("errors %.2e / %.2e, parity alternates", err0, err1);
    });

    // 9. Oscillator chain closure, exact uncertainty product, sign structure.
    h.run(9, "oscillator chain marginals, ladder, sign structure", [] {
        OscParams p;
        for (int s : {0, 1, 2}) {
            p.s = s;
            const double box_v = 8.0 * p.sigma2();
            for (double xr : {-1.5, 0.0, 0.8}) {
                const double x = xr * p.sigma1();
                const double marg = integrate_adaptive(
                    [&](double v) { return f12_oscillator(p, x, v); }, -box_v, box_v, 1e-9);
                if (std::abs(marg - f1_oscillator(p, x)) > 1e-6)
                    return fail(fmt("marginal error %.2e at s=%g",
                                    std::abs(marg - f1_oscillator(p, x)), double(s)));
            }
            const double box_x = 8.0 * p.sigma1();
            const double mass = integrate_adaptive(
                [&](double x) { return f1_oscillator(p, x); }, -box_x, box_x, 1e-9);
            if (std::abs(mass - 1.0) > 1e-6)
                return fail(fmt("mass closure error %.2e at s=%g", std::abs(mass - 1.0),
                                double(s)));
        }
        if (std::abs(p.sigma1() * p.sigma2() - p.hbar / (2.0 * p.mass)) > 1e-15)
            return fail("sigma1 sigma2 != hbar/2m");
        p.s = 0;
        double min0 = 0.0;
        OscParams p1 = p;
        p1.s = 1;
        double min1 = 0.0;
        for (int i = 0; i <= 100; ++i)
            for (int j = 0; j <= 100; ++j) {
                const double x = (-5.0 + 0.1 * i) * p.sigma1();
                const double v = (-5.0 + 0.1 * j) * p.sigma2();
                min0 = std::min(min0, f12_oscillator(p, x, v));
                min1 = std::min(min1, f12_oscillator(p1, x, v));
            }
        if (min0 < 0.0) return fail("ground state attains a negative value");
        if (min1 >= 0.0) return fail("first excited state is nowhere negative");
        return std::string("closure <= 1e-6, exact ladder, signs as required");
    });

    // 10. Gaussian example: modulus identity and inferred potential shape.
    h.run(10, "Gaussian packet potential identification", [] {
        OscParams p;
        const VerifyOptions o;
        const double e12 = 0.5 * p.hbar2_effective() * p.omega;
        double worst_match = 0.0;
        for (double xr : {-1.2, 0.3, 1.7})
            for (double vr : {-1.4, 0.0, 0.9}) {
                const double x = xr * p.sigma1(), v = vr * p.sigma2();
                worst_match =
                    std::max(worst_match, std::abs(std::norm(gauss_psi12(p, x, v, 0.8, e12)) -
                                                   f12_oscillator(p, x, v)));
            }
        if (worst_match > 1e-12)
            return fail(fmt("|psi|^2 vs f12 deviation %.2e > 1e-12", worst_match));
        const auto reports = run_suite("gaussian", WellParams{}, p, o);
        for (const auto& r : reports)
            if (r.equation == "gaussian_potential_coefficients" && r.linf > 1e-4)
                return fail(fmt("quadratic coefficients off by %.2e > 1e-4", r.linf));
        return fmt("modulus match %.2e, coefficients within 1e-4", worst_match);
    });

    // 11. Complex-action balance at ranks 1 and 2.
    h.run(11, "complex action real/imaginary balance", [] {
        const VerifyOptions o;
        const auto F = make_well_fields(state(0), o);
        double worst = 0.0;
        for (const auto& r : residual_complex_action(F, o)) worst = std::max(worst, r.linf);
        if (worst > 1e-3) return fail(fmt("relative Linf %.2e > 1e-3", worst));
        return fmt("relative Linf %.2e", worst);
    });

    // 12. Figure data reproduction and shape checks.
    h.run(12, "figure data: late-time decay, linear flow, pressure amplitude", [] {
        const auto p0 = state(0);
        // central density decays monotonically toward 1/(t dv) for t >= dx/dv
        double prev = 1e300;
        for (double t : figure_spec("fig4").times) {
            if (t < p0.t_star()) continue;
            const double val = f1(p0, 0.0, t);
            if (std::abs(val - 1.0 / (t * p0.dv)) > 1e-12)
                return fail(fmt("central density %.6f != 1/(t dv) at t=%g", val, t));
            if (val > prev + 1e-12) return fail(fmt("central density rising at t=%g", t, 0));
            prev = val;
        }
        // mean velocity tends to x/t in the central band at t = 1.9
        const double t_late = 1.9;
        const auto series =
            well_series(p0, WellQuantity::MeanV, t_late, 256, 1e-4, 1e-10);
        double worst_rel = 0.0;
        for (std::size_t i = 0; i < series.x.size(); ++i) {
            const double x = series.x[i];
            if (2.0 * std::abs(x) >= t_late * p0.dv - p0.dx || std::abs(x) < 0.05) continue;
            worst_rel = std::max(worst_rel,
                                 std::abs(series.value[i] - x / t_late) /
                                     std::abs(x / t_late));
        }
        if (worst_rel > 0.01)
            return fail(fmt("central-band deviation from x/t is %.2e > 1%%", worst_rel));
        // pressure amplitude at the center is non-increasing in t for n = 0
        prev = 1e300;
        for (double t : figure_spec("fig11").times) {
            const double val = pressure(p0, 0.0, t);
            if (val > prev + 1e-12) return fail(fmt("pressure amplitude rising at t=%g", t, 0));
            prev = val;
        }
        return fmt("flow deviation %.2e, monotone profiles", worst_rel);
    });

    if (h.failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", h.failures);
    return h.failures;
}

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "displab/quadrature.hpp"
#include "displab/verify.hpp"

namespace displab {

namespace {

constexpr double kBig = std::numeric_limits<double>::max();

/// Quantum potential from the modulus of a complex field: (alpha/beta)
/// |Psi|''/|Psi| with the second derivative in the selected coordinate taken
/// by central differences on the modulus.
RealField modulus_curvature_potential(ComplexField psi, double alpha_over_beta, int coord,
                                      double h, double floor) {
    return [psi = std::move(psi), alpha_over_beta, coord, h, floor](const ChainPoint& p) {
        ChainPoint lo = p, hi = p;
        lo.xi[coord] -= h;
        hi.xi[coord] += h;
        const double c = std::abs(psi(p));
        const double l = std::abs(psi(lo));
        const double r = std::abs(psi(hi));
        if (c < floor || l < floor || r < floor)
            throw UndefinedFieldError("quantum potential: |psi| below threshold on stencil");
        return alpha_over_beta * (r - 2.0 * c + l) / (h * h) / c;
    };
}

}  // namespace

void ChainFields::check_consistency() const {
    const double t_probe = 0.5;
    const auto check_pair = [](double f_val, double mag2, double tol, const char* what) {
        if (std::abs(f_val - mag2) > tol * std::max({1.0, std::abs(f_val), mag2}))
            throw std::logic_error(std::string("ChainFields: |psi|^2 != f for ") + what);
    };
    if (f1 && psi1 && x_range) {
        const auto [lo, hi] = x_range(t_probe);
        for (int i = 0; i < 17; ++i) {
            const double x = lo + (hi - lo) * (i + 0.5) / 17.0;
            const auto p = ChainPoint::xt(x, t_probe);
            check_pair(f1(p), std::norm(psi1(p)), 1e-8, "rank 1");
        }
    }
    if (f12 && psi12 && x_range) {
        const auto [lo, hi] = x_range(t_probe);
        const auto [vlo, vhi] = v_range;
        for (int i = 0; i < 17; ++i) {
            const double x = lo + (hi - lo) * (i + 0.5) / 17.0;
            const double v = vlo + (vhi - vlo) * (i + 0.5) / 17.0;
            const auto p = ChainPoint::xvt(x, v, t_probe);
            check_pair(f12(p), std::norm(psi12(p)), 1e-8, "rank 2");
        }
    }
}

ChainFields make_well_fields(const WellParams& p, const VerifyOptions& opts) {
    p.check();
    ChainFields F;
    F.c1 = ChainConstants(p.hbar1, p.mass, 0.0, 1);
    F.c2 = ChainConstants(p.hbar2, p.mass, 0.0, 2);

    const double quad_tol = opts.quad_tol;
    const double fd_h = opts.fd_step;

    F.f1 = [p](const ChainPoint& q) { return f1(p, q.x(), q.t); };
    F.flux1 = [p](const ChainPoint& q) { return flux_v(p, q.x(), q.t); };
    F.mean_v = [p](const ChainPoint& q) { return mean_v(p, q.x(), q.t); };
    F.mean_v2 = [p](const ChainPoint& q) { return mean_v2(p, q.x(), q.t); };
    F.mean_vdot1 = [](const ChainPoint&) { return 0.0; };
    F.pressure1 = [p](const ChainPoint& q) { return pressure(p, q.x(), q.t); };

    F.m3 = [p, quad_tol](const ChainPoint& q) {
        const double x = q.x();
        const double t = q.t;
        double vlo = -0.5 * p.dv, vhi = 0.5 * p.dv;
        if (t > 0.0) {
            vlo = std::max(vlo, (x - 0.5 * p.dx) / t);
            vhi = std::min(vhi, (x + 0.5 * p.dx) / t);
        } else if (std::abs(x) >= 0.5 * p.dx) {
            throw UndefinedFieldError("m3: outside the support");
        }
        if (!(vlo < vhi)) throw UndefinedFieldError("m3: outside the support");
        const double u = mean_v(p, x, t);
        return integrate_adaptive(
            [&](double v) {
                const double d = v - u;
                return d * d * d * f12(p, x, v, t);
            },
            vlo, vhi, std::max(quad_tol, 1e-12));
    };

    F.phi1 = [p, quad_tol](const ChainPoint& q) { return phase1(p, q.x(), q.t, quad_tol); };
    F.hamilton1 = [p, fd_h, quad_tol](const ChainPoint& q) {
        return hamilton1(p, q.x(), q.t, fd_h, quad_tol);
    };
    F.v1 = [p, fd_h, quad_tol](const ChainPoint& q) {
        return potential_v1(p, q.x(), q.t, fd_h, quad_tol);
    };
    F.q1 = [p, fd_h](const ChainPoint& q) {
        return quantum_potential_rank1(p, q.x(), q.t, fd_h);
    };
    F.psi1 = [p, quad_tol](const ChainPoint& q) -> std::complex<double> {
        if (!in_support(p, q.x(), q.t)) return {0.0, 0.0};
        const double d = f1(p, q.x(), q.t);
        if (!(d > 0.0)) return {0.0, 0.0};
        return std::polar(std::sqrt(d), phase1(p, q.x(), q.t, quad_tol));
    };
    F.psi1_floor = 0.05 * std::sqrt(2.0 / p.dx);

    F.f12 = [p](const ChainPoint& q) { return f12(p, q.x(), q.v(), q.t); };
    F.psi12 = [p](const ChainPoint& q) { return psi12(p, q.x(), q.v(), q.t); };
    F.phi12 = [p](const ChainPoint& q) { return phase12(p, q.t); };
    F.mean_vdot = [](const ChainPoint&) { return 0.0; };
    F.u12 = [](const ChainPoint&) { return 0.0; };  // zero inside the walls
    F.psi12_floor = 0.05 * std::sqrt(2.0 / (p.dx * p.dv));
    // wider stencil: the curvature ratio is divided by |psi|, which amplifies
    // rounding near the nodes
    F.q12 = modulus_curvature_potential(F.psi12, F.c2.alpha() / F.c2.beta(), 1,
                                        10.0 * fd_h, F.psi12_floor);
    double t_max = 0.0;
    for (double t : opts.times) t_max = std::max(t_max, t);
    F.psi12_phase_rate = energy_even(p) * t_max * t_max / p.hbar2;

    F.x_range = [p](double t) {
        const double w = p.support_halfwidth(t);
        return std::pair{-w, w};
    };
    F.v_range = {-0.5 * p.dv, 0.5 * p.dv};
    F.seam_distance = [p](double x, double t) {
        double d = p.support_halfwidth(t) - std::abs(x);
        for (double k : branch_kinks_x(p, t)) d = std::min(d, std::abs(x - k));
        return d;
    };
    F.support2_distance = [p](double x, double v, double t) {
        const double eta = x - v * t;
        const double d_eta = (0.5 * p.dx - std::abs(eta)) / (1.0 + t + std::abs(v));
        const double d_v = 0.5 * p.dv - std::abs(v);
        return std::min(d_eta, d_v);
    };

    F.check_consistency();
    return F;
}

ChainFields make_gaussian_fields(const OscParams& params, double e12,
                                 const VerifyOptions& opts) {
    params.check();
    OscParams p = params;
    p.s = 0;  // the packet is the ground Gaussian
    ChainFields F;
    F.c1 = ChainConstants(p.hbar, p.mass, 0.0, 1);
    F.c2 = ChainConstants(p.hbar2_effective(), p.mass, 0.0, 2);

    const double w = p.omega;
    const double h2 = p.hbar2_effective();
    const double e0 = 0.5 * p.hbar * w;
    const double fd_h = opts.fd_step;

    F.f12 = [p](const ChainPoint& q) { return f12_oscillator(p, q.x(), q.v()); };
    F.psi12 = [p, e12](const ChainPoint& q) {
        return gauss_psi12(p, q.x(), q.v(), q.t, e12);
    };
    F.phi12 = [p, e12, h2, w](const ChainPoint& q) {
        return -(p.mass * w * w * q.x() * q.v() + e12 * q.t) / h2;
    };
    F.mean_vdot = [w](const ChainPoint& q) { return -w * w * q.x(); };
    F.u12 = [p, e12](const ChainPoint& q) { return gauss_potential(p, q.x(), q.v(), e12); };
    F.psi12_floor = 0.05 * std::sqrt(p.mass / (std::numbers::pi * p.hbar));
    F.q12 = modulus_curvature_potential(F.psi12, F.c2.alpha() / F.c2.beta(), 1,
                                        10.0 * fd_h, F.psi12_floor);
    F.psi12_phase_rate =
        (std::abs(e12) + 6.25 * p.mass * w * w * p.sigma1() * p.sigma2()) / h2;

    F.f1 = [p](const ChainPoint& q) { return f1_oscillator(p, q.x()); };
    F.flux1 = [](const ChainPoint&) { return 0.0; };
    F.mean_v = [](const ChainPoint&) { return 0.0; };
    F.mean_vdot1 = [w](const ChainPoint& q) { return -w * w * q.x(); };
    F.pressure1 = [p](const ChainPoint& q) {
        const double s2 = p.sigma2();
        return f1_oscillator(p, q.x()) * s2 * s2;
    };
    F.m3 = [](const ChainPoint&) { return 0.0; };  // symmetric velocity profile
    F.phi1 = [e0, p](const ChainPoint& q) { return -e0 * q.t / p.hbar; };
    F.hamilton1 = [e0](const ChainPoint&) { return e0; };
    F.v1 = [e0](const ChainPoint&) { return e0; };
    F.psi1 = [p, e0](const ChainPoint& q) -> std::complex<double> {
        const double d = f1_oscillator(p, q.x());
        return std::polar(std::sqrt(d), -e0 * q.t / p.hbar);
    };
    F.psi1_floor = 0.05 * std::sqrt(f1_oscillator(p, 0.0));
    F.q1 = [p, fd_h](const ChainPoint& q) {
        const double c = f1_oscillator(p, q.x());
        const double l = f1_oscillator(p, q.x() - fd_h);
        const double r = f1_oscillator(p, q.x() + fd_h);
        if (!(c > 0.0) || !(l > 0.0) || !(r > 0.0))
            throw UndefinedFieldError("q1: marginal density vanishes");
        const double curv = (std::sqrt(r) - 2.0 * std::sqrt(c) + std::sqrt(l)) / (fd_h * fd_h);
        return -p.hbar * p.hbar / (2.0 * p.mass) * curv / std::sqrt(c);
    };
    F.energy_rhs = [](const ChainPoint&) { return 0.0; };  // no net flux, x-odd source

    const double s1 = p.sigma1();
    const double s2 = p.sigma2();
    F.x_range = [s1](double) { return std::pair{-2.5 * s1, 2.5 * s1}; };
    F.v_range = {-2.5 * s2, 2.5 * s2};
    F.seam_distance = [](double, double) { return kBig; };
    F.support2_distance = [](double, double, double) { return kBig; };

    F.check_consistency();
    return F;
}

ChainFields make_oscillator_fields(const OscParams& p, const VerifyOptions& opts) {
    p.check();
    ChainFields F;
    F.c1 = ChainConstants(p.hbar, p.mass, 0.0, 1);
    F.c2 = ChainConstants(p.hbar2_effective(), p.mass, 0.0, 2);

    const double es = p.hbar * p.omega * (p.s + 0.5);
    const double fd_h = opts.fd_step;

    F.f1 = [p](const ChainPoint& q) { return f1_oscillator(p, q.x()); };
    F.flux1 = [](const ChainPoint&) { return 0.0; };
    F.mean_v = [](const ChainPoint&) { return 0.0; };
    F.phi1 = [es, p](const ChainPoint& q) { return -es * q.t / p.hbar; };
    F.hamilton1 = [es](const ChainPoint&) { return es; };
    F.v1 = [es](const ChainPoint&) { return es; };
    F.psi1 = [p, es](const ChainPoint& q) -> std::complex<double> {
        const double d = f1_oscillator(p, q.x());
        return std::polar(std::sqrt(d), -es * q.t / p.hbar);
    };
    double f1_max = 0.0;
    for (int i = 0; i <= 100; ++i)
        f1_max = std::max(f1_max, f1_oscillator(p, -3.0 + 0.06 * i));
    F.psi1_floor = 0.05 * std::sqrt(f1_max);
    F.q1 = [p, fd_h](const ChainPoint& q) {
        const double c = f1_oscillator(p, q.x());
        const double l = f1_oscillator(p, q.x() - fd_h);
        const double r = f1_oscillator(p, q.x() + fd_h);
        if (!(c > 0.0) || !(l > 0.0) || !(r > 0.0))
            throw UndefinedFieldError("q1: marginal density vanishes");
        const double curv = (std::sqrt(r) - 2.0 * std::sqrt(c) + std::sqrt(l)) / (fd_h * fd_h);
        return -p.hbar * p.hbar / (2.0 * p.mass) * curv / std::sqrt(c);
    };

    const double s1 = p.sigma1();
    const double s2 = p.sigma2();
    F.x_range = [s1](double) { return std::pair{-2.5 * s1, 2.5 * s1}; };
    F.v_range = {-2.5 * s2, 2.5 * s2};
    F.seam_distance = [](double, double) { return kBig; };
    F.support2_distance = [](double, double, double) { return kBig; };

    F.check_consistency();
    return F;
}

}  // namespace displab

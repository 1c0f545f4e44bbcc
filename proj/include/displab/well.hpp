#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "displab/field.hpp"

namespace displab {

/// Parameters of the time-sheared infinite-well system. Natural units by
/// default (dx = dv = hbar2 = mass = 1).
struct WellParams {
    double dx = 1.0;     // spatial extent of the phase region
    double dv = 1.0;     // velocity extent
    double hbar2 = 1.0;  // second-order action constant
    double mass = 1.0;
    int n = 0;           // even-state index
    double hbar1 = 1.0;  // first-order action constant (first-rank fields)

    double eta0() const { return 0.5 * dx; }
    /// Wave number of state n: pi (2n+1) / dx.
    double g_n() const;
    /// Even-state energy E_n.
    double energy() const;
    /// tau_n(t) = t * g_n * dv.
    double tau(double t) const { return t * g_n() * dv; }
    /// Branch-change time dx/dv.
    double t_star() const { return dx / dv; }
    /// Half-width of the x support at time t.
    double support_halfwidth(double t) const { return 0.5 * (dx + t * dv); }

    void check() const;
};

/// Even-state energy E_n = hbar2^2 pi^2 (2n+1)^2 / (8 m eta0^2).
double energy_even(const WellParams& p);
/// Odd-state energy E_k = hbar2^2 pi^2 k^2 / (2 m eta0^2), k >= 1.
double energy_odd(const WellParams& p, int k);

/// Characteristic-coordinate eigenfunctions of the free well, normalized to
/// the 2D phase-region measure.
double psi_eta_even(const WellParams& p, double eta);
double psi_eta_odd(const WellParams& p, int k, double eta);

/// Second-rank wave function: sqrt(2/(dx dv)) cos(g_n (x - v t)) times the
/// cubic-in-time phase, zero outside |x - v t| < dx/2.
std::complex<double> psi12(const WellParams& p, double x, double v, double t);
/// Time-only phase of psi12: -E_n t^3 / (3 hbar2).
double phase12(const WellParams& p, double t);
/// Second-rank distribution |psi12|^2.
double f12(const WellParams& p, double x, double v, double t);

/// Coordinate marginal (three-branch piecewise closed form).
double f1(const WellParams& p, double x, double t);
/// Velocity marginal: rect(v/dv)/dv, time independent.
double f2(const WellParams& p, double v);

/// Probability flux f1 <v> (piecewise closed form).
double flux_v(const WellParams& p, double x, double t);
/// Mean velocity <v> = flux / f1. Throws UndefinedFieldError where f1 = 0.
double mean_v(const WellParams& p, double x, double t);

/// Second-moment flux f1 <v^2> (piecewise closed form).
double flux_v2(const WellParams& p, double x, double t);
/// <v^2> = flux2 / f1. Throws UndefinedFieldError where f1 = 0.
double mean_v2(const WellParams& p, double x, double t);

/// Pressure P = f1 (<v^2> - <v>^2). Throws where f1 = 0.
double pressure(const WellParams& p, double x, double t);

/// Second-rank quantum potential, constant in (x, v): t^2 E_n.
double quantum_potential_rank2(const WellParams& p, double t);

/// First-rank quantum potential -(hbar1^2/2m) (sqrt f1)'' / sqrt f1 by central
/// differences on the closed-form marginal.
double quantum_potential_rank1(const WellParams& p, double x, double t, double h);

/// Second-rank Hamilton function -(1/beta2) d_1 phi12 evaluated analytically:
/// E_n t^2 (the x-gradient of the time-only phase contributes an exact zero).
double hamilton12(const WellParams& p, double t);

/// First-rank phase: (m/hbar1) * integral of <v> from 0 to x, adaptive
/// quadrature split at the branch seams. Throws outside the support.
double phase1(const WellParams& p, double x, double t, double quad_tol);

/// First-rank Hamilton function -hbar1 * dphi1/dt by central differences.
double hamilton1(const WellParams& p, double x, double t, double fd_h, double quad_tol);

/// Classical potential V1 = H1 - (m/2) <v>^2.
double potential_v1(const WellParams& p, double x, double t, double fd_h, double quad_tol);

/// Pressure-gradient force -(m/f1) dP/dx by central differences.
double force_pressure(const WellParams& p, double x, double t, double h);

/// Second-rank momentum-space wave function (rect profile) with caller-chosen
/// time-only phase (defaults to zero).
std::complex<double> psi2(const WellParams& p, double v, double t,
                          const std::function<double(double)>& phi2 = {});
/// Its position-space inverse Fourier image (sinc profile).
std::complex<double> psi2_position(const WellParams& p, double x, double t,
                                   const std::function<double(double)>& phi2 = {});

/// True strictly inside the x support at time t.
bool in_support(const WellParams& p, double x, double t);

/// Interior branch-seam abscissae at time t (quadrature split points and
/// finite-difference exclusion zones).
std::vector<double> branch_kinks_x(const WellParams& p, double t);

}  // namespace displab

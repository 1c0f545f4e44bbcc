#pragma once

#include <complex>
#include <vector>

namespace displab {

/// Harmonic-oscillator chain parameters. sigma1 sigma2 = hbar/2m and
/// sigma2/sigma1 = omega hold exactly; hbar2 defaults to the hbar omega^2
/// ladder value but may be overridden.
struct OscParams {
    double mass = 1.0;
    double omega = 1.0;
    double hbar = 1.0;
    int s = 0;              // state index
    double hbar2 = 0.0;     // 0 means "use the ladder value hbar * omega^2"

    double sigma1() const;
    double sigma2() const { return omega * sigma1(); }
    double sigma_n(int n) const;  // sigma1 * omega^{n-1}
    double hbar_n(int n) const;   // hbar * omega^{2(n-1)}
    double hbar2_effective() const { return hbar2 > 0.0 ? hbar2 : hbar_n(2); }

    void check() const;
};

/// Phase-space state of the oscillator chain:
/// ((-1)^s / 2 pi sigma1 sigma2) exp(-(v^2+w^2 x^2)/2 sigma2^2) L_s((v^2+w^2 x^2)/sigma2^2).
double f12_oscillator(const OscParams& p, double x, double v);

/// Coordinate marginal built from the squared Hermite polynomial.
double f1_oscillator(const OscParams& p, double x);

/// Rank-2 Gaussian wave function with phase -(m w^2 x v / hbar2 + E12 t / hbar2).
std::complex<double> gauss_psi12(const OscParams& p, double x, double v, double t, double e12);

/// Potential under which gauss_psi12 solves the second-rank equation:
/// E12 - hbar2^2/(2 hbar w) + m w^2 (1 + hbar2^2/(2 hbar^2 w^4)) v^2 - m w^4 x^2 / 2.
double gauss_potential(const OscParams& p, double x, double v, double e12);

struct LadderRung {
    int n;
    double sigma_n;
    double sigma_np1;
    double hbar_n;
};

/// Uncertainty ladder sigma_n sigma_{n+1} = hbar_n / 2m for n = 1..n_max.
std::vector<LadderRung> uncertainty_ladder(const OscParams& p, int n_max);

}  // namespace displab

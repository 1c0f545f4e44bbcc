#include "displab/oscillator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "displab/special.hpp"

namespace displab {

namespace {
constexpr double kPi = std::numbers::pi;

double factorial(int s) {
    double r = 1.0;
    for (int k = 2; k <= s; ++k) r *= k;
    return r;
}
}  // namespace

double OscParams::sigma1() const { return std::sqrt(hbar / (2.0 * mass * omega)); }

double OscParams::sigma_n(int n) const {
    if (n < 1) throw std::domain_error("OscParams: sigma order must be >= 1");
    return sigma1() * std::pow(omega, n - 1);
}

double OscParams::hbar_n(int n) const {
    if (n < 1) throw std::domain_error("OscParams: hbar order must be >= 1");
    return hbar * std::pow(omega, 2 * (n - 1));
}

void OscParams::check() const {
    if (!(mass > 0.0) || !(omega > 0.0) || !(hbar > 0.0))
        throw std::domain_error("OscParams: mass, omega, hbar must be positive");
    if (s < 0) throw std::domain_error("OscParams: state index must be >= 0");
    if (hbar2 < 0.0) throw std::domain_error("OscParams: hbar2 override must be positive");
}

double f12_oscillator(const OscParams& p, double x, double v) {
    const double s2 = p.sigma2();
    const double r2 = (v * v + p.omega * p.omega * x * x) / (s2 * s2);
    const double sign = (p.s % 2 == 0) ? 1.0 : -1.0;
    return sign / (2.0 * kPi * p.sigma1() * s2) * std::exp(-0.5 * r2) *
           special::laguerre(p.s, r2);
}

double f1_oscillator(const OscParams& p, double x) {
    const double s1 = p.sigma1();
    const double y = x / (s1 * std::sqrt(2.0));
    const double h = special::hermite(p.s, y);
    return 1.0 / (std::pow(2.0, p.s) * factorial(p.s) * std::sqrt(2.0 * kPi) * s1) *
           std::exp(-x * x / (2.0 * s1 * s1)) * h * h;
}

std::complex<double> gauss_psi12(const OscParams& p, double x, double v, double t, double e12) {
    const double h2 = p.hbar2_effective();
    const double w = p.omega;
    const double amp = std::sqrt(p.mass / (kPi * p.hbar)) *
                       std::exp(-(0.5 * p.mass * v * v + 0.5 * p.mass * w * w * x * x) /
                                (p.hbar * w));
    const double phase = -(p.mass * w * w * x * v / h2 + e12 * t / h2);
    return std::polar(1.0, phase) * amp;
}

double gauss_potential(const OscParams& p, double x, double v, double e12) {
    const double h2 = p.hbar2_effective();
    const double w = p.omega;
    const double w4 = w * w * w * w;
    return e12 - h2 * h2 / (2.0 * p.hbar * w) +
           p.mass * w * w * (1.0 + h2 * h2 / (2.0 * p.hbar * p.hbar * w4)) * v * v -
           0.5 * p.mass * w4 * x * x;
}

std::vector<LadderRung> uncertainty_ladder(const OscParams& p, int n_max) {
    if (n_max < 1) throw std::domain_error("uncertainty_ladder: n_max must be >= 1");
    std::vector<LadderRung> rungs;
    rungs.reserve(n_max);
    for (int n = 1; n <= n_max; ++n)
        rungs.push_back({n, p.sigma_n(n), p.sigma_n(n + 1), p.hbar_n(n)});
    return rungs;
}

}  // namespace displab

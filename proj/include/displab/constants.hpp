#pragma once

#include <stdexcept>

namespace displab {

/// Constant family of one kinematic order: alpha_n = -hbar_n/(2m),
/// beta_n = 1/hbar_n, gamma_n = -q/m.
struct ChainConstants {
    double hbar_n = 1.0;
    double mass = 1.0;
    double charge = 0.0;
    int order = 1;

    ChainConstants() = default;
    ChainConstants(double hbar_n_, double mass_, double charge_ = 0.0, int order_ = 1)
        : hbar_n(hbar_n_), mass(mass_), charge(charge_), order(order_) {
        if (!(hbar_n > 0.0)) throw std::domain_error("ChainConstants: hbar_n must be positive");
        if (!(mass > 0.0)) throw std::domain_error("ChainConstants: mass must be positive");
    }

    double alpha() const { return -hbar_n / (2.0 * mass); }
    double beta() const { return 1.0 / hbar_n; }
    double gamma() const { return -charge / mass; }

    /// hbar_n = hbar * omega^{2(n-1)} ladder.
    static ChainConstants from_ladder(double hbar, double omega, int n,
                                      double mass, double charge = 0.0) {
        if (n < 1) throw std::domain_error("ChainConstants: ladder order must be >= 1");
        double h = hbar;
        for (int k = 1; k < n; ++k) h *= omega * omega;
        return ChainConstants(h, mass, charge, n);
    }
};

}  // namespace displab

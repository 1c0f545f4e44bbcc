#pragma once

#include <array>
#include <complex>
#include <functional>

namespace displab {

/// Evaluation point in the generalized phase space restricted to 1D:
/// time plus kinematic values of orders 1..3 (position, velocity, acceleration).
struct ChainPoint {
    double t = 0.0;
    std::array<double, 3> xi{0.0, 0.0, 0.0};

    double x() const { return xi[0]; }
    double v() const { return xi[1]; }
    double vdot() const { return xi[2]; }

    static ChainPoint at_t(double t) { return {t, {0.0, 0.0, 0.0}}; }
    static ChainPoint xt(double x, double t) { return {t, {x, 0.0, 0.0}}; }
    static ChainPoint xvt(double x, double v, double t) { return {t, {x, v, 0.0}}; }
};

using RealField = std::function<double(const ChainPoint&)>;
using ComplexField = std::function<std::complex<double>(const ChainPoint&)>;

/// Field evaluated where it is undefined (zero density, outside support).
struct UndefinedFieldError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace displab

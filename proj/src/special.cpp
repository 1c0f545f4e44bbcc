#include "displab/special.hpp"

#include <cmath>
#include <stdexcept>

namespace displab::special {

double hermite(int s, double x) {
    if (s < 0) throw std::domain_error("hermite: order must be non-negative");
    if (s == 0) return 1.0;
    if (s == 1) return 2.0 * x;
    double h_prev = 1.0;      // H_0
    double h = 2.0 * x;       // H_1
    for (int k = 2; k <= s; ++k) {
        const double h_next = 2.0 * x * h - 2.0 * (k - 1) * h_prev;
        h_prev = h;
        h = h_next;
    }
    return h;
}

double laguerre(int s, double x) {
    if (s < 0) throw std::domain_error("laguerre: order must be non-negative");
    if (s == 0) return 1.0;
    if (s == 1) return 1.0 - x;
    double l_prev = 1.0;      // L_0
    double l = 1.0 - x;       // L_1
    for (int k = 1; k < s; ++k) {
        // (k+1) L_{k+1} = (2k+1-x) L_k - k L_{k-1}
        const double l_next = ((2.0 * k + 1.0 - x) * l - k * l_prev) / (k + 1.0);
        l_prev = l;
        l = l_next;
    }
    return l;
}

double sinc(double x) {
    // Series keeps the absolute error below 1e-18 on |x| < 1e-4.
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

double rect(double x) {
    const double a = std::abs(x);
    if (a > 0.5) return 0.0;
    if (a == 0.5) return 0.5;
    return 1.0;
}

}  // namespace displab::special

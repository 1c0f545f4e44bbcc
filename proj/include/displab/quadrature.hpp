#pragma once

#include <functional>
#include <span>
#include <stdexcept>

namespace displab {

/// Adaptive quadrature failed to reach the requested tolerance; carries the
/// best available estimate.
struct AccuracyError : std::runtime_error {
    double best_estimate;
    explicit AccuracyError(double estimate)
        : std::runtime_error("integrate_adaptive: tolerance not reached at maximum depth"),
          best_estimate(estimate) {}
};

/// Adaptive Simpson integral of f over [a, b] with absolute error <= tol.
/// The interval is pre-split at the supplied kink abscissae (points where the
/// integrand is only piecewise smooth); kinks outside (a, b) are ignored.
/// Throws AccuracyError after recursion depth 40.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol, std::span<const double> kinks = {});

}  // namespace displab

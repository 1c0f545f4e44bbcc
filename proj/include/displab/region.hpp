#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace displab {

/// v-bound linear in x: v(x) = c0 + c1 * x.
struct LinearBound {
    double c0 = 0.0;
    double c1 = 0.0;
    double operator()(double x) const { return c0 + c1 * x; }
};

/// One subregion of the sheared phase region: an x-interval with v-bounds
/// that vary linearly in x.
struct Subregion {
    double x_lo = 0.0;
    double x_hi = 0.0;
    LinearBound v_lo;
    LinearBound v_hi;

    bool empty() const { return !(x_hi > x_lo); }
    /// Exact area (the integrand v_hi - v_lo is linear in x).
    double area() const;
};

/// The phase region {|x - vt| < dx/2, |v| < dv/2} split into the three
/// subregions omega1 (left sliver), omega2 (central band), omega3 (right
/// sliver). At t = 0 the whole rectangle sits in omega2.
struct PhaseRegion {
    Subregion omega1, omega2, omega3;
    double dx = 0.0;
    double dv = 0.0;
    double t = 0.0;

    double area() const { return omega1.area() + omega2.area() + omega3.area(); }

    /// v-interval of the full region at fixed x, empty outside the support.
    std::optional<std::pair<double, double>> v_slice(double x) const;

    /// x-interval of the full region at fixed v, empty outside |v| < dv/2.
    std::optional<std::pair<double, double>> x_slice(double v) const;

    /// Full x-extent of the region.
    std::pair<double, double> x_extent() const;

    /// Interior x abscissae where the subregion description changes.
    std::vector<double> x_kinks() const;

    /// Membership follows the left-exclusive / right-inclusive edge pattern of
    /// the piecewise marginals; a measure-zero convention kept for
    /// bit-reproducibility.
    bool contains(double x, double v) const;
};

PhaseRegion region_decompose(double dx, double dv, double t);

}  // namespace displab

#include "displab/region.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace displab {

double Subregion::area() const {
    if (empty()) return 0.0;
    const double dc0 = v_hi.c0 - v_lo.c0;
    const double dc1 = v_hi.c1 - v_lo.c1;
    return dc0 * (x_hi - x_lo) + 0.5 * dc1 * (x_hi * x_hi - x_lo * x_lo);
}

std::optional<std::pair<double, double>> PhaseRegion::v_slice(double x) const {
    if (t == 0.0) {
        if (std::abs(x) >= 0.5 * dx) return std::nullopt;
        return std::pair{-0.5 * dv, 0.5 * dv};
    }
    const double lo = std::max(-0.5 * dv, (x - 0.5 * dx) / t);
    const double hi = std::min(0.5 * dv, (x + 0.5 * dx) / t);
    if (!(lo < hi)) return std::nullopt;
    return std::pair{lo, hi};
}

std::optional<std::pair<double, double>> PhaseRegion::x_slice(double v) const {
    if (std::abs(v) >= 0.5 * dv) return std::nullopt;
    return std::pair{v * t - 0.5 * dx, v * t + 0.5 * dx};
}

std::pair<double, double> PhaseRegion::x_extent() const {
    const double half = 0.5 * (dx + t * dv);
    return {-half, half};
}

std::vector<double> PhaseRegion::x_kinks() const {
    const double k = 0.5 * std::abs(t * dv - dx);
    if (k == 0.0) return {0.0};
    const auto [lo, hi] = x_extent();
    if (k >= hi) return {};
    return {-k, k};
}

bool PhaseRegion::contains(double x, double v) const {
    const double eta = x - v * t;
    return eta > -0.5 * dx && eta <= 0.5 * dx && v > -0.5 * dv && v <= 0.5 * dv;
}

PhaseRegion region_decompose(double dx, double dv, double t) {
    if (!(dx > 0.0) || !(dv > 0.0))
        throw std::domain_error("region_decompose: dx and dv must be positive");
    if (!(t >= 0.0)) throw std::domain_error("region_decompose: t must be >= 0");

    PhaseRegion r;
    r.dx = dx;
    r.dv = dv;
    r.t = t;

    if (t == 0.0) {
        r.omega2 = {-0.5 * dx, 0.5 * dx, {-0.5 * dv, 0.0}, {0.5 * dv, 0.0}};
        r.omega1 = {-0.5 * dx, -0.5 * dx, {}, {}};
        r.omega3 = {0.5 * dx, 0.5 * dx, {}, {}};
        return r;
    }

    const LinearBound v_const_lo{-0.5 * dv, 0.0};
    const LinearBound v_const_hi{0.5 * dv, 0.0};
    const LinearBound wall_left{0.5 * dx / t, 1.0 / t};    // eta = -dx/2
    const LinearBound wall_right{-0.5 * dx / t, 1.0 / t};  // eta = +dx/2

    if (t < dx / dv) {
        r.omega1 = {-0.5 * (t * dv + dx), 0.5 * (t * dv - dx), v_const_lo, wall_left};
        r.omega2 = {0.5 * (t * dv - dx), 0.5 * (dx - t * dv), v_const_lo, v_const_hi};
        r.omega3 = {0.5 * (dx - t * dv), 0.5 * (dx + t * dv), wall_right, v_const_hi};
    } else {
        r.omega1 = {-0.5 * (dx + t * dv), 0.5 * (dx - t * dv), v_const_lo, wall_left};
        r.omega2 = {0.5 * (dx - t * dv), 0.5 * (t * dv - dx), wall_right, wall_left};
        r.omega3 = {0.5 * (t * dv - dx), 0.5 * (t * dv + dx), wall_right, v_const_hi};
    }
    return r;
}

}  // namespace displab

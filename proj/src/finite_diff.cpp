#include "displab/finite_diff.hpp"

#include <cmath>
#include <stdexcept>

namespace displab::fd {

namespace {

ChainPoint shifted(ChainPoint p, Coord c, double delta) {
    if (c == Coord::Time) {
        p.t += delta;
    } else {
        p.xi[static_cast<int>(c)] += delta;
    }
    return p;
}

template <typename Field>
auto partial_impl(const Field& f, const ChainPoint& p, Coord c, double h) {
    return (f(shifted(p, c, h)) - f(shifted(p, c, -h))) / (2.0 * h);
}

template <typename Field>
auto second_impl(const Field& f, const ChainPoint& p, Coord c, double h) {
    return (f(shifted(p, c, h)) - 2.0 * f(p) + f(shifted(p, c, -h))) / (h * h);
}

template <typename Field>
auto chain_impl(const Field& f, const ChainPoint& p, int base_order,
                std::span<const double> mult, double h) {
    if (base_order < 1 || base_order - 1 + static_cast<int>(mult.size()) > 3)
        throw std::domain_error("chain_partial: kinematic orders must lie in 1..3");
    auto acc = partial_impl(f, p, Coord::Time, h);
    for (std::size_t k = 0; k < mult.size(); ++k) {
        if (mult[k] == 0.0) continue;
        const auto c = static_cast<Coord>(base_order - 1 + static_cast<int>(k));
        acc += mult[k] * partial_impl(f, p, c, h);
    }
    return acc;
}

}  // namespace

double partial(const RealField& f, ChainPoint p, Coord c, double h) {
    return partial_impl(f, p, c, h);
}

std::complex<double> partial(const ComplexField& f, ChainPoint p, Coord c, double h) {
    return partial_impl(f, p, c, h);
}

double second(const RealField& f, ChainPoint p, Coord c, double h) {
    return second_impl(f, p, c, h);
}

std::complex<double> second(const ComplexField& f, ChainPoint p, Coord c, double h) {
    return second_impl(f, p, c, h);
}

double chain_partial(const RealField& f, const ChainPoint& p, int base_order,
                     std::span<const double> multipliers, double h) {
    return chain_impl(f, p, base_order, multipliers, h);
}

std::complex<double> chain_partial(const ComplexField& f, const ChainPoint& p, int base_order,
                                   std::span<const double> multipliers, double h) {
    return chain_impl(f, p, base_order, multipliers, h);
}

double partial_time(const RealField& f, const ChainPoint& p, double h) {
    return partial_impl(f, p, Coord::Time, h);
}

std::complex<double> partial_time(const ComplexField& f, const ChainPoint& p, double h) {
    return partial_impl(f, p, Coord::Time, h);
}

double convergence_order(const std::function<double(double)>& residual_of_h,
                         std::span<const double> h_values) {
    if (h_values.size() < 3)
        throw std::domain_error("convergence_order: need at least 3 step sizes");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    for (double h : h_values) {
        const double r = std::abs(residual_of_h(h));
        if (r <= 0.0) continue;  // exactly satisfied at this step, no slope information
        const double lx = std::log(h);
        const double ly = std::log(r);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    if (n < 3) throw std::domain_error("convergence_order: fewer than 3 usable residuals");
    const double denom = n * sxx - sx * sx;
    return (n * sxy - sx * sy) / denom;
}

}  // namespace displab::fd

#pragma once

#include <complex>
#include <span>
#include <vector>

#include "displab/field.hpp"

namespace displab::fd {

/// Coordinate selector: kinematic orders 1..3 map to X, V, VDot.
enum class Coord : int { X = 0, V = 1, VDot = 2, Time = 3 };

/// Central second-order first derivative in the selected coordinate.
double partial(const RealField& f, ChainPoint p, Coord c, double h);
std::complex<double> partial(const ComplexField& f, ChainPoint p, Coord c, double h);

/// Central second-order second derivative in the selected coordinate.
double second(const RealField& f, ChainPoint p, Coord c, double h);
std::complex<double> second(const ComplexField& f, ChainPoint p, Coord c, double h);

/// Convective derivative along a chain of kinematic orders:
///   d f = @t f + sum_k multipliers[k] * @f/@xi^{base_order+k}
/// base_order is 1-based (1 = position). An empty multiplier list gives @t.
/// Ranks 1-3 are supported through the three stored coordinates.
double chain_partial(const RealField& f, const ChainPoint& p, int base_order,
                     std::span<const double> multipliers, double h);
std::complex<double> chain_partial(const ComplexField& f, const ChainPoint& p, int base_order,
                                   std::span<const double> multipliers, double h);

/// Plain time derivative (chain_partial with no kinematic terms).
double partial_time(const RealField& f, const ChainPoint& p, double h);
std::complex<double> partial_time(const ComplexField& f, const ChainPoint& p, double h);

/// Least-squares slope of log(residual) vs log(h). Needs at least 3 step sizes.
/// Used to certify that a residual vanishes at the stencil order (about 2).
double convergence_order(const std::function<double(double)>& residual_of_h,
                         std::span<const double> h_values);

}  // namespace displab::fd

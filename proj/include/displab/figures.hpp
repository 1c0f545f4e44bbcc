#pragma once

#include <string>
#include <vector>

#include "displab/well.hpp"

namespace displab {

enum class WellQuantity {
    Density1,       // f1(x, t)
    MeanV,          // <v>(x, t)
    Phase1,         // phi1(x, t)
    Hamilton1,      // H1(x, t)
    PotentialV1,    // V1(x, t)
    Pressure1,      // P1(x, t)
    ForcePressure,  // -(m/f1) dP/dx
};

struct FigureSpec {
    std::string name;
    WellQuantity quantity;
    std::vector<double> times;
    std::vector<int> states;
};

/// Figure catalogue fig4..fig12 with the published time lists.
/// Throws std::invalid_argument for unknown names.
const FigureSpec& figure_spec(const std::string& name);
std::vector<std::string> figure_names();

struct Series {
    std::vector<double> x;
    std::vector<double> value;
};

/// Samples a well quantity on `resolution` cell-centered abscissae across the
/// open support at time t.
Series well_series(const WellParams& p, WellQuantity q, double t, int resolution,
                   double fd_step, double quad_tol);

std::string quantity_label(WellQuantity q);

}  // namespace displab

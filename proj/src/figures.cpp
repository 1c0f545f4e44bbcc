#include "displab/figures.hpp"

#include <cmath>
#include <stdexcept>

namespace displab {

namespace {

const std::vector<FigureSpec>& catalogue() {
    static const std::vector<double> density_times{0.0, 0.4, 0.6, 0.9, 1.0, 1.4, 1.6, 1.9};
    static const std::vector<double> velocity_times{0.01, 0.1, 0.2, 0.3, 0.4, 0.9, 1.9};
    static const std::vector<double> phase_times{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
    static const std::vector<double> pressure_times{0.1, 0.2, 0.3, 0.4, 0.5,
                                                    0.6, 0.7, 0.8, 0.9};
    static const std::vector<FigureSpec> specs{
        {"fig4", WellQuantity::Density1, density_times, {0}},
        {"fig5", WellQuantity::Density1, density_times, {1}},
        {"fig6", WellQuantity::MeanV, velocity_times, {0}},
        {"fig7", WellQuantity::MeanV, velocity_times, {1}},
        {"fig8", WellQuantity::Phase1, phase_times, {0, 1}},
        {"fig9", WellQuantity::Hamilton1, phase_times, {0, 1}},
        {"fig10", WellQuantity::PotentialV1, phase_times, {0, 1}},
        {"fig11", WellQuantity::Pressure1, pressure_times, {0, 1}},
        {"fig12", WellQuantity::ForcePressure, pressure_times, {0, 1}},
    };
    return specs;
}

}  // namespace

const FigureSpec& figure_spec(const std::string& name) {
    for (const auto& s : catalogue())
        if (s.name == name) return s;
    throw std::invalid_argument("unknown figure name: " + name);
}

std::vector<std::string> figure_names() {
    std::vector<std::string> names;
    for (const auto& s : catalogue()) names.push_back(s.name);
    return names;
}

std::string quantity_label(WellQuantity q) {
    switch (q) {
        case WellQuantity::Density1: return "f1";
        case WellQuantity::MeanV: return "mean_v";
        case WellQuantity::Phase1: return "phi1";
        case WellQuantity::Hamilton1: return "hamilton1";
        case WellQuantity::PotentialV1: return "potential_v1";
        case WellQuantity::Pressure1: return "pressure1";
        case WellQuantity::ForcePressure: return "force_pressure";
    }
    return "unknown";
}

Series well_series(const WellParams& p, WellQuantity q, double t, int resolution,
                   double fd_step, double quad_tol) {
    if (resolution < 64) throw std::domain_error("well_series: resolution must be >= 64");
    const double half = p.support_halfwidth(t);
    Series s;
    s.x.reserve(resolution);
    s.value.reserve(resolution);
    for (int i = 0; i < resolution; ++i) {
        // interior nodes only (the open-support fields stay away from the
        // edges); odd resolutions include x = 0
        const double x = -half + 2.0 * half * (i + 1.0) / (resolution + 1.0);
        double val = 0.0;
        switch (q) {
            case WellQuantity::Density1: val = f1(p, x, t); break;
            case WellQuantity::MeanV: val = mean_v(p, x, t); break;
            case WellQuantity::Phase1: val = phase1(p, x, t, quad_tol); break;
            case WellQuantity::Hamilton1: val = hamilton1(p, x, t, fd_step, quad_tol); break;
            case WellQuantity::PotentialV1:
                val = potential_v1(p, x, t, fd_step, quad_tol);
                break;
            case WellQuantity::Pressure1: val = pressure(p, x, t); break;
            case WellQuantity::ForcePressure: val = force_pressure(p, x, t, fd_step); break;
        }
        s.x.push_back(x);
        s.value.push_back(val);
    }
    return s;
}

}  // namespace displab

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "displab/constants.hpp"
#include "displab/field.hpp"
#include "displab/oscillator.hpp"
#include "displab/well.hpp"

namespace displab {

/// Norms of one governing-equation residual over a sample set. linf and l2
/// are normalized by the largest constituent term (unit-free), reported in
/// `scale`.
struct ResidualReport {
    std::string equation;
    double h = 0.0;
    double linf = 0.0;
    double l2 = 0.0;
    std::optional<double> order;
    int n_samples = 0;
    int n_skipped = 0;
    double scale = 1.0;
};

std::string report_to_json(const ResidualReport& r);
std::string reports_to_json(const std::vector<ResidualReport>& rs);

/// Field bundle fed to the residual operations. Unset std::function members
/// mean "not available for this state"; operations that need a missing field
/// throw std::logic_error. Rank-1 fields live on (x, t), rank-2 on (x, v, t).
struct ChainFields {
    // rank 1
    RealField f1;
    RealField flux1;      // f1 <v>
    RealField mean_v;
    RealField mean_v2;
    RealField mean_vdot1; // rank-1 mean acceleration (zero for the well)
    RealField pressure1;
    RealField m3;         // third central moment of v (quadrature-backed)
    RealField phi1;
    RealField hamilton1;  // -(1/beta1) dphi1/dt pipeline
    RealField v1;         // V1 = H1 - (m/2) <v>^2 pipeline
    RealField q1;         // density-curvature quantum potential
    ComplexField psi1;
    double psi1_floor = 0.0;  // skip divisions where |psi1| falls below this

    // rank 2
    RealField f12;
    ComplexField psi12;
    RealField phi12;
    RealField mean_vdot;  // acceleration field <vdot>_{1,2}
    RealField u12;
    RealField q12;        // |psi12| curvature quantum potential
    double psi12_floor = 0.0;
    double psi12_phase_rate = 1.0;  // max |d arg(psi12)/dt| over the sampling window

    RealField energy_rhs;  // right-hand side of the energy law (usually zero)

    ChainConstants c1{1.0, 1.0, 0.0, 1};
    ChainConstants c2{1.0, 1.0, 0.0, 2};

    // sampling geometry
    std::function<std::pair<double, double>(double t)> x_range;
    std::pair<double, double> v_range{-0.5, 0.5};
    /// Distance from (x, t) to the nearest rank-1 branch seam or support edge.
    std::function<double(double x, double t)> seam_distance;
    /// Stencil-safe distance to the rank-2 support boundary.
    std::function<double(double x, double v, double t)> support2_distance;

    /// Spot-checks |psi|^2 = f (and phase agreement) where both sides exist.
    void check_consistency() const;
};

struct VerifyOptions {
    double fd_step = 1e-4;        // rank-1 stencils
    double fd_step_rank2 = 1e-5;  // rank-2 transport stencils
    double quad_tol = 1e-12;
    int x_samples = 25;
    int v_samples = 9;
    std::vector<double> times{0.3, 0.7, 1.0, 1.6};
    bool estimate_order = false;  // fit log-log slope over {h, h/2, h/4}
    double kink_exclusion = 3.0;  // exclusion margin in units of the step
};

/// Builds the full bundle for the sheared-well state (closed-form fields plus
/// the phase-integral pipeline).
ChainFields make_well_fields(const WellParams& p, const VerifyOptions& opts);

/// Bundle for the rank-2 Gaussian packet (4-parameter oscillator state with
/// its explicit phase and acceleration field).
ChainFields make_gaussian_fields(const OscParams& p, double e12, const VerifyOptions& opts);

/// Bundle for a stationary oscillator chain state (rank-1 side only for
/// s >= 1, where the phase-space function is signed).
ChainFields make_oscillator_fields(const OscParams& p, const VerifyOptions& opts);

// Residual operations.
ResidualReport residual_continuity_rank1(const ChainFields& f, const VerifyOptions& o);
ResidualReport residual_continuity_rank2(const ChainFields& f, const VerifyOptions& o);
ResidualReport residual_schrodinger_rank2(const ChainFields& f, const VerifyOptions& o);
ResidualReport residual_hamilton_jacobi_rank1(const ChainFields& f, const VerifyOptions& o);
ResidualReport residual_hamilton_jacobi_rank2(const ChainFields& f, const VerifyOptions& o);
ResidualReport residual_motion_rank1(const ChainFields& f, const VerifyOptions& o);
ResidualReport residual_pressure_law(const ChainFields& f, const VerifyOptions& o);
ResidualReport residual_pressure_gradient(const ChainFields& f, const VerifyOptions& o);
ResidualReport residual_energy_law_rank1(const ChainFields& f, const VerifyOptions& o);
std::vector<ResidualReport> residual_complex_action(const ChainFields& f, const VerifyOptions& o);
std::vector<ResidualReport> check_legendre_rank1(const ChainFields& f, const VerifyOptions& o);
std::vector<ResidualReport> check_efield(const ChainFields& f, const VerifyOptions& o);

/// Schrodinger-combination potential [i hbar dtPsi + (hbar^2/2m) dxxPsi]/Psi;
/// returns the (complex-valued) field and the report on its imaginary part.
std::pair<RealField, ResidualReport> infer_potential_rank1(const ChainFields& f,
                                                           const VerifyOptions& o);

/// Default pass tolerance for a report produced by this module.
double default_tolerance(const std::string& equation);

/// Named suite driver used by the CLI: "well", "oscillator", "gaussian", "all".
std::vector<ResidualReport> run_suite(const std::string& suite, const WellParams& wp,
                                      const OscParams& op, const VerifyOptions& o);

}  // namespace displab

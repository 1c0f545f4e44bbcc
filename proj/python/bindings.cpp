#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "displab/eigensolve.hpp"
#include "displab/figures.hpp"
#include "displab/finite_diff.hpp"
#include "displab/oscillator.hpp"
#include "displab/quadrature.hpp"
#include "displab/region.hpp"
#include "displab/special.hpp"
#include "displab/verify.hpp"
#include "displab/well.hpp"

namespace py = pybind11;
using namespace displab;

namespace {

py::dict report_dict(const ResidualReport& r) {
    py::dict d;
    d["equation"] = r.equation;
    d["h"] = r.h;
    d["linf"] = r.linf;
    d["l2"] = r.l2;
    d["order"] = r.order ? py::cast(*r.order) : py::none();
    d["n_samples"] = r.n_samples;
    d["n_skipped"] = r.n_skipped;
    d["scale"] = r.scale;
    return d;
}

py::list report_list(const std::vector<ResidualReport>& rs) {
    py::list out;
    for (const auto& r : rs) out.append(report_dict(r));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Phase-space quantum mechanics toolkit: sheared-well exact solution, "
              "oscillator chain, eigensolver, and residual verification";

    // special functions
    m.def("hermite", &special::hermite, py::arg("s"), py::arg("x"));
    m.def("laguerre", &special::laguerre, py::arg("s"), py::arg("x"));
    m.def("sinc", &special::sinc, py::arg("x"));
    m.def("rect", &special::rect, py::arg("x"));

    // quadrature
    m.def(
        "integrate_adaptive",
        [](const std::function<double(double)>& f, double a, double b, double tol,
           std::vector<double> kinks) { return integrate_adaptive(f, a, b, tol, kinks); },
        py::arg("f"), py::arg("a"), py::arg("b"), py::arg("tol") = 1e-10,
        py::arg("kinks") = std::vector<double>{});

    // phase region
    py::class_<LinearBound>(m, "LinearBound")
        .def_readonly("c0", &LinearBound::c0)
        .def_readonly("c1", &LinearBound::c1)
        .def("__call__", &LinearBound::operator());
    py::class_<Subregion>(m, "Subregion")
        .def_readonly("x_lo", &Subregion::x_lo)
        .def_readonly("x_hi", &Subregion::x_hi)
        .def_readonly("v_lo", &Subregion::v_lo)
        .def_readonly("v_hi", &Subregion::v_hi)
        .def("empty", &Subregion::empty)
        .def("area", &Subregion::area);
    py::class_<PhaseRegion>(m, "PhaseRegion")
        .def_readonly("omega1", &PhaseRegion::omega1)
        .def_readonly("omega2", &PhaseRegion::omega2)
        .def_readonly("omega3", &PhaseRegion::omega3)
        .def_readonly("dx", &PhaseRegion::dx)
        .def_readonly("dv", &PhaseRegion::dv)
        .def_readonly("t", &PhaseRegion::t)
        .def("area", &PhaseRegion::area)
        .def("v_slice", &PhaseRegion::v_slice, py::arg("x"))
        .def("x_slice", &PhaseRegion::x_slice, py::arg("v"))
        .def("x_extent", &PhaseRegion::x_extent)
        .def("x_kinks", &PhaseRegion::x_kinks)
        .def("contains", &PhaseRegion::contains, py::arg("x"), py::arg("v"));
    m.def("region_decompose", &region_decompose, py::arg("dx"), py::arg("dv"),
          py::arg("t"));

    // well
    py::class_<WellParams>(m, "WellParams")
        .def(py::init([](double dx, double dv, double hbar2, double mass, int n,
                         double hbar1) {
                 WellParams p{dx, dv, hbar2, mass, n, hbar1};
                 p.check();
                 return p;
             }),
             py::arg("dx") = 1.0, py::arg("dv") = 1.0, py::arg("hbar2") = 1.0,
             py::arg("mass") = 1.0, py::arg("n") = 0, py::arg("hbar1") = 1.0)
        .def_readwrite("dx", &WellParams::dx)
        .def_readwrite("dv", &WellParams::dv)
        .def_readwrite("hbar2", &WellParams::hbar2)
        .def_readwrite("mass", &WellParams::mass)
        .def_readwrite("n", &WellParams::n)
        .def_readwrite("hbar1", &WellParams::hbar1)
        .def("eta0", &WellParams::eta0)
        .def("g_n", &WellParams::g_n)
        .def("energy", &WellParams::energy)
        .def("tau", &WellParams::tau)
        .def("t_star", &WellParams::t_star)
        .def("support_halfwidth", &WellParams::support_halfwidth);

    m.def("energy_even", &energy_even);
    m.def("energy_odd", &energy_odd, py::arg("p"), py::arg("k"));
    m.def("psi12", &psi12, py::arg("p"), py::arg("x"), py::arg("v"), py::arg("t"));
    m.def("phase12", &phase12, py::arg("p"), py::arg("t"));
    m.def("f12", &f12, py::arg("p"), py::arg("x"), py::arg("v"), py::arg("t"));
    m.def("f1", &f1, py::arg("p"), py::arg("x"), py::arg("t"));
    m.def("f2", &f2, py::arg("p"), py::arg("v"));
    m.def("flux_v", &flux_v, py::arg("p"), py::arg("x"), py::arg("t"));
    m.def("mean_v", &mean_v, py::arg("p"), py::arg("x"), py::arg("t"));
    m.def("flux_v2", &flux_v2, py::arg("p"), py::arg("x"), py::arg("t"));
    m.def("mean_v2", &mean_v2, py::arg("p"), py::arg("x"), py::arg("t"));
    m.def("pressure", &pressure, py::arg("p"), py::arg("x"), py::arg("t"));
    m.def("quantum_potential_rank2", &quantum_potential_rank2, py::arg("p"), py::arg("t"));
    m.def("quantum_potential_rank1", &quantum_potential_rank1, py::arg("p"), py::arg("x"),
          py::arg("t"), py::arg("h") = 1e-4);
    m.def("hamilton12", &hamilton12, py::arg("p"), py::arg("t"));
    m.def("phase1", &phase1, py::arg("p"), py::arg("x"), py::arg("t"),
          py::arg("quad_tol") = 1e-10);
    m.def("hamilton1", &hamilton1, py::arg("p"), py::arg("x"), py::arg("t"),
          py::arg("fd_step") = 1e-4, py::arg("quad_tol") = 1e-10);
    m.def("potential_v1", &potential_v1, py::arg("p"), py::arg("x"), py::arg("t"),
          py::arg("fd_step") = 1e-4, py::arg("quad_tol") = 1e-10);
    m.def("force_pressure", &force_pressure, py::arg("p"), py::arg("x"), py::arg("t"),
          py::arg("h") = 1e-4);
    m.def(
        "psi2",
        [](const WellParams& p, double v, double t) { return psi2(p, v, t); },
        py::arg("p"), py::arg("v"), py::arg("t"));
    m.def(
        "psi2_position",
        [](const WellParams& p, double x, double t) { return psi2_position(p, x, t); },
        py::arg("p"), py::arg("x"), py::arg("t"));
    m.def("in_support", &in_support, py::arg("p"), py::arg("x"), py::arg("t"));
    m.def("branch_kinks_x", &branch_kinks_x, py::arg("p"), py::arg("t"));

    // oscillator chain
    py::class_<OscParams>(m, "OscParams")
        .def(py::init([](double mass, double omega, double hbar, int s, double hbar2) {
                 OscParams p{mass, omega, hbar, s, hbar2};
                 p.check();
                 return p;
             }),
             py::arg("mass") = 1.0, py::arg("omega") = 1.0, py::arg("hbar") = 1.0,
             py::arg("s") = 0, py::arg("hbar2") = 0.0)
        .def_readwrite("mass", &OscParams::mass)
        .def_readwrite("omega", &OscParams::omega)
        .def_readwrite("hbar", &OscParams::hbar)
        .def_readwrite("s", &OscParams::s)
        .def_readwrite("hbar2", &OscParams::hbar2)
        .def("sigma1", &OscParams::sigma1)
        .def("sigma2", &OscParams::sigma2)
        .def("sigma_n", &OscParams::sigma_n)
        .def("hbar_n", &OscParams::hbar_n)
        .def("hbar2_effective", &OscParams::hbar2_effective);

    m.def("f12_oscillator", &f12_oscillator, py::arg("p"), py::arg("x"), py::arg("v"));
    m.def("f1_oscillator", &f1_oscillator, py::arg("p"), py::arg("x"));
    m.def("gauss_psi12", &gauss_psi12, py::arg("p"), py::arg("x"), py::arg("v"),
          py::arg("t"), py::arg("e12"));
    m.def("gauss_potential", &gauss_potential, py::arg("p"), py::arg("x"), py::arg("v"),
          py::arg("e12"));
    py::class_<LadderRung>(m, "LadderRung")
        .def_readonly("n", &LadderRung::n)
        .def_readonly("sigma_n", &LadderRung::sigma_n)
        .def_readonly("sigma_np1", &LadderRung::sigma_np1)
        .def_readonly("hbar_n", &LadderRung::hbar_n);
    m.def("uncertainty_ladder", &uncertainty_ladder, py::arg("p"), py::arg("n_max"));

    // eigensolver
    py::class_<PotentialSpec>(m, "PotentialSpec")
        .def_static("free_well", &PotentialSpec::free_well)
        .def_static("from_function", &PotentialSpec::from_function, py::arg("u"))
        .def_static("from_table", &PotentialSpec::from_table, py::arg("table"))
        .def("__call__", &PotentialSpec::operator(), py::arg("eta"));
    py::enum_<Parity>(m, "Parity")
        .value("even", Parity::Even)
        .value("odd", Parity::Odd)
        .value("none", Parity::None);
    py::class_<EigenMode>(m, "EigenMode")
        .def_readonly("grid", &EigenMode::grid)
        .def_readonly("psi", &EigenMode::psi)
        .def_readonly("energy", &EigenMode::energy);
    py::class_<SpectrumResult>(m, "SpectrumResult")
        .def_readonly("eigenvalues", &SpectrumResult::eigenvalues)
        .def_readonly("eigenvectors", &SpectrumResult::eigenvectors)
        .def_readonly("grid", &SpectrumResult::grid)
        .def_readonly("parity", &SpectrumResult::parity)
        .def("mode", &SpectrumResult::mode, py::arg("j"));
    m.def("solve_spectrum", &solve_spectrum, py::arg("u"), py::arg("eta0"), py::arg("mass"),
          py::arg("hbar2"), py::arg("k_states"), py::arg("grid_n"));
    m.def("load_potential_csv",
          [](const std::string& path) { return load_potential_csv(path); });
    m.def(
        "lift_to_rank2",
        [](const EigenMode& mode, double hbar2) {
            auto field = lift_to_rank2(mode, hbar2);
            return std::function<std::complex<double>(double, double, double)>(
                [field](double x, double v, double t) {
                    return field(ChainPoint::xvt(x, v, t));
                });
        },
        py::arg("mode"), py::arg("hbar2"));

    // verification
    py::class_<VerifyOptions>(m, "VerifyOptions")
        .def(py::init<>())
        .def_readwrite("fd_step", &VerifyOptions::fd_step)
        .def_readwrite("fd_step_rank2", &VerifyOptions::fd_step_rank2)
        .def_readwrite("quad_tol", &VerifyOptions::quad_tol)
        .def_readwrite("x_samples", &VerifyOptions::x_samples)
        .def_readwrite("v_samples", &VerifyOptions::v_samples)
        .def_readwrite("times", &VerifyOptions::times)
        .def_readwrite("estimate_order", &VerifyOptions::estimate_order);
    m.def(
        "run_suite",
        [](const std::string& suite, const WellParams& wp, const OscParams& op,
           const VerifyOptions& o) { return report_list(run_suite(suite, wp, op, o)); },
        py::arg("suite"), py::arg("well_params") = WellParams{},
        py::arg("osc_params") = OscParams{}, py::arg("options") = VerifyOptions{});
    m.def("default_tolerance", &default_tolerance, py::arg("equation"));

    // figure data
    m.def("figure_names", &figure_names);
    m.def(
        "figure_times",
        [](const std::string& name) { return figure_spec(name).times; },
        py::arg("name"));
    m.def(
        "well_series",
        [](const WellParams& p, const std::string& quantity, double t, int resolution,
           double fd_step, double quad_tol) {
            WellQuantity q;
            if (quantity == "f1")
                q = WellQuantity::Density1;
            else if (quantity == "mean_v")
                q = WellQuantity::MeanV;
            else if (quantity == "phi1")
                q = WellQuantity::Phase1;
            else if (quantity == "hamilton1")
                q = WellQuantity::Hamilton1;
            else if (quantity == "potential_v1")
                q = WellQuantity::PotentialV1;
            else if (quantity == "pressure1")
                q = WellQuantity::Pressure1;
            else if (quantity == "force_pressure")
                q = WellQuantity::ForcePressure;
            else
                throw std::invalid_argument("unknown quantity: " + quantity);
            const auto s = well_series(p, q, t, resolution, fd_step, quad_tol);
            return std::pair{s.x, s.value};
        },
        py::arg("p"), py::arg("quantity"), py::arg("t"), py::arg("resolution") = 257,
        py::arg("fd_step") = 1e-4, py::arg("quad_tol") = 1e-10);

    py::register_exception<UndefinedFieldError>(m, "UndefinedFieldError");
    py::register_exception<AccuracyError>(m, "AccuracyError");
}

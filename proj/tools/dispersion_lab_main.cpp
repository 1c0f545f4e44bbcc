// dispersion-lab: figure data, verification suites, spectra, and oscillator
// tables for the sheared-well / oscillator-chain library.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "displab/eigensolve.hpp"
#include "displab/figures.hpp"
#include "displab/oscillator.hpp"
#include "displab/verify.hpp"
#include "displab/well.hpp"

namespace fs = std::filesystem;
using namespace displab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitToleranceBreach = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Writes through a temporary file and renames on success, so failed runs
/// leave no partial outputs behind.
void write_atomic(const fs::path& target, const std::string& content) {
    fs::create_directories(target.parent_path().empty() ? fs::path(".")
                                                        : target.parent_path());
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, target);
}

struct RunConfig {
    double dx = 1.0, dv = 1.0, hbar2 = 1.0, mass = 1.0;
    int n = 0;
    int s = 0;
    std::vector<double> times;
    int grid = 513;
    double fd_step = 1e-4;
    double quad_tol = 1e-10;
    std::string out = ".";
    std::string format = "csv";

    WellParams well() const {
        WellParams p;
        p.dx = dx;
        p.dv = dv;
        p.hbar2 = hbar2;
        p.mass = mass;
        p.n = n;
        p.check();
        return p;
    }

    OscParams osc() const {
        OscParams p;
        p.mass = mass;
        p.s = s;
        p.check();
        return p;
    }

    std::string header(const std::string& extra) const {
        std::ostringstream h;
        h << "# " << extra << " dx=" << fmt17(dx) << " dv=" << fmt17(dv)
          << " hbar2=" << fmt17(hbar2) << " mass=" << fmt17(mass) << " grid=" << grid
          << " fd_step=" << fmt17(fd_step) << " quad_tol=" << fmt17(quad_tol) << "\n";
        return h.str();
    }
};

int cmd_figure(const RunConfig& cfg, const std::string& name) {
    const FigureSpec* spec = nullptr;
    try {
        spec = &figure_spec(name);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    const auto times = cfg.times.empty() ? spec->times : cfg.times;
    for (int state : spec->states) {
        WellParams p = cfg.well();
        p.n = state;
        for (std::size_t ti = 0; ti < times.size(); ++ti) {
            const double t = times[ti];
            const auto series =
                well_series(p, spec->quantity, t, cfg.grid, cfg.fd_step, cfg.quad_tol);
            std::ostringstream body;
            body << cfg.header("figure=" + name + " quantity=" +
                               quantity_label(spec->quantity) + " n=" +
                               std::to_string(state) + " t=" + fmt17(t));
            if (cfg.format == "json") {
                nlohmann::json j;
                j["figure"] = name;
                j["quantity"] = quantity_label(spec->quantity);
                j["n"] = state;
                j["t"] = t;
                j["x"] = series.x;
                j["value"] = series.value;
                write_atomic(fs::path(cfg.out) / (name + "_n" + std::to_string(state) +
                                                  "_t" + std::to_string(ti) + ".json"),
                             j.dump(2) + "\n");
                continue;
            }
            body << "x,value\n";
            for (std::size_t i = 0; i < series.x.size(); ++i)
                body << fmt17(series.x[i]) << "," << fmt17(series.value[i]) << "\n";
            write_atomic(fs::path(cfg.out) / (name + "_n" + std::to_string(state) + "_t" +
                                              std::to_string(ti) + ".csv"),
                         body.str());
        }
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, bool estimate_order) {
    VerifyOptions o;
    o.fd_step = cfg.fd_step;
    o.fd_step_rank2 = 0.1 * cfg.fd_step;  // keep the default 10:1 ratio
    o.quad_tol = std::min(cfg.quad_tol, 1e-10);
    o.estimate_order = estimate_order;
    std::vector<ResidualReport> reports;
    try {
        reports = run_suite(suite, cfg.well(), cfg.osc(), o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    write_atomic(fs::path(cfg.out) / ("verify_" + suite + ".json"),
                 reports_to_json(reports) + "\n");
    std::vector<std::string> failing;
    for (const auto& r : reports)
        if (r.linf > default_tolerance(r.equation)) failing.push_back(r.equation);
    if (!failing.empty()) {
        std::cerr << "tolerance breach in:";
        for (const auto& id : failing) std::cerr << " " << id;
        std::cerr << "\n";
        return kExitToleranceBreach;
    }
    std::cout << "verify " << suite << ": " << reports.size() << " checks passed\n";
    return kExitOk;
}

int cmd_spectrum(const RunConfig& cfg, const std::string& potential_file, bool free_well,
                 int k_states, const std::string& dump_vectors, bool grid_given) {
    PotentialSpec u = PotentialSpec::free_well();
    if (!free_well) {
        try {
            u = load_potential_csv(potential_file);
        } catch (const CsvError& e) {
            std::cerr << "error: " << potential_file << ":" << e.line << ": " << e.what()
                      << "\n";
            return kExitIo;
        }
    }
    const int grid_n = grid_given ? cfg.grid : 2000;  // eigensolver default
    const WellParams p = cfg.well();
    SpectrumResult res;
    try {
        res = solve_spectrum(u, p.eta0(), p.mass, p.hbar2, k_states, grid_n);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const auto parity_name = [](Parity q) {
        return q == Parity::Even ? "even" : q == Parity::Odd ? "odd" : "none";
    };
    std::ostringstream body;
    body << cfg.header(std::string("spectrum potential=") +
                       (free_well ? "free" : potential_file) + " k=" +
                       std::to_string(k_states));
    if (cfg.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (std::size_t j = 0; j < res.eigenvalues.size(); ++j) {
            nlohmann::json row;
            row["index"] = j;
            row["energy"] = res.eigenvalues[j];
            row["parity"] = parity_name(res.parity[j]);
            if (free_well) {
                const double exact = p.hbar2 * p.hbar2 * M_PI * M_PI * (j + 1) * (j + 1) /
                                     (2.0 * p.mass * 4.0 * p.eta0() * p.eta0());
                row["exact"] = exact;
                row["rel_err"] = std::abs(res.eigenvalues[j] - exact) / exact;
            }
            arr.push_back(row);
        }
        write_atomic(fs::path(cfg.out) / "spectrum.json", arr.dump(2) + "\n");
    } else {
        body << (free_well ? "index,energy,parity,exact,rel_err\n"
                           : "index,energy,parity\n");
        for (std::size_t j = 0; j < res.eigenvalues.size(); ++j) {
            body << j << "," << fmt17(res.eigenvalues[j]) << ","
                 << parity_name(res.parity[j]);
            if (free_well) {
                const double exact = p.hbar2 * p.hbar2 * M_PI * M_PI * (j + 1) * (j + 1) /
                                     (2.0 * p.mass * 4.0 * p.eta0() * p.eta0());
                body << "," << fmt17(exact) << ","
                     << fmt17(std::abs(res.eigenvalues[j] - exact) / exact);
            }
            body << "\n";
        }
        write_atomic(fs::path(cfg.out) / "spectrum.csv", body.str());
    }

    if (!dump_vectors.empty()) {
        std::ostringstream vb;
        vb << cfg.header("spectrum_vectors k=" + std::to_string(k_states));
        vb << "eta";
        for (std::size_t j = 0; j < res.eigenvalues.size(); ++j) vb << ",psi" << j;
        vb << "\n";
        for (std::size_t i = 0; i < res.grid.size(); ++i) {
            vb << fmt17(res.grid[i]);
            for (const auto& vec : res.eigenvectors) vb << "," << fmt17(vec[i]);
            vb << "\n";
        }
        write_atomic(fs::path(cfg.out) / dump_vectors, vb.str());
    }
    return kExitOk;
}

int cmd_oscillator(const RunConfig& cfg) {
    const OscParams p = cfg.osc();
    const double s1 = p.sigma1(), s2 = p.sigma2();
    const int res = std::max(64, std::min(cfg.grid, 257));

    if (cfg.format == "json") {
        nlohmann::json j;
        j["s"] = p.s;
        nlohmann::json f12rows = nlohmann::json::array();
        for (int i = 0; i < res; ++i)
            for (int k = 0; k < res; ++k) {
                const double x = -4.0 * s1 + 8.0 * s1 * (i + 0.5) / res;
                const double v = -4.0 * s2 + 8.0 * s2 * (k + 0.5) / res;
                f12rows.push_back({x, v, f12_oscillator(p, x, v)});
            }
        j["f12"] = std::move(f12rows);
        nlohmann::json f1rows = nlohmann::json::array();
        for (int i = 0; i < res; ++i) {
            const double x = -4.0 * s1 + 8.0 * s1 * (i + 0.5) / res;
            f1rows.push_back({x, f1_oscillator(p, x)});
        }
        j["f1"] = std::move(f1rows);
        nlohmann::json ladder = nlohmann::json::array();
        for (const auto& r : uncertainty_ladder(p, 4))
            ladder.push_back({r.n, r.sigma_n, r.hbar_n});
        j["ladder"] = std::move(ladder);
        write_atomic(fs::path(cfg.out) / "oscillator.json", j.dump(2) + "\n");
        return kExitOk;
    }

    std::ostringstream f12body;
    f12body << cfg.header("table=f12 s=" + std::to_string(p.s));
    f12body << "x,v,value\n";
    for (int i = 0; i < res; ++i)
        for (int k = 0; k < res; ++k) {
            const double x = -4.0 * s1 + 8.0 * s1 * (i + 0.5) / res;
            const double v = -4.0 * s2 + 8.0 * s2 * (k + 0.5) / res;
            f12body << fmt17(x) << "," << fmt17(v) << "," << fmt17(f12_oscillator(p, x, v))
                    << "\n";
        }
    write_atomic(fs::path(cfg.out) / "osc_f12.csv", f12body.str());

    std::ostringstream f1body;
    f1body << cfg.header("table=f1 s=" + std::to_string(p.s));
    f1body << "x,value\n";
    for (int i = 0; i < res; ++i) {
        const double x = -4.0 * s1 + 8.0 * s1 * (i + 0.5) / res;
        f1body << fmt17(x) << "," << fmt17(f1_oscillator(p, x)) << "\n";
    }
    write_atomic(fs::path(cfg.out) / "osc_f1.csv", f1body.str());

    std::ostringstream ladder;
    ladder << cfg.header("table=ladder");
    ladder << "n,sigma_n,hbar_n\n";
    for (const auto& r : uncertainty_ladder(p, 4))
        ladder << r.n << "," << fmt17(r.sigma_n) << "," << fmt17(r.hbar_n) << "\n";
    write_atomic(fs::path(cfg.out) / "osc_ladder.csv", ladder.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dispersion-lab: phase-space quantum mechanics toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--dx", cfg.dx, "phase region x extent");
    app.add_option("--dv", cfg.dv, "phase region v extent");
    app.add_option("--hbar2", cfg.hbar2, "second-order action constant");
    app.add_option("--mass", cfg.mass, "particle mass");
    app.add_option("-n", cfg.n, "well state index");
    app.add_option("-s", cfg.s, "oscillator state index");
    app.add_option("--times", cfg.times, "override time list")->delimiter(',');
    app.add_option("--grid", cfg.grid, "grid resolution")
        ->check(CLI::Range(64, 1000000));
    app.add_option("--fd-step", cfg.fd_step, "finite difference step");
    app.add_option("--quad-tol", cfg.quad_tol, "quadrature tolerance");
    app.add_option("--out", cfg.out, "output directory")
        ->envname("DISPERSION_LAB_OUT");
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));

    std::string figure_name;
    auto* figure = app.add_subcommand("figure", "reproduce published figure data");
    figure->fallthrough();
    figure->add_option("name", figure_name, "figure name (fig4..fig12)")->required();

    std::string suite;
    bool no_order = false;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->fallthrough();
    verify->add_option("suite", suite, "well | oscillator | gaussian | all")->required();
    verify->add_flag("--no-order", no_order, "skip convergence-order estimation");

    std::string potential_file;
    bool free_well = false;
    int k_states = 4;
    std::string dump_vectors;
    auto* spectrum = app.add_subcommand("spectrum", "solve the wall-bounded eigenproblem");
    spectrum->fallthrough();
    spectrum->add_option("potential", potential_file, "two-column (eta, U) CSV");
    spectrum->add_flag("--free", free_well, "use the zero potential");
    spectrum->add_option("-k", k_states, "number of states")->check(CLI::Range(1, 1000));
    spectrum->add_option("--dump-vectors", dump_vectors, "eigenvector CSV filename");

    auto* oscillator = app.add_subcommand("oscillator", "oscillator chain tables");
    oscillator->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    for (double t : cfg.times)
        if (t < 0.0) {
            std::cerr << "error: time values must be >= 0\n";
            return kExitUsage;
        }

    try {
        if (figure->parsed()) return cmd_figure(cfg, figure_name);
        if (verify->parsed()) return cmd_verify(cfg, suite, !no_order);
        if (spectrum->parsed()) {
            if (!free_well && potential_file.empty()) {
                std::cerr << "error: spectrum needs a potential file or --free\n";
                return kExitUsage;
            }
            return cmd_spectrum(cfg, potential_file, free_well, k_states, dump_vectors,
                                app.count("--grid") > 0);
        }
        if (oscillator->parsed()) return cmd_oscillator(cfg);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitToleranceBreach;
    }
    return kExitUsage;
}

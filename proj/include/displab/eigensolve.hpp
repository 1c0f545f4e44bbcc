#pragma once

#include <filesystem>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "displab/field.hpp"

namespace displab {

/// Potential U(eta) on the open interval between the walls: either a callable
/// or a tabulated series with linear interpolation (clamped at the table ends).
class PotentialSpec {
  public:
    static PotentialSpec free_well() { return from_function([](double) { return 0.0; }); }
    static PotentialSpec from_function(std::function<double(double)> u);
    static PotentialSpec from_table(std::vector<std::pair<double, double>> table);

    double operator()(double eta) const;
    bool tabulated() const { return !table_.empty(); }

  private:
    std::function<double(double)> fn_;
    std::vector<std::pair<double, double>> table_;
};

/// Malformed potential table; line is 1-based.
struct CsvError : std::runtime_error {
    int line;
    CsvError(const std::string& what, int line_) : std::runtime_error(what), line(line_) {}
};

/// Reads a two-column (eta, U) CSV; '#' comments and an optional header row
/// are skipped.
PotentialSpec load_potential_csv(const std::filesystem::path& path);

enum class Parity { Even, Odd, None };

struct EigenMode {
    std::vector<double> grid;  // eta nodes, walls included
    std::vector<double> psi;   // zero at the walls, trapezoid-normalized
    double energy = 0.0;
};

struct SpectrumResult {
    std::vector<double> eigenvalues;               // ascending
    std::vector<std::vector<double>> eigenvectors; // rows match eigenvalues
    std::vector<double> grid;
    std::vector<Parity> parity;

    EigenMode mode(int j) const { return {grid, eigenvectors.at(j), eigenvalues.at(j)}; }
};

/// Lowest k_states eigenpairs of -(hbar2^2/2m) psi'' + U psi = E psi with
/// Dirichlet walls at +-eta0: symmetric second-difference discretization,
/// eigenvalues by Sturm-sequence bisection, eigenvectors by inverse iteration.
SpectrumResult solve_spectrum(const PotentialSpec& u, double eta0, double mass, double hbar2,
                              int k_states, int grid_n);

/// Lift a characteristic-coordinate mode to the second rank:
/// psi(x - v t) * exp(-i E t^3 / (3 hbar2)), cubic interpolation off-grid,
/// zero outside the walls.
ComplexField lift_to_rank2(const EigenMode& mode, double hbar2);

}  // namespace displab

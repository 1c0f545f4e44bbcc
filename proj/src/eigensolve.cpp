#include "displab/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <limits>
#include <memory>
#include <numbers>
#include <sstream>

namespace displab {

namespace {

constexpr double kPi = std::numbers::pi;

/// Number of eigenvalues of the symmetric tridiagonal (diag, off) below lambda
/// (Sturm sequence via the LDL^T pivots).
int sturm_count(const std::vector<double>& diag, const std::vector<double>& off, double lambda) {
    const double tiny = std::numeric_limits<double>::min();
    int count = 0;
    double q = diag[0] - lambda;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < diag.size(); ++i) {
        if (q == 0.0) q = tiny;
        q = diag[i] - lambda - off[i - 1] * off[i - 1] / q;
        if (q < 0.0) ++count;
    }
    return count;
}

/// j-th eigenvalue (1-based) by bisection on the Sturm count.
double bisect_eigenvalue(const std::vector<double>& diag, const std::vector<double>& off,
                         int j, double lo, double hi) {
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max({std::abs(lo), std::abs(hi), 1.0});
         ++it) {
        const double mid = 0.5 * (lo + hi);
        if (sturm_count(diag, off, mid) >= j)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

PotentialSpec PotentialSpec::from_function(std::function<double(double)> u) {
    PotentialSpec s;
    s.fn_ = std::move(u);
    return s;
}

PotentialSpec PotentialSpec::from_table(std::vector<std::pair<double, double>> table) {
    if (table.size() < 2)
        throw std::domain_error("PotentialSpec: table needs at least two rows");
    std::sort(table.begin(), table.end());
    for (std::size_t i = 0; i + 1 < table.size(); ++i)
        if (!(table[i].first < table[i + 1].first))
            throw std::domain_error("PotentialSpec: duplicate eta abscissa in table");
    PotentialSpec s;
    s.table_ = std::move(table);
    return s;
}

double PotentialSpec::operator()(double eta) const {
    if (table_.empty()) return fn_(eta);
    if (eta <= table_.front().first) return table_.front().second;
    if (eta >= table_.back().first) return table_.back().second;
    auto it = std::upper_bound(table_.begin(), table_.end(), eta,
                               [](double e, const auto& row) { return e < row.first; });
    const auto& [x1, u1] = *it;
    const auto& [x0, u0] = *(it - 1);
    const double w = (eta - x0) / (x1 - x0);
    return u0 + w * (u1 - u0);
}

PotentialSpec load_potential_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw CsvError("cannot open potential file: " + path.string(), 0);
    std::vector<std::pair<double, double>> rows;
    std::string line;
    int lineno = 0;
    bool header_allowed = true;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = line;
        std::replace(s.begin(), s.end(), ',', ' ');
        std::istringstream ss(s);
        std::string tok;
        if (!(ss >> tok)) continue;           // blank line
        if (tok.front() == '#') continue;     // comment
        double eta, u;
        std::istringstream first(tok);
        if (!(first >> eta) || !first.eof()) {
            if (header_allowed) {             // one non-numeric header row is fine
                header_allowed = false;
                continue;
            }
            throw CsvError("non-numeric eta value", lineno);
        }
        if (!(ss >> u)) throw CsvError("missing potential value", lineno);
        std::string extra;
        if (ss >> extra) throw CsvError("trailing tokens after two columns", lineno);
        if (!std::isfinite(eta) || !std::isfinite(u))
            throw CsvError("non-finite table entry", lineno);
        rows.emplace_back(eta, u);
        header_allowed = false;
    }
    if (rows.size() < 2) throw CsvError("potential table needs at least two rows", lineno);
    return PotentialSpec::from_table(std::move(rows));
}

SpectrumResult solve_spectrum(const PotentialSpec& u, double eta0, double mass, double hbar2,
                              int k_states, int grid_n) {
    if (!(eta0 > 0.0) || !(mass > 0.0) || !(hbar2 > 0.0))
        throw std::domain_error("solve_spectrum: eta0, mass, hbar2 must be positive");
    if (grid_n < 200) throw std::domain_error("solve_spectrum: grid_n must be >= 200");
    if (k_states < 1 || k_states > grid_n / 10)
        throw std::domain_error("solve_spectrum: k_states must be in [1, grid_n/10]");

    const int n_int = grid_n - 2;  // interior unknowns, walls pinned to zero
    const double h = 2.0 * eta0 / (grid_n - 1);
    const double kin = hbar2 * hbar2 / (2.0 * mass * h * h);

    std::vector<double> grid(grid_n);
    for (int i = 0; i < grid_n; ++i) grid[i] = -eta0 + i * h;

    std::vector<double> diag(n_int), off(n_int - 1, -kin);
    for (int i = 0; i < n_int; ++i) {
        const double ui = u(grid[i + 1]);
        if (!std::isfinite(ui))
            throw std::runtime_error("solve_spectrum: potential not finite at eta = " +
                                     std::to_string(grid[i + 1]));
        diag[i] = 2.0 * kin + ui;
    }

    // Gershgorin bounds bracket the whole spectrum.
    double lo = diag[0], hi = diag[0];
    for (int i = 0; i < n_int; ++i) {
        const double r = (i > 0 ? kin : 0.0) + (i + 1 < n_int ? kin : 0.0);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }
    if (!(lo < hi)) throw std::runtime_error("solve_spectrum: degenerate Gershgorin bracket");

    SpectrumResult res;
    res.grid = grid;

    for (int j = 1; j <= k_states; ++j) {
        const double lambda = bisect_eigenvalue(diag, off, j, lo, hi);
        res.eigenvalues.push_back(lambda);
    }

    // Inverse iteration per eigenvalue; deterministic sine seed.
    for (int j = 0; j < k_states; ++j) {
        const double lambda = res.eigenvalues[j];
        std::vector<double> w(n_int);
        for (int i = 0; i < n_int; ++i)
            w[i] = std::sin((j + 1) * kPi * (grid[i + 1] + eta0) / (2.0 * eta0));

        for (int iter = 0; iter < 3; ++iter) {
            // Solve (T - lambda I) z = w, tridiagonal LU with partial pivoting.
            std::vector<double> a(n_int), b(n_int, 0.0), c(n_int, 0.0), z(w);
            for (int i = 0; i < n_int; ++i) a[i] = diag[i] - lambda;
            for (int i = 0; i + 1 < n_int; ++i) b[i] = off[i];
            std::vector<double> sub(n_int, 0.0);
            for (int i = 0; i + 1 < n_int; ++i) sub[i + 1] = off[i];

            for (int i = 0; i + 1 < n_int; ++i) {
                if (std::abs(sub[i + 1]) > std::abs(a[i])) {
                    std::swap(a[i], sub[i + 1]);
                    std::swap(b[i], a[i + 1]);
                    std::swap(c[i], b[i + 1]);
                    std::swap(z[i], z[i + 1]);
                }
                if (a[i] == 0.0) a[i] = 1e-300;
                const double m = sub[i + 1] / a[i];
                a[i + 1] -= m * b[i];
                b[i + 1] -= m * c[i];
                z[i + 1] -= m * z[i];
            }
            if (a[n_int - 1] == 0.0) a[n_int - 1] = 1e-300;

            for (int i = n_int - 1; i >= 0; --i) {
                double acc = z[i];
                if (i + 1 < n_int) acc -= b[i] * z[i + 1];
                if (i + 2 < n_int) acc -= c[i] * z[i + 2];
                z[i] = acc / a[i];
            }
            double norm = 0.0;
            for (double vz : z) norm += vz * vz;
            norm = std::sqrt(norm);
            if (!(norm > 0.0) || !std::isfinite(norm))
                throw std::runtime_error("solve_spectrum: inverse iteration broke down");
            for (int i = 0; i < n_int; ++i) w[i] = z[i] / norm;
        }

        // Orthogonalize within near-degenerate clusters.
        for (int q = 0; q < j; ++q) {
            if (std::abs(res.eigenvalues[q] - lambda) >
                1e-6 * std::max(1.0, std::abs(lambda)))
                continue;
            double dot = 0.0;
            for (int i = 0; i < n_int; ++i) dot += w[i] * res.eigenvectors[q][i + 1];
            // previous vectors are trapezoid-normalized: <.,.> carries the h weight
            dot *= h;
            for (int i = 0; i < n_int; ++i) w[i] -= dot * res.eigenvectors[q][i + 1];
        }

        // Trapezoid normalization (wall values are zero).
        double nrm2 = 0.0;
        for (double vw : w) nrm2 += vw * vw;
        nrm2 *= h;
        const double scale = 1.0 / std::sqrt(nrm2);

        std::vector<double> full(grid_n, 0.0);
        for (int i = 0; i < n_int; ++i) full[i + 1] = w[i] * scale;

        // Deterministic sign: largest-magnitude component positive.
        int imax = 0;
        for (int i = 1; i < grid_n; ++i)
            if (std::abs(full[i]) > std::abs(full[imax])) imax = i;
        if (full[imax] < 0.0)
            for (double& vf : full) vf = -vf;

        res.eigenvectors.push_back(std::move(full));
    }

    // Parity tags on the symmetric grid.
    for (const auto& vec : res.eigenvectors) {
        double se = 0.0, so = 0.0, n1 = 0.0;
        for (int i = 0; i < grid_n; ++i) {
            const double mirror = vec[grid_n - 1 - i];
            se += std::abs(vec[i] - mirror);
            so += std::abs(vec[i] + mirror);
            n1 += std::abs(vec[i]);
        }
        if (se <= 1e-6 * n1)
            res.parity.push_back(Parity::Even);
        else if (so <= 1e-6 * n1)
            res.parity.push_back(Parity::Odd);
        else
            res.parity.push_back(Parity::None);
    }

    return res;
}

namespace {

/// Natural cubic spline on a uniform grid.
class CubicSpline {
  public:
    CubicSpline(std::vector<double> x, std::vector<double> y)
        : x_(std::move(x)), y_(std::move(y)), m_(x_.size(), 0.0) {
        const std::size_t n = x_.size();
        if (n < 3) throw std::domain_error("CubicSpline: need at least 3 nodes");
        std::vector<double> a(n, 0.0), b(n, 2.0), c(n, 0.0), r(n, 0.0);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            const double hl = x_[i] - x_[i - 1];
            const double hr = x_[i + 1] - x_[i];
            a[i] = hl / (hl + hr);
            c[i] = hr / (hl + hr);
            r[i] = 6.0 / (hl + hr) * ((y_[i + 1] - y_[i]) / hr - (y_[i] - y_[i - 1]) / hl);
        }
        // Thomas sweep (diagonally dominant).
        for (std::size_t i = 1; i < n; ++i) {
            const double m = a[i] / b[i - 1];
            b[i] -= m * c[i - 1];
            r[i] -= m * r[i - 1];
        }
        m_[n - 1] = r[n - 1] / b[n - 1];
        for (std::size_t i = n - 1; i-- > 0;) m_[i] = (r[i] - c[i] * m_[i + 1]) / b[i];
    }

    double operator()(double x) const {
        if (x <= x_.front()) return y_.front();
        if (x >= x_.back()) return y_.back();
        const auto it = std::upper_bound(x_.begin(), x_.end(), x);
        const std::size_t i = static_cast<std::size_t>(it - x_.begin()) - 1;
        const double hseg = x_[i + 1] - x_[i];
        const double A = (x_[i + 1] - x) / hseg;
        const double B = (x - x_[i]) / hseg;
        return A * y_[i] + B * y_[i + 1] +
               ((A * A * A - A) * m_[i] + (B * B * B - B) * m_[i + 1]) * hseg * hseg / 6.0;
    }

  private:
    std::vector<double> x_, y_, m_;
};

}  // namespace

ComplexField lift_to_rank2(const EigenMode& mode, double hbar2) {
    auto spline = std::make_shared<CubicSpline>(mode.grid, mode.psi);
    const double eta0 = mode.grid.back();
    const double energy = mode.energy;
    return [spline, eta0, energy, hbar2](const ChainPoint& p) -> std::complex<double> {
        const double eta = p.x() - p.v() * p.t;
        if (std::abs(eta) >= eta0) return {0.0, 0.0};
        const double phase = -energy * p.t * p.t * p.t / (3.0 * hbar2);
        return std::polar(1.0, phase) * (*spline)(eta);
    };
}

}  // namespace displab

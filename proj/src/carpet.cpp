#include "revivals/carpet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace revivals {

namespace {

double axis_point(double lo, double hi, int n, int i) {
  if (i == n - 1) return hi;
  return lo + (hi - lo) * i / (n - 1);
}

}  // namespace

double CarpetGrid::x(int col) const {
  return axis_point(window.x_min, window.x_max, window.nx, col);
}

double CarpetGrid::t(int row) const {
  return axis_point(window.t_min, window.t_max, window.nt, row);
}

std::span<const double> CarpetGrid::row(int r) const {
  return std::span<const double>(density).subspan(static_cast<std::size_t>(r) * window.nx,
                                                  static_cast<std::size_t>(window.nx));
}

double CarpetGrid::at(int row, int col) const {
  return density[static_cast<std::size_t>(row) * window.nx + col];
}

std::vector<double> hermite_functions(double x, int truncation) {
  if (truncation < 0) throw std::invalid_argument("hermite_functions: truncation must be >= 0");
  std::vector<double> phi(static_cast<std::size_t>(truncation) + 1);
  phi[0] = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
  if (truncation >= 1) phi[1] = std::numbers::sqrt2 * x * phi[0];
  for (int n = 1; n < truncation; ++n) {
    const auto k = static_cast<std::size_t>(n);
    phi[k + 1] = std::sqrt(2.0 / (n + 1)) * x * phi[k] - std::sqrt(static_cast<double>(n) / (n + 1)) * phi[k - 1];
  }
  return phi;
}

Complex position_wavefunction(const CoherentLabel& label, double x, double t,
                              const Spectrum& spectrum, int truncation) {
  const FockVector state = evolve(coherent_state(label, truncation), spectrum, t);
  const auto phi = hermite_functions(x, truncation);
  Complex psi = 0.0;
  for (std::size_t n = 0; n < phi.size(); ++n) psi += state[n] * phi[n];
  return psi;
}

CarpetWindow default_carpet_window(const CoherentLabel& label, const Spectrum& spectrum, int nx,
                                   int nt) {
  const double half = std::max(6.0, std::numbers::sqrt2 * label.r() + 6.0 / std::numbers::sqrt2);
  return {-half, half, nx, 0.0, require_revival_time(spectrum), nt};
}

CarpetGrid carpet(const CoherentLabel& label, const Spectrum& spectrum, const CarpetWindow& window,
                  int truncation) {
  if (window.nx < 2 || window.nt < 2) throw std::invalid_argument("carpet: nx and nt must be >= 2");
  if (!(window.x_max > window.x_min)) throw std::invalid_argument("carpet: empty x range");
  CarpetGrid grid{window, std::vector<double>(static_cast<std::size_t>(window.nx) * window.nt)};

  // Basis table: phi(col, n).
  Eigen::MatrixXd phi(window.nx, truncation + 1);
  for (int c = 0; c < window.nx; ++c) {
    const auto row = hermite_functions(grid.x(c), truncation);
    for (int n = 0; n <= truncation; ++n) phi(c, n) = row[static_cast<std::size_t>(n)];
  }
  const Eigen::MatrixXcd basis = phi.cast<Complex>();
  const FockVector initial = coherent_state(label, truncation);
  for (int r = 0; r < window.nt; ++r) {
    const FockVector state = evolve(initial, spectrum, grid.t(r));
    Eigen::VectorXcd coeffs(truncation + 1);
    for (int n = 0; n <= truncation; ++n) coeffs(n) = state[static_cast<std::size_t>(n)];
    const Eigen::VectorXcd psi = basis * coeffs;
    for (int c = 0; c < window.nx; ++c) {
      grid.density[static_cast<std::size_t>(r) * window.nx + c] = std::norm(psi(c));
    }
  }
  return grid;
}

double row_integral(const CarpetGrid& grid, int row) {
  const auto values = grid.row(row);
  double sum = 0.0;
  for (int c = 0; c + 1 < grid.window.nx; ++c) {
    sum += 0.5 * (values[c] + values[c + 1]) * (grid.x(c + 1) - grid.x(c));
  }
  return sum;
}

int count_lobes(std::span<const double> row, double threshold) {
  if (row.empty()) return 0;
  const double cut = threshold * *std::max_element(row.begin(), row.end());
  int lobes = 0;
  bool inside = false;
  for (double v : row) {
    const bool above = v > cut;
    if (above && !inside) ++lobes;
    inside = above;
  }
  return lobes;
}

}  // namespace revivals

#pragma once

#include <span>
#include <vector>

#include "revivals/fock.hpp"
#include "revivals/spectra.hpp"

namespace revivals {

struct CarpetWindow {
  double x_min = -6.0;
  double x_max = 6.0;
  int nx = 400;
  double t_min = 0.0;
  double t_max = 1.0;
  int nt = 400;
};

/// |psi(x, t)|^2 sampled on an nt x nx grid, stored row-major (one row per time).
struct CarpetGrid {
  CarpetWindow window;
  std::vector<double> density;

  double x(int col) const;
  double t(int row) const;
  std::span<const double> row(int r) const;
  double at(int row, int col) const;
};

/// Normalized oscillator eigenfunctions phi_0..phi_N at x, from the three-term
/// recurrence (no factorials, no raw Hermite polynomials).
std::vector<double> hermite_functions(double x, int truncation);

Complex position_wavefunction(const CoherentLabel& label, double x, double t,
                              const Spectrum& spectrum, int truncation);

/// x in [-w, w] with w = max(6, sqrt2 |alpha| + 6/sqrt2), t over one revival.
CarpetWindow default_carpet_window(const CoherentLabel& label, const Spectrum& spectrum,
                                   int nx = 400, int nt = 400);

/// Requires nx, nt >= 2.
CarpetGrid carpet(const CoherentLabel& label, const Spectrum& spectrum, const CarpetWindow& window,
                  int truncation);

/// Trapezoid integral of a row over the grid's x axis.
double row_integral(const CarpetGrid& grid, int row);

/// Number of maximal runs of samples strictly above threshold * max(row).
int count_lobes(std::span<const double> row, double threshold = 0.1);

}  // namespace revivals

#include "revivals/classical.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace revivals {

namespace {

void validate(const PendulumArray& array) {
  if (array.count < 2) throw std::invalid_argument("pendulum: count must be >= 2");
  if (array.base_cycles < 1) throw std::invalid_argument("pendulum: base_cycles must be >= 1");
  if (!(array.t_rev > 0.0)) throw std::invalid_argument("pendulum: t_rev must be positive");
  if (!(array.amplitude > 0.0)) throw std::invalid_argument("pendulum: amplitude must be positive");
}

}  // namespace

double pendulum_frequency(const PendulumArray& array, int j) {
  const double k0 = array.base_cycles;
  if (array.mode == PendulumMode::integer_cycles) return (k0 + j) / array.t_rev;
  const double t0 = array.t_rev / k0;
  const double step = t0 - array.t_rev / (k0 + 1.0);
  return 1.0 / (t0 - j * step);
}

std::vector<double> pendulum_positions(const PendulumArray& array, double t) {
  validate(array);
  std::vector<double> x(static_cast<std::size_t>(array.count));
  for (int j = 0; j < array.count; ++j) {
    if (array.mode == PendulumMode::integer_cycles) {
      // Cycle count (K0 + j) t / t_rev reduced mod 1 before the cosine.
      const double cycles = (array.base_cycles + j) * (t / array.t_rev);
      x[static_cast<std::size_t>(j)] =
          array.amplitude * std::cos(2.0 * std::numbers::pi * (cycles - std::round(cycles)));
    } else {
      x[static_cast<std::size_t>(j)] =
          array.amplitude * std::cos(2.0 * std::numbers::pi * pendulum_frequency(array, j) * t);
    }
  }
  return x;
}

WaveCount wave_count(const PendulumArray& array, double t, double tolerance) {
  validate(array);
  if (!(t >= 0.0 && t <= array.t_rev)) throw std::out_of_range("wave_count: t outside [0, t_rev]");
  // Mean of z_{j+1} conj(z_j) with z_j = exp(2 pi i f_j t).
  std::complex<double> step = 0.0;
  for (int j = 0; j + 1 < array.count; ++j) {
    const double dphase = (pendulum_frequency(array, j + 1) - pendulum_frequency(array, j)) * t;
    step += std::polar(1.0, 2.0 * std::numbers::pi * dphase);
  }
  double phi = std::arg(step) / (2.0 * std::numbers::pi);
  if (phi < 0.0) phi += 1.0;
  for (int k = 1; k <= array.count; ++k) {
    const double kphi = k * phi;
    if (std::abs(kphi - std::round(kphi)) <= tolerance * k) return {k, array.count / k};
  }
  return {0, 0};
}

double talbot_length(double wavelength, double grating_period) {
  if (!(wavelength > 0.0) || !(wavelength <= grating_period)) {
    throw std::domain_error("talbot_length: need 0 < wavelength <= grating period");
  }
  const double ratio2 = (wavelength / grating_period) * (wavelength / grating_period);
  // 1 - sqrt(1 - u) = u / (1 + sqrt(1 - u)) avoids cancellation when lambda << a.
  return wavelength * (1.0 + std::sqrt(1.0 - ratio2)) / ratio2;
}

}  // namespace revivals

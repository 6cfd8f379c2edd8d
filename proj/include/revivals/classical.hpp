#pragma once

#include <vector>

namespace revivals {

enum class PendulumMode {
  integer_cycles,    ///< oscillator j completes K0 + j cycles per t_rev
  period_increment,  ///< periods in arithmetic progression; no exact recurrence
};

struct PendulumArray {
  int count = 100;
  int base_cycles = 30;
  double t_rev = 1.0;
  double amplitude = 1.0;
  PendulumMode mode = PendulumMode::integer_cycles;
};

/// Frequency of oscillator j. In period_increment mode the periods are
/// T_j = T_0 - j * (T_0 - T_1), with T_0 and T_1 taken from the integer-cycle model.
double pendulum_frequency(const PendulumArray& array, int j);

/// x_j(t) = amplitude * cos(2 pi f_j t).
std::vector<double> pendulum_positions(const PendulumArray& array, double t);

struct WaveCount {
  int waves = 0;
  int strength = 0;
};

/// At t = (j/k) t_rev in lowest terms the array forms k interleaved waves of
/// floor(M/k) oscillators. The index-space frequency is read off the mean
/// neighbour phase step and matched to the smallest k <= M. Returns {0, 0}
/// when no such k exists. Throws std::out_of_range for t outside [0, t_rev].
WaveCount wave_count(const PendulumArray& array, double t, double tolerance = 1e-9);

/// z = lambda / (1 - sqrt(1 - lambda^2 / a^2)). Throws std::domain_error unless
/// 0 < lambda <= a.
double talbot_length(double wavelength, double grating_period);

}  // namespace revivals

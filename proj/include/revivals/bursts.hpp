#pragma once

#include <vector>

#include "revivals/moments.hpp"

namespace revivals {

struct BurstWindow {
  int l = 0;
  int m = 1;
  double center = 0.0;
  double ratio = 0.0;
  bool detected = false;
};

struct BurstReport {
  std::vector<BurstWindow> windows;
  double threshold = 10.0;

  /// Whether the window at (l/m) T_rev fired; false if there is no such window.
  bool detected_at(int l, int m) const;
  const BurstWindow* find(int l, int m) const;
};

/// Windows of width window_frac * T_rev sit at every reduced fraction l/m in
/// (0, 1] with m <= k_max. Distances wrap modulo T_rev, so the l/m = 1 window
/// also covers the start of the trace. Each ratio is the variance inside the
/// window over the variance outside every window. Variances below
/// (1e-12 max|value|)^2 count as rounding noise: such a window scores 0 and the
/// outside variance is floored there.
/// Throws std::invalid_argument for an empty trace.
BurstReport detect_bursts(const ObservableTrace& trace, double revival_time, int k_max,
                          double window_frac = 1.0 / 50.0, double threshold = 10.0);

}  // namespace revivals

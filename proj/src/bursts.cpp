#include "revivals/bursts.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace revivals {

bool BurstReport::detected_at(int l, int m) const {
  const BurstWindow* w = find(l, m);
  return w != nullptr && w->detected;
}

const BurstWindow* BurstReport::find(int l, int m) const {
  const int g = std::gcd(l, m);
  for (const auto& w : windows) {
    if (w.l == l / g && w.m == m / g) return &w;
  }
  return nullptr;
}

namespace {

double variance(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  double acc = 0.0;
  for (double x : v) acc += (x - mean) * (x - mean);
  return acc / static_cast<double>(v.size());
}

double wrapped_distance(double t, double center, double period) {
  const double d = std::fmod(std::abs(t - center), period);
  return std::min(d, period - d);
}

}  // namespace

BurstReport detect_bursts(const ObservableTrace& trace, double revival_time, int k_max,
                          double window_frac, double threshold) {
  if (trace.times.empty() || trace.values.size() != trace.times.size()) {
    throw std::invalid_argument("detect_bursts: empty or ragged trace");
  }
  if (!(revival_time > 0.0)) throw std::invalid_argument("detect_bursts: revival_time must be > 0");
  if (k_max < 1) throw std::invalid_argument("detect_bursts: k_max must be >= 1");
  if (!(window_frac > 0.0 && window_frac < 1.0)) {
    throw std::invalid_argument("detect_bursts: window_frac must be in (0, 1)");
  }

  BurstReport report;
  report.threshold = threshold;
  for (int m = 1; m <= k_max; ++m) {
    for (int l = 1; l <= m; ++l) {
      if (std::gcd(l, m) == 1) report.windows.push_back({l, m, revival_time * l / m});
    }
  }
  std::sort(report.windows.begin(), report.windows.end(),
            [](const BurstWindow& a, const BurstWindow& b) { return a.l * b.m < b.l * a.m; });

  const double half = 0.5 * window_frac * revival_time;
  std::vector<std::vector<double>> inside(report.windows.size());
  std::vector<double> outside;
  for (std::size_t i = 0; i < trace.times.size(); ++i) {
    bool in_any = false;
    for (std::size_t w = 0; w < report.windows.size(); ++w) {
      if (wrapped_distance(trace.times[i], report.windows[w].center, revival_time) <= half) {
        inside[w].push_back(trace.values[i]);
        in_any = true;
      }
    }
    if (!in_any) outside.push_back(trace.values[i]);
  }
  // Fluctuations at the rounding level of the trace are not structure.
  double scale = 0.0;
  for (double v : trace.values) scale = std::max(scale, std::abs(v));
  const double noise = std::max(1e-300, (1e-12 * scale) * (1e-12 * scale));
  const double var_out = std::max(variance(outside), noise);
  for (std::size_t w = 0; w < report.windows.size(); ++w) {
    const double var_in = variance(inside[w]);
    report.windows[w].ratio = var_in <= noise ? 0.0 : var_in / var_out;
    report.windows[w].detected = report.windows[w].ratio >= threshold;
  }
  return report;
}

}  // namespace revivals

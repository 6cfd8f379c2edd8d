#include "revivals/moments.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "revivals/normal_order.hpp"

namespace revivals {

namespace {

Complex int_pow(Complex base, int power) {
  Complex out = 1.0;
  for (int i = 0; i < power; ++i) out *= base;
  return out;
}

double int_pow(double base, int power) {
  double out = 1.0;
  for (int i = 0; i < power; ++i) out *= base;
  return out;
}

// 1 - cos(2x) written without cancellation.
double one_minus_cos2(double x) {
  const double s = std::sin(x);
  return 2.0 * s * s;
}

}  // namespace

Complex general_moment(const MomentQuery& query) {
  const int r = query.r;
  const int s = query.s;
  if (r < 0 || s < 0) throw std::invalid_argument("general_moment: r and s must be >= 0");
  const double nu = query.label.nu();
  const double chi_t = query.chi * query.t;
  const double damping = std::exp(-nu * one_minus_cos2(chi_t * s));
  const double phase = chi_t * (s * (s - 1) + 2.0 * r * s) + nu * std::sin(2.0 * chi_t * s);
  return int_pow(query.label.alpha(), s) * int_pow(nu, r) * damping * std::polar(1.0, -phase);
}

Complex ladder_moment(int creation_power, int annihilation_power, const CoherentLabel& label,
                      double chi, double t) {
  if (creation_power < 0 || annihilation_power < 0) {
    throw std::invalid_argument("ladder_moment: powers must be >= 0");
  }
  if (annihilation_power >= creation_power) {
    return general_moment(
        {creation_power, annihilation_power - creation_power, label, chi, t});
  }
  return std::conj(general_moment(
      {annihilation_power, creation_power - annihilation_power, label, chi, t}));
}

Complex autocorrelation(const CoherentLabel& label, const Spectrum& spectrum, double t) {
  const auto probs = number_distribution(label, auto_truncation(label.nu()));
  Complex sum = 0.0;
  for (std::size_t n = 0; n < probs.size(); ++n) {
    // conj of the evolution phase: <psi(t)| carries exp(+i chi E t)
    sum += probs[n] * std::conj(evolution_phase(spectrum.energy(static_cast<int>(n)),
                                                spectrum.chi(), t));
  }
  return sum;
}

double expect_x(const CoherentLabel& label, double chi, double t) {
  const double nu = label.nu();
  const double damping = std::exp(-nu * one_minus_cos2(chi * t));
  const double phase = nu * std::sin(2.0 * chi * t);
  return damping * (label.p * std::cos(phase) + label.q * std::sin(phase));
}

double expect_p(const CoherentLabel& label, double chi, double t) {
  const double nu = label.nu();
  const double damping = std::exp(-nu * one_minus_cos2(chi * t));
  const double phase = nu * std::sin(2.0 * chi * t);
  return damping * (-label.p * std::sin(phase) + label.q * std::cos(phase));
}

namespace {

// e^{-nu(1 - cos 4 chi t)} [(p^2 - q^2) cos(psi) + 2pq sin(psi)], psi = 2 chi t + nu sin 4 chi t
double second_moment_bracket(const CoherentLabel& label, double chi, double t) {
  const double nu = label.nu();
  const double damping = std::exp(-nu * one_minus_cos2(2.0 * chi * t));
  const double psi = 2.0 * chi * t + nu * std::sin(4.0 * chi * t);
  const double p = label.p;
  const double q = label.q;
  return damping * ((p * p - q * q) * std::cos(psi) + 2.0 * p * q * std::sin(psi));
}

}  // namespace

double expect_x2(const CoherentLabel& label, double chi, double t) {
  const double p = label.p;
  const double q = label.q;
  return 0.5 * (1.0 + p * p + q * q + second_moment_bracket(label, chi, t));
}

double expect_p2(const CoherentLabel& label, double chi, double t) {
  const double p = label.p;
  const double q = label.q;
  return 0.5 * (1.0 + p * p + q * q - second_moment_bracket(label, chi, t));
}

double expect_quadrature_power(Quadrature quadrature, int power, const CoherentLabel& label,
                               double chi, double t) {
  Complex sum = 0.0;
  for (const auto& [powers, coeff] : quadrature_normal_form(quadrature, power)) {
    sum += coeff * ladder_moment(powers.first, powers.second, label, chi, t);
  }
  return sum.real();
}

ObservableTrace sample_trace(std::span<const double> times, const std::function<double(double)>& f,
                             std::string meaning) {
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) {
      throw std::invalid_argument("sample_trace: times must be strictly increasing");
    }
  }
  ObservableTrace trace;
  trace.times.assign(times.begin(), times.end());
  trace.values.reserve(times.size());
  for (double t : times) trace.values.push_back(f(t));
  trace.meaning = std::move(meaning);
  return trace;
}

std::vector<double> linspace(double start, double stop, int n) {
  if (n < 2) throw std::invalid_argument("linspace: need at least two points");
  std::vector<double> out(static_cast<std::size_t>(n));
  const double step = (stop - start) / (n - 1);
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = start + step * i;
  out.back() = stop;
  return out;
}

UncertaintyTrace uncertainty_trace(const CoherentLabel& label, double chi,
                                   std::span<const double> times) {
  auto dx = [&](double t) {
    const double mean = expect_x(label, chi, t);
    return std::sqrt(std::max(0.0, expect_x2(label, chi, t) - mean * mean));
  };
  auto dp = [&](double t) {
    const double mean = expect_p(label, chi, t);
    return std::sqrt(std::max(0.0, expect_p2(label, chi, t) - mean * mean));
  };
  UncertaintyTrace out;
  out.delta_x = sample_trace(times, dx, "Δx");
  out.delta_p = sample_trace(times, dp, "Δp");
  out.product.times = out.delta_x.times;
  out.product.meaning = "ΔxΔp";
  out.product.values.reserve(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    out.product.values.push_back(out.delta_x.values[i] * out.delta_p.values[i]);
  }
  return out;
}

Complex numerical_expectation(const FockVector& state, const OperatorMatrix& op) {
  if (op.entries.rows() != op.entries.cols()) {
    throw std::invalid_argument("numerical_expectation: operator is not square");
  }
  if (op.truncation() < state.truncation()) {
    throw std::invalid_argument("numerical_expectation: operator smaller than state");
  }
  const FockVector v = state.padded(op.truncation());
  const Eigen::Map<const Eigen::VectorXcd> ket(v.amplitudes().data(),
                                               static_cast<Eigen::Index>(v.size()));
  const Eigen::VectorXcd applied = op.entries * ket;
  return ket.dot(applied);  // Eigen's dot conjugates the left operand
}

const OperatorMatrix& OperatorCache::normal_ordered(int r, int s, int truncation) {
  const auto key = std::make_tuple(r, s, truncation);
  {
    std::shared_lock lock(mutex_);
    if (auto it = matrices_.find(key); it != matrices_.end()) return it->second;
  }
  std::unique_lock lock(mutex_);
  auto [it, inserted] = matrices_.try_emplace(key);
  if (inserted) it->second = normal_ordered_matrix(r, s, truncation);
  return it->second;
}

}  // namespace revivals

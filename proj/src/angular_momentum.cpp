#include "revivals/angular_momentum.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "revivals/moments.hpp"
#include "revivals/spectra.hpp"

namespace revivals {

NormalOrderedSum lx_power_expand(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("lx_power_expand: n must be in 1..4");
  // Each factor is either u^dag v (weight +1) or v^dag u (weight -1).
  std::map<std::array<int, 4>, std::int64_t> weights;
  for (unsigned bits = 0; bits < (1u << n); ++bits) {
    std::vector<ModeOp> word;
    std::int64_t sign = 1;
    for (int i = 0; i < n; ++i) {
      if ((bits >> i) & 1u) {
        word.push_back(ModeOp::v_create);
        word.push_back(ModeOp::u_annihilate);
        sign = -sign;
      } else {
        word.push_back(ModeOp::u_create);
        word.push_back(ModeOp::v_annihilate);
      }
    }
    for (const auto& [powers, w] : normal_order_two_mode(word)) weights[powers] += sign * w;
  }
  const Complex scale = std::pow(1.0 / Complex(0.0, 2.0), n);
  NormalOrderedSum out;
  for (const auto& [powers, w] : weights) {
    if (w != 0) out.terms.push_back({scale * static_cast<double>(w), powers});
  }
  return out;
}

namespace {

std::pair<CoherentLabel, CoherentLabel> axis_modes(Axis axis, const TriModeLabel& label) {
  switch (axis) {
    case Axis::x: return {label.beta, label.gamma};
    case Axis::y: return {label.gamma, label.alpha};
    case Axis::z: return {label.alpha, label.beta};
  }
  throw std::invalid_argument("unknown axis");
}

// Expansions are immutable, so build them once.
const NormalOrderedSum& cached_expansion(int n) {
  static const std::array<NormalOrderedSum, 4> table = {lx_power_expand(1), lx_power_expand(2),
                                                        lx_power_expand(3), lx_power_expand(4)};
  if (n < 1 || n > 4) throw std::invalid_argument("lx_moment: n must be in 1..4");
  return table[static_cast<std::size_t>(n - 1)];
}

double moment_from_modes(int n, const CoherentLabel& u, const CoherentLabel& v, double chi,
                         double t) {
  Complex sum = 0.0;
  double magnitude = 0.0;
  for (const auto& term : cached_expansion(n).terms) {
    const auto& j = term.powers;
    const Complex value = term.coefficient * ladder_moment(j[0], j[1], u, chi, t) *
                          ladder_moment(j[2], j[3], v, chi, t);
    sum += value;
    magnitude += std::abs(value);
  }
  if (std::abs(sum.imag()) > 1e-8 * std::max(1.0, magnitude)) {
    throw std::logic_error("lx_moment: expansion produced a non-real expectation");
  }
  return sum.real();
}

Eigen::VectorXcd evolved_mode(const CoherentLabel& label, double chi, double t, int truncation,
                              int padding) {
  const FockVector state = evolve(coherent_state(label, truncation), Spectrum::kerr(chi), t);
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(truncation + 1 + padding);
  for (std::size_t k = 0; k < state.size(); ++k) out(static_cast<Eigen::Index>(k)) = state[k];
  return out;
}

double oracle_from_modes(int n, const CoherentLabel& u, const CoherentLabel& v, double chi,
                         double t, int truncation) {
  if (n < 1 || n > 4) throw std::invalid_argument("lx_moment_oracle: n must be in 1..4");
  if (truncation < 1) throw std::invalid_argument("lx_moment_oracle: truncation must be >= 1");
  const double dim = static_cast<double>(truncation + 1) * (truncation + 1);
  if (dim > 4e6) throw std::length_error("lx_moment_oracle: two-mode space exceeds 4e6 states");

  // Padding by n levels keeps every intermediate occupation inside the grid.
  const int big = truncation + n;
  const Eigen::MatrixXcd a = ladder_matrix(Ladder::annihilation, big).entries;
  const Eigen::MatrixXcd ad = ladder_matrix(Ladder::creation, big).entries;
  const Eigen::MatrixXcd at = a.transpose();
  const Eigen::MatrixXcd adt = ad.transpose();

  // grid(i, j) is the amplitude of |i>_u |j>_v; (X (x) Y) acts as X grid Y^T.
  const Eigen::VectorXcd psi_u = evolved_mode(u, chi, t, truncation, n);
  const Eigen::VectorXcd psi_v = evolved_mode(v, chi, t, truncation, n);
  const Eigen::MatrixXcd grid = psi_u * psi_v.transpose();
  Eigen::MatrixXcd applied = grid;
  const Complex inv_2i = 1.0 / Complex(0.0, 2.0);
  for (int k = 0; k < n; ++k) {
    applied = (ad * applied * at - a * applied * adt) * inv_2i;
  }
  const Complex value = (grid.conjugate().cwiseProduct(applied)).sum();
  return value.real();
}

}  // namespace

double lx_moment(int n, const TriModeLabel& label, double chi, double t) {
  return moment_from_modes(n, label.beta, label.gamma, chi, t);
}

double angular_moment(Axis axis, int n, const TriModeLabel& label, double chi, double t) {
  const auto [u, v] = axis_modes(axis, label);
  return moment_from_modes(n, u, v, chi, t);
}

double lx_moment_oracle(int n, const TriModeLabel& label, double chi, double t, int truncation) {
  return oracle_from_modes(n, label.beta, label.gamma, chi, t, truncation);
}

double angular_moment_oracle(Axis axis, int n, const TriModeLabel& label, double chi, double t,
                             int truncation) {
  const auto [u, v] = axis_modes(axis, label);
  return oracle_from_modes(n, u, v, chi, t, truncation);
}

}  // namespace revivals

#include "revivals/fock.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace revivals {

CoherentLabel CoherentLabel::from_alpha(Complex alpha) {
  return {std::numbers::sqrt2 * alpha.real(), std::numbers::sqrt2 * alpha.imag()};
}

CoherentLabel CoherentLabel::from_polar(double r, double theta) {
  return from_alpha(std::polar(r, theta));
}

Complex CoherentLabel::alpha() const {
  return Complex(p, q) / std::numbers::sqrt2;
}

double CoherentLabel::nu() const { return 0.5 * (p * p + q * q); }

double CoherentLabel::r() const { return std::hypot(p, q) / std::numbers::sqrt2; }

double CoherentLabel::theta() const { return std::atan2(q, p); }

FockVector::FockVector(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) {
    throw std::invalid_argument("FockVector: at least one amplitude is required");
  }
  if (norm2() > 1.0 + 1e-12) {
    throw std::invalid_argument("FockVector: squared norm exceeds 1");
  }
}

FockVector FockVector::basis_state(int n, int truncation) {
  if (n < 0 || n > truncation) {
    throw std::invalid_argument("FockVector::basis_state: index outside truncation");
  }
  std::vector<Complex> amps(static_cast<std::size_t>(truncation) + 1);
  amps[static_cast<std::size_t>(n)] = 1.0;
  return FockVector(std::move(amps));
}

double FockVector::norm2() const {
  double sum = 0.0;
  for (const auto& c : amplitudes_) sum += std::norm(c);
  return sum;
}

bool FockVector::is_normalized(double tolerance) const {
  return std::abs(norm2() - 1.0) <= tolerance;
}

FockVector FockVector::padded(int truncation) const {
  if (truncation < this->truncation()) {
    throw std::invalid_argument("FockVector::padded: cannot shrink a state");
  }
  std::vector<Complex> amps(amplitudes_);
  amps.resize(static_cast<std::size_t>(truncation) + 1);
  return FockVector(std::move(amps));
}

int auto_truncation(double nu) {
  return static_cast<int>(std::ceil(nu + 10.0 * std::sqrt(nu) + 20.0));
}

CoherentAmplitudes coherent_amplitudes(const CoherentLabel& label, int truncation,
                                       double tolerance) {
  if (truncation < 0) throw std::invalid_argument("coherent_amplitudes: truncation < 0");
  const double nu = label.nu();
  const double theta = label.theta();

  // Extended precision: at nu ~ 1e3 the log terms are ~1e4 and double
  // rounding alone would push the norm past 1 + 1e-12.
  std::vector<Complex> amps(static_cast<std::size_t>(truncation) + 1);
  amps[0] = std::exp(-0.5 * nu);
  if (nu > 0.0) {
    const long double log_r = 0.5L * std::log(static_cast<long double>(nu));
    for (int n = 1; n <= truncation; ++n) {
      const long double log_mag = n * log_r - 0.5L * std::lgamma(n + 1.0L) - 0.5L * nu;
      amps[static_cast<std::size_t>(n)] =
          std::polar(static_cast<double>(std::exp(log_mag)), n * theta);
    }
  }

  long double mass = 0.0L;
  for (const auto& c : amps) mass += std::norm(c);
  const double tail = std::max(0.0, static_cast<double>(1.0L - mass));
  return {FockVector(std::move(amps)), tail, tail > tolerance};
}

FockVector coherent_state(const CoherentLabel& label, int truncation) {
  return coherent_amplitudes(label, truncation).state;
}

std::vector<double> number_distribution(const CoherentLabel& label, int truncation) {
  if (truncation < 0) throw std::invalid_argument("number_distribution: truncation < 0");
  const double nu = label.nu();
  std::vector<double> probs(static_cast<std::size_t>(truncation) + 1, 0.0);
  probs[0] = std::exp(-nu);
  if (nu > 0.0) {
    const long double log_nu = std::log(static_cast<long double>(nu));
    for (int n = 1; n <= truncation; ++n) {
      probs[static_cast<std::size_t>(n)] =
          static_cast<double>(std::exp(n * log_nu - std::lgamma(n + 1.0L) - nu));
    }
  }
  return probs;
}

Complex inner_product(const FockVector& bra, const FockVector& ket) {
  if (bra.size() != ket.size()) {
    throw std::invalid_argument("inner_product: truncation mismatch");
  }
  Complex sum = 0.0;
  for (std::size_t n = 0; n < bra.size(); ++n) sum += std::conj(bra[n]) * ket[n];
  return sum;
}

OperatorMatrix ladder_matrix(Ladder kind, int truncation) {
  if (truncation < 1) throw std::invalid_argument("ladder_matrix: truncation must be >= 1");
  const Eigen::Index dim = truncation + 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  switch (kind) {
    case Ladder::annihilation:
      for (Eigen::Index n = 1; n < dim; ++n) m(n - 1, n) = std::sqrt(static_cast<double>(n));
      return {std::move(m), "a"};
    case Ladder::creation:
      for (Eigen::Index n = 1; n < dim; ++n) m(n, n - 1) = std::sqrt(static_cast<double>(n));
      return {std::move(m), "a†"};
    case Ladder::number:
      for (Eigen::Index n = 0; n < dim; ++n) m(n, n) = static_cast<double>(n);
      return {std::move(m), "N"};
  }
  throw std::invalid_argument("ladder_matrix: unknown kind");
}

namespace {

Eigen::MatrixXcd matrix_power(const Eigen::MatrixXcd& m, int power) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  for (int i = 0; i < power; ++i) out = out * m;
  return out;
}

}  // namespace

OperatorMatrix normal_ordered_matrix(int r, int s, int truncation) {
  if (r < 0 || s < 0) throw std::invalid_argument("normal_ordered_matrix: negative power");
  const int extended = std::max(1, truncation + r + s);
  const auto a = ladder_matrix(Ladder::annihilation, extended).entries;
  const auto adag = ladder_matrix(Ladder::creation, extended).entries;
  Eigen::MatrixXcd full = matrix_power(adag, r) * matrix_power(a, r + s);
  const Eigen::Index dim = truncation + 1;
  return {full.topLeftCorner(dim, dim),
          "a†^" + std::to_string(r) + " a^" + std::to_string(r + s)};
}

OperatorMatrix quadrature_power_matrix(Quadrature quadrature, int power, int truncation) {
  if (power < 0) throw std::invalid_argument("quadrature_power_matrix: negative power");
  const int extended = std::max(1, truncation + power);
  const auto a = ladder_matrix(Ladder::annihilation, extended).entries;
  const auto adag = ladder_matrix(Ladder::creation, extended).entries;
  Eigen::MatrixXcd single;
  std::string name;
  if (quadrature == Quadrature::x) {
    single = (a + adag) / std::numbers::sqrt2;
    name = "x";
  } else {
    single = (a - adag) / Complex(0.0, std::numbers::sqrt2);
    name = "p";
  }
  Eigen::MatrixXcd full = matrix_power(single, power);
  const Eigen::Index dim = truncation + 1;
  return {full.topLeftCorner(dim, dim), name + "^" + std::to_string(power)};
}

}  // namespace revivals

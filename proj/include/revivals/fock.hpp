#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace revivals {

using Complex = std::complex<double>;

/// Default bound on the probability mass dropped by a truncated coherent state.
inline constexpr double kTruncationTolerance = 1e-10;

/// Eigenvalue of the annihilation operator, stored as the quadrature pair
/// (p, q) with alpha = (p + i q) / sqrt(2). Units: hbar = m = omega = 1.
struct CoherentLabel {
  double p = 0.0;
  double q = 0.0;

  static CoherentLabel from_alpha(Complex alpha);
  static CoherentLabel from_polar(double r, double theta);

  Complex alpha() const;
  /// Mean photon number |alpha|^2 = (p^2 + q^2) / 2.
  double nu() const;
  double r() const;
  double theta() const;
};

/// Amplitudes over the number states |0>, ..., |N>.
class FockVector {
 public:
  /// Throws std::invalid_argument for an empty sequence or a squared norm
  /// above 1 + 1e-12.
  explicit FockVector(std::vector<Complex> amplitudes);

  static FockVector basis_state(int n, int truncation);

  int truncation() const { return static_cast<int>(amplitudes_.size()) - 1; }
  std::size_t size() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  const Complex& operator[](std::size_t n) const { return amplitudes_[n]; }

  double norm2() const;
  bool is_normalized(double tolerance = kTruncationTolerance) const;

  /// Same state embedded in a larger truncation (zero padded).
  FockVector padded(int truncation) const;

 private:
  std::vector<Complex> amplitudes_;
};

/// Truncation N = ceil(nu + 10 sqrt(nu) + 20); the Poisson tail beyond it
/// is below 1e-12 for nu <= 1e4.
int auto_truncation(double nu);

struct CoherentAmplitudes {
  FockVector state;
  double tail_mass = 0.0;     ///< 1 - sum |c_n|^2, clamped at 0
  bool tail_warning = false;  ///< tail_mass exceeded the tolerance
};

/// c_n = exp(-|alpha|^2/2) alpha^n / sqrt(n!), assembled in log space so
/// that truncations in the thousands do not overflow.
CoherentAmplitudes coherent_amplitudes(const CoherentLabel& label, int truncation,
                                       double tolerance = kTruncationTolerance);

/// Shorthand for coherent_amplitudes(label, truncation).state.
FockVector coherent_state(const CoherentLabel& label, int truncation);

/// Poisson weights exp(-nu) nu^n / n! for n = 0..N.
std::vector<double> number_distribution(const CoherentLabel& label, int truncation);

Complex inner_product(const FockVector& bra, const FockVector& ket);

enum class Ladder { annihilation, creation, number };
enum class Quadrature { x, p };

struct OperatorMatrix {
  Eigen::MatrixXcd entries;
  std::string label;

  int truncation() const { return static_cast<int>(entries.rows()) - 1; }
};

/// Exact truncated ladder matrix; requires truncation >= 1.
OperatorMatrix ladder_matrix(Ladder kind, int truncation);

/// a^{dag r} a^{r+s} formed as the matrix product creation^r * annihilation^{r+s}
/// on truncation N + r + s and cropped back to N.
OperatorMatrix normal_ordered_matrix(int r, int s, int truncation);

/// x^k with x = (a + a^dag)/sqrt(2), or p^k with p = (a - a^dag)/(i sqrt(2)),
/// formed on truncation N + k and cropped back to N so that the edge row and
/// column do not lose the a a^dag contributions.
OperatorMatrix quadrature_power_matrix(Quadrature quadrature, int power, int truncation);

}  // namespace revivals

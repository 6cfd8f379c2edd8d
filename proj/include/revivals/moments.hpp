#pragma once

#include <functional>
#include <map>
#include <shared_mutex>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "revivals/fock.hpp"
#include "revivals/spectra.hpp"

namespace revivals {

/// Selects <a^{dag r} a^{r+s}> on a coherent state evolved under the Kerr
/// Hamiltonian chi * N(N-1) for time t.
struct MomentQuery {
  int r = 0;
  int s = 0;
  CoherentLabel label;
  double chi = 1.0;
  double t = 0.0;
};

/// alpha^s nu^r exp(-nu (1 - cos 2 chi s t)) exp(-i chi (s(s-1) + 2rs) t - i nu sin 2 chi s t)
Complex general_moment(const MomentQuery& query);

/// <a^{dag j} a^k> for any pair of powers; j > k is the conjugate of the
/// corresponding general_moment.
Complex ladder_moment(int creation_power, int annihilation_power, const CoherentLabel& label,
                      double chi, double t);

/// <psi(t)|psi(0)> = exp(-nu) sum_n nu^n/n! exp(+i chi E_n t), summed to the
/// auto-truncation of the label.
Complex autocorrelation(const CoherentLabel& label, const Spectrum& spectrum, double t);

// Closed forms for the quadratures under Kerr evolution.
double expect_x(const CoherentLabel& label, double chi, double t);
double expect_p(const CoherentLabel& label, double chi, double t);
double expect_x2(const CoherentLabel& label, double chi, double t);
double expect_p2(const CoherentLabel& label, double chi, double t);

/// <x^k> or <p^k> via the normal-ordered expansion and general_moment.
double expect_quadrature_power(Quadrature quadrature, int power, const CoherentLabel& label,
                               double chi, double t);

struct ObservableTrace {
  std::vector<double> times;
  std::vector<double> values;
  std::string meaning;
};

/// Samples f over strictly increasing times.
ObservableTrace sample_trace(std::span<const double> times, const std::function<double(double)>& f,
                             std::string meaning);

/// n evenly spaced points over [start, stop], both ends included.
std::vector<double> linspace(double start, double stop, int n);

struct UncertaintyTrace {
  ObservableTrace product;  ///< dx * dp
  ObservableTrace delta_x;
  ObservableTrace delta_p;
};

UncertaintyTrace uncertainty_trace(const CoherentLabel& label, double chi,
                                   std::span<const double> times);

/// <v|M|v> by direct matrix-vector product. The operator may be built on a
/// larger truncation than the state; the state is zero padded to match.
Complex numerical_expectation(const FockVector& state, const OperatorMatrix& op);

/// Shared cache of normal-ordered operator matrices keyed by (r, s, N).
/// Lookups take a shared lock; the first build of a key takes the exclusive lock.
class OperatorCache {
 public:
  const OperatorMatrix& normal_ordered(int r, int s, int truncation);

 private:
  std::shared_mutex mutex_;
  std::map<std::tuple<int, int, int>, OperatorMatrix> matrices_;
};

}  // namespace revivals

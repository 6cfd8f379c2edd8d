#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "revivals/fock.hpp"

namespace revivals {

enum class SpectrumKind { harmonic, kerr, square_well, custom };

/// Diagonal Hamiltonian H|n> = chi * energy(n) |n>, with energy in units of
/// hbar * chi. chi must be positive.
class Spectrum {
 public:
  static Spectrum harmonic(double chi = 1.0);
  static Spectrum kerr(double chi = 1.0);
  static Spectrum square_well(double chi = 1.0);
  static Spectrum custom(std::function<double(int)> energy, double chi = 1.0,
                         std::string name = "custom");

  SpectrumKind kind() const { return kind_; }
  double chi() const { return chi_; }
  const std::string& name() const { return name_; }
  double energy(int n) const;

 private:
  Spectrum(SpectrumKind kind, double chi, std::string name, std::function<double(int)> energy);

  SpectrumKind kind_;
  double chi_;
  std::string name_;
  std::function<double(int)> energy_;
};

/// exp(-i * chi * energy * t), with the phase reduced in extended precision.
Complex evolution_phase(double energy, double chi, double t);

FockVector evolve(const FockVector& state, const Spectrum& spectrum, double t);

/// Smallest T > 0 returning every relative phase to 1: 2pi/chi for harmonic and
/// square well, pi/chi for Kerr. Custom spectra are probed for n <= probe_bound;
/// std::nullopt means no common period was found.
std::optional<double> revival_time(const Spectrum& spectrum, int probe_bound = 100);

/// Like revival_time but throws std::domain_error for aperiodic spectra.
double require_revival_time(const Spectrum& spectrum);

struct FractionalRevival {
  int l = 0;
  int m = 0;
  double t = 0.0;
};

/// Instants (l/m) T_rev for every reduced fraction with 2 <= m <= m_max,
/// ascending in time.
std::vector<FractionalRevival> fractional_revival_times(const Spectrum& spectrum, int m_max);

struct CatDecomposition {
  int m = 1;
  std::vector<Complex> coefficients;
  std::vector<CoherentLabel> component_labels;
  double fidelity = 0.0;
};

/// Raised when a cat reconstruction does not reproduce the evolved state.
class FidelityError : public std::runtime_error {
 public:
  FidelityError(const std::string& what, double fidelity)
      : std::runtime_error(what), fidelity_(fidelity) {}
  double fidelity() const { return fidelity_; }

 private:
  double fidelity_;
};

/// Writes the Kerr-evolved coherent state at t = pi / (m chi) as a
/// superposition of m coherent states. Coefficients are the inverse DFT of
/// the length-m quadratic phase sequence (exp(-i pi n(n-1)/m) for odd m,
/// exp(-i pi n^2/m) for even m). The reconstruction is checked against
/// direct evolution and FidelityError is thrown below min_fidelity.
CatDecomposition decompose_fractional(const CoherentLabel& label, int m, const Spectrum& spectrum,
                                      int truncation, double min_fidelity = 1.0 - 1e-9);

}  // namespace revivals

#include "revivals/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>

namespace revivals {

Spectrum::Spectrum(SpectrumKind kind, double chi, std::string name,
                   std::function<double(int)> energy)
    : kind_(kind), chi_(chi), name_(std::move(name)), energy_(std::move(energy)) {
  if (!(chi_ > 0.0) || !std::isfinite(chi_)) {
    throw std::invalid_argument("Spectrum: chi must be positive and finite");
  }
  if (!energy_) throw std::invalid_argument("Spectrum: energy function is empty");
}

Spectrum Spectrum::harmonic(double chi) {
  return {SpectrumKind::harmonic, chi, "harmonic", [](int n) { return n + 0.5; }};
}

Spectrum Spectrum::kerr(double chi) {
  return {SpectrumKind::kerr, chi, "kerr",
          [](int n) { return static_cast<double>(n) * (n - 1); }};
}

Spectrum Spectrum::square_well(double chi) {
  return {SpectrumKind::square_well, chi, "square_well",
          [](int n) { return static_cast<double>(n) * n; }};
}

Spectrum Spectrum::custom(std::function<double(int)> energy, double chi, std::string name) {
  return {SpectrumKind::custom, chi, std::move(name), std::move(energy)};
}

double Spectrum::energy(int n) const { return energy_(n); }

Complex evolution_phase(double energy, double chi, double t) {
  constexpr long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  const long double phase = static_cast<long double>(energy) * chi * t;
  const long double reduced = std::fmod(phase, two_pi);
  return std::polar(1.0, -static_cast<double>(reduced));
}

FockVector evolve(const FockVector& state, const Spectrum& spectrum, double t) {
  if (!std::isfinite(t)) throw std::invalid_argument("evolve: t must be finite");
  std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
  for (std::size_t n = 0; n < amps.size(); ++n) {
    amps[n] *= evolution_phase(spectrum.energy(static_cast<int>(n)), spectrum.chi(), t);
  }
  return FockVector(std::move(amps));
}

namespace {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

// Continued-fraction convergents of x until |x - num/den| is within tolerance.
std::optional<Rational> to_rational(double x, std::int64_t max_den = 1'000'000) {
  const double tolerance = 1e-9 * std::max(1.0, std::abs(x));
  std::int64_t h0 = 1, h1 = 0, k0 = 0, k1 = 1;
  double rest = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double a = std::floor(rest);
    if (std::abs(a) > 9e15) return std::nullopt;
    const auto ai = static_cast<std::int64_t>(a);
    const std::int64_t h = ai * h0 + h1;
    const std::int64_t k = ai * k0 + k1;
    if (k > max_den) return std::nullopt;
    h1 = h0;
    h0 = h;
    k1 = k0;
    k0 = k;
    if (std::abs(x - static_cast<double>(h) / static_cast<double>(k)) <= tolerance) {
      return Rational{h, k};
    }
    const double frac = rest - a;
    if (frac == 0.0) return std::nullopt;
    rest = 1.0 / frac;
  }
  return std::nullopt;
}

std::optional<double> probe_period(const Spectrum& spectrum, int probe_bound) {
  // gcd of the rationals p_i / q_i is gcd(p_i) / lcm(q_i).
  std::int64_t num_gcd = 0;
  std::int64_t den_lcm = 1;
  const double e0 = spectrum.energy(0);
  for (int n = 1; n <= probe_bound; ++n) {
    const auto r = to_rational(spectrum.energy(n) - e0);
    if (!r) return std::nullopt;
    if (r->num == 0) continue;
    const std::int64_t den = std::lcm(den_lcm, r->den);
    if (den > 1'000'000'000'000LL) return std::nullopt;
    num_gcd = std::gcd(num_gcd * (den / den_lcm), std::abs(r->num) * (den / r->den));
    den_lcm = den;
  }
  if (num_gcd == 0) return std::nullopt;
  const double g = static_cast<double>(num_gcd) / static_cast<double>(den_lcm);
  return 2.0 * std::numbers::pi / (spectrum.chi() * g);
}

}  // namespace

std::optional<double> revival_time(const Spectrum& spectrum, int probe_bound) {
  const double chi = spectrum.chi();
  switch (spectrum.kind()) {
    case SpectrumKind::harmonic:
    case SpectrumKind::square_well:
      return 2.0 * std::numbers::pi / chi;
    case SpectrumKind::kerr:
      return std::numbers::pi / chi;
    case SpectrumKind::custom:
      return probe_period(spectrum, probe_bound);
  }
  return std::nullopt;
}

double require_revival_time(const Spectrum& spectrum) {
  const auto t = revival_time(spectrum);
  if (!t) throw std::domain_error("spectrum '" + spectrum.name() + "' is aperiodic");
  return *t;
}

std::vector<FractionalRevival> fractional_revival_times(const Spectrum& spectrum, int m_max) {
  if (m_max < 2) throw std::invalid_argument("fractional_revival_times: m_max must be >= 2");
  const double t_rev = require_revival_time(spectrum);
  std::vector<FractionalRevival> out;
  for (int m = 2; m <= m_max; ++m) {
    for (int l = 1; l < m; ++l) {
      if (std::gcd(l, m) != 1) continue;
      out.push_back({l, m, t_rev * l / m});
    }
  }
  std::sort(out.begin(), out.end(), [](const FractionalRevival& a, const FractionalRevival& b) {
    return static_cast<long long>(a.l) * b.m < static_cast<long long>(b.l) * a.m;
  });
  return out;
}

CatDecomposition decompose_fractional(const CoherentLabel& label, int m, const Spectrum& spectrum,
                                      int truncation, double min_fidelity) {
  if (m < 1) throw std::invalid_argument("decompose_fractional: m must be >= 1");
  if (spectrum.kind() != SpectrumKind::kerr) {
    throw std::invalid_argument("decompose_fractional: only the Kerr spectrum is supported");
  }
  const bool odd = (m % 2) == 1;
  const double pi = std::numbers::pi;

  // Periodic phase sequence h(n), reduced modulo 2m before the trig call.
  std::vector<Complex> h(static_cast<std::size_t>(m));
  for (int n = 0; n < m; ++n) {
    const long long k = odd ? static_cast<long long>(n) * (n - 1) : static_cast<long long>(n) * n;
    h[static_cast<std::size_t>(n)] = std::polar(1.0, -pi * static_cast<double>(k % (2 * m)) / m);
  }

  CatDecomposition out;
  out.m = m;
  const Complex alpha = label.alpha();
  // For even m, n(n-1) = n^2 - n leaves a residual exp(i pi N / m): a rotation
  // of every component by exp(i pi / m) on top of the exp(i pi m) factor.
  const Complex rotation = odd ? Complex(1.0) : std::polar(1.0, pi * m) * std::polar(1.0, pi / m);
  for (int k = 0; k < m; ++k) {
    Complex sum = 0.0;
    for (int n = 0; n < m; ++n) {
      sum += h[static_cast<std::size_t>(n)] *
             std::polar(1.0, 2.0 * pi * static_cast<double>((k * n) % m) / m);
    }
    out.coefficients.push_back(sum / static_cast<double>(m));
    out.component_labels.push_back(CoherentLabel::from_alpha(
        alpha * rotation * std::polar(1.0, -2.0 * pi * k / m)));
  }

  const FockVector target =
      evolve(coherent_state(label, truncation), spectrum, pi / (m * spectrum.chi()));
  std::vector<Complex> rebuilt(static_cast<std::size_t>(truncation) + 1);
  for (int k = 0; k < m; ++k) {
    const FockVector part = coherent_state(out.component_labels[static_cast<std::size_t>(k)],
                                           truncation);
    for (std::size_t n = 0; n < rebuilt.size(); ++n) {
      rebuilt[n] += out.coefficients[static_cast<std::size_t>(k)] * part[n];
    }
  }
  double rebuilt_norm = 0.0;
  Complex overlap = 0.0;
  for (std::size_t n = 0; n < rebuilt.size(); ++n) {
    rebuilt_norm += std::norm(rebuilt[n]);
    overlap += std::conj(target[n]) * rebuilt[n];
  }
  const double denom = target.norm2() * rebuilt_norm;
  out.fidelity = denom > 0.0 ? std::norm(overlap) / denom : 0.0;
  if (out.fidelity < min_fidelity) {
    throw FidelityError("decompose_fractional: reconstruction fidelity " +
                            std::to_string(out.fidelity) + " below threshold",
                        out.fidelity);
  }
  return out;
}

}  // namespace revivals

#pragma once

#include "revivals/fock.hpp"
#include "revivals/normal_order.hpp"

namespace revivals {

/// Product of three coherent states for the modes a, b, c (along x, y, z).
struct TriModeLabel {
  CoherentLabel alpha;
  CoherentLabel beta;
  CoherentLabel gamma;
};

enum class Axis { x, y, z };

/// ((u^dag v - v^dag u) / 2i)^n normal-ordered per mode, with (u, v) = (b, c)
/// for Lx. Terms are sorted by powers, so the result is deterministic.
/// Requires 1 <= n <= 4.
NormalOrderedSum lx_power_expand(int n);

/// <Lx^n> on the Kerr-evolved product state, each factor from the closed-form
/// ladder moments. Throws std::logic_error if the imaginary residue is not
/// negligible against the summed term magnitudes.
double lx_moment(int n, const TriModeLabel& label, double chi, double t);

/// Same engine for Ly (modes c, a) and Lz (modes a, b).
double angular_moment(Axis axis, int n, const TriModeLabel& label, double chi, double t);

/// Brute-force <Lx^n>: both modes truncated at N, Kerr-evolved, and Lx applied n
/// times on the two-mode amplitude grid. Throws std::length_error when
/// (N+1)^2 exceeds 4e6.
double lx_moment_oracle(int n, const TriModeLabel& label, double chi, double t, int truncation);

double angular_moment_oracle(Axis axis, int n, const TriModeLabel& label, double chi, double t,
                             int truncation);

}  // namespace revivals

#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "revivals/fock.hpp"

namespace revivals::cli {

/// Config that violates the RunConfig invariants; reported as a usage error.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;  ///< autocorr, moment, xptrace, lx, carpet, pendulum, talbot, cat
  std::array<CoherentLabel, 3> modes{};  ///< mode 0 doubles as the single-mode label
  double chi = 10.0 / 3.14159265358979323846;
  std::string spectrum = "kerr";
  double t_min = 0.0;
  std::optional<double> t_max;  ///< defaults to T_rev
  int samples = 1001;
  std::optional<int> truncation;
  std::string output;  ///< empty writes to stdout
  std::string format = "csv";

  int r = 1;  // moment
  int s = 0;
  int n = 1;  // lx
  std::string axis = "x";
  bool oracle = false;
  std::string bursts_path;  // xptrace, lx
  int k_max = 4;
  double window_frac = 1.0 / 50.0;
  double threshold = 10.0;

  int nx = 400;  // carpet
  int nt = 400;
  std::optional<double> x_min;
  std::optional<double> x_max;

  int count = 100;  // pendulum
  int base_cycles = 30;
  double t_rev = 1.0;
  double amplitude = 1.0;
  double at = 0.5;
  std::string mode = "integer";

  double wavelength = 500e-9;  // talbot
  double period = 50e-6;

  int m = 2;  // cat
};

/// Executes one command. Throws UsageError for invalid configs; numeric guards
/// surface as their own exception types.
void run(const RunConfig& config, std::ostream& log);

/// Parses argv and runs. Returns 0 on success, 2 on usage errors, 1 when a
/// numeric guard (memory, fidelity, domain) refuses the request.
int main_entry(int argc, const char* const* argv);

}  // namespace revivals::cli

#include "revivals/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>

#include "revivals/angular_momentum.hpp"
#include "revivals/bursts.hpp"
#include "revivals/carpet.hpp"
#include "revivals/classical.hpp"
#include "revivals/moments.hpp"
#include "revivals/output.hpp"
#include "revivals/spectra.hpp"

namespace revivals::cli {

namespace {

Spectrum make_spectrum(const RunConfig& c) {
  if (c.spectrum == "kerr") return Spectrum::kerr(c.chi);
  if (c.spectrum == "harmonic") return Spectrum::harmonic(c.chi);
  if (c.spectrum == "square_well") return Spectrum::square_well(c.chi);
  throw UsageError("unknown spectrum '" + c.spectrum + "'");
}

std::string label_text(const CoherentLabel& l) {
  return "p=" + format_double(l.p) + " q=" + format_double(l.q);
}

void validate(const RunConfig& c) {
  if (!(c.chi > 0.0) || !std::isfinite(c.chi)) throw UsageError("chi must be positive");
  if (c.samples < 2) throw UsageError("samples must be >= 2");
  if (c.truncation && *c.truncation < 1) throw UsageError("truncation must be >= 1");
  if (c.format != "csv" && c.format != "pgm") throw UsageError("format must be csv or pgm");
  if (c.format == "pgm" && c.command != "carpet") throw UsageError("pgm output is carpet-only");
}

// Writes through a temporary buffer so a failed run leaves no partial file.
void emit(const std::string& path, const std::function<void(std::ostream&)>& body) {
  std::ostringstream buffer(std::ios::binary);
  body(buffer);
  if (path.empty()) {
    std::cout << buffer.str();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "' for writing");
  file << buffer.str();
  if (!file) throw std::runtime_error("write to '" + path + "' failed");
}

CsvTable base_table(const RunConfig& c, double t_rev) {
  CsvTable table;
  table.metadata = {{"command", c.command}, {"chi", format_double(c.chi)},
                    {"spectrum", c.spectrum}, {"T_rev", format_double(t_rev)}};
  return table;
}

std::vector<double> time_grid(const RunConfig& c, double t_rev) {
  const double t_max = c.t_max.value_or(t_rev);
  if (!(t_max > c.t_min)) throw UsageError("t-max must exceed t-min");
  return linspace(c.t_min, t_max, c.samples);
}

double chi_t_over_pi(const RunConfig& c, double t) { return c.chi * t / std::numbers::pi; }

void append_bursts(CsvTable& table, int index, const BurstReport& report, const RunConfig& c) {
  for (const auto& w : report.windows) {
    table.rows.push_back({static_cast<double>(index), static_cast<double>(w.l),
                          static_cast<double>(w.m), w.center, chi_t_over_pi(c, w.center), w.ratio,
                          w.detected ? 1.0 : 0.0});
  }
}

CsvTable burst_table(const RunConfig& c, double t_rev) {
  CsvTable table = base_table(c, t_rev);
  table.metadata.push_back({"window_frac", format_double(c.window_frac)});
  table.metadata.push_back({"threshold", format_double(c.threshold)});
  table.columns = {"observable", "l", "m", "center", "chi_t_over_pi", "ratio", "detected"};
  return table;
}

void run_autocorr(const RunConfig& c, std::ostream& log) {
  const Spectrum spectrum = make_spectrum(c);
  const double t_rev = require_revival_time(spectrum);
  CsvTable table = base_table(c, t_rev);
  table.metadata.push_back({"label", label_text(c.modes[0])});
  table.columns = {"t", "chi_t_over_pi", "re", "im", "abs2"};
  for (double t : time_grid(c, t_rev)) {
    const Complex a = autocorrelation(c.modes[0], spectrum, t);
    table.rows.push_back({t, chi_t_over_pi(c, t), a.real(), a.imag(), std::norm(a)});
  }
  log << "T_rev = " << format_double(t_rev) << '\n';
  emit(c.output, [&](std::ostream& out) { write_csv(out, table); });
}

void run_moment(const RunConfig& c, std::ostream& log) {
  if (c.r < 0 || c.s < 0) throw UsageError("r and s must be >= 0");
  if (c.spectrum != "kerr") throw UsageError("moment is defined for the kerr spectrum only");
  const double t_rev = std::numbers::pi / c.chi;
  CsvTable table = base_table(c, t_rev);
  table.metadata.push_back({"label", label_text(c.modes[0])});
  table.metadata.push_back({"r", std::to_string(c.r)});
  table.metadata.push_back({"s", std::to_string(c.s)});
  table.columns = {"t", "chi_t_over_pi", "re", "im", "abs"};
  for (double t : time_grid(c, t_rev)) {
    const Complex v = general_moment({c.r, c.s, c.modes[0], c.chi, t});
    table.rows.push_back({t, chi_t_over_pi(c, t), v.real(), v.imag(), std::abs(v)});
  }
  log << "T_rev = " << format_double(t_rev) << '\n';
  emit(c.output, [&](std::ostream& out) { write_csv(out, table); });
}

void run_xptrace(const RunConfig& c, std::ostream& log) {
  if (c.spectrum != "kerr") throw UsageError("xptrace is defined for the kerr spectrum only");
  const double t_rev = std::numbers::pi / c.chi;
  const auto times = time_grid(c, t_rev);
  const CoherentLabel& label = c.modes[0];
  CsvTable table = base_table(c, t_rev);
  table.metadata.push_back({"label", label_text(label)});
  table.columns = {"t", "chi_t_over_pi", "x", "p", "x2", "p2", "dx", "dp", "dxdp"};
  const UncertaintyTrace unc = uncertainty_trace(label, c.chi, times);
  ObservableTrace x{times, {}, "x"}, p{times, {}, "p"}, x2{times, {}, "x2"}, p2{times, {}, "p2"};
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double t = times[i];
    x.values.push_back(expect_x(label, c.chi, t));
    p.values.push_back(expect_p(label, c.chi, t));
    x2.values.push_back(expect_x2(label, c.chi, t));
    p2.values.push_back(expect_p2(label, c.chi, t));
    table.rows.push_back({t, chi_t_over_pi(c, t), x.values[i], p.values[i], x2.values[i],
                          p2.values[i], unc.delta_x.values[i], unc.delta_p.values[i],
                          unc.product.values[i]});
  }
  log << "T_rev = " << format_double(t_rev) << '\n';
  emit(c.output, [&](std::ostream& out) { write_csv(out, table); });
  if (!c.bursts_path.empty()) {
    CsvTable bursts = burst_table(c, t_rev);
    bursts.metadata.push_back({"observables", "0=x 1=p 2=x2 3=p2"});
    int index = 0;
    for (const ObservableTrace* trace : {&x, &p, &x2, &p2}) {
      append_bursts(bursts, index++,
                    detect_bursts(*trace, t_rev, c.k_max, c.window_frac, c.threshold), c);
    }
    emit(c.bursts_path, [&](std::ostream& out) { write_csv(out, bursts); });
  }
}

Axis parse_axis(const std::string& name) {
  if (name == "x") return Axis::x;
  if (name == "y") return Axis::y;
  if (name == "z") return Axis::z;
  throw UsageError("axis must be x, y or z");
}

void run_lx(const RunConfig& c, std::ostream& log) {
  if (c.n < 1 || c.n > 4) throw UsageError("n must be in 1..4");
  if (c.spectrum != "kerr") throw UsageError("lx is defined for the kerr spectrum only");
  const Axis axis = parse_axis(c.axis);
  const TriModeLabel label{c.modes[0], c.modes[1], c.modes[2]};
  const double t_rev = std::numbers::pi / c.chi;
  const auto times = time_grid(c, t_rev);
  CsvTable table = base_table(c, t_rev);
  table.metadata.push_back({"alpha", label_text(c.modes[0])});
  table.metadata.push_back({"beta", label_text(c.modes[1])});
  table.metadata.push_back({"gamma", label_text(c.modes[2])});
  table.metadata.push_back({"axis", c.axis});
  table.metadata.push_back({"n", std::to_string(c.n)});
  table.columns = {"t", "chi_t_over_pi", "value"};
  int truncation = 0;
  if (c.oracle) {
    double nu = 0.0;
    for (const auto& mode : c.modes) nu = std::max(nu, mode.nu());
    truncation = c.truncation.value_or(auto_truncation(nu));
    table.metadata.push_back({"truncation", std::to_string(truncation)});
    table.columns.push_back("oracle");
  }
  ObservableTrace trace{times, {}, "L^n"};
  for (double t : times) {
    const double v = angular_moment(axis, c.n, label, c.chi, t);
    trace.values.push_back(v);
    std::vector<double> row = {t, chi_t_over_pi(c, t), v};
    if (c.oracle) row.push_back(angular_moment_oracle(axis, c.n, label, c.chi, t, truncation));
    table.rows.push_back(std::move(row));
  }
  log << "T_rev = " << format_double(t_rev) << '\n';
  emit(c.output, [&](std::ostream& out) { write_csv(out, table); });
  if (!c.bursts_path.empty()) {
    CsvTable bursts = burst_table(c, t_rev);
    append_bursts(bursts, 0, detect_bursts(trace, t_rev, c.k_max, c.window_frac, c.threshold), c);
    emit(c.bursts_path, [&](std::ostream& out) { write_csv(out, bursts); });
  }
}

void run_carpet(const RunConfig& c, std::ostream& log) {
  if (c.nx < 2 || c.nt < 2) throw UsageError("nx and nt must be >= 2");
  const Spectrum spectrum = make_spectrum(c);
  const CoherentLabel& label = c.modes[0];
  CarpetWindow window = default_carpet_window(label, spectrum, c.nx, c.nt);
  const double t_rev = window.t_max;
  if (c.x_min) window.x_min = *c.x_min;
  if (c.x_max) window.x_max = *c.x_max;
  if (!(window.x_max > window.x_min)) throw UsageError("x-max must exceed x-min");
  window.t_min = c.t_min;
  window.t_max = c.t_max.value_or(t_rev);
  if (!(window.t_max > window.t_min)) throw UsageError("t-max must exceed t-min");
  const int truncation = c.truncation.value_or(auto_truncation(label.nu()));
  const CarpetGrid grid = carpet(label, spectrum, window, truncation);
  log << "T_rev = " << format_double(t_rev) << '\n';
  if (c.format == "pgm") {
    emit(c.output, [&](std::ostream& out) { write_pgm(out, grid); });
    return;
  }
  CsvTable table = carpet_table(grid, c.chi);
  table.metadata = base_table(c, t_rev).metadata;
  table.metadata.push_back({"label", label_text(label)});
  table.metadata.push_back({"truncation", std::to_string(truncation)});
  emit(c.output, [&](std::ostream& out) { write_csv(out, table); });
}

void run_pendulum(const RunConfig& c, std::ostream& log) {
  PendulumArray array{c.count, c.base_cycles, c.t_rev, c.amplitude};
  if (c.mode == "increment") {
    array.mode = PendulumMode::period_increment;
  } else if (c.mode != "integer") {
    throw UsageError("mode must be integer or increment");
  }
  if (array.count < 2 || array.base_cycles < 1 || !(array.t_rev > 0.0) ||
      !(array.amplitude > 0.0)) {
    throw UsageError("pendulum needs count >= 2, base-cycles >= 1, positive t-rev and amplitude");
  }
  if (!(c.at >= 0.0 && c.at <= 1.0)) throw UsageError("at must be a fraction of t_rev in [0, 1]");
  const double t = c.at * c.t_rev;
  const auto x = pendulum_positions(array, t);
  const WaveCount waves = wave_count(array, t);
  CsvTable table;
  table.metadata = {{"command", c.command},
                    {"count", std::to_string(c.count)},
                    {"base_cycles", std::to_string(c.base_cycles)},
                    {"mode", c.mode},
                    {"T_rev", format_double(c.t_rev)},
                    {"t", format_double(t)},
                    {"waves", std::to_string(waves.waves)},
                    {"strength", std::to_string(waves.strength)}};
  table.columns = {"j", "x"};
  for (std::size_t j = 0; j < x.size(); ++j) table.rows.push_back({static_cast<double>(j), x[j]});
  log << "T_rev = " << format_double(c.t_rev) << "; waves = " << waves.waves
      << ", strength = " << waves.strength << '\n';
  emit(c.output, [&](std::ostream& out) { write_csv(out, table); });
}

void run_talbot(const RunConfig& c, std::ostream& log) {
  const double z = talbot_length(c.wavelength, c.period);
  CsvTable table;
  table.metadata = {{"command", c.command}};
  table.columns = {"wavelength", "period", "talbot_length", "paraxial"};
  table.rows.push_back({c.wavelength, c.period, z, 2.0 * c.period * c.period / c.wavelength});
  log << "z_T = " << format_double(z) << '\n';
  emit(c.output, [&](std::ostream& out) { write_csv(out, table); });
}

void run_cat(const RunConfig& c, std::ostream& log) {
  if (c.m < 1) throw UsageError("m must be >= 1");
  if (c.spectrum != "kerr") throw UsageError("cat is defined for the kerr spectrum only");
  const Spectrum spectrum = make_spectrum(c);
  const double t_rev = require_revival_time(spectrum);
  const CoherentLabel& label = c.modes[0];
  const int truncation = c.truncation.value_or(auto_truncation(label.nu()));
  const CatDecomposition cat = decompose_fractional(label, c.m, spectrum, truncation);
  CsvTable table = base_table(c, t_rev);
  table.metadata.push_back({"label", label_text(label)});
  table.metadata.push_back({"m", std::to_string(c.m)});
  table.metadata.push_back({"t", format_double(t_rev / c.m)});
  table.metadata.push_back({"fidelity", format_double(cat.fidelity)});
  table.columns = {"k", "coeff_re", "coeff_im", "p", "q"};
  for (std::size_t k = 0; k < cat.coefficients.size(); ++k) {
    table.rows.push_back({static_cast<double>(k), cat.coefficients[k].real(),
                          cat.coefficients[k].imag(), cat.component_labels[k].p,
                          cat.component_labels[k].q});
  }
  log << "T_rev = " << format_double(t_rev) << "; fidelity = " << format_double(cat.fidelity)
      << '\n';
  emit(c.output, [&](std::ostream& out) { write_csv(out, table); });
}

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--chi", c.chi, "Nonlinearity chi (default 10/pi)");
  sub->add_option("--t-min", c.t_min, "First sample time");
  sub->add_option("--t-max", c.t_max, "Last sample time (default T_rev)");
  sub->add_option("--samples", c.samples, "Number of time samples");
  sub->add_option("--truncation", c.truncation, "Fock truncation N");
  sub->add_option("-o,--output", c.output, "Output file (default stdout)");
}

void add_label(CLI::App* sub, CoherentLabel& label, const std::string& suffix) {
  sub->add_option("--p" + suffix, label.p, "Quadrature p of the coherent label");
  sub->add_option("--q" + suffix, label.q, "Quadrature q of the coherent label");
}

}  // namespace

void run(const RunConfig& config, std::ostream& log) {
  validate(config);
  const std::string& cmd = config.command;
  if (cmd == "autocorr") return run_autocorr(config, log);
  if (cmd == "moment") return run_moment(config, log);
  if (cmd == "xptrace") return run_xptrace(config, log);
  if (cmd == "lx") return run_lx(config, log);
  if (cmd == "carpet") return run_carpet(config, log);
  if (cmd == "pendulum") return run_pendulum(config, log);
  if (cmd == "talbot") return run_talbot(config, log);
  if (cmd == "cat") return run_cat(config, log);
  throw UsageError("unknown command '" + cmd + "'");
}

int main_entry(int argc, const char* const* argv) {
  CLI::App app{"Quantum revival laboratory: Kerr coherent states, moments, carpets"};
  app.require_subcommand(1);
  RunConfig c;

  auto* autocorr = app.add_subcommand("autocorr", "Autocorrelation A(t) = <psi(t)|psi(0)>");
  add_common(autocorr, c);
  add_label(autocorr, c.modes[0], "");
  autocorr->add_option("--spectrum", c.spectrum, "kerr, harmonic or square_well");

  auto* moment = app.add_subcommand("moment", "<a^dag^r a^(r+s)> under Kerr evolution");
  add_common(moment, c);
  add_label(moment, c.modes[0], "");
  moment->add_option("--r", c.r, "Creation power");
  moment->add_option("--s", c.s, "Excess annihilation power");

  auto* xptrace = app.add_subcommand("xptrace", "<x>, <p>, second moments and uncertainties");
  add_common(xptrace, c);
  add_label(xptrace, c.modes[0], "");

  auto* lx = app.add_subcommand("lx", "Angular momentum moments on three coherent modes");
  add_common(lx, c);
  for (int i = 0; i < 3; ++i) add_label(lx, c.modes[static_cast<std::size_t>(i)], std::to_string(i + 1));
  lx->add_option("--n", c.n, "Power of L (1..4)");
  lx->add_option("--axis", c.axis, "x, y or z");
  lx->add_flag("--oracle", c.oracle, "Add a brute-force two-mode column");

  for (auto* sub : {xptrace, lx}) {
    sub->add_option("--bursts", c.bursts_path, "Write a burst report to this file");
    sub->add_option("--k-max", c.k_max, "Largest fraction denominator for burst windows");
    sub->add_option("--window", c.window_frac, "Burst window width as a fraction of T_rev");
    sub->add_option("--threshold", c.threshold, "Burst variance-ratio threshold");
  }

  auto* carpet_cmd = app.add_subcommand("carpet", "Space-time density |psi(x,t)|^2");
  add_common(carpet_cmd, c);
  add_label(carpet_cmd, c.modes[0], "");
  carpet_cmd->add_option("--spectrum", c.spectrum, "kerr, harmonic or square_well");
  carpet_cmd->add_option("--nx", c.nx, "Position samples");
  carpet_cmd->add_option("--nt", c.nt, "Time rows");
  carpet_cmd->add_option("--x-min", c.x_min, "Left edge of the window");
  carpet_cmd->add_option("--x-max", c.x_max, "Right edge of the window");
  carpet_cmd->add_option("--format", c.format, "csv or pgm");

  auto* pendulum = app.add_subcommand("pendulum", "Pendulum-wave snapshot and wave count");
  pendulum->add_option("--count", c.count, "Number of pendulums");
  pendulum->add_option("--base-cycles", c.base_cycles, "Cycles of pendulum 0 per t_rev");
  pendulum->add_option("--t-rev", c.t_rev, "Recurrence time");
  pendulum->add_option("--amplitude", c.amplitude, "Amplitude");
  pendulum->add_option("--at", c.at, "Snapshot time as a fraction of t_rev");
  pendulum->add_option("--mode", c.mode, "integer or increment");
  pendulum->add_option("-o,--output", c.output, "Output file (default stdout)");

  auto* talbot = app.add_subcommand("talbot", "Talbot self-imaging length");
  talbot->add_option("--wavelength", c.wavelength, "Wavelength");
  talbot->add_option("--period", c.period, "Grating period");
  talbot->add_option("-o,--output", c.output, "Output file (default stdout)");

  auto* cat = app.add_subcommand("cat", "Cat-state decomposition at T_rev/m");
  add_common(cat, c);
  add_label(cat, c.modes[0], "");
  cat->add_option("--m", c.m, "Number of components");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  c.command = app.get_subcommands().front()->get_name();

  try {
    run(c, std::cerr);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace revivals::cli

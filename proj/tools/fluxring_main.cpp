// Command-line front end: steady states, parameter sweeps and the
// spontaneous-rotation certificate, emitted as deterministic CSV/JSON.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fluxring/profile_io.hpp"
#include "fluxring/sweep.hpp"

namespace sweep = fluxring::sweep;

namespace {

struct CommonFlags {
  std::optional<std::string> config;
  std::optional<double> flux;
  std::optional<double> epsilon;
  std::optional<int> harmonic;
  std::optional<int> grid_size;
  std::optional<std::string> winding;
  std::optional<std::string> grid;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<int> precision;
  std::optional<std::string> profile_file;
  std::optional<double> radius;
  std::optional<double> mass;
  std::optional<double> charge;
  std::optional<double> base_density;
};

struct ExtraFlags {
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> shape_factor;
  std::optional<std::uint64_t> seed;
  std::optional<int> cases;
  std::optional<std::string> phase_out;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config,
                  "configuration file: key = value lines with [base], [grid] and "
                  "[output] sections; flags given here override it");
  cmd->add_option("--flux", flags.flux, "applied flux in flux quanta");
  cmd->add_option("--epsilon", flags.epsilon,
                  "cosine modulation amplitude relative to n0, |epsilon| < 1");
  cmd->add_option("--harmonic", flags.harmonic, "cosine harmonic index (>= 1)");
  cmd->add_option("--grid-size", flags.grid_size, "grid nodes on the ring (>= 8)");
  cmd->add_option("--winding", flags.winding,
                  "winding number, or 'auto' to select the ground state");
  cmd->add_option("--grid", flags.grid, "sweep grid as start:stop:count");
  cmd->add_option("--out", flags.out, "output path (default: stdout)");
  cmd->add_option("--format", flags.format, "output format: csv or json");
  cmd->add_option("--precision", flags.precision, "emitted decimal digits, 6..17");
  cmd->add_option("--profile-file", flags.profile_file,
                  "read the modulation from a sample table instead of the cosine "
                  "descriptor (one n1 value per line; the mean is re-centered)");
  cmd->add_option("--radius", flags.radius, "ring radius R");
  cmd->add_option("--mass", flags.mass, "particle mass m");
  cmd->add_option("--charge", flags.charge, "particle charge q");
  cmd->add_option("--base-density", flags.base_density, "uniform density n0");
}

int parse_strict_int(const std::string& text, const std::string& what) {
  std::size_t consumed = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &consumed);
  } catch (const std::exception&) {
    throw sweep::ConfigError(what + " expects an integer, got '" + text + "'");
  }
  if (consumed != text.size())
    throw sweep::ConfigError(what + " expects an integer, got '" + text + "'");
  return static_cast<int>(value);
}

double parse_strict_double(const std::string& text, const std::string& what) {
  std::size_t consumed = 0;
  double value = 0;
  try {
    value = std::stod(text, &consumed);
  } catch (const std::exception&) {
    throw sweep::ConfigError(what + " expects a number, got '" + text + "'");
  }
  if (consumed != text.size())
    throw sweep::ConfigError(what + " expects a number, got '" + text + "'");
  return value;
}

sweep::GridSpec parse_grid_flag(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? first : text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos ||
      text.find(':', second + 1) != std::string::npos)
    throw sweep::ConfigError("--grid expects start:stop:count, got '" + text + "'");
  sweep::GridSpec grid;
  grid.start = parse_strict_double(text.substr(0, first), "--grid start");
  grid.stop = parse_strict_double(text.substr(first + 1, second - first - 1), "--grid stop");
  grid.count = parse_strict_int(text.substr(second + 1), "--grid count");
  grid.specified = true;
  return grid;
}

sweep::SweepSpec build_spec(sweep::Kind kind, const CommonFlags& flags,
                            const ExtraFlags& extras) {
  sweep::SweepSpec spec;
  if (flags.config) spec = sweep::load_config(*flags.config);
  spec.kind = kind;

  if (flags.flux) spec.base.flux = *flags.flux;
  if (flags.epsilon) spec.base.epsilon = *flags.epsilon;
  if (flags.harmonic) spec.base.harmonic = *flags.harmonic;
  if (flags.grid_size) spec.base.grid_size = *flags.grid_size;
  if (flags.winding) {
    if (*flags.winding == "auto") {
      spec.base.winding_auto = true;
    } else {
      spec.base.winding = parse_strict_int(*flags.winding, "--winding");
      spec.base.winding_auto = false;
    }
  }
  if (flags.grid) spec.grid = parse_grid_flag(*flags.grid);
  if (flags.out) spec.output.path = *flags.out;
  if (flags.format) {
    if (*flags.format == "csv") spec.output.format = sweep::Format::csv;
    else if (*flags.format == "json") spec.output.format = sweep::Format::json;
    else throw sweep::ConfigError("--format expects csv or json, got '" + *flags.format + "'");
    spec.output.format_specified = true;
  }
  if (flags.precision) spec.output.precision = *flags.precision;
  if (flags.profile_file) spec.base.profile_file = *flags.profile_file;
  if (flags.radius) spec.base.radius = *flags.radius;
  if (flags.mass) spec.base.mass = *flags.mass;
  if (flags.charge) spec.base.charge = *flags.charge;
  if (flags.base_density) spec.base.base_density = *flags.base_density;

  if (extras.alpha) spec.base.alpha = *extras.alpha;
  if (extras.beta) spec.base.beta = *extras.beta;
  if (extras.shape_factor) spec.base.shape_factor = *extras.shape_factor;
  if (extras.seed) spec.certificate.seed = *extras.seed;
  if (extras.cases) spec.certificate.cases = *extras.cases;
  if (extras.phase_out) spec.output.phase_path = *extras.phase_out;
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fluxring: persistent currents and rotation energetics of a superfluid "
      "ring carrying a density modulation under magnetic flux"};
  app.require_subcommand(1);

  CommonFlags flags;
  ExtraFlags extras;

  CLI::App* steady = app.add_subcommand(
      "steady", "solve one steady state (winding, current, energy, angular momentum)");
  steady->add_option("--phase-out", extras.phase_out,
                     "also write the (theta, phase_gradient) table to this path");

  CLI::App* flux_sweep = app.add_subcommand(
      "flux-sweep", "sweep the flux; default grid 0:2:201");
  CLI::App* omega_sweep = app.add_subcommand(
      "omega-sweep",
      "sweep the rotation rate and report the stiffness; default grid -0.2:0.2:41");
  CLI::App* amplitude_sweep = app.add_subcommand(
      "amplitude-sweep", "sweep the modulation amplitude; default grid 0:0.5:51");

  CLI::App* landau_sweep = app.add_subcommand(
      "landau-sweep",
      "sweep the flux and report the flux-enhanced instability; default grid 0:1:101");
  landau_sweep->add_option("--alpha", extras.alpha, "bare quadratic coefficient");
  landau_sweep->add_option("--beta", extras.beta, "quartic coefficient (> 0)");
  landau_sweep->add_option("--shape-factor", extras.shape_factor,
                           "mean(n1^2) / amplitude^2 of the modulation shape");

  CLI::App* certify = app.add_subcommand(
      "certify",
      "randomized no-spontaneous-rotation certificate: |dE/dOmega| at zero must "
      "stay below 1e-8 * max(E, 1); exit 1 on any violation");
  certify->add_option("--seed", extras.seed, "random seed (default 42)");
  certify->add_option("--cases", extras.cases, "number of random cases (default 100)");

  for (CLI::App* cmd :
       {steady, flux_sweep, omega_sweep, amplitude_sweep, landau_sweep, certify})
    add_common_flags(cmd, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::CallForAllHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return 2;
  }

  sweep::Kind kind = sweep::Kind::steady;
  if (flux_sweep->parsed()) kind = sweep::Kind::flux;
  else if (omega_sweep->parsed()) kind = sweep::Kind::omega;
  else if (amplitude_sweep->parsed()) kind = sweep::Kind::amplitude;
  else if (landau_sweep->parsed()) kind = sweep::Kind::landau;
  else if (certify->parsed()) kind = sweep::Kind::certificate;

  try {
    sweep::SweepSpec spec = build_spec(kind, flags, extras);
    return sweep::run(spec);
  } catch (const sweep::ConfigError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  } catch (const fluxring::ProfileIoError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  } catch (const sweep::IoError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 3;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
}

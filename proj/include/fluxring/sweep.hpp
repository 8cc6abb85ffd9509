#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace fluxring::sweep {

// Front end shared by the command-line tool and the test suites: spec
// loading, parameter sweeps and deterministic CSV/JSON emission.

enum class Kind { steady, flux, omega, amplitude, landau, certificate };
enum class Format { csv, json };

struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;
  bool specified = false;  // false = apply the per-kind default range
};

struct BaseSpec {
  double flux = 0.0;     // applied flux in flux quanta
  double epsilon = 0.0;  // cosine modulation amplitude relative to n0
  int harmonic = 1;
  int grid_size = 1024;
  bool winding_auto = true;  // select the ground-state winding
  int winding = 0;           // used when winding_auto is false
  double radius = 1.0;
  double mass = 1.0;
  double charge = 1.0;
  double base_density = 1.0;
  double alpha = 0.0;  // Landau quadratic coefficient
  double beta = 1.0;   // Landau quartic coefficient
  double shape_factor = 0.5;
  std::string profile_file;  // overrides the cosine descriptor when set
};

struct OutputSpec {
  std::string path;  // empty = stdout
  Format format = Format::csv;
  bool format_specified = false;  // false = csv, except certificates -> json
  int precision = 12;      // decimal digits of the fixed-point emission, in [6, 17]
  std::string phase_path;  // steady only: optional (theta, phase_gradient) table
};

struct CertificateSpec {
  std::uint64_t seed = 42;
  int cases = 100;
  double derivative_step = 1e-4;
  double threshold_scale = 1e-8;  // pass when |dE/dOmega| < scale * max(E(0), 1)
};

struct SweepSpec {
  Kind kind = Kind::steady;
  BaseSpec base;
  GridSpec grid;
  OutputSpec output;
  CertificateSpec certificate;
};

/// Invalid configuration or command line; exit status 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Output could not be written; exit status 3.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* kind_name(Kind kind);
Kind parse_kind(const std::string& name);

/// Parse the flat `key = value` configuration grammar: kind/seed/cases at top
/// level, then sections [base], [grid], [output]. Unknown keys, type
/// mismatches and a missing kind raise ConfigError naming the offender.
SweepSpec parse_config(std::istream& in, const std::string& origin = "<config>");
SweepSpec load_config(const std::string& path);

/// Range checks (grid count/order, precision in [6, 17], |epsilon| < 1, ...).
/// Also fills in the per-kind default grid when none was specified.
void validate(SweepSpec& spec);

struct RunResult {
  int status;           // 0 ok, 1 certificate violation
  std::string report;   // rendered output document
  std::string phase_table;  // steady only, empty unless phase_path was set
};

/// Compute and render. Deterministic: identical specs yield byte-identical
/// reports. Reads profile_file if set, writes nothing.
RunResult execute(const SweepSpec& spec);

/// execute(), then write to output.path (stdout when empty). Output failures
/// raise IoError; the returned status is RunResult::status.
int run(const SweepSpec& spec);

}  // namespace fluxring::sweep

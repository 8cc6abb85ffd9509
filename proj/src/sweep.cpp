#include "fluxring/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <istream>
#include <random>
#include <sstream>
#include <utility>
#include <vector>

#include "fluxring/fluxring.hpp"

namespace fluxring::sweep {

namespace {

std::string trim(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = text.find_last_not_of(" \t\r");
  return text.substr(begin, end - begin + 1);
}

[[noreturn]] void fail_key(const std::string& origin, std::size_t line,
                           const std::string& message) {
  throw ConfigError(origin + ":" + std::to_string(line) + ": " + message);
}

double parse_double(const std::string& origin, std::size_t line,
                    const std::string& key, const std::string& value) {
  std::size_t consumed = 0;
  double parsed = 0;
  try {
    parsed = std::stod(value, &consumed);
  } catch (const std::exception&) {
    fail_key(origin, line, "key '" + key + "': expected a number, got '" + value + "'");
  }
  if (consumed != value.size())
    fail_key(origin, line, "key '" + key + "': expected a number, got '" + value + "'");
  return parsed;
}

long long parse_integer(const std::string& origin, std::size_t line,
                        const std::string& key, const std::string& value) {
  std::size_t consumed = 0;
  long long parsed = 0;
  try {
    parsed = std::stoll(value, &consumed);
  } catch (const std::exception&) {
    fail_key(origin, line, "key '" + key + "': expected an integer, got '" + value + "'");
  }
  if (consumed != value.size())
    fail_key(origin, line, "key '" + key + "': expected an integer, got '" + value + "'");
  return parsed;
}

std::uint64_t parse_seed(const std::string& origin, std::size_t line,
                         const std::string& key, const std::string& value) {
  std::size_t consumed = 0;
  unsigned long long parsed = 0;
  try {
    parsed = std::stoull(value, &consumed);
  } catch (const std::exception&) {
    fail_key(origin, line, "key '" + key + "': expected an unsigned integer, got '" + value + "'");
  }
  if (consumed != value.size())
    fail_key(origin, line, "key '" + key + "': expected an unsigned integer, got '" + value + "'");
  return parsed;
}

// ---------------------------------------------------------------------------
// token rendering
//
// Row and summary cells are pre-rendered tokens valid in both CSV and JSON
// (numbers, true/false). Spec-echo values are JSON-ready, so strings there
// are already quoted.

std::string fixed_token(double value, int precision) {
  char buffer[512];
  std::snprintf(buffer, sizeof(buffer), "%.*f", precision, value);
  return buffer;
}

std::string sci_token(double value, int precision) {
  char buffer[512];
  std::snprintf(buffer, sizeof(buffer), "%.*e", precision, value);
  return buffer;
}

std::string int_token(long long value) { return std::to_string(value); }

std::string bool_token(bool value) { return value ? "true" : "false"; }

std::string quoted(const std::string& text) {
  std::string out = "\"";
  for (const char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

using KeyValues = std::vector<std::pair<std::string, std::string>>;

struct Document {
  KeyValues spec_echo;  // JSON only
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  KeyValues summary;
};

std::string render_csv(const Document& doc) {
  std::string out;
  for (std::size_t i = 0; i < doc.columns.size(); ++i) {
    if (i) out += ',';
    out += doc.columns[i];
  }
  out += '\n';
  for (const auto& row : doc.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i];
    }
    out += '\n';
  }
  for (const auto& [key, value] : doc.summary)
    out += "# " + key + " = " + value + "\n";
  return out;
}

void render_object(std::string& out, const KeyValues& fields, int indent) {
  const std::string pad(indent, ' ');
  out += "{\n";
  for (std::size_t i = 0; i < fields.size(); ++i) {
    out += pad + "  " + quoted(fields[i].first) + ": " + fields[i].second;
    out += i + 1 < fields.size() ? ",\n" : "\n";
  }
  out += pad + "}";
}

std::string render_json(const Document& doc) {
  std::string out = "{\n  \"spec\": ";
  render_object(out, doc.spec_echo, 2);
  out += ",\n  \"rows\": [";
  for (std::size_t r = 0; r < doc.rows.size(); ++r) {
    out += r ? ",\n    {" : "\n    {";
    for (std::size_t i = 0; i < doc.columns.size(); ++i) {
      if (i) out += ", ";
      out += quoted(doc.columns[i]) + ": " + doc.rows[r][i];
    }
    out += "}";
  }
  out += doc.rows.empty() ? "],\n" : "\n  ],\n";
  out += "  \"summary\": ";
  render_object(out, doc.summary, 2);
  out += "\n}\n";
  return out;
}

// ---------------------------------------------------------------------------
// model assembly

RingConfigd ring_config(const BaseSpec& base, double flux_quanta) {
  RingConfigd config;
  config.radius = base.radius;
  config.mass = base.mass;
  config.charge = base.charge;
  config.base_density = base.base_density;
  config.vector_potential =
      flux_quanta * config.hbar * config.light_speed / (config.charge * config.radius);
  return config;
}

DensityProfiled base_profile(const BaseSpec& base) {
  if (!base.profile_file.empty())
    return read_profile(base.profile_file, base.base_density);
  return make_cosine_profile(base.epsilon, base.harmonic,
                             static_cast<Eigen::Index>(base.grid_size),
                             base.base_density);
}

int resolve_winding(const RingConfigd& config, const DensityProfiled& profile,
                    const BaseSpec& base) {
  return base.winding_auto ? ground_state_winding(config, profile) : base.winding;
}

std::vector<double> grid_values(const GridSpec& grid) {
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(grid.count));
  if (grid.count == 1) {
    values.push_back(grid.start);
    return values;
  }
  for (int i = 0; i < grid.count; ++i)
    values.push_back(grid.start +
                     (grid.stop - grid.start) * double(i) / double(grid.count - 1));
  return values;
}

const char* format_name(Format format) {
  return format == Format::csv ? "csv" : "json";
}

void echo_base(Document& doc, const SweepSpec& spec) {
  const BaseSpec& base = spec.base;
  const int p = spec.output.precision;
  doc.spec_echo.emplace_back("kind", quoted(kind_name(spec.kind)));
  if (spec.kind != Kind::flux && spec.kind != Kind::landau &&
      spec.kind != Kind::certificate)
    doc.spec_echo.emplace_back("flux", fixed_token(base.flux, p));
  if (spec.kind != Kind::certificate) {
    if (!base.profile_file.empty()) {
      doc.spec_echo.emplace_back("profile_file", quoted(base.profile_file));
    } else if (spec.kind != Kind::amplitude && spec.kind != Kind::landau) {
      doc.spec_echo.emplace_back("epsilon", fixed_token(base.epsilon, p));
    }
    doc.spec_echo.emplace_back("harmonic", int_token(base.harmonic));
  }
  doc.spec_echo.emplace_back("grid_size", int_token(base.grid_size));
  if (spec.kind != Kind::certificate && spec.kind != Kind::landau)
    doc.spec_echo.emplace_back(
        "winding", base.winding_auto ? quoted("auto") : int_token(base.winding));
  doc.spec_echo.emplace_back("radius", fixed_token(base.radius, p));
  doc.spec_echo.emplace_back("mass", fixed_token(base.mass, p));
  doc.spec_echo.emplace_back("charge", fixed_token(base.charge, p));
  doc.spec_echo.emplace_back("base_density", fixed_token(base.base_density, p));
  if (spec.kind == Kind::landau) {
    doc.spec_echo.emplace_back("alpha", fixed_token(base.alpha, p));
    doc.spec_echo.emplace_back("beta", fixed_token(base.beta, p));
    doc.spec_echo.emplace_back("shape_factor", fixed_token(base.shape_factor, p));
  }
  if (spec.kind == Kind::flux || spec.kind == Kind::omega ||
      spec.kind == Kind::amplitude || spec.kind == Kind::landau) {
    doc.spec_echo.emplace_back("grid_start", fixed_token(spec.grid.start, p));
    doc.spec_echo.emplace_back("grid_stop", fixed_token(spec.grid.stop, p));
    doc.spec_echo.emplace_back("grid_count", int_token(spec.grid.count));
  }
  if (spec.kind == Kind::certificate) {
    doc.spec_echo.emplace_back("seed",
                               int_token(static_cast<long long>(spec.certificate.seed)));
    doc.spec_echo.emplace_back("cases", int_token(spec.certificate.cases));
    doc.spec_echo.emplace_back("derivative_step",
                               sci_token(spec.certificate.derivative_step, p));
    doc.spec_echo.emplace_back("threshold_scale",
                               sci_token(spec.certificate.threshold_scale, p));
  }
  doc.spec_echo.emplace_back("format", quoted(format_name(spec.output.format)));
  doc.spec_echo.emplace_back("precision", int_token(spec.output.precision));
}

// ---------------------------------------------------------------------------
// per-kind runners

Document run_steady(const SweepSpec& spec, std::string& phase_table) {
  const RingConfigd config = ring_config(spec.base, spec.base.flux);
  const DensityProfiled profile = base_profile(spec.base);
  const int winding = resolve_winding(config, profile, spec.base);
  const SteadyStated state = solve_steady(config, profile, winding);
  const int p = spec.output.precision;

  Document doc;
  echo_base(doc, spec);
  doc.columns = {"winding", "current", "energy", "angular_momentum"};
  doc.rows.push_back({int_token(state.winding), fixed_token(state.current, p),
                      fixed_token(state.energy, p),
                      fixed_token(state.angular_momentum, p)});
  doc.summary.emplace_back("rows", int_token(1));

  if (!spec.output.phase_path.empty()) {
    const auto angles = profile.angles();
    phase_table = "theta,phase_gradient\n";
    for (Eigen::Index i = 0; i < angles.size(); ++i)
      phase_table += fixed_token(angles[i], p) + "," +
                     fixed_token(state.phase_gradient[i], p) + "\n";
  }
  return doc;
}

Document run_flux(const SweepSpec& spec) {
  const DensityProfiled profile = base_profile(spec.base);
  const int p = spec.output.precision;

  Document doc;
  echo_base(doc, spec);
  doc.columns = {"flux", "winding", "current", "energy", "angular_momentum"};
  for (const double flux : grid_values(spec.grid)) {
    const RingConfigd config = ring_config(spec.base, flux);
    const int winding = resolve_winding(config, profile, spec.base);
    const SteadyStated state = solve_steady(config, profile, winding);
    doc.rows.push_back({fixed_token(flux, p), int_token(state.winding),
                        fixed_token(state.current, p), fixed_token(state.energy, p),
                        fixed_token(state.angular_momentum, p)});
  }
  doc.summary.emplace_back("rows", int_token(static_cast<long long>(doc.rows.size())));
  return doc;
}

Document run_amplitude(const SweepSpec& spec) {
  const RingConfigd config = ring_config(spec.base, spec.base.flux);
  const int p = spec.output.precision;

  Document doc;
  echo_base(doc, spec);
  doc.columns = {"epsilon", "winding", "current", "energy", "angular_momentum"};
  for (const double epsilon : grid_values(spec.grid)) {
    const DensityProfiled profile = make_cosine_profile(
        epsilon, spec.base.harmonic, static_cast<Eigen::Index>(spec.base.grid_size),
        spec.base.base_density);
    const int winding = resolve_winding(config, profile, spec.base);
    const SteadyStated state = solve_steady(config, profile, winding);
    doc.rows.push_back({fixed_token(epsilon, p), int_token(state.winding),
                        fixed_token(state.current, p), fixed_token(state.energy, p),
                        fixed_token(state.angular_momentum, p)});
  }
  doc.summary.emplace_back("rows", int_token(static_cast<long long>(doc.rows.size())));
  return doc;
}

Document run_omega(const SweepSpec& spec) {
  const RingConfigd config = ring_config(spec.base, spec.base.flux);
  const DensityProfiled profile = base_profile(spec.base);
  const int winding = resolve_winding(config, profile, spec.base);
  const RotationScand scan =
      scan_rotation(config, profile, winding, spec.grid.start, spec.grid.stop,
                    static_cast<Eigen::Index>(spec.grid.count));
  const int p = spec.output.precision;

  Document doc;
  echo_base(doc, spec);
  doc.columns = {"omega", "energy"};
  for (Eigen::Index i = 0; i < scan.omegas.size(); ++i)
    doc.rows.push_back(
        {fixed_token(scan.omegas[i], p), fixed_token(scan.energies[i], p)});
  doc.summary.emplace_back("derivative_at_zero", sci_token(scan.derivative_at_zero, p));
  doc.summary.emplace_back("stiffness_exact",
                           fixed_token(rotational_stiffness(config, profile, winding), p));
  doc.summary.emplace_back("stiffness_fitted", fixed_token(scan.stiffness, p));
  doc.summary.emplace_back("stiffness_perturbative",
                           fixed_token(stiffness_perturbative(config, profile), p));
  return doc;
}

Document run_landau(const SweepSpec& spec) {
  const RingConfigd config = ring_config(spec.base, 0.0);
  const LandauParamsd params{spec.base.alpha, spec.base.beta, spec.base.shape_factor};
  const auto points =
      instability_sweep(config, params, grid_values(spec.grid), spec.base.harmonic,
                        static_cast<Eigen::Index>(spec.base.grid_size));
  const int p = spec.output.precision;

  Document doc;
  echo_base(doc, spec);
  doc.columns = {"flux", "winding", "alpha_eff", "amplitude", "energy_total"};
  for (const auto& point : points)
    doc.rows.push_back({fixed_token(point.flux, p), int_token(point.winding),
                        fixed_token(point.alpha_eff, p),
                        fixed_token(point.amplitude, p),
                        fixed_token(point.energy_total, p)});
  doc.summary.emplace_back("rows", int_token(static_cast<long long>(doc.rows.size())));
  return doc;
}

Document run_certificate(const SweepSpec& spec, int& status) {
  const CertificateSpec& cert = spec.certificate;
  const int p = spec.output.precision;
  std::mt19937_64 rng(cert.seed);

  Document doc;
  echo_base(doc, spec);
  doc.columns = {"case",   "flux",        "winding",           "harmonics",
                 "epsilon_total", "energy_zero", "derivative_at_zero", "threshold",
                 "pass"};
  double max_abs_derivative = 0.0;
  int violations = 0;
  for (int index = 0; index < cert.cases; ++index) {
    const double flux = uniform_in(rng, -0.5, 0.5);
    const int winding = uniform_int_in(rng, -1, 1);
    const RandomProfile random = random_harmonic_profile(
        rng, static_cast<Eigen::Index>(spec.base.grid_size), 5, 0.4,
        spec.base.base_density);
    const RingConfigd config = ring_config(spec.base, flux);
    const double energy_zero = energy_lab_frame(config, random.profile, winding, 0.0);
    const double derivative = rotation_derivative_check(
        config, random.profile, winding, cert.derivative_step);
    const double threshold = cert.threshold_scale * std::max(energy_zero, 1.0);
    const bool ok = std::abs(derivative) < threshold;
    max_abs_derivative = std::max(max_abs_derivative, std::abs(derivative));
    violations += ok ? 0 : 1;
    doc.rows.push_back({int_token(index), fixed_token(flux, p), int_token(winding),
                        int_token(random.harmonics),
                        fixed_token(random.total_amplitude, p),
                        fixed_token(energy_zero, p), sci_token(derivative, p),
                        sci_token(threshold, p), bool_token(ok)});
  }
  doc.summary.emplace_back("cases", int_token(cert.cases));
  doc.summary.emplace_back("max_abs_derivative", sci_token(max_abs_derivative, p));
  doc.summary.emplace_back("violations", int_token(violations));
  doc.summary.emplace_back("pass", bool_token(violations == 0));
  status = violations == 0 ? 0 : 1;
  return doc;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace

const char* kind_name(Kind kind) {
  switch (kind) {
    case Kind::steady: return "steady";
    case Kind::flux: return "flux";
    case Kind::omega: return "omega";
    case Kind::amplitude: return "amplitude";
    case Kind::landau: return "landau";
    case Kind::certificate: return "certificate";
  }
  return "?";
}

Kind parse_kind(const std::string& name) {
  if (name == "steady") return Kind::steady;
  if (name == "flux") return Kind::flux;
  if (name == "omega") return Kind::omega;
  if (name == "amplitude") return Kind::amplitude;
  if (name == "landau") return Kind::landau;
  if (name == "certificate") return Kind::certificate;
  throw ConfigError("unknown kind '" + name +
                    "' (expected steady|flux|omega|amplitude|landau|certificate)");
}

SweepSpec parse_config(std::istream& in, const std::string& origin) {
  SweepSpec spec;
  bool kind_seen = false;
  std::string section;
  std::string line;
  std::size_t lineno = 0;

  while (std::getline(in, line)) {
    ++lineno;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;

    if (text.front() == '[') {
      if (text.back() != ']')
        fail_key(origin, lineno, "malformed section header '" + text + "'");
      section = trim(text.substr(1, text.size() - 2));
      if (section != "base" && section != "grid" && section != "output")
        fail_key(origin, lineno, "unknown section [" + section + "]");
      continue;
    }

    const auto eq = text.find('=');
    if (eq == std::string::npos)
      fail_key(origin, lineno, "expected 'key = value', got '" + text + "'");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty()) fail_key(origin, lineno, "empty key");

    if (section.empty()) {
      if (key == "kind") {
        try {
          spec.kind = parse_kind(value);
        } catch (const ConfigError& error) {
          fail_key(origin, lineno, error.what());
        }
        kind_seen = true;
      } else if (key == "seed") {
        spec.certificate.seed = parse_seed(origin, lineno, key, value);
      } else if (key == "cases") {
        spec.certificate.cases =
            static_cast<int>(parse_integer(origin, lineno, key, value));
      } else {
        fail_key(origin, lineno, "unknown key '" + key + "' at top level");
      }
    } else if (section == "base") {
      if (key == "flux") spec.base.flux = parse_double(origin, lineno, key, value);
      else if (key == "epsilon") spec.base.epsilon = parse_double(origin, lineno, key, value);
      else if (key == "harmonic")
        spec.base.harmonic = static_cast<int>(parse_integer(origin, lineno, key, value));
      else if (key == "grid_size")
        spec.base.grid_size = static_cast<int>(parse_integer(origin, lineno, key, value));
      else if (key == "winding") {
        if (value == "auto") {
          spec.base.winding_auto = true;
        } else {
          spec.base.winding = static_cast<int>(parse_integer(origin, lineno, key, value));
          spec.base.winding_auto = false;
        }
      } else if (key == "radius") spec.base.radius = parse_double(origin, lineno, key, value);
      else if (key == "mass") spec.base.mass = parse_double(origin, lineno, key, value);
      else if (key == "charge") spec.base.charge = parse_double(origin, lineno, key, value);
      else if (key == "base_density")
        spec.base.base_density = parse_double(origin, lineno, key, value);
      else if (key == "alpha") spec.base.alpha = parse_double(origin, lineno, key, value);
      else if (key == "beta") spec.base.beta = parse_double(origin, lineno, key, value);
      else if (key == "shape_factor")
        spec.base.shape_factor = parse_double(origin, lineno, key, value);
      else if (key == "profile_file") spec.base.profile_file = value;
      else fail_key(origin, lineno, "unknown key '" + key + "' in section [base]");
    } else if (section == "grid") {
      if (key == "start") spec.grid.start = parse_double(origin, lineno, key, value);
      else if (key == "stop") spec.grid.stop = parse_double(origin, lineno, key, value);
      else if (key == "count")
        spec.grid.count = static_cast<int>(parse_integer(origin, lineno, key, value));
      else fail_key(origin, lineno, "unknown key '" + key + "' in section [grid]");
      spec.grid.specified = true;
    } else {  // output
      if (key == "path") spec.output.path = value;
      else if (key == "phase_path") spec.output.phase_path = value;
      else if (key == "format") {
        if (value == "csv") spec.output.format = Format::csv;
        else if (value == "json") spec.output.format = Format::json;
        else fail_key(origin, lineno, "key 'format': expected csv or json, got '" + value + "'");
        spec.output.format_specified = true;
      } else if (key == "precision") {
        spec.output.precision = static_cast<int>(parse_integer(origin, lineno, key, value));
      } else fail_key(origin, lineno, "unknown key '" + key + "' in section [output]");
    }
  }

  if (!kind_seen) throw ConfigError(origin + ": missing required key 'kind'");
  return spec;
}

SweepSpec load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in, path);
}

void validate(SweepSpec& spec) {
  const BaseSpec& base = spec.base;
  if (!(base.radius > 0)) throw ConfigError("radius must be positive");
  if (!(base.mass > 0)) throw ConfigError("mass must be positive");
  if (!(base.base_density > 0)) throw ConfigError("base_density must be positive");
  if (base.charge == 0) throw ConfigError("charge must be nonzero");
  if (!(std::abs(base.epsilon) < 1))
    throw ConfigError("amplitude must satisfy |epsilon| < 1");
  if (base.harmonic < 1) throw ConfigError("harmonic must be >= 1");
  if (base.grid_size < 8) throw ConfigError("grid_size must be >= 8");
  if (2 * base.harmonic >= base.grid_size)
    throw ConfigError("harmonic must satisfy 2 * harmonic < grid_size");
  if (spec.output.precision < 6 || spec.output.precision > 17)
    throw ConfigError("precision must be in [6, 17]");
  if (spec.kind == Kind::certificate && !spec.output.format_specified)
    spec.output.format = Format::json;  // certificates are JSON unless asked otherwise

  const bool swept = spec.kind == Kind::flux || spec.kind == Kind::omega ||
                     spec.kind == Kind::amplitude || spec.kind == Kind::landau;
  if (swept) {
    if (!spec.grid.specified) {
      switch (spec.kind) {
        case Kind::flux: spec.grid = {0.0, 2.0, 201, true}; break;
        case Kind::omega: spec.grid = {-0.2, 0.2, 41, true}; break;
        case Kind::amplitude: spec.grid = {0.0, 0.5, 51, true}; break;
        default: spec.grid = {0.0, 1.0, 101, true}; break;  // landau
      }
    }
    if (spec.grid.count < 1) throw ConfigError("grid count must be >= 1");
    if (!(spec.grid.start <= spec.grid.stop))
      throw ConfigError("grid start must not exceed stop");
  }
  if (spec.kind == Kind::omega && spec.grid.count < 3)
    throw ConfigError("omega sweep needs at least 3 grid points");
  if (spec.kind == Kind::amplitude) {
    if (!(std::abs(spec.grid.start) < 1) || !(std::abs(spec.grid.stop) < 1))
      throw ConfigError("amplitude sweep grid must stay within |epsilon| < 1");
    if (!base.profile_file.empty())
      throw ConfigError("amplitude sweep uses the cosine descriptor; remove profile_file");
  }
  if (spec.kind == Kind::landau) {
    if (!(base.beta > 0)) throw ConfigError("beta must be positive");
    if (!(base.shape_factor > 0)) throw ConfigError("shape_factor must be positive");
  }
  if (spec.kind == Kind::certificate) {
    if (spec.certificate.cases < 1) throw ConfigError("cases must be >= 1");
    if (!(spec.certificate.derivative_step > 0))
      throw ConfigError("derivative step must be positive");
    if (!(spec.certificate.threshold_scale > 0))
      throw ConfigError("threshold scale must be positive");
  }
}

RunResult execute(const SweepSpec& spec_in) {
  SweepSpec spec = spec_in;
  validate(spec);

  Document doc;
  int status = 0;
  std::string phase_table;
  switch (spec.kind) {
    case Kind::steady: doc = run_steady(spec, phase_table); break;
    case Kind::flux: doc = run_flux(spec); break;
    case Kind::omega: doc = run_omega(spec); break;
    case Kind::amplitude: doc = run_amplitude(spec); break;
    case Kind::landau: doc = run_landau(spec); break;
    case Kind::certificate: doc = run_certificate(spec, status); break;
  }
  const std::string report =
      spec.output.format == Format::csv ? render_csv(doc) : render_json(doc);
  return {status, report, std::move(phase_table)};
}

int run(const SweepSpec& spec) {
  const RunResult result = execute(spec);
  if (spec.output.path.empty())
    std::cout << result.report;
  else
    write_file(spec.output.path, result.report);
  if (!result.phase_table.empty())
    write_file(spec.output.phase_path, result.phase_table);
  return result.status;
}

}  // namespace fluxring::sweep

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "fluxring/profile_io.hpp"
#include "fluxring/sweep.hpp"

#include "test_support.hpp"

namespace sweep = fluxring::sweep;
using std::numbers::pi;

namespace {

sweep::SweepSpec parse(const std::string& text) {
  std::istringstream stream(text);
  return sweep::parse_config(stream, "test.ini");
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream stream(line);
  while (std::getline(stream, cell, sep)) out.push_back(cell);
  return out;
}

}  // namespace

TEST_SUITE("sweep") {

TEST_CASE("config: minimal file applies the documented defaults") {
  auto spec = parse("kind = flux\n");
  CHECK(spec.kind == sweep::Kind::flux);
  CHECK(spec.base.radius == 1.0);
  CHECK(spec.base.base_density == 1.0);
  CHECK(spec.base.grid_size == 1024);
  CHECK(spec.base.epsilon == 0.0);
  CHECK(spec.base.winding_auto);
  CHECK(spec.output.precision == 12);

  sweep::validate(spec);  // fills the default flux grid
  CHECK(spec.grid.start == 0.0);
  CHECK(spec.grid.stop == 2.0);
  CHECK(spec.grid.count == 201);
}

TEST_CASE("config: sections, overrides and the full grammar") {
  const auto spec = parse(
      "# comment\n"
      "kind = omega\n"
      "\n"
      "[base]\n"
      "flux = 0.25\n"
      "epsilon = 0.15\n"
      "harmonic = 2\n"
      "grid_size = 512\n"
      "winding = -1\n"
      "[grid]\n"
      "start = -0.1\n"
      "stop = 0.1\n"
      "count = 11\n"
      "[output]\n"
      "format = json\n"
      "precision = 9\n");
  CHECK(spec.kind == sweep::Kind::omega);
  CHECK(spec.base.flux == 0.25);
  CHECK(spec.base.epsilon == 0.15);
  CHECK(spec.base.harmonic == 2);
  CHECK_FALSE(spec.base.winding_auto);
  CHECK(spec.base.winding == -1);
  CHECK(spec.grid.count == 11);
  CHECK(spec.output.format == sweep::Format::json);
  CHECK(spec.output.precision == 9);
}

TEST_CASE("config: errors name the offending key") {
  CHECK_THROWS_WITH_AS(parse("kind = flux\n[base]\nfluxx = 1\n"),
                       doctest::Contains("fluxx"), sweep::ConfigError);
  CHECK_THROWS_WITH_AS(parse("kind = flux\n[grid]\ncount = soon\n"),
                       doctest::Contains("count"), sweep::ConfigError);
  CHECK_THROWS_WITH_AS(parse("[base]\nflux = 0.1\n"),
                       doctest::Contains("kind"), sweep::ConfigError);
  CHECK_THROWS_WITH_AS(parse("kind = warp\n"), doctest::Contains("warp"),
                       sweep::ConfigError);
  CHECK_THROWS_WITH_AS(parse("kind = flux\n[orbit]\nx = 1\n"),
                       doctest::Contains("orbit"), sweep::ConfigError);
  CHECK_THROWS_AS(parse("kind = flux\nnot a key value line\n"), sweep::ConfigError);
}

TEST_CASE("config: range validation") {
  auto overdriven = parse("kind = steady\n[base]\nepsilon = 1.2\n");
  CHECK_THROWS_WITH_AS(sweep::validate(overdriven),
                       doctest::Contains("amplitude must satisfy |epsilon| < 1"),
                       sweep::ConfigError);

  auto empty_grid = parse("kind = flux\n[grid]\ncount = 0\n");
  CHECK_THROWS_WITH_AS(sweep::validate(empty_grid), doctest::Contains("count"),
                       sweep::ConfigError);

  auto reversed = parse("kind = flux\n[grid]\nstart = 2\nstop = 1\ncount = 5\n");
  CHECK_THROWS_AS(sweep::validate(reversed), sweep::ConfigError);

  auto coarse = parse("kind = steady\n[output]\nprecision = 5\n");
  CHECK_THROWS_WITH_AS(sweep::validate(coarse), doctest::Contains("precision"),
                       sweep::ConfigError);

  auto drained = parse("kind = landau\n[base]\nbeta = 0\n");
  CHECK_THROWS_WITH_AS(sweep::validate(drained), doctest::Contains("beta"),
                       sweep::ConfigError);
}

TEST_CASE("steady: emitted record matches the solver") {
  auto spec = parse(
      "kind = steady\n[base]\nflux = 0.3\nepsilon = 0.2\ngrid_size = 1024\n"
      "winding = 0\n");
  const auto result = sweep::execute(spec);
  CHECK(result.status == 0);

  std::istringstream stream(result.report);
  std::string header, row;
  std::getline(stream, header);
  std::getline(stream, row);
  CHECK(header == "winding,current,energy,angular_momentum");
  const auto cells = split(row, ',');
  REQUIRE(cells.size() == 4);
  CHECK(cells[0] == "0");
  CHECK(std::stod(cells[1]) ==
        doctest::Approx(-0.3 * std::sqrt(0.96)).epsilon(1e-12));
  CHECK(std::stod(cells[2]) ==
        doctest::Approx(pi * 0.09 * std::sqrt(0.96)).epsilon(1e-12));
}

TEST_CASE("flux sweep: sawtooth with winding reselection") {
  auto spec = parse(
      "kind = flux\n[grid]\nstart = 0\nstop = 2\ncount = 9\n[output]\nformat = "
      "json\n");
  const auto result = sweep::execute(spec);
  const auto doc = nlohmann::json::parse(result.report);

  REQUIRE(doc.at("rows").size() == 9);
  // minima at integer flux, maxima at the half-integer kinks
  CHECK(doc["rows"][0]["energy"].get<double>() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(doc["rows"][4]["energy"].get<double>() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(doc["rows"][8]["energy"].get<double>() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(doc["rows"][2]["energy"].get<double>() ==
        doctest::Approx(pi * 0.25).epsilon(1e-10));
  CHECK(doc["rows"][0]["winding"].get<int>() == 0);
  CHECK(doc["rows"][3]["winding"].get<int>() == 1);  // a = 0.75
  CHECK(doc["rows"][8]["winding"].get<int>() == 2);
  // periodicity under reselection
  CHECK(doc["rows"][1]["energy"].get<double>() ==
        doctest::Approx(doc["rows"][5]["energy"].get<double>()).epsilon(1e-10));
}

TEST_CASE("omega sweep: parabola summary") {
  auto spec = parse(
      "kind = omega\n[base]\nflux = 0.3\nepsilon = 0.2\ngrid_size = 1024\n"
      "winding = 0\n[output]\nformat = json\n");
  const auto result = sweep::execute(spec);
  const auto doc = nlohmann::json::parse(result.report);

  REQUIRE(doc.at("rows").size() == 41);
  const double stiffness_exact = doc["summary"]["stiffness_exact"].get<double>();
  CHECK(stiffness_exact ==
        doctest::Approx(2.0 * pi * (1.0 - std::sqrt(0.96))).epsilon(1e-8));
  CHECK(doc["summary"]["stiffness_fitted"].get<double>() ==
        doctest::Approx(stiffness_exact).epsilon(1e-7));
  CHECK(doc["summary"]["stiffness_perturbative"].get<double>() ==
        doctest::Approx(2.0 * pi * 0.02).epsilon(1e-10));
  CHECK(std::abs(doc["summary"]["derivative_at_zero"].get<double>()) < 1e-8);
  // vertex of the parabola at rest: scanned energies are minimal at omega = 0
  const auto& rows = doc["rows"];
  CHECK(rows[20]["omega"].get<double>() == doctest::Approx(0.0));
  for (int i = 0; i < 41; ++i)
    CHECK(rows[i]["energy"].get<double>() >=
          rows[20]["energy"].get<double>() - 1e-14);
}

TEST_CASE("landau sweep: field-induced amplitude appears with flux") {
  auto spec = parse(
      "kind = landau\n[base]\nalpha = -0.1\nbeta = 0.5\ngrid_size = 512\n"
      "[grid]\nstart = 0\nstop = 0.3\ncount = 2\n[output]\nformat = json\n");
  const auto result = sweep::execute(spec);
  const auto doc = nlohmann::json::parse(result.report);
  REQUIRE(doc.at("rows").size() == 2);
  CHECK(doc["rows"][0]["amplitude"].get<double>() == 0.0);
  CHECK(doc["rows"][1]["amplitude"].get<double>() ==
        doctest::Approx(std::sqrt(-0.1 + 0.045 * pi)).epsilon(1e-9));
}

TEST_CASE("certificate: small run passes and reports its seed") {
  auto spec = parse("kind = certificate\nseed = 7\ncases = 10\n[output]\nformat = json\n");
  const auto result = sweep::execute(spec);
  CHECK(result.status == 0);
  const auto doc = nlohmann::json::parse(result.report);
  CHECK(doc["spec"]["seed"].get<std::uint64_t>() == 7);
  CHECK(doc["summary"]["violations"].get<int>() == 0);
  CHECK(doc["summary"]["pass"].get<bool>());
  REQUIRE(doc["rows"].size() == 10);
  for (const auto& row : doc["rows"]) {
    CHECK(row["pass"].get<bool>());
    CHECK(std::abs(row["derivative_at_zero"].get<double>()) <
          row["threshold"].get<double>());
  }
}

TEST_CASE("certificate: a violation flips the status and the report flags") {
  // squeeze the threshold below round-off so the violation path runs
  auto spec = parse("kind = certificate\nseed = 1\ncases = 5\n[output]\nformat = json\n");
  spec.certificate.threshold_scale = 1e-30;
  const auto result = sweep::execute(spec);
  CHECK(result.status == 1);
  const auto doc = nlohmann::json::parse(result.report);
  CHECK(doc["summary"]["violations"].get<int>() > 0);
  CHECK_FALSE(doc["summary"]["pass"].get<bool>());
}

TEST_CASE("steady: the phase-gradient table is emitted on request") {
  auto spec = parse(
      "kind = steady\n[base]\nflux = 0.3\nepsilon = 0.2\ngrid_size = 64\n"
      "winding = 0\n[output]\nphase_path = unused-by-execute\n");
  const auto result = sweep::execute(spec);
  std::istringstream table(result.phase_table);
  std::string line;
  std::getline(table, line);
  CHECK(line == "theta,phase_gradient");
  int rows = 0;
  double theta = -1.0;
  while (std::getline(table, line)) {
    const auto cells = split(line, ',');
    REQUIRE(cells.size() == 2);
    CHECK(std::stod(cells[0]) > theta);  // theta strictly increasing
    theta = std::stod(cells[0]);
    ++rows;
  }
  CHECK(rows == 64);
}

TEST_CASE("determinism: identical specs render byte-identical reports") {
  for (const char* text :
       {"kind = certificate\nseed = 42\ncases = 20\n[output]\nformat = json\n",
        "kind = flux\n[grid]\nstart = 0\nstop = 1\ncount = 21\n",
        "kind = omega\n[base]\nflux = 0.3\nepsilon = 0.2\n[output]\nformat = json\n"}) {
    auto spec_a = parse(text);
    auto spec_b = parse(text);
    CHECK(sweep::execute(spec_a).report == sweep::execute(spec_b).report);
  }
}

TEST_CASE("round trip: CSV cells reproduce their values at the configured precision") {
  auto spec = parse(
      "kind = flux\n[base]\nepsilon = 0.2\ngrid_size = 256\n"
      "[grid]\nstart = 0\nstop = 1.5\ncount = 16\n[output]\nprecision = 9\n");
  const auto result = sweep::execute(spec);

  std::istringstream stream(result.report);
  std::string line;
  std::getline(stream, line);  // header
  int rows = 0;
  while (std::getline(stream, line)) {
    if (line.empty() || line[0] == '#') continue;
    ++rows;
    for (const auto& cell : split(line, ',')) {
      if (cell.find('.') == std::string::npos) {
        CHECK(std::to_string(std::stoll(cell)) == cell);  // integer column
      } else {
        char buffer[64];
        std::snprintf(buffer, sizeof(buffer), "%.9f", std::stod(cell));
        CHECK(cell == buffer);
      }
    }
  }
  CHECK(rows == 16);
}

TEST_CASE("profile file: loaded, re-centered and swept") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "fluxring_profile_test.txt";
  {
    std::ofstream out(path);
    out << "# n1 profile N=64\n" << std::setprecision(17);
    for (int i = 0; i < 64; ++i)
      out << 0.5 + 0.2 * std::cos(2.0 * pi * i / 64.0) << "\n";  // offset by 0.5
  }
  auto spec = parse("kind = steady\n[base]\nflux = 0.3\nwinding = 0\n");
  spec.base.profile_file = path.string();
  const auto result = sweep::execute(spec);

  std::istringstream stream(result.report);
  std::string header, row;
  std::getline(stream, header);
  std::getline(stream, row);
  const auto cells = split(row, ',');
  REQUIRE(cells.size() == 4);
  // offset is centered away: same state as the eps = 0.2 cosine
  CHECK(std::stod(cells[1]) ==
        doctest::Approx(-0.3 * std::sqrt(0.96)).epsilon(1e-9));
  fs::remove(path);
}

TEST_CASE("amplitude sweep: current shrinks as the modulation grows") {
  auto spec = parse(
      "kind = amplitude\n[base]\nflux = 0.3\nwinding = 0\ngrid_size = 256\n"
      "[grid]\nstart = 0\nstop = 0.8\ncount = 5\n[output]\nformat = json\n");
  const auto result = sweep::execute(spec);
  const auto doc = nlohmann::json::parse(result.report);
  REQUIRE(doc["rows"].size() == 5);
  double previous = 1.0;
  for (const auto& row : doc["rows"]) {
    const double magnitude = std::abs(row["current"].get<double>());
    CHECK(magnitude <= previous + 1e-15);
    previous = magnitude;
  }
}

}  // TEST_SUITE

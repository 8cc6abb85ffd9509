#pragma once

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "fluxring/ring.hpp"

namespace fluxring {

// Plain-text profile exchange format: one n1 sample per line, optional
// header "# n1 profile N=<grid_size>", other '#' lines are comments.
// Readers re-center the periodic mean on load.

struct ProfileIoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void write_profile(std::ostream& out, const DensityProfile<double>& profile) {
  out << "# n1 profile N=" << profile.grid_size() << "\n";
  char buffer[64];
  for (Eigen::Index i = 0; i < profile.grid_size(); ++i) {
    std::snprintf(buffer, sizeof(buffer), "%.17g\n", profile.samples()[i]);
    out << buffer;
  }
}

inline void write_profile(const std::string& path, const DensityProfile<double>& profile) {
  std::ofstream out(path);
  if (!out) throw ProfileIoError("write_profile: cannot open '" + path + "'");
  write_profile(out, profile);
  if (!out) throw ProfileIoError("write_profile: write to '" + path + "' failed");
}

inline DensityProfile<double> read_profile(std::istream& in, double base_density = 1.0) {
  std::vector<double> values;
  Eigen::Index declared_size = -1;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    if (line[begin] == '#') {
      long parsed = -1;
      if (std::sscanf(line.c_str() + begin, "# n1 profile N=%ld", &parsed) == 1)
        declared_size = parsed;
      continue;
    }
    std::size_t consumed = 0;
    double value = 0;
    try {
      value = std::stod(line.substr(begin), &consumed);
    } catch (const std::exception&) {
      throw ProfileIoError("read_profile: line " + std::to_string(line_number) +
                           " is not a number: '" + line + "'");
    }
    const auto rest = line.find_first_not_of(" \t\r", begin + consumed);
    if (rest != std::string::npos)
      throw ProfileIoError("read_profile: trailing garbage on line " +
                           std::to_string(line_number) + ": '" + line + "'");
    values.push_back(value);
  }
  if (declared_size >= 0 && declared_size != static_cast<Eigen::Index>(values.size()))
    throw ProfileIoError("read_profile: header declares N=" +
                         std::to_string(declared_size) + " but found " +
                         std::to_string(values.size()) + " samples");
  const Eigen::Map<const ArrayX<double>> samples(values.data(),
                                                 static_cast<Eigen::Index>(values.size()));
  return make_custom_profile(ArrayX<double>(samples), base_density);
}

inline DensityProfile<double> read_profile(const std::string& path,
                                           double base_density = 1.0) {
  std::ifstream in(path);
  if (!in) throw ProfileIoError("read_profile: cannot open '" + path + "'");
  return read_profile(in, base_density);
}

}  // namespace fluxring

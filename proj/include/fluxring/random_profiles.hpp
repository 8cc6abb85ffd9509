#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "fluxring/ring.hpp"

namespace fluxring {

// Seeded profile generation for certificate runs and property tests. Only the
// mt19937_64 bit stream is used directly: std::uniform_real_distribution is
// implementation-defined, and certificate reports must be byte-identical
// across platforms for the same seed.

/// Uniform double in [0, 1) from the top 53 bits of the generator.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

/// Uniform integer in [lo, hi], both ends inclusive.
inline int uniform_int_in(std::mt19937_64& rng, int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int_in: empty range");
  const int span = hi - lo + 1;
  return lo + static_cast<int>(uniform_unit(rng) * span);
}

struct RandomProfile {
  DensityProfile<double> profile;
  int harmonics;
  double total_amplitude;  // sum of |c_j|, relative to n0
};

/// Random smooth modulation: 1..max_harmonics cosine harmonics with random
/// phases, amplitudes scaled so sum |c_j| lands in
/// [0.1, 1] * max_total_amplitude. The sum bound keeps the density strictly
/// positive as long as max_total_amplitude < 1.
inline RandomProfile random_harmonic_profile(std::mt19937_64& rng,
                                             Eigen::Index grid_size,
                                             int max_harmonics,
                                             double max_total_amplitude,
                                             double base_density = 1.0) {
  if (!(max_total_amplitude > 0.0) || !(max_total_amplitude < 1.0))
    throw std::invalid_argument(
        "random_harmonic_profile: max_total_amplitude must lie in (0, 1)");
  const int harmonics = uniform_int_in(rng, 1, max_harmonics);
  const double total = max_total_amplitude * uniform_in(rng, 0.1, 1.0);

  ArrayX<double> weights(harmonics);
  for (int j = 0; j < harmonics; ++j) weights[j] = uniform_in(rng, 0.1, 1.0);
  weights *= total / weights.sum();

  const ArrayX<double> angles = grid_angles<double>(grid_size);
  ArrayX<double> samples = ArrayX<double>::Zero(grid_size);
  for (int j = 0; j < harmonics; ++j) {
    const double phase = uniform_in(rng, 0.0, 2.0 * std::numbers::pi);
    samples += base_density * weights[j] * (double(j + 1) * angles + phase).cos();
  }
  return {make_custom_profile(samples, base_density), harmonics, total};
}

}  // namespace fluxring

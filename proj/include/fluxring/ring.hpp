#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include <Eigen/Core>

namespace fluxring {

template <typename Scalar>
using ArrayX = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

/// Ring geometry, particle constants and applied flux.
///
/// Everything is dimensionless: hbar = c = 1 with unit defaults for R, m, q
/// and n0, so the flux quantum is 2 pi in A*R units. The hbar and light_speed
/// fields exist so the formulas keep their familiar shape; changing them is
/// supported but rarely useful.
template <typename Scalar = double>
struct RingConfig {
  Scalar radius = Scalar(1);            // R, perimeter L = 2 pi R
  Scalar charge = Scalar(1);            // q
  Scalar mass = Scalar(1);              // m
  Scalar base_density = Scalar(1);      // n0 = N0 / L
  Scalar vector_potential = Scalar(0);  // A = Phi / L, tangential component
  Scalar hbar = Scalar(1);
  Scalar light_speed = Scalar(1);

  Scalar perimeter() const {
    return Scalar(2) * std::numbers::pi_v<Scalar> * radius;
  }
  Scalar particle_number() const { return base_density * perimeter(); }

  /// Gauge term q A / c entering the kinetic momentum hbar grad S - q A / c.
  Scalar gauge_momentum() const {
    return charge * vector_potential / light_speed;
  }

  /// Flux in units of the flux quantum. The ground-state winding changes at
  /// half-integer values.
  Scalar flux_quanta() const {
    return charge * vector_potential * radius / (hbar * light_speed);
  }
};

using RingConfigd = RingConfig<double>;

template <typename Scalar>
void validate(const RingConfig<Scalar>& config) {
  if (!(config.radius > Scalar(0)))
    throw std::invalid_argument("RingConfig: radius must be positive");
  if (!(config.mass > Scalar(0)))
    throw std::invalid_argument("RingConfig: mass must be positive");
  if (!(config.base_density > Scalar(0)))
    throw std::invalid_argument("RingConfig: base_density must be positive");
  if (!(config.hbar > Scalar(0)) || !(config.light_speed > Scalar(0)))
    throw std::invalid_argument("RingConfig: hbar and light_speed must be positive");
}

/// Periodic trapezoid rule on the uniform grid, normalized by the perimeter:
/// ring_mean(f) = (1/L) * closed integral of f dx = mean of the samples.
/// Spectrally accurate for smooth periodic integrands.
template <typename Derived>
typename Derived::Scalar ring_mean(const Eigen::DenseBase<Derived>& samples) {
  return samples.derived().mean();
}

/// Node angles theta_i = 2 pi i / N of the uniform periodic grid.
template <typename Scalar = double>
ArrayX<Scalar> grid_angles(Eigen::Index grid_size) {
  return ArrayX<Scalar>::LinSpaced(grid_size, Scalar(0), Scalar(grid_size - 1)) *
         (Scalar(2) * std::numbers::pi_v<Scalar> / Scalar(grid_size));
}

/// Zero-mean density modulation n1(theta_i) sampled at theta_i = 2 pi i / N.
///
/// Instances are immutable; construct through make_cosine_profile,
/// make_custom_profile or from_samples. Two invariants hold for every
/// instance: the periodic mean of n1 vanishes (to kMeanZeroTolerance times
/// the base density it was validated against) and the total density
/// n0 + n1 stays strictly positive at every node. Zero total density is
/// refused rather than clamped: the current through a pinched-off ring is
/// zero and <1/n> diverges there.
template <typename Scalar = double>
class DensityProfile {
 public:
  using Array = ArrayX<Scalar>;

  static constexpr Eigen::Index kMinGridSize = 8;
  static constexpr double kMeanZeroTolerance = 1e-12;  // relative to n0

  /// Validates and adopts already-centered samples.
  static DensityProfile from_samples(Array samples, Scalar base_density = Scalar(1)) {
    if (samples.size() < kMinGridSize)
      throw std::invalid_argument("DensityProfile: need at least 8 grid samples");
    if (!(base_density > Scalar(0)))
      throw std::invalid_argument("DensityProfile: base density must be positive");
    using std::abs;
    if (!(abs(samples.mean()) <= Scalar(kMeanZeroTolerance) * base_density))
      throw std::invalid_argument("DensityProfile: modulation mean does not vanish");
    if (!((base_density + samples).minCoeff() > Scalar(0)))
      throw std::invalid_argument("DensityProfile: density vanishes");
    return DensityProfile(std::move(samples));
  }

  const Array& samples() const { return samples_; }
  Eigen::Index grid_size() const { return samples_.size(); }
  Array angles() const { return grid_angles<Scalar>(samples_.size()); }

 private:
  explicit DensityProfile(Array samples) : samples_(std::move(samples)) {}

  Array samples_;
};

using DensityProfiled = DensityProfile<double>;

/// Single-harmonic modulation n1(theta) = epsilon * n0 * cos(k theta).
/// |epsilon| < 1 keeps the total density positive; the harmonic must be
/// resolvable on the grid (2k < N) so the sampled mean and mean square are
/// the continuum values.
template <typename Scalar>
DensityProfile<Scalar> make_cosine_profile(Scalar epsilon, int harmonic,
                                           Eigen::Index grid_size,
                                           Scalar base_density = Scalar(1)) {
  using std::abs;
  if (!(abs(epsilon) < Scalar(1)))
    throw std::invalid_argument(
        "make_cosine_profile: amplitude must satisfy |epsilon| < 1 (density would vanish)");
  if (harmonic < 1)
    throw std::invalid_argument("make_cosine_profile: harmonic must be >= 1");
  if (grid_size < DensityProfile<Scalar>::kMinGridSize)
    throw std::invalid_argument("make_cosine_profile: grid_size must be >= 8");
  if (2 * static_cast<Eigen::Index>(harmonic) >= grid_size)
    throw std::invalid_argument("make_cosine_profile: harmonic not resolvable on this grid");
  ArrayX<Scalar> samples =
      epsilon * base_density * (Scalar(harmonic) * grid_angles<Scalar>(grid_size)).cos();
  return DensityProfile<Scalar>::from_samples(std::move(samples), base_density);
}

/// Centers arbitrary samples to zero periodic mean, then validates that the
/// total density n0 + n1 stays positive.
template <typename Derived>
DensityProfile<typename Derived::Scalar> make_custom_profile(
    const Eigen::ArrayBase<Derived>& raw,
    typename Derived::Scalar base_density = typename Derived::Scalar(1)) {
  using Scalar = typename Derived::Scalar;
  ArrayX<Scalar> samples = raw.derived();
  if (samples.size() < DensityProfile<Scalar>::kMinGridSize)
    throw std::invalid_argument("make_custom_profile: need at least 8 samples");
  samples -= samples.mean();
  return DensityProfile<Scalar>::from_samples(std::move(samples), base_density);
}

/// A profile validated against one base density may violate positivity under
/// another; operations re-validate the pairing here before using it.
template <typename Scalar>
void check_compatible(const RingConfig<Scalar>& config,
                      const DensityProfile<Scalar>& profile) {
  if (!((config.base_density + profile.samples()).minCoeff() > Scalar(0)))
    throw std::invalid_argument("density vanishes: n0 + n1 must stay positive on the ring");
  using std::abs;
  if (!(abs(profile.samples().mean()) <=
        Scalar(DensityProfile<Scalar>::kMeanZeroTolerance) * config.base_density))
    throw std::invalid_argument("modulation mean does not vanish for this base density");
}

/// The two ring averages every formula consumes.
template <typename Scalar = double>
struct RingAverages {
  /// <1/n> = (1/L) * closed integral dx / (n0 + n1). At least 1/n0 by the
  /// harmonic-arithmetic mean inequality, with equality only for n1 == 0;
  /// regions of low density dominate it and suppress the current.
  Scalar inv_density_mean;
  /// mean(n1^2) = (1/L) * closed integral n1^2 dx.
  Scalar modulation_mean_square;
};

using RingAveragesd = RingAverages<double>;

template <typename Scalar>
RingAverages<Scalar> compute_averages(const RingConfig<Scalar>& config,
                                      const DensityProfile<Scalar>& profile) {
  validate(config);
  check_compatible(config, profile);
  const ArrayX<Scalar> total = config.base_density + profile.samples();
  return {ring_mean(total.inverse()), ring_mean(profile.samples().square())};
}

}  // namespace fluxring

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "fluxring/ring.hpp"

namespace fluxring {

/// Steady flow state of the ring at fixed winding.
///
/// The phase gradient solves hbar grad S = qA/c + m J / n with the circulation
/// of grad S pinned to 2 pi nu, which fixes the conserved current J. Low
/// density regions steepen grad S; the current adjusts so J stays constant.
template <typename Scalar = double>
struct SteadyState {
  int winding;                    // nu, circulation of grad S in units of 2 pi
  Scalar current;                 // J, constant along the ring
  ArrayX<Scalar> phase_gradient;  // hbar grad S at each grid node
  Scalar energy;                  // E0 = (m J^2 L / 2) <1/n>
  Scalar angular_momentum;        // L_z = closed integral n R hbar grad S dx
};

using SteadyStated = SteadyState<double>;

/// Kinetic momentum offset hbar nu / R - q A / c. Current and energy depend
/// on flux and winding only through this combination, which is why the whole
/// spectrum is periodic in the flux with period one quantum.
template <typename Scalar>
Scalar winding_offset(const RingConfig<Scalar>& config, int winding) {
  return config.hbar * Scalar(winding) / config.radius - config.gauge_momentum();
}

/// Exact solution of the current constraint at integer winding nu:
///
///   J   = [hbar nu / R - q A / c] / (m <1/n>)
///   E0  = (m J^2 L / 2) <1/n>
///   L_z = closed integral of n R hbar grad S dx  (by quadrature)
///
/// No small-modulation expansion is involved; the only approximation is the
/// periodic trapezoid quadrature of the ring averages.
template <typename Scalar>
SteadyState<Scalar> solve_steady(const RingConfig<Scalar>& config,
                                 const DensityProfile<Scalar>& profile,
                                 int winding) {
  const RingAverages<Scalar> averages = compute_averages(config, profile);
  const Scalar current =
      winding_offset(config, winding) / (config.mass * averages.inv_density_mean);
  const ArrayX<Scalar> density = config.base_density + profile.samples();
  ArrayX<Scalar> phase_gradient = config.gauge_momentum() + config.mass * current / density;
  const Scalar length = config.perimeter();
  const Scalar energy = Scalar(0.5) * config.mass * current * current * length *
                        averages.inv_density_mean;
  const Scalar angular_momentum =
      config.radius * length * ring_mean(density * phase_gradient);
  return {winding, current, std::move(phase_gradient), energy, angular_momentum};
}

/// Second-order current J = (n0/m) [1 - mean(n1^2)/n0^2] [hbar nu / R - qA/c].
/// The modulation reduces the magnitude at order n1^2; the exact solver above
/// differs from this at order n1^4.
template <typename Scalar>
Scalar perturbative_current(const RingConfig<Scalar>& config,
                            const DensityProfile<Scalar>& profile, int winding) {
  const RingAverages<Scalar> averages = compute_averages(config, profile);
  const Scalar n0 = config.base_density;
  return n0 / config.mass *
         (Scalar(1) - averages.modulation_mean_square / (n0 * n0)) *
         winding_offset(config, winding);
}

/// Second-order energy E = (N0 / 2m) [hbar nu / R - qA/c]^2 [1 - mean(n1^2)/n0^2].
template <typename Scalar>
Scalar perturbative_energy(const RingConfig<Scalar>& config,
                           const DensityProfile<Scalar>& profile, int winding) {
  const RingAverages<Scalar> averages = compute_averages(config, profile);
  const Scalar n0 = config.base_density;
  const Scalar offset = winding_offset(config, winding);
  return config.particle_number() / (Scalar(2) * config.mass) * offset * offset *
         (Scalar(1) - averages.modulation_mean_square / (n0 * n0));
}

/// Second-order angular momentum L_z = N0 R (qA/c) mean(n1^2)/n0^2 in the
/// nu = 0 regime. Zero for the unmodulated ring: a pure diamagnetic current
/// carries no net angular momentum there.
template <typename Scalar>
Scalar angular_momentum_perturbative(const RingConfig<Scalar>& config,
                                     const DensityProfile<Scalar>& profile) {
  const RingAverages<Scalar> averages = compute_averages(config, profile);
  const Scalar n0 = config.base_density;
  return config.particle_number() * config.radius * config.gauge_momentum() *
         averages.modulation_mean_square / (n0 * n0);
}

/// Winding that minimizes the steady energy. The energy in nu is a parabola
/// family, so the minimum lies within one integer of the flux in quanta; ties
/// (exactly half-integer flux) break toward the smaller |nu|.
template <typename Scalar>
int ground_state_winding(const RingConfig<Scalar>& config,
                         const DensityProfile<Scalar>& profile) {
  using std::ceil;
  using std::floor;
  const Scalar quanta = config.flux_quanta();
  const int lo = static_cast<int>(floor(quanta)) - 1;
  const int hi = static_cast<int>(ceil(quanta)) + 1;
  std::vector<int> candidates;
  for (int nu = lo; nu <= hi; ++nu) candidates.push_back(nu);
  std::sort(candidates.begin(), candidates.end(), [](int a, int b) {
    return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a > b;
  });
  int best = candidates.front();
  Scalar best_energy = std::numeric_limits<Scalar>::infinity();
  for (int nu : candidates) {
    const Scalar energy = solve_steady(config, profile, nu).energy;
    if (energy < best_energy) {
      best_energy = energy;
      best = nu;
    }
  }
  return best;
}

}  // namespace fluxring

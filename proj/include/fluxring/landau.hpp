#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fluxring/ring.hpp"
#include "fluxring/steady.hpp"

namespace fluxring {

/// Quartic free-energy coefficients for the modulation amplitude u:
/// E_cdw(u) = -alpha u^2 + beta u^4. alpha > 0 means the uniform ring is
/// already unstable toward the density wave; beta > 0 keeps the energy
/// bounded. shape_factor is s = mean(n1^2) / u^2 for the chosen modulation
/// shape, 1/2 for a single cosine harmonic.
template <typename Scalar = double>
struct LandauParams {
  Scalar alpha = Scalar(0);
  Scalar beta = Scalar(1);
  Scalar shape_factor = Scalar(0.5);
};

using LandauParamsd = LandauParams<double>;

template <typename Scalar>
void validate(const LandauParams<Scalar>& params) {
  if (!(params.beta > Scalar(0)))
    throw std::invalid_argument("LandauParams: beta must be positive");
  if (!(params.shape_factor > Scalar(0)))
    throw std::invalid_argument("LandauParams: shape_factor must be positive");
}

/// Quadratic coefficient with the flow-energy saving folded in.
///
/// A modulation of amplitude u lowers the flow energy by
/// s (N0 / 2m) [hbar nu / R - qA/c]^2 u^2 / n0^2 at leading order, which acts
/// as an additional -u^2 coefficient on top of the bare alpha. Flux therefore
/// pushes the ring toward the density wave.
template <typename Scalar>
Scalar effective_alpha(const RingConfig<Scalar>& config,
                       const LandauParams<Scalar>& params, int winding) {
  validate(config);
  validate(params);
  const Scalar offset = winding_offset(config, winding);
  const Scalar n0 = config.base_density;
  return params.alpha + params.shape_factor * config.particle_number() /
                            (Scalar(2) * config.mass) * offset * offset / (n0 * n0);
}

/// Equilibrium amplitude with its validity flag. Amplitudes at or above n0
/// are reported, not refused: it is the quartic expansion that has left its
/// domain there, not the flow solver.
template <typename Scalar = double>
struct CdwAmplitude {
  Scalar value;
  bool within_validity;
};

using CdwAmplituded = CdwAmplitude<double>;

/// Minimizer of -alpha_eff u^2 + beta u^4: u = sqrt(alpha_eff / (2 beta)) when
/// alpha_eff > 0, zero otherwise (the uniform phase is stable).
template <typename Scalar>
CdwAmplitude<Scalar> equilibrium_amplitude(Scalar alpha_eff, Scalar beta,
                                           Scalar base_density = Scalar(1)) {
  if (!(beta > Scalar(0)))
    throw std::invalid_argument("equilibrium_amplitude: beta must be positive");
  if (!(alpha_eff > Scalar(0))) return {Scalar(0), true};
  using std::sqrt;
  const Scalar value = sqrt(alpha_eff / (Scalar(2) * beta));
  return {value, value < base_density};
}

template <typename Scalar>
CdwAmplitude<Scalar> equilibrium_amplitude(const LandauParams<Scalar>& effective,
                                           Scalar base_density = Scalar(1)) {
  return equilibrium_amplitude(effective.alpha, effective.beta, base_density);
}

template <typename Scalar = double>
struct InstabilityPoint {
  Scalar flux;  // in flux quanta
  int winding;
  Scalar alpha_eff;
  Scalar amplitude;
  bool within_validity;
  Scalar energy_total;  // flow energy at the equilibrium amplitude plus E_cdw
};

using InstabilityPointd = InstabilityPoint<double>;

/// Sweep the flux, selecting the ground-state winding per point, and record
/// the enhanced coefficient, the induced amplitude and the combined energy.
/// Within one winding plateau alpha_eff grows with the kinetic momentum
/// offset; under winding reselection the whole table is periodic in the flux
/// with period one quantum.
template <typename Scalar>
std::vector<InstabilityPoint<Scalar>> instability_sweep(
    const RingConfig<Scalar>& config, const LandauParams<Scalar>& params,
    const std::vector<Scalar>& flux_grid, int harmonic = 1,
    Eigen::Index grid_size = 1024) {
  validate(config);
  validate(params);
  const Scalar n0 = config.base_density;
  const DensityProfile<Scalar> uniform =
      make_cosine_profile(Scalar(0), 1, grid_size, n0);

  std::vector<InstabilityPoint<Scalar>> points;
  points.reserve(flux_grid.size());
  for (const Scalar flux : flux_grid) {
    RingConfig<Scalar> at_flux = config;
    at_flux.vector_potential =
        flux * config.hbar * config.light_speed / (config.charge * config.radius);
    const int winding = ground_state_winding(at_flux, uniform);
    const Scalar alpha_eff = effective_alpha(at_flux, params, winding);
    const CdwAmplitude<Scalar> amplitude =
        equilibrium_amplitude(alpha_eff, params.beta, n0);

    const Scalar u = amplitude.value;
    Scalar flow_energy;
    if (amplitude.within_validity && params.shape_factor == Scalar(0.5)) {
      // single-cosine shape: evaluate the flow energy exactly at amplitude u
      const DensityProfile<Scalar> modulated =
          u == Scalar(0) ? uniform
                         : make_cosine_profile(u / n0, harmonic, grid_size, n0);
      flow_energy = solve_steady(at_flux, modulated, winding).energy;
    } else {
      // shape only known through s, or amplitude outside the solver's domain:
      // fall back to the leading-order reduction
      const Scalar offset = winding_offset(at_flux, winding);
      flow_energy = config.particle_number() / (Scalar(2) * config.mass) * offset *
                    offset * (Scalar(1) - params.shape_factor * u * u / (n0 * n0));
    }
    const Scalar cdw_energy = -params.alpha * u * u + params.beta * u * u * u * u;
    points.push_back(
        {flux, winding, alpha_eff, u, amplitude.within_validity,
         flow_energy + cdw_energy});
  }
  return points;
}

template <typename Scalar = double>
struct SelfConsistentAmplitude {
  Scalar value;
  int iterations;
  bool converged;
  Scalar residual;
};

/// Fixed point of: amplitude -> exact flow-energy saving -> refitted
/// quadratic coefficient -> new equilibrium amplitude.
///
/// The leading-order coefficient in effective_alpha undershoots the saving
/// at finite amplitude; this loop replaces it with the secant coefficient
/// (E_uniform - E_flow(u)) / u^2 computed from the exact solver, iterating
/// from the leading-order amplitude. The map is increasing and bounded, so
/// the iteration climbs monotonically onto the fixed point. Returns
/// converged = false if the amplitude escapes past the density floor or the
/// iteration cap is hit.
template <typename Scalar>
SelfConsistentAmplitude<Scalar> self_consistent_amplitude(
    const RingConfig<Scalar>& config, const LandauParams<Scalar>& params,
    int winding, int harmonic = 1, Eigen::Index grid_size = 1024,
    Scalar tolerance = Scalar(1e-10), int max_iterations = 50) {
  validate(config);
  validate(params);
  if (!(tolerance > Scalar(0)))
    throw std::invalid_argument("self_consistent_amplitude: tolerance must be positive");
  const Scalar n0 = config.base_density;
  const Scalar offset = winding_offset(config, winding);
  const Scalar uniform_energy =
      config.particle_number() / (Scalar(2) * config.mass) * offset * offset;

  Scalar u = equilibrium_amplitude(effective_alpha(config, params, winding),
                                   params.beta, n0)
                 .value;
  if (u == Scalar(0)) return {Scalar(0), 0, true, Scalar(0)};

  using std::abs;
  using std::max;
  Scalar residual = Scalar(0);
  for (int iteration = 1; iteration <= max_iterations; ++iteration) {
    if (!(u < n0)) return {u, iteration - 1, false, residual};
    const DensityProfile<Scalar> modulated =
        make_cosine_profile(u / n0, harmonic, grid_size, n0);
    const Scalar flow_energy = solve_steady(config, modulated, winding).energy;
    const Scalar secant_coefficient = (uniform_energy - flow_energy) / (u * u);
    const Scalar next =
        equilibrium_amplitude(params.alpha + secant_coefficient, params.beta, n0)
            .value;
    residual = abs(next - u);
    u = next;
    if (residual <= tolerance * max(Scalar(1), u))
      return {u, iteration, true, residual};
  }
  return {u, max_iterations, false, residual};
}

}  // namespace fluxring

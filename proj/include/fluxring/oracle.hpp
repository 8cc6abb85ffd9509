#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Core>

#include "fluxring/ring.hpp"
#include "fluxring/steady.hpp"

namespace fluxring {

// Brute-force cross-check for the steady solver: minimize the discretized
// flow energy over phase-gradient fields under the circulation constraint,
// without using the closed-form solution. Test infrastructure, not a
// general-purpose QP API.

enum class OracleMethod {
  /// Projected steepest descent with exact line search. Knows nothing about
  /// the harmonic-mean structure of the optimum, which is the point.
  projected_descent,
  /// Direct KKT elimination of the single multiplier (diagonal Hessian).
  kkt_elimination,
};

template <typename Scalar = double>
struct OracleOptions {
  Scalar tolerance = Scalar(1e-12);
  int max_iterations = 100000;
  OracleMethod method = OracleMethod::projected_descent;
  /// Optional start point for the descent; projected onto the constraint
  /// before use. Defaults to the constant field satisfying the constraint.
  std::optional<ArrayX<Scalar>> initial_guess;
};

template <typename Scalar = double>
struct OracleResult {
  ArrayX<Scalar> minimizer;    // g(theta_i), approximates hbar grad S
  Scalar lagrange_multiplier;  // lambda; equals m J at the optimum
  Scalar energy;
  int iterations;
  Scalar kkt_residual;         // max_i | n_i (g_i - qA/c) - lambda |
  Scalar constraint_residual;  // | mean(g) - hbar nu / R |
};

using OracleResultd = OracleResult<double>;

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double kkt_residual,
                   double constraint_residual, int iterations)
      : std::runtime_error(what),
        kkt_residual_(kkt_residual),
        constraint_residual_(constraint_residual),
        iterations_(iterations) {}

  double kkt_residual() const { return kkt_residual_; }
  double constraint_residual() const { return constraint_residual_; }
  int iterations() const { return iterations_; }

 private:
  double kkt_residual_;
  double constraint_residual_;
  int iterations_;
};

/// Minimize E[g] = closed integral n/(2m) [g - qA/c]^2 dx over grid fields g
/// subject to the circulation constraint mean(g) = hbar nu / R.
///
/// The objective is a positive-definite diagonal quadratic on an affine
/// subspace, so the minimizer is unique. At the optimum n_i (g_i - qA/c) is
/// the same at every node; that constant is the Lagrange multiplier and the
/// conserved current (times m). Convergence is declared when the node spread
/// of that quantity falls below tolerance * max(1, |lambda|).
template <typename Scalar>
OracleResult<Scalar> minimize_phase_energy(const RingConfig<Scalar>& config,
                                           const DensityProfile<Scalar>& profile,
                                           int winding,
                                           const OracleOptions<Scalar>& options = {}) {
  validate(config);
  check_compatible(config, profile);
  if (!(options.tolerance > Scalar(0)))
    throw std::invalid_argument("minimize_phase_energy: tolerance must be positive");
  if (options.max_iterations < 1)
    throw std::invalid_argument("minimize_phase_energy: max_iterations must be >= 1");

  const ArrayX<Scalar> density = config.base_density + profile.samples();
  const Eigen::Index n = density.size();
  const Scalar gauge = config.gauge_momentum();
  const Scalar target_mean = config.hbar * Scalar(winding) / config.radius;

  ArrayX<Scalar> g;
  if (options.initial_guess) {
    if (options.initial_guess->size() != n)
      throw std::invalid_argument("minimize_phase_energy: initial guess has wrong grid size");
    g = *options.initial_guess;
  } else {
    g = ArrayX<Scalar>::Constant(n, target_mean);
  }
  g += target_mean - g.mean();  // project onto the constraint

  using std::abs;
  using std::max;
  int iterations = 0;
  Scalar lambda = Scalar(0);
  Scalar kkt_residual = Scalar(0);

  if (options.method == OracleMethod::kkt_elimination) {
    lambda = (target_mean - gauge) / density.inverse().mean();
    g = gauge + lambda / density;
    kkt_residual = (density * (g - gauge) - lambda).abs().maxCoeff();
  } else {
    bool converged = false;
    while (true) {
      const ArrayX<Scalar> pointwise = density * (g - gauge);
      lambda = pointwise.mean();
      kkt_residual = (pointwise - lambda).abs().maxCoeff();
      if (kkt_residual <= options.tolerance * max(Scalar(1), abs(lambda))) {
        converged = true;
        break;
      }
      if (iterations >= options.max_iterations) break;
      // Steepest descent restricted to the constraint plane. The gradient's
      // positive prefactor cancels from the exact line-search step, leaving
      // the mean-free direction d and step (d.d)/(d.H d), H = diag(n_i).
      const ArrayX<Scalar> direction = pointwise - lambda;
      const Scalar step =
          direction.square().sum() / (density * direction.square()).sum();
      g -= step * direction;
      g += target_mean - g.mean();  // guard against drift off the constraint
      ++iterations;
    }
    if (!converged)
      throw ConvergenceError(
          "minimize_phase_energy: projected descent did not converge "
          "(kkt residual " + std::to_string(static_cast<double>(kkt_residual)) +
              " after " + std::to_string(iterations) + " iterations)",
          static_cast<double>(kkt_residual),
          static_cast<double>(abs(g.mean() - target_mean)), iterations);
  }

  const Scalar energy = config.perimeter() *
                        ring_mean(density / (Scalar(2) * config.mass) *
                                  (g - gauge).square());
  const Scalar constraint_residual = abs(g.mean() - target_mean);
  return {std::move(g), lambda, energy, iterations, kkt_residual, constraint_residual};
}

template <typename Scalar>
OracleResult<Scalar> minimize_phase_energy(const RingConfig<Scalar>& config,
                                           const DensityProfile<Scalar>& profile,
                                           int winding, Scalar tolerance) {
  OracleOptions<Scalar> options;
  options.tolerance = tolerance;
  return minimize_phase_energy(config, profile, winding, options);
}

/// Relative gaps between the closed-form solver and the variational oracle.
/// Gaps are normalized by max(1, |reference|) so near-zero currents do not
/// blow up the ratio.
template <typename Scalar = double>
struct OracleReport {
  Scalar current_gap;
  Scalar energy_gap;
  Scalar phase_gradient_gap;  // worst node
  Scalar tolerance;
  bool pass;
};

using OracleReportd = OracleReport<double>;

template <typename Scalar>
OracleReport<Scalar> oracle_compare(const RingConfig<Scalar>& config,
                                    const DensityProfile<Scalar>& profile,
                                    int winding, Scalar tolerance = Scalar(1e-8),
                                    const OracleOptions<Scalar>& options = {}) {
  const SteadyState<Scalar> state = solve_steady(config, profile, winding);
  const OracleResult<Scalar> oracle =
      minimize_phase_energy(config, profile, winding, options);

  using std::abs;
  using std::max;
  const Scalar current_gap =
      abs(state.current - oracle.lagrange_multiplier / config.mass) /
      max(Scalar(1), abs(state.current));
  const Scalar energy_gap =
      abs(state.energy - oracle.energy) / max(Scalar(1), abs(state.energy));
  const Scalar phase_gradient_gap =
      (state.phase_gradient - oracle.minimizer).abs().maxCoeff() /
      max(Scalar(1), state.phase_gradient.abs().maxCoeff());
  const bool pass = current_gap <= tolerance && energy_gap <= tolerance &&
                    phase_gradient_gap <= tolerance;
  return {current_gap, energy_gap, phase_gradient_gap, tolerance, pass};
}

/// One-line JSON record of the comparison, for CI logs.
template <typename Scalar>
std::string to_json_record(const OracleReport<Scalar>& report) {
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer),
                "{\"current_gap\": %.6e, \"energy_gap\": %.6e, "
                "\"phase_gradient_gap\": %.6e, \"tolerance\": %.6e, \"pass\": %s}",
                static_cast<double>(report.current_gap),
                static_cast<double>(report.energy_gap),
                static_cast<double>(report.phase_gradient_gap),
                static_cast<double>(report.tolerance), report.pass ? "true" : "false");
  return buffer;
}

}  // namespace fluxring

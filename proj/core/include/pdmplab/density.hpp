#pragma once

#include <functional>

#include "pdmplab/rng.hpp"

namespace pdmplab {

/// One-dimensional probability density with an exact inverse-transform
/// sampler, for maximal couplings of jump-time laws.
///
/// `upper_cut` marks the point beyond which the remaining mass is below
/// quadrature resolution (used to truncate overlap integrals; the densities
/// here have Gaussian-type tails). Factories whose normalisation is analytic
/// set `trusted`; untrusted densities are normalisation-checked by
/// quadrature before use.
struct DensitySpec {
  std::function<double(double)> density;
  double support_left = 0.0;
  double upper_cut = 0.0;
  std::function<double(RngStream&)> sample;
  bool trusted = false;

  /// Quadrature normalisation check: |integral - 1| <= tol, else
  /// NumericalError.
  void validate(double tol = 1e-8) const;
};

/// Density f_x(s) = (x + s) exp(-s^2/2 - x s) of the first TCP jump time
/// from state x; sampler sqrt(x^2 + 2E) - x.
DensitySpec tcp_jump_time_density(double x);

/// The same law shifted right by `shift`: density s -> f_y(s - shift) on
/// (shift, infinity).
DensitySpec shifted_tcp_jump_time_density(double y, double shift);

}  // namespace pdmplab

#include "pdmplab/density.hpp"

#include <cmath>

#include "pdmplab/errors.hpp"
#include "pdmplab/processes.hpp"
#include "pdmplab/quadrature.hpp"

namespace pdmplab {

namespace {

constexpr double kTailMass = 1e-14;

// Point beyond which the first-jump law from state x keeps less than
// kTailMass: solve exp(-T^2/2 - x T) = kTailMass.
double jump_time_tail_cut(double x) {
  const double log_inv = std::log(1.0 / kTailMass);
  return 2.0 * log_inv / (std::sqrt(x * x + 2.0 * log_inv) + x);
}

}  // namespace

void DensitySpec::validate(double tol) const {
  if (!(tol > 0.0)) throw UsageError("DensitySpec::validate needs tol > 0");
  const double mass =
      integrate(density, support_left, upper_cut, tol / 10.0);
  if (std::abs(mass - 1.0) > tol)
    throw NumericalError("density does not integrate to 1 within tolerance");
}

DensitySpec tcp_jump_time_density(double x) {
  if (x < 0.0) throw UsageError("tcp_jump_time_density needs x >= 0");
  DensitySpec d;
  d.support_left = 0.0;
  d.upper_cut = jump_time_tail_cut(x);
  d.density = [x](double s) {
    if (s < 0.0) return 0.0;
    return (x + s) * std::exp(-0.5 * s * s - x * s);
  };
  d.sample = [x](RngStream& rng) { return sample_tcp_jump_time(x, rng); };
  d.trusted = true;
  return d;
}

DensitySpec shifted_tcp_jump_time_density(double y, double shift) {
  if (y < 0.0 || shift < 0.0)
    throw UsageError("shifted_tcp_jump_time_density needs y, shift >= 0");
  DensitySpec d;
  d.support_left = shift;
  d.upper_cut = shift + jump_time_tail_cut(y);
  d.density = [y, shift](double s) {
    const double u = s - shift;
    if (u < 0.0) return 0.0;
    return (y + u) * std::exp(-0.5 * u * u - y * u);
  };
  d.sample = [y, shift](RngStream& rng) {
    return shift + sample_tcp_jump_time(y, rng);
  };
  d.trusted = true;
  return d;
}

}  // namespace pdmplab

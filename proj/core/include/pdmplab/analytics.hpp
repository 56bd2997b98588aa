#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "pdmplab/model.hpp"

namespace pdmplab {

/// Constants of the drift inequality for the coupled TCP pair: M is the
/// maximum of the jump-profile function phi_p, u_star its argmax, and
/// (alpha, x0) the weight-function parameters that maximise the drift rate
/// lambda = min(2a/(x0(1+a)), x0(1-(1+a)M)).
struct ContractionConstants {
  double p = 0.0;
  double M = 0.0;
  double u_star = 0.0;
  double alpha = 0.0;
  double x0 = 0.0;
  double lambda = 0.0;
};

/// Parameters of the hybrid (Wasserstein-then-coalesce) schedule solving
/// t = t1 + t2 with t1 = (3 / 2 lambda) log(1/eps), t2 = sqrt(2 log(1/eps)),
/// x0_cut = log(1/eps) / a(t0), a(s) = s / (2e(s+1)).
struct ScheduleParams {
  double epsilon = 0.0;
  double t1 = 0.0;
  double t2 = 0.0;
  double x0_cut = 0.0;
  double t0 = 0.0;
};

/// A named closed-form bound evaluation. `value` is clamped to [0, 1] for
/// probability-type bounds; `raw_value` keeps the unclamped number and
/// `clamped` reports whether clamping occurred.
struct BoundReport {
  std::string bound_name;
  std::map<std::string, double> inputs;
  double value = 0.0;
  double raw_value = 0.0;
  bool clamped = false;
};

/// Jump-profile function phi_p(u) = 2^-p u + (1-u)^(1-p) |u - 1/2|^p on
/// [0, 1], for 0 < p < 1.
///
/// Derivation: under the coupled dynamics (simultaneous halvings at rate
/// x ^ y, solo halving of the larger coordinate at rate |x - y|), applying
/// the generator to |x - y|^p for y <= x gives
///   -y (1 - 2^-p) |x-y|^p + (x-y) (|y - x/2|^p - (x-y)^p),
/// which factors as -x [1 - phi_p(y/x)] |x-y|^p with the formula above.
/// At p = 1/2 this is the profile driving the square-root drift estimate;
/// its maximum M < 1 is what makes the drift strictly negative.
double phi(double u, double p);

/// Weight function psi: 1 + alpha (1 - x/x0)^2 below the knee x0, 1 above.
double psi(double x, double alpha, double x0);

/// Coupled Lyapunov function V~(x, y) = psi(max(x, y)) |x - y|^(1/2).
double v_tilde(double x, double y, double alpha, double x0);

/// Best drift constants for exponent p in (0, 1): maximises phi_p by
/// golden-section search, then equates the two branches of lambda(alpha, x0)
/// and searches the remaining one-dimensional problem in alpha.
ContractionConstants contraction_constants(double p);

/// Uniform-in-x moment bound sup_x E_x[X_t^p] <= (sqrt(2p) + 2p/t)^p.
double wasserstein_moment_bound(double p, double t);

struct DeviationBounds {
  double finite_time = 1.0;     // exp(-t r / (2e(t+1))) when valid
  bool finite_time_valid = false;  // requires r >= 2e(1 + 1/t)
  double stationary = 1.0;      // exp(-r^2 / 4e) when valid
  bool stationary_valid = false;   // requires r >= sqrt(2e)
};

/// Right-tail bounds for the variable-rate TCP process; below the validity
/// thresholds the bound is reported as 1 with the flag cleared.
DeviationBounds deviation_bounds(double t, double r);

/// Density of the invariant measure of the variable-rate TCP process at
/// x > 0, evaluated by the alternating series with the stated absolute
/// tolerance. Terms decay super-geometrically, so truncation is cheap.
double invariant_density(double x, double tol);

/// One step of the invariant-moment recursion:
/// m_{p+1} = p m_{p-1} / (1 - 2^-p); pass m_prev = m_{p-1}.
double invariant_moment_step(double p, double m_prev);

/// Exact n-th moment of the constant-rate TCP process at time t from x,
/// with theta_k = lambda (1 - 2^-k). t may be +infinity (stationary limit
/// n! / prod theta_k).
///
/// No such closed form (and no moment-ODE integrator) exists here for the
/// variable-rate model: its moment equations couple each order to the next
/// (d/dt E X^p depends on E X^{p+1}), an unclosed hierarchy. The
/// variable-rate moments are validated through the stationary recursion
/// invariant_moment_step and Monte Carlo instead.
double constant_rate_moment(double lambda, double x, int n, double t);

struct CoalescenceBound {
  double quadrature = 0.0;    // exact q_t(x, y) by adaptive quadrature
  double explicit_bound = 0.0;  // (p_eps(x) - p_t(x) - 2 eps a(x)) p_eps((x+t)/2)
  double uniform_on_A = 0.0;  // exp(-eps^2 - (3 x0 + t) eps / 2) - e^{-t^2/2} - sqrt(2 pi) eps
};

/// Lower bounds for the success probability of the one-shot coalescent
/// coupling over a window of length t, for x > y with t >= eps >= x - y.
/// The uniform variant uses x0 = max(x, y) as the state ceiling.
CoalescenceBound coalescence_bound_q(double x, double y, double t, double eps);

/// alpha(x) = int_0^inf exp(-u^2/2 - u x) du, via erfc (asymptotic series
/// for large x where the scaled product would overflow).
double alpha_integral(double x);

/// Solve the hybrid schedule for a total time t and anchor t0 > 0. Throws
/// ScheduleInfeasibleError naming the violated condition when t is too small.
ScheduleParams plan_tv_schedule(double t, double t0);

/// Schedule with a prescribed epsilon instead of a prescribed total time.
ScheduleParams schedule_from_epsilon(double epsilon, double t0);

/// The six summands of the explicit TV bound D in schedule order:
/// { eps^2, 2 eps x0, e^{-t2^2/2}, sqrt(2 pi) eps, 2 e^{-a(t0) x0},
///   (C / sqrt(eps)) e^{-lambda t1} }  with C = sqrt((2 sqrt 2 + 4/t0)/M) e^{lambda t0}.
std::array<double, 6> tv_bound_hybrid_terms(const ScheduleParams& params);

/// Evaluate the explicit TV upper bound D for the hybrid coupling.
BoundReport tv_bound_hybrid(const ScheduleParams& params);

/// Explicit constant C(p, t0, theta) of the Wasserstein moment estimate
/// E|X_t - Y_t|^p <= C(p, t0, theta) exp(-lambda theta t) for t >= t0.
double wasserstein_bound_constant(double p, double t0, double theta);

/// Prefactor of the contraction-type variant: E_{x,y}|X_t - Y_t|^p is at
/// most wasserstein_contraction_factor(p, theta, t) * |x-y|^(theta/2).
double wasserstein_contraction_factor(double p, double theta, double t);

/// Model-appropriate closed-form rates and TV bounds:
///  - tcp-constant: W_p rates lambda_p for p = 1, 2 and the TV bound
///    lambda e^{-lambda t/2} |x-y| + e^{-lambda t};
///  - storage: W_p bound |x-y| e^{-beta t} and the TV bound
///    e^{-alpha t} + |x-y| alpha (e^{-beta t} - e^{-alpha t})/(alpha - beta),
///    continuous through alpha = beta;
///  - tcp-variable: the Dirac-atom TV lower bound e^{-t^2/2 - min(x,y) t}.
std::vector<BoundReport> bounds_misc(const ModelSpec& model, double x, double y,
                                     double t);

}  // namespace pdmplab

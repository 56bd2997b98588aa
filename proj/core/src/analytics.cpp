#include "pdmplab/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pdmplab/errors.hpp"
#include "pdmplab/quadrature.hpp"

namespace pdmplab {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kE = 2.718281828459045235360287471352662498;

double pow2_neg(double p) { return std::exp2(-p); }

/// Golden-section maximisation of a unimodal function on [lo, hi].
template <class F>
double golden_section_max(const F& f, double lo, double hi, double tol) {
  constexpr double kInvPhi = 0.6180339887498948482;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

/// Coarse scan then golden-section refinement; robust to the kink of phi_p
/// at u = 1/2.
template <class F>
double scan_then_refine_max(const F& f, double lo, double hi, int coarse,
                            double tol) {
  double best_u = lo, best_f = f(lo);
  for (int i = 1; i <= coarse; ++i) {
    const double u = lo + (hi - lo) * static_cast<double>(i) / coarse;
    const double v = f(u);
    if (v > best_f) {
      best_f = v;
      best_u = u;
    }
  }
  const double h = (hi - lo) / coarse;
  const double a = std::max(lo, best_u - h);
  const double b = std::min(hi, best_u + h);
  return golden_section_max(f, a, b, tol);
}

BoundReport make_report(std::string name, std::map<std::string, double> inputs,
                        double raw, bool probability) {
  BoundReport report;
  report.bound_name = std::move(name);
  report.inputs = std::move(inputs);
  report.raw_value = raw;
  if (probability) {
    report.value = std::clamp(raw, 0.0, 1.0);
    report.clamped = report.value != raw;
  } else {
    report.value = raw;
    report.clamped = false;
  }
  return report;
}

double schedule_mixing_constant(double t0, double M, double lambda) {
  return std::sqrt((2.0 * std::sqrt(2.0) + 4.0 / t0) / M) *
         std::exp(lambda * t0);
}

double tail_rate(double s) { return s / (2.0 * kE * (s + 1.0)); }

const ContractionConstants& half_constants() {
  static const ContractionConstants c = contraction_constants(0.5);
  return c;
}

}  // namespace

double phi(double u, double p) {
  if (!(u >= 0.0 && u <= 1.0)) throw UsageError("phi needs u in [0, 1]");
  if (!(p > 0.0 && p < 1.0)) throw UsageError("phi needs p in (0, 1)");
  return pow2_neg(p) * u +
         std::pow(1.0 - u, 1.0 - p) * std::pow(std::abs(u - 0.5), p);
}

double psi(double x, double alpha, double x0) {
  if (!(alpha > 0.0) || !(x0 > 0.0)) throw UsageError("psi needs alpha, x0 > 0");
  if (x >= x0) return 1.0;
  const double r = 1.0 - x / x0;
  return 1.0 + alpha * r * r;
}

double v_tilde(double x, double y, double alpha, double x0) {
  return psi(std::max(x, y), alpha, x0) * std::sqrt(std::abs(x - y));
}

ContractionConstants contraction_constants(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw UsageError("contraction_constants needs p in (0, 1)");
  ContractionConstants out;
  out.p = p;
  const auto profile = [p](double u) { return phi(u, p); };
  out.u_star = scan_then_refine_max(profile, 0.0, 1.0, 2000, 1e-13);
  out.M = profile(out.u_star);

  // For fixed alpha the two branches of lambda(alpha, x0) are monotone in
  // opposite directions, so the optimum equates them:
  //   x0(alpha)^2 = 2 alpha / ((1 + alpha)(1 - (1 + alpha) M)).
  const double M = out.M;
  const auto lambda_of_alpha = [M](double alpha) {
    const double slack = 1.0 - (1.0 + alpha) * M;
    if (slack <= 0.0) return -1.0;
    const double x0 = std::sqrt(2.0 * alpha / ((1.0 + alpha) * slack));
    return x0 * slack;
  };
  const double alpha_max = 1.0 / M - 1.0;
  out.alpha = golden_section_max(lambda_of_alpha, 1e-12, alpha_max - 1e-12,
                                 1e-14);
  const double slack = 1.0 - (1.0 + out.alpha) * M;
  out.x0 = std::sqrt(2.0 * out.alpha / ((1.0 + out.alpha) * slack));
  const double branch_drift = 2.0 * out.alpha / (out.x0 * (1.0 + out.alpha));
  const double branch_jump = out.x0 * slack;
  out.lambda = std::min(branch_drift, branch_jump);
  return out;
}

double wasserstein_moment_bound(double p, double t) {
  if (!(p >= 1.0)) throw UsageError("wasserstein_moment_bound needs p >= 1");
  if (!(t > 0.0)) throw UsageError("wasserstein_moment_bound needs t > 0");
  return std::pow(std::sqrt(2.0 * p) + 2.0 * p / t, p);
}

DeviationBounds deviation_bounds(double t, double r) {
  DeviationBounds out;
  if (t > 0.0 && r >= 2.0 * kE * (1.0 + 1.0 / t)) {
    out.finite_time_valid = true;
    out.finite_time = std::exp(-tail_rate(t) * r);
  }
  if (r >= std::sqrt(2.0 * kE)) {
    out.stationary_valid = true;
    out.stationary = std::exp(-r * r / (4.0 * kE));
  }
  return out;
}

double invariant_density(double x, double tol) {
  if (!(x > 0.0)) throw UsageError("invariant_density needs x > 0");
  if (!(tol > 0.0)) throw UsageError("invariant_density needs tol > 0");
  // Prefactor sqrt(2/pi) / prod_{n>=0} (1 - 2^{-(2n+1)}); the factors
  // approach 1 double-exponentially.
  double product = 1.0;
  for (int n = 0;; ++n) {
    const double deviation = std::exp2(-(2 * n + 1));
    if (deviation < tol / 10.0) break;
    product *= 1.0 - deviation;
  }
  const double prefactor = std::sqrt(2.0 / kPi) / product;

  // Alternating series sum_n (-1)^n c_n exp(-2^{2n-1} x^2) with
  // c_n = 2^{2n} / prod_{k=1..n} (2^{2k} - 1); the first omitted term
  // bounds the truncation error.
  double sum = 0.0;
  double coeff = 1.0;
  double rate = 0.5;  // 2^{2n-1} at n = 0
  double sign = 1.0;
  for (int n = 0;; ++n) {
    const double term = coeff * std::exp(-rate * x * x);
    if (term < tol) break;
    sum += sign * term;
    sign = -sign;
    coeff *= 4.0 / (std::exp2(2 * (n + 1)) - 1.0);
    rate *= 4.0;
  }
  return prefactor * sum;
}

double invariant_moment_step(double p, double m_prev) {
  if (!(p > 0.0)) throw UsageError("invariant_moment_step needs p > 0");
  if (m_prev < 0.0) throw UsageError("invariant_moment_step needs m_prev >= 0");
  return p * m_prev / (1.0 - pow2_neg(p));
}

double constant_rate_moment(double lambda, double x, int n, double t) {
  if (!(lambda > 0.0)) throw UsageError("constant_rate_moment needs lambda > 0");
  if (n < 1) throw UsageError("constant_rate_moment needs n >= 1");
  if (x < 0.0) throw UsageError("constant_rate_moment needs x >= 0");
  if (!(t >= 0.0)) throw UsageError("constant_rate_moment needs t >= 0");

  std::vector<double> theta(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) theta[j] = lambda * (1.0 - std::exp2(-j));

  double n_factorial = 1.0;
  for (int k = 2; k <= n; ++k) n_factorial *= k;

  double stationary = n_factorial;
  for (int k = 1; k <= n; ++k) stationary /= theta[k];
  if (std::isinf(t)) return stationary;

  double result = stationary;
  for (int m = 1; m <= n; ++m) {
    double inner = 0.0;
    double x_pow_over_fact = 1.0;  // x^k / k!
    for (int k = 0; k <= m; ++k) {
      double prod = 1.0;
      for (int j = k; j <= n; ++j) {
        if (j == m) continue;
        prod /= theta[j] - theta[m];  // distinct for distinct integer indices
      }
      inner += x_pow_over_fact * prod;
      x_pow_over_fact *= x / (k + 1);
    }
    result += n_factorial * inner * std::exp(-theta[m] * t);
  }
  return result;
}

double alpha_integral(double x) {
  if (x < 0.0) throw UsageError("alpha_integral needs x >= 0");
  if (x < 25.0) {
    return std::exp(0.5 * x * x) * std::sqrt(kPi / 2.0) *
           std::erfc(x / std::sqrt(2.0));
  }
  // Watson asymptotics: sum_k (-1)^k (2k-1)!! / x^{2k+1}.
  const double inv_sq = 1.0 / (x * x);
  double term = 1.0 / x;
  double sum = term;
  double odd = 1.0;
  for (int k = 1; k <= 8; ++k) {
    term *= -odd * inv_sq;
    sum += term;
    odd += 2.0;
  }
  return sum;
}

CoalescenceBound coalescence_bound_q(double x, double y, double t, double eps) {
  const double delta = x - y;
  if (!(delta > 0.0)) throw UsageError("coalescence_bound_q needs x > y");
  if (!(eps >= delta)) throw UsageError("coalescence_bound_q needs eps >= x - y");
  if (!(t >= eps)) throw UsageError("coalescence_bound_q needs t >= eps");

  const auto f = [](double state, double s) {
    return (state + s) * std::exp(-0.5 * s * s - state * s);
  };
  const auto overlap_integrand = [&](double s) {
    return std::min(f(x, s), f(y, s - delta));
  };
  const double integral = integrate(overlap_integrand, delta, t, 1e-10);
  const double mid = 0.5 * (x + t);
  const auto survival = [](double state, double s) {
    return std::exp(-0.5 * s * s - state * s);
  };

  CoalescenceBound out;
  out.quadrature = integral * survival(mid, delta);
  out.explicit_bound =
      (survival(x, eps) - survival(x, t) - 2.0 * eps * alpha_integral(x)) *
      survival(mid, eps);
  const double ceiling = std::max(x, y);
  out.uniform_on_A = std::exp(-eps * eps - 0.5 * (3.0 * ceiling + t) * eps) -
                     std::exp(-0.5 * t * t) - std::sqrt(2.0 * kPi) * eps;
  return out;
}

ScheduleParams schedule_from_epsilon(double epsilon, double t0) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw UsageError("schedule_from_epsilon needs epsilon in (0, 1)");
  if (!(t0 > 0.0)) throw UsageError("schedule needs t0 > 0");
  const double lambda = half_constants().lambda;
  const double log_inv = std::log(1.0 / epsilon);
  ScheduleParams params;
  params.epsilon = epsilon;
  params.t0 = t0;
  params.t1 = 1.5 / lambda * log_inv;
  params.t2 = std::sqrt(2.0 * log_inv);
  params.x0_cut = log_inv / tail_rate(t0);
  return params;
}

ScheduleParams plan_tv_schedule(double t, double t0) {
  if (!(t > 0.0)) throw UsageError("plan_tv_schedule needs t > 0");
  if (!(t0 > 0.0)) throw UsageError("plan_tv_schedule needs t0 > 0");
  const double lambda = half_constants().lambda;
  const double slope = 1.5 / lambda;
  // Solve slope * L + sqrt(2 L) = t for L = log(1/eps); monotone in L.
  double lo = 0.0, hi = t / slope + 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (slope * mid + std::sqrt(2.0 * mid) < t ? lo : hi) = mid;
  }
  const double log_inv = 0.5 * (lo + hi);
  ScheduleParams params = schedule_from_epsilon(std::exp(-log_inv), t0);
  if (params.t1 < t0)
    throw ScheduleInfeasibleError(
        "schedule infeasible: t1 >= t0 violated (total time too small)");
  if (params.x0_cut < params.t2)
    throw ScheduleInfeasibleError(
        "schedule infeasible: x0_cut >= t2 violated (total time too small)");
  if (params.x0_cut < 2.0 * kE * (1.0 + 1.0 / params.t1))
    throw ScheduleInfeasibleError(
        "schedule infeasible: x0_cut >= 2e(1 + 1/t1) violated (total time too "
        "small)");
  return params;
}

std::array<double, 6> tv_bound_hybrid_terms(const ScheduleParams& params) {
  const auto& constants = half_constants();
  const double eps = params.epsilon;
  const double C =
      schedule_mixing_constant(params.t0, constants.M, constants.lambda);
  return {eps * eps,
          2.0 * eps * params.x0_cut,
          std::exp(-0.5 * params.t2 * params.t2),
          std::sqrt(2.0 * kPi) * eps,
          2.0 * std::exp(-tail_rate(params.t0) * params.x0_cut),
          C / std::sqrt(eps) * std::exp(-constants.lambda * params.t1)};
}

BoundReport tv_bound_hybrid(const ScheduleParams& params) {
  const auto& constants = half_constants();
  const auto terms = tv_bound_hybrid_terms(params);
  double raw = 0.0;
  for (const double term : terms) raw += term;
  return make_report(
      "tv_hybrid_upper",
      {{"epsilon", params.epsilon},
       {"t1", params.t1},
       {"t2", params.t2},
       {"x0_cut", params.x0_cut},
       {"t0", params.t0},
       {"lambda", constants.lambda},
       {"M", constants.M},
       {"C", schedule_mixing_constant(params.t0, constants.M, constants.lambda)}},
      raw, /*probability=*/true);
}

double wasserstein_bound_constant(double p, double t0, double theta) {
  if (!(p >= 1.0)) throw UsageError("wasserstein_bound_constant needs p >= 1");
  if (!(t0 > 0.0)) throw UsageError("wasserstein_bound_constant needs t0 > 0");
  if (!(theta > 0.0 && theta < 1.0))
    throw UsageError("wasserstein_bound_constant needs theta in (0, 1)");
  const auto& constants = half_constants();
  const double q = (2.0 * p - theta) / (1.0 - theta);
  return std::pow(2.0, p) / std::pow(constants.M, 0.5 * theta) *
         std::pow(std::sqrt(q) + q / t0, p - 0.5 * theta) *
         std::pow(std::sqrt(2.0) + 2.0 / t0, 0.5 * theta) *
         std::exp(constants.lambda * theta * t0);
}

double wasserstein_contraction_factor(double p, double theta, double t) {
  if (!(p >= 1.0)) throw UsageError("contraction factor needs p >= 1");
  if (!(theta > 0.0 && theta < 1.0))
    throw UsageError("contraction factor needs theta in (0, 1)");
  if (!(t > 0.0)) throw UsageError("contraction factor needs t > 0");
  const auto& constants = half_constants();
  const double q = (2.0 * p - theta) / (1.0 - theta);
  return std::pow(2.0, p - 0.5 * theta) / std::pow(constants.M, 0.5 * theta) *
         std::pow(std::sqrt(q) + q / t, p - 0.5 * theta) *
         std::exp(-constants.lambda * theta * t);
}

std::vector<BoundReport> bounds_misc(const ModelSpec& model, double x, double y,
                                     double t) {
  model.validate();
  if (x < 0.0 || y < 0.0 || t < 0.0)
    throw UsageError("bounds_misc needs x, y, t >= 0");
  const double gap = std::abs(x - y);
  std::vector<BoundReport> out;
  switch (model.kind) {
    case ModelKind::kTcpConstant: {
      const double lambda = model.lambda;
      for (const double p : {1.0, 2.0}) {
        out.push_back(make_report(
            p == 1.0 ? "constant_rate_wp_rate_p1" : "constant_rate_wp_rate_p2",
            {{"lambda", lambda}, {"p", p}},
            lambda * (1.0 - pow2_neg(p)) / p, /*probability=*/false));
      }
      out.push_back(make_report(
          "constant_rate_tv_upper",
          {{"lambda", lambda}, {"x", x}, {"y", y}, {"t", t}},
          lambda * std::exp(-0.5 * lambda * t) * gap + std::exp(-lambda * t),
          /*probability=*/true));
      out.push_back(make_report("constant_rate_tv_lower_atom",
                                {{"lambda", lambda}, {"t", t}},
                                std::exp(-lambda * t), /*probability=*/true));
      break;
    }
    case ModelKind::kStorage: {
      const double alpha = model.alpha;
      const double beta = model.beta;
      out.push_back(make_report("storage_wp_upper",
                                {{"beta", beta}, {"x", x}, {"y", y}, {"t", t}},
                                gap * std::exp(-beta * t),
                                /*probability=*/false));
      // alpha (e^{-beta t} - e^{-alpha t}) / (alpha - beta), written through
      // expm1 so the alpha = beta limit (1 + |x-y| alpha t) e^{-alpha t} is
      // reached continuously.
      const double d = (alpha - beta) * t;
      const double ratio = d == 0.0 ? 1.0 : std::expm1(d) / d;
      const double coupling_term =
          gap * alpha * t * std::exp(-alpha * t) * ratio;
      out.push_back(make_report(
          "storage_tv_upper",
          {{"alpha", alpha}, {"beta", beta}, {"x", x}, {"y", y}, {"t", t}},
          std::exp(-alpha * t) + coupling_term, /*probability=*/true));
      out.push_back(make_report("storage_tv_lower_atom",
                                {{"alpha", alpha}, {"t", t}},
                                std::exp(-alpha * t), /*probability=*/true));
      break;
    }
    case ModelKind::kTcpVariable: {
      out.push_back(make_report(
          "tcp_variable_tv_lower_atom", {{"x", x}, {"y", y}, {"t", t}},
          std::exp(-0.5 * t * t - std::min(x, y) * t), /*probability=*/true));
      break;
    }
  }
  return out;
}

}  // namespace pdmplab

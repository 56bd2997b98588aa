#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "pdmplab/couplings.hpp"
#include "pdmplab/rng.hpp"

namespace pdmplab {

/// Monte Carlo estimate: mean, standard error of the mean, and a
/// normal-theory confidence half-width (configurable multiplier, default 3).
struct SummaryStats {
  std::size_t n = 0;
  double mean = 0.0;
  double stderr_of_mean = 0.0;
  double ci_halfwidth = 0.0;
};

struct McOptions {
  std::size_t replicas = 0;
  std::uint64_t seed = 0;
  unsigned threads = 1;  // 0 = hardware concurrency
  double ci_multiplier = 3.0;
};

/// A replica computation: given its private stream, fill one output value
/// per requested quantity (e.g. one per time point).
using ReplicaFn = std::function<void(RngStream&, std::span<double>)>;

/// Run `opt.replicas` replicas on stream ids 0..n-1 and reduce each output
/// coordinate in stream-id order with fixed-order pairwise summation, so the
/// result is independent of the worker count and execution schedule.
/// Non-finite replica outputs raise NumericalError naming the replica.
std::vector<SummaryStats> mc_expectation(std::size_t n_outputs,
                                         const ReplicaFn& replica,
                                         const McOptions& opt);

/// Single-output convenience wrapper.
SummaryStats mc_expectation_scalar(const std::function<double(RngStream&)>& f,
                                   const McOptions& opt);

/// Fixed-order pairwise (cascade) summation.
double pairwise_sum(std::span<const double> values);

/// Mean / stderr / half-width of an already materialised sample (n >= 2).
SummaryStats summarize_samples(std::span<const double> values,
                               double ci_multiplier = 3.0);

/// Exact W1 between two equally sized empirical measures: mean absolute
/// difference of order statistics. Inputs must be sorted ascending.
double empirical_w1(std::span<const double> sorted_a,
                    std::span<const double> sorted_b);

/// Exact Wp (p >= 1) between two equally sized empirical measures; on the
/// line the optimal coupling is comonotone, so this is the p-mean of order
/// statistic gaps. p = 1 coincides with empirical_w1 exactly.
double empirical_wp(std::span<const double> sorted_a,
                    std::span<const double> sorted_b, double p);

/// Binomial estimate of P(not coalesced) with a normal-theory interval: an
/// upper confidence bound on total variation for the coupling that produced
/// the outcomes.
SummaryStats coalescence_fraction(std::span<const CouplingOutcome> outcomes,
                                  double ci_multiplier = 3.0);

/// Ordinary least squares of log(value) on t inside the window.
struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  double t_min = 0.0;
  double t_max = 0.0;
  int n_points = 0;
  int dropped = 0;  // nonpositive estimates inside the window
};

/// Fit log(value) ~ intercept + slope * t over points with t in
/// [t_min, t_max]. Nonpositive values inside the window are dropped (counted
/// in `dropped`); fewer than 3 survivors raise NumericalError.
RateFit fit_exponential_rate(std::span<const double> t,
                             std::span<const double> value, double t_min,
                             double t_max);

}  // namespace pdmplab

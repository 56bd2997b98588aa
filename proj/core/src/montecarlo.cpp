#include "pdmplab/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "pdmplab/errors.hpp"

namespace pdmplab {

namespace {

double pairwise_sum_impl(const double* data, std::size_t n) {
  if (n <= 8) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += data[i];
    return sum;
  }
  const std::size_t half = n / 2;
  return pairwise_sum_impl(data, half) + pairwise_sum_impl(data + half, n - half);
}

SummaryStats summarize(std::span<const double> values, double ci_multiplier) {
  SummaryStats stats;
  stats.n = values.size();
  stats.mean = pairwise_sum(values) / static_cast<double>(stats.n);
  std::vector<double> sq(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double d = values[i] - stats.mean;
    sq[i] = d * d;
  }
  const double var =
      pairwise_sum(sq) / static_cast<double>(stats.n - 1);
  stats.stderr_of_mean = std::sqrt(var / static_cast<double>(stats.n));
  stats.ci_halfwidth = ci_multiplier * stats.stderr_of_mean;
  return stats;
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
  return pairwise_sum_impl(values.data(), values.size());
}

SummaryStats summarize_samples(std::span<const double> values,
                               double ci_multiplier) {
  if (values.size() < 2)
    throw UsageError("summarize_samples needs at least 2 values");
  return summarize(values, ci_multiplier);
}

std::vector<SummaryStats> mc_expectation(std::size_t n_outputs,
                                         const ReplicaFn& replica,
                                         const McOptions& opt) {
  if (opt.replicas < 2) throw UsageError("mc_expectation needs replicas >= 2");
  if (n_outputs == 0) throw UsageError("mc_expectation needs n_outputs >= 1");

  const std::size_t n = opt.replicas;
  std::vector<double> results(n * n_outputs);
  unsigned threads = opt.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, n));

  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto run_range = [&](std::size_t begin, std::size_t end) {
    try {
      for (std::size_t i = begin; i < end; ++i) {
        RngStream rng(opt.seed, i);
        const std::span<double> out(results.data() + i * n_outputs, n_outputs);
        replica(rng, out);
        for (std::size_t j = 0; j < n_outputs; ++j) {
          if (!std::isfinite(out[j]))
            throw NumericalError("non-finite functional value in replica " +
                                 std::to_string(i) + ", output " +
                                 std::to_string(j));
        }
      }
    } catch (...) {
      const std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  if (threads <= 1) {
    run_range(0, n);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(n, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(run_range, begin, end);
    }
    for (auto& worker : pool) worker.join();
  }
  if (failure) std::rethrow_exception(failure);

  // Per-output reduction in stream-id order, independent of the schedule.
  std::vector<SummaryStats> stats(n_outputs);
  std::vector<double> column(n);
  for (std::size_t j = 0; j < n_outputs; ++j) {
    for (std::size_t i = 0; i < n; ++i) column[i] = results[i * n_outputs + j];
    stats[j] = summarize(column, opt.ci_multiplier);
  }
  return stats;
}

SummaryStats mc_expectation_scalar(const std::function<double(RngStream&)>& f,
                                   const McOptions& opt) {
  const auto stats = mc_expectation(
      1, [&f](RngStream& rng, std::span<double> out) { out[0] = f(rng); }, opt);
  return stats[0];
}

namespace {

void check_empirical_inputs(std::span<const double> a,
                            std::span<const double> b) {
  if (a.size() != b.size())
    throw UsageError("empirical distance needs equal sample counts");
  if (a.empty()) throw UsageError("empirical distance needs nonempty samples");
  if (!std::is_sorted(a.begin(), a.end()) ||
      !std::is_sorted(b.begin(), b.end()))
    throw UsageError("empirical distance needs sorted inputs");
}

}  // namespace

double empirical_w1(std::span<const double> sorted_a,
                    std::span<const double> sorted_b) {
  check_empirical_inputs(sorted_a, sorted_b);
  std::vector<double> gaps(sorted_a.size());
  for (std::size_t i = 0; i < sorted_a.size(); ++i)
    gaps[i] = std::abs(sorted_a[i] - sorted_b[i]);
  return pairwise_sum(gaps) / static_cast<double>(gaps.size());
}

double empirical_wp(std::span<const double> sorted_a,
                    std::span<const double> sorted_b, double p) {
  if (!(p >= 1.0)) throw UsageError("empirical_wp needs p >= 1");
  if (p == 1.0) return empirical_w1(sorted_a, sorted_b);
  check_empirical_inputs(sorted_a, sorted_b);
  std::vector<double> gaps(sorted_a.size());
  for (std::size_t i = 0; i < sorted_a.size(); ++i)
    gaps[i] = std::pow(std::abs(sorted_a[i] - sorted_b[i]), p);
  const double mean = pairwise_sum(gaps) / static_cast<double>(gaps.size());
  return std::pow(mean, 1.0 / p);
}

SummaryStats coalescence_fraction(std::span<const CouplingOutcome> outcomes,
                                  double ci_multiplier) {
  if (outcomes.size() < 2)
    throw UsageError("coalescence_fraction needs at least 2 outcomes");
  SummaryStats stats;
  stats.n = outcomes.size();
  std::size_t not_coalesced = 0;
  for (const auto& outcome : outcomes)
    if (!outcome.coalesced) ++not_coalesced;
  const double n = static_cast<double>(stats.n);
  stats.mean = static_cast<double>(not_coalesced) / n;
  stats.stderr_of_mean = std::sqrt(stats.mean * (1.0 - stats.mean) / n);
  stats.ci_halfwidth = ci_multiplier * stats.stderr_of_mean;
  return stats;
}

RateFit fit_exponential_rate(std::span<const double> t,
                             std::span<const double> value, double t_min,
                             double t_max) {
  if (t.size() != value.size())
    throw UsageError("fit_exponential_rate needs matching spans");
  if (!(t_min < t_max)) throw UsageError("fit_exponential_rate needs t_min < t_max");

  RateFit fit;
  fit.t_min = t_min;
  fit.t_max = t_max;
  std::vector<double> ts, logs;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < t_min || t[i] > t_max) continue;
    if (!(value[i] > 0.0)) {
      ++fit.dropped;  // far-tail estimates may cross zero by noise
      continue;
    }
    ts.push_back(t[i]);
    logs.push_back(std::log(value[i]));
  }
  fit.n_points = static_cast<int>(ts.size());
  if (fit.n_points < 3)
    throw NumericalError(
        "fit_exponential_rate needs at least 3 positive points in the window");

  const double n = static_cast<double>(ts.size());
  const double mean_t = pairwise_sum(ts) / n;
  const double mean_y = pairwise_sum(logs) / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double dt = ts[i] - mean_t;
    sxx += dt * dt;
    sxy += dt * (logs[i] - mean_y);
  }
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_t;
  double ssr = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double resid = logs[i] - (fit.intercept + fit.slope * ts[i]);
    ssr += resid * resid;
  }
  const double dof = std::max(1.0, n - 2.0);
  fit.slope_stderr = std::sqrt(ssr / dof / sxx);
  return fit;
}

}  // namespace pdmplab

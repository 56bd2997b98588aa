#include "pdmplab/processes.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "pdmplab/errors.hpp"

namespace pdmplab {

double tcp_survival(double x, double t) {
  if (x < 0.0 || t < 0.0) throw UsageError("tcp_survival needs x >= 0, t >= 0");
  return std::exp(-0.5 * t * t - x * t);
}

double tcp_jump_time_from_exponential(double x, double e) {
  if (x < 0.0 || e < 0.0)
    throw UsageError("tcp_jump_time_from_exponential needs x, e >= 0");
  if (e == 0.0) return 0.0;
  // sqrt(x^2 + 2e) - x, written to avoid cancellation for large x.
  return 2.0 * e / (std::sqrt(x * x + 2.0 * e) + x);
}

double sample_tcp_jump_time(double x, RngStream& rng) {
  if (x < 0.0) throw UsageError("sample_tcp_jump_time needs x >= 0");
  return tcp_jump_time_from_exponential(x, rng.exponential());
}

std::uint64_t draw_poisson(double mu, RngStream& rng) {
  if (mu < 0.0) throw UsageError("draw_poisson needs mu >= 0");
  if (mu == 0.0) return 0;
  if (mu > 500.0) {
    // Split so the Knuth product never underflows.
    return draw_poisson(mu / 2.0, rng) + draw_poisson(mu / 2.0, rng);
  }
  const double threshold = std::exp(-mu);
  std::uint64_t k = 0;
  double p = 1.0;
  do {
    ++k;
    p *= rng.uniform01();
  } while (p > threshold);
  return k - 1;
}

namespace {

Trajectory simulate_tcp_variable(double x0, double horizon, RngStream& rng) {
  TrajectoryBuilder builder(ModelSpec::tcp_variable(), x0, horizon);
  double state = x0;
  double t = 0.0;
  for (;;) {
    const double dt = sample_tcp_jump_time(state, rng);
    t += dt;
    if (t > horizon) break;
    state = (state + dt) / 2.0;
    builder.add_jump(t, state);
  }
  return builder.take();
}

Trajectory simulate_tcp_constant(const ModelSpec& model, double x0,
                                 double horizon, RngStream& rng) {
  TrajectoryBuilder builder(model, x0, horizon);
  double state = x0;
  double t = 0.0;
  for (;;) {
    const double dt = rng.exponential(model.lambda);
    t += dt;
    if (t > horizon) break;
    state = (state + dt) / 2.0;
    builder.add_jump(t, state);
  }
  return builder.take();
}

Trajectory simulate_storage(const ModelSpec& model, double x0, double horizon,
                            RngStream& rng) {
  TrajectoryBuilder builder(model, x0, horizon);
  // Jump count and times first, then the exponential marks, mirroring the
  // constructions that condition on N_t.
  const std::uint64_t n = draw_poisson(model.alpha * horizon, rng);
  std::vector<double> times(n);
  for (auto& t : times) t = rng.uniform01() * horizon;
  std::sort(times.begin(), times.end());
  double state = x0;
  double prev = 0.0;
  for (const double t : times) {
    const double pre = flow(model, state, t - prev);
    state = pre + rng.exponential();
    builder.add_jump(t, state);
    prev = t;
  }
  return builder.take();
}

}  // namespace

Trajectory simulate_path(const ModelSpec& model, double x0, double horizon,
                         RngStream& rng) {
  model.validate();
  if (!(horizon > 0.0)) throw UsageError("simulate_path needs horizon > 0");
  if (x0 < 0.0) throw UsageError("simulate_path needs x0 >= 0");
  switch (model.kind) {
    case ModelKind::kTcpVariable:
      return simulate_tcp_variable(x0, horizon, rng);
    case ModelKind::kTcpConstant:
      return simulate_tcp_constant(model, x0, horizon, rng);
    case ModelKind::kStorage:
      return simulate_storage(model, x0, horizon, rng);
  }
  throw UsageError("unknown model kind");
}

}  // namespace pdmplab

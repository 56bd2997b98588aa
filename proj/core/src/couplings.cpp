#include "pdmplab/couplings.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "pdmplab/errors.hpp"
#include "pdmplab/processes.hpp"
#include "pdmplab/quadrature.hpp"

namespace pdmplab {

namespace {

constexpr double kOverlapTol = 1e-10;
constexpr long kMaxRejectionDraws = 10'000'000;

CouplingOutcome shared_path_outcome(const ModelSpec& model, double x,
                                    double horizon, RngStream& rng) {
  Trajectory shared = simulate_path(model, x, horizon, rng);
  CouplingOutcome out;
  out.traj_x = shared;
  out.traj_y = std::move(shared);
  out.coalesced = true;
  out.coalescence_time = 0.0;
  return out;
}

/// One fresh variable-rate TCP segment from `state` over the absolute window
/// [start, horizon], spliced into both skeletons so every appended jump is
/// shared bit-identically.
void append_shared_continuation(TrajectoryBuilder& a, TrajectoryBuilder& b,
                                double state, double start, double horizon,
                                RngStream& rng) {
  if (start >= horizon) return;
  const Trajectory seg =
      simulate_path(ModelSpec::tcp_variable(), state, horizon - start, rng);
  a.append_shifted(seg, start);
  b.append_shifted(seg, start);
}

/// After a failed coalescence attempt the two paths are free from different
/// times; bring the earlier one forward with an independent (exact) segment,
/// then synchronise through the Wasserstein coupling. Marginals stay exact.
void continue_after_failure(TrajectoryBuilder& builder_a, double a_time,
                            double a_state, TrajectoryBuilder& builder_b,
                            double b_time, double b_state, double horizon,
                            RngStream& rng) {
  if (a_time < b_time) {
    const Trajectory seg = simulate_path(ModelSpec::tcp_variable(), a_state,
                                         b_time - a_time, rng);
    builder_a.append_shifted(seg, a_time);
    a_state = seg.final_state();
    a_time = b_time;
  } else if (b_time < a_time) {
    const Trajectory seg = simulate_path(ModelSpec::tcp_variable(), b_state,
                                         a_time - b_time, rng);
    builder_b.append_shifted(seg, b_time);
    b_state = seg.final_state();
    b_time = a_time;
  }
  if (a_time < horizon) {
    const CouplingOutcome tail =
        simulate_wasserstein_coupling(a_state, b_state, horizon - a_time, rng);
    builder_a.append_shifted(tail.traj_x, a_time);
    builder_b.append_shifted(tail.traj_y, a_time);
  }
}

double rejection_sample_min(const DensitySpec& self, const DensitySpec& other,
                            RngStream& rng) {
  for (long i = 0; i < kMaxRejectionDraws; ++i) {
    const double s = self.sample(rng);
    const double f = self.density(s);
    const double m = std::min(f, other.density(s));
    if (rng.uniform01() * f <= m) return s;
  }
  throw NumericalError("maximal coupling: min-density rejection stalled");
}

double rejection_sample_residual(const DensitySpec& self,
                                 const DensitySpec& other, RngStream& rng) {
  for (long i = 0; i < kMaxRejectionDraws; ++i) {
    const double s = self.sample(rng);
    const double f = self.density(s);
    const double m = std::min(f, other.density(s));
    if (rng.uniform01() * f <= f - m) return s;
  }
  throw NumericalError("maximal coupling: residual rejection stalled");
}

}  // namespace

CoupledState coupled_state_at(const CouplingOutcome& outcome, double t) {
  return CoupledState{outcome.traj_x.at(t), outcome.traj_y.at(t), t};
}

MaximalCouplingResult maximal_coupling_1d(const DensitySpec& d1,
                                          const DensitySpec& d2,
                                          RngStream& rng) {
  if (!d1.density || !d1.sample || !d2.density || !d2.sample)
    throw UsageError("maximal_coupling_1d needs complete density specs");
  if (!d1.trusted) d1.validate();
  if (!d2.trusted) d2.validate();

  const double lo = std::max(d1.support_left, d2.support_left);
  const double hi = std::min(d1.upper_cut, d2.upper_cut);
  double overlap = 0.0;
  if (lo < hi) {
    overlap = integrate(
        [&](double s) { return std::min(d1.density(s), d2.density(s)); }, lo,
        hi, kOverlapTol);
    overlap = std::clamp(overlap, 0.0, 1.0);
  }

  MaximalCouplingResult out;
  if (rng.uniform01() <= overlap) {
    out.s1 = out.s2 = rejection_sample_min(d1, d2, rng);
    out.matched = true;
  } else {
    out.s1 = rejection_sample_residual(d1, d2, rng);
    out.s2 = rejection_sample_residual(d2, d1, rng);
    out.matched = false;
  }
  return out;
}

std::optional<WassersteinEvent> wasserstein_step(WassersteinPairState& state,
                                                 double horizon,
                                                 RngStream& rng) {
  const double upper0 = state.lower + state.gap;
  const double dt = sample_tcp_jump_time(upper0, rng);
  const double event_time = state.t + dt;
  if (event_time > horizon) {
    state.lower += horizon - state.t;
    state.t = horizon;
    return std::nullopt;
  }
  const double lower_pre = state.lower + dt;
  const double upper_pre = upper0 + dt;

  WassersteinEvent event;
  event.time = event_time;
  if (rng.uniform01() * upper_pre <= lower_pre) {
    // Simultaneous halving, probability ((x^y)+T)/((xvy)+T).
    event.simultaneous = true;
    event.x_jumped = event.y_jumped = true;
    state.lower = lower_pre / 2.0;
    state.gap = state.gap / 2.0;
  } else {
    // The larger coordinate jumps alone and may land on either side.
    event.simultaneous = false;
    event.x_jumped = state.x_is_upper;
    event.y_jumped = !state.x_is_upper;
    const double upper_post = upper_pre / 2.0;
    if (upper_post >= lower_pre) {
      state.gap = upper_post - lower_pre;
      state.lower = lower_pre;
    } else {
      state.gap = lower_pre - upper_post;
      state.lower = upper_post;
      state.x_is_upper = !state.x_is_upper;
    }
  }
  state.t = event_time;
  return event;
}

CouplingOutcome simulate_wasserstein_coupling(double x, double y,
                                              double horizon, RngStream& rng) {
  if (x < 0.0 || y < 0.0)
    throw UsageError("simulate_wasserstein_coupling needs x, y >= 0");
  if (!(horizon > 0.0))
    throw UsageError("simulate_wasserstein_coupling needs horizon > 0");
  if (x == y)
    return shared_path_outcome(ModelSpec::tcp_variable(), x, horizon, rng);

  TrajectoryBuilder builder_x(ModelSpec::tcp_variable(), x, horizon);
  TrajectoryBuilder builder_y(ModelSpec::tcp_variable(), y, horizon);
  WassersteinPairState state;
  state.lower = std::min(x, y);
  state.gap = std::abs(x - y);
  state.x_is_upper = x > y;
  while (auto event = wasserstein_step(state, horizon, rng)) {
    if (event->x_jumped) builder_x.add_jump(event->time, state.x_value());
    if (event->y_jumped) builder_y.add_jump(event->time, state.y_value());
  }
  CouplingOutcome out;
  out.traj_x = builder_x.take();
  out.traj_y = builder_y.take();
  out.coalesced = false;
  return out;
}

CouplingOutcome synchronous_coupling_constant(double lambda, double x, double y,
                                              double horizon, RngStream& rng) {
  const ModelSpec model = ModelSpec::tcp_constant(lambda);
  if (x < 0.0 || y < 0.0)
    throw UsageError("synchronous_coupling_constant needs x, y >= 0");
  if (!(horizon > 0.0))
    throw UsageError("synchronous_coupling_constant needs horizon > 0");

  TrajectoryBuilder builder_x(model, x, horizon);
  TrajectoryBuilder builder_y(model, y, horizon);
  double state = x;
  double gap = y - x;  // exact halving keeps |X-Y| = |x-y| 2^{-N} bitwise
  double t = 0.0;
  for (;;) {
    const double dt = rng.exponential(lambda);
    t += dt;
    if (t > horizon) break;
    state = (state + dt) / 2.0;
    gap /= 2.0;
    // Store the pair so the stored values differ by exactly `gap`: the
    // second subtraction lands on a representable value whenever the gap
    // mantissa is short, making the distance law bitwise-checkable.
    const double y_value = state + gap;
    const double x_value = y_value - gap;
    state = x_value;
    builder_x.add_jump(t, x_value);
    builder_y.add_jump(t, y_value);
  }
  CouplingOutcome out;
  out.traj_x = builder_x.take();
  out.traj_y = builder_y.take();
  out.coalesced = x == y;
  if (out.coalesced) out.coalescence_time = 0.0;
  return out;
}

CouplingOutcome attempt_coalescence_tcp(double x, double y, double t,
                                        RngStream& rng) {
  if (x < 0.0 || y < 0.0)
    throw UsageError("attempt_coalescence_tcp needs x, y >= 0");
  if (!(t > 0.0)) throw UsageError("attempt_coalescence_tcp needs t > 0");
  if (x == y)
    return shared_path_outcome(ModelSpec::tcp_variable(), x, t, rng);
  const double delta = std::abs(x - y);
  if (delta > t)
    throw UsageError("attempt_coalescence_tcp needs window >= |x - y|");

  const bool x_is_hi = x > y;
  const double hi = std::max(x, y);
  const double lo = std::min(x, y);
  TrajectoryBuilder builder_hi(ModelSpec::tcp_variable(), hi, t);
  TrajectoryBuilder builder_lo(ModelSpec::tcp_variable(), lo, t);

  // Couple the first jump of the higher path with the delta-shifted first
  // jump of the lower path; a match T realises T_hi = T_lo + delta, which
  // puts both paths at (hi + T)/2 at time T provided the lower path does not
  // jump again inside (T - delta, T].
  const DensitySpec d_hi = tcp_jump_time_density(hi);
  const DensitySpec d_lo = shifted_tcp_jump_time_density(lo, delta);
  const MaximalCouplingResult first = maximal_coupling_1d(d_hi, d_lo, rng);
  const double hi_jump = first.s1;
  const double lo_jump = first.s2 - delta;

  bool coalesced = false;
  double merge_time = 0.0;
  if (first.matched && first.s1 <= t) {
    const double T = first.s1;
    const double lo_value = (lo + lo_jump) / 2.0;
    const double abstain = sample_tcp_jump_time(lo_value, rng);
    if (abstain > delta) {
      // Conditioned on surviving delta, the lower path restarts at
      // lo_value + delta = (hi + T)/2, the merged state.
      const double merged = (hi + T) / 2.0;
      builder_lo.add_jump(lo_jump, lo_value);
      builder_hi.add_jump(T, merged);
      append_shared_continuation(builder_hi, builder_lo, merged, T, t, rng);
      coalesced = true;
      merge_time = T;
    } else {
      // The abstention draw is itself the lower path's next inter-jump time.
      const double lo_second = lo_jump + abstain;
      const double lo_value2 = (lo_value + abstain) / 2.0;
      builder_lo.add_jump(lo_jump, lo_value);
      builder_lo.add_jump(lo_second, lo_value2);
      const double hi_value = (hi + T) / 2.0;
      builder_hi.add_jump(T, hi_value);
      continue_after_failure(builder_hi, T, hi_value, builder_lo, lo_second,
                             lo_value2, t, rng);
    }
  } else {
    double hi_free_time, hi_state;
    if (hi_jump <= t) {
      hi_state = (hi + hi_jump) / 2.0;
      builder_hi.add_jump(hi_jump, hi_state);
      hi_free_time = hi_jump;
    } else {
      hi_state = hi + t;
      hi_free_time = t;
    }
    double lo_free_time, lo_state;
    if (lo_jump <= t) {
      lo_state = (lo + lo_jump) / 2.0;
      builder_lo.add_jump(lo_jump, lo_state);
      lo_free_time = lo_jump;
    } else {
      lo_state = lo + t;
      lo_free_time = t;
    }
    continue_after_failure(builder_hi, hi_free_time, hi_state, builder_lo,
                           lo_free_time, lo_state, t, rng);
  }

  CouplingOutcome out;
  out.traj_x = x_is_hi ? builder_hi.take() : builder_lo.take();
  out.traj_y = x_is_hi ? builder_lo.take() : builder_hi.take();
  out.coalesced = coalesced;
  if (coalesced) out.coalescence_time = merge_time;
  return out;
}

CouplingOutcome hybrid_tv_coupling(double x, double y, double t1, double t2,
                                   int rounds, RngStream& rng) {
  if (!(t1 > 0.0) || !(t2 > 0.0))
    throw UsageError("hybrid_tv_coupling needs t1, t2 > 0");
  if (rounds < 1) throw UsageError("hybrid_tv_coupling needs rounds >= 1");
  const double total = rounds * (t1 + t2);
  if (x == y)
    return shared_path_outcome(ModelSpec::tcp_variable(), x, total, rng);

  TrajectoryBuilder builder_x(ModelSpec::tcp_variable(), x, total);
  TrajectoryBuilder builder_y(ModelSpec::tcp_variable(), y, total);
  double cur_x = x, cur_y = y;
  double offset = 0.0;
  bool coalesced = false;
  double merge_time = 0.0;

  for (int round = 0; round < rounds && !coalesced; ++round) {
    const CouplingOutcome contraction =
        simulate_wasserstein_coupling(cur_x, cur_y, t1, rng);
    builder_x.append_shifted(contraction.traj_x, offset);
    builder_y.append_shifted(contraction.traj_y, offset);
    cur_x = contraction.traj_x.final_state();
    cur_y = contraction.traj_y.final_state();
    offset += t1;

    if (cur_x == cur_y) {
      // Bitwise merge through rounding; the pair is one path from here.
      append_shared_continuation(builder_x, builder_y, cur_x, offset, total,
                                 rng);
      coalesced = true;
      merge_time = offset;
      break;
    }
    if (std::abs(cur_x - cur_y) > t2) {
      // Window shorter than the gap: the one-shot coupling does not apply,
      // keep contracting and retry next round.
      const CouplingOutcome extension =
          simulate_wasserstein_coupling(cur_x, cur_y, t2, rng);
      builder_x.append_shifted(extension.traj_x, offset);
      builder_y.append_shifted(extension.traj_y, offset);
      cur_x = extension.traj_x.final_state();
      cur_y = extension.traj_y.final_state();
      offset += t2;
      continue;
    }
    const CouplingOutcome attempt =
        attempt_coalescence_tcp(cur_x, cur_y, t2, rng);
    builder_x.append_shifted(attempt.traj_x, offset);
    builder_y.append_shifted(attempt.traj_y, offset);
    if (attempt.coalesced) {
      coalesced = true;
      merge_time = offset + *attempt.coalescence_time;
      append_shared_continuation(builder_x, builder_y,
                                 attempt.traj_x.final_state(), offset + t2,
                                 total, rng);
    } else {
      cur_x = attempt.traj_x.final_state();
      cur_y = attempt.traj_y.final_state();
      offset += t2;
    }
  }

  CouplingOutcome out;
  out.traj_x = builder_x.take();
  out.traj_y = builder_y.take();
  out.coalesced = coalesced;
  if (coalesced) out.coalescence_time = merge_time;
  return out;
}

CouplingOutcome tv_coupling_constant_rate(double lambda, double x, double y,
                                          double t, RngStream& rng) {
  const ModelSpec model = ModelSpec::tcp_constant(lambda);
  if (x < 0.0 || y < 0.0)
    throw UsageError("tv_coupling_constant_rate needs x, y >= 0");
  if (!(t > 0.0)) throw UsageError("tv_coupling_constant_rate needs t > 0");
  if (x == y) return shared_path_outcome(model, x, t, rng);

  std::vector<double> times;
  for (double clock = 0.0;;) {
    clock += rng.exponential(lambda);
    if (clock > t) break;
    times.push_back(clock);
  }

  TrajectoryBuilder builder_x(model, x, t);
  TrajectoryBuilder builder_y(model, y, t);
  CouplingOutcome out;
  if (times.empty()) {
    out.traj_x = builder_x.take();
    out.traj_y = builder_y.take();
    return out;  // both paths drift; the Dirac atoms persist
  }

  // Shared jumps up to the penultimate one; the signed gap halves exactly.
  const std::size_t n = times.size();
  double state = x;
  double gap = y - x;
  double prev = 0.0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    state = (state + (times[k] - prev)) / 2.0;
    gap /= 2.0;
    const double y_value = state + gap;
    const double x_value = y_value - gap;
    state = x_value;
    builder_x.add_jump(times[k], x_value);
    builder_y.add_jump(times[k], y_value);
    prev = times[k];
  }

  // Conditionally on N_t = n and the penultimate time, both final jump times
  // are uniform on (penult, t); couple them maximally with offset |gap|.
  const double penult = n >= 2 ? times[n - 2] : 0.0;
  const double span = t - penult;
  const double along = std::abs(gap);
  const double state_x = state;
  const double state_y = state + gap;
  const bool x_later = gap < 0.0;  // the larger path jumps later
  const double match_prob = std::max(0.0, 1.0 - along / span);

  double time_x, time_y;
  if (rng.uniform01() <= match_prob) {
    const double w = penult + along + rng.uniform01() * (span - along);
    time_x = x_later ? w : w - along;
    time_y = x_later ? w - along : w;
    out.coalesced = true;
    out.coalescence_time = w;
  } else if (along < span) {
    const double later = penult + rng.uniform01() * along;
    const double other = t - along + rng.uniform01() * along;
    time_x = x_later ? later : other;
    time_y = x_later ? other : later;
  } else {
    // Empty overlap: independent uniforms on (penult, t].
    time_x = penult + rng.uniform01() * span;
    time_y = penult + rng.uniform01() * span;
  }
  builder_x.add_jump(time_x, (state_x + (time_x - penult)) / 2.0);
  builder_y.add_jump(time_y, (state_y + (time_y - penult)) / 2.0);
  out.traj_x = builder_x.take();
  out.traj_y = builder_y.take();
  return out;
}

CouplingOutcome tv_coupling_storage(double alpha, double beta, double x,
                                    double y, double t, RngStream& rng) {
  const ModelSpec model = ModelSpec::storage(alpha, beta);
  if (x < 0.0 || y < 0.0)
    throw UsageError("tv_coupling_storage needs x, y >= 0");
  if (!(t > 0.0)) throw UsageError("tv_coupling_storage needs t > 0");
  if (x == y) return shared_path_outcome(model, x, t, rng);

  const std::uint64_t n = draw_poisson(alpha * t, rng);
  std::vector<double> times(n);
  for (auto& time : times) time = rng.uniform01() * t;
  std::sort(times.begin(), times.end());

  TrajectoryBuilder builder_x(model, x, t);
  TrajectoryBuilder builder_y(model, y, t);
  CouplingOutcome out;
  if (n == 0) {
    out.traj_x = builder_x.take();
    out.traj_y = builder_y.take();
    return out;
  }

  double state_x = x, state_y = y;
  double prev = 0.0;
  for (std::size_t k = 0; k + 1 < times.size(); ++k) {
    const double decay = std::exp(-beta * (times[k] - prev));
    const double mark = rng.exponential();
    state_x = state_x * decay + mark;
    state_y = state_y * decay + mark;
    builder_x.add_jump(times[k], state_x);
    builder_y.add_jump(times[k], state_y);
    prev = times[k];
  }

  // Final marks maximally coupled: draw the mark of the smaller path; if it
  // clears the gap the larger path's mark is the excess (memorylessness makes
  // that excess a fresh Exp(1)), otherwise the larger path draws fresh.
  const double last = times.back();
  const double decay = std::exp(-beta * (last - prev));
  const double pre_x = state_x * decay;
  const double pre_y = state_y * decay;
  const double gap = std::abs(pre_x - pre_y);
  const bool x_smaller = pre_x <= pre_y;
  const double pre_small = x_smaller ? pre_x : pre_y;
  const double pre_large = x_smaller ? pre_y : pre_x;
  const double small_mark = rng.exponential();
  double post_x, post_y;
  if (small_mark >= gap) {
    const double merged = pre_small + small_mark;
    post_x = post_y = merged;
    out.coalesced = true;
    out.coalescence_time = last;
  } else {
    const double post_small = pre_small + small_mark;
    const double post_large = pre_large + rng.exponential();
    post_x = x_smaller ? post_small : post_large;
    post_y = x_smaller ? post_large : post_small;
  }
  builder_x.add_jump(last, post_x);
  builder_y.add_jump(last, post_y);
  out.traj_x = builder_x.take();
  out.traj_y = builder_y.take();
  return out;
}

}  // namespace pdmplab

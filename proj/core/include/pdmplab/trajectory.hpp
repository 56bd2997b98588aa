#pragma once

#include <cstddef>
#include <vector>

#include "pdmplab/model.hpp"

namespace pdmplab {

/// Jump-time skeleton of one sample path on [0, horizon]: initial value,
/// strictly increasing jump times in (0, horizon], and post-jump values.
/// The state at any time is reconstructed exactly through the deterministic
/// flow, so storage is proportional to the jump count, not to any time grid.
///
/// Convention: a jump landing exactly at the query time counts as already
/// applied, so at(t) returns the post-jump value there.
struct Trajectory {
  ModelSpec model;
  double x0 = 0.0;
  double horizon = 0.0;
  std::vector<double> jump_times;
  std::vector<double> post_jump_values;

  std::size_t jump_count() const { return jump_times.size(); }

  /// State at time t in [0, horizon]. Throws UsageError outside the horizon.
  double at(double t) const;

  double final_state() const { return at(horizon); }
};

/// Deterministic motion of the model: TCP kinds drift at unit rate, the
/// storage model decays exponentially at rate beta.
double flow(const ModelSpec& model, double x, double s);

/// Incremental construction helper shared by the samplers and couplings.
/// Enforces the strictly-increasing jump-time invariant by nudging a
/// colliding time up one ulp (collisions only arise from floating-point
/// rounding of vanishing inter-jump times).
class TrajectoryBuilder {
 public:
  TrajectoryBuilder(ModelSpec model, double x0, double horizon);

  void add_jump(double t, double value);

  /// Splice a segment simulated on [0, seg.horizon] in at time offset.
  void append_shifted(const Trajectory& segment, double offset);

  double last_jump_time() const;
  Trajectory take();

 private:
  Trajectory traj_;
};

}  // namespace pdmplab

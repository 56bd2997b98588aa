#include "pdmplab/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "pdmplab/errors.hpp"

namespace pdmplab {

double flow(const ModelSpec& model, double x, double s) {
  if (s < 0.0) throw UsageError("flow duration must be nonnegative");
  switch (model.kind) {
    case ModelKind::kTcpVariable:
    case ModelKind::kTcpConstant:
      return x + s;
    case ModelKind::kStorage:
      return x * std::exp(-model.beta * s);
  }
  return x;
}

double Trajectory::at(double t) const {
  if (!(t >= 0.0) || t > horizon)
    throw UsageError("evaluation time outside [0, horizon]");
  // Last jump with jump_time <= t; a jump exactly at t is already applied.
  const auto it = std::upper_bound(jump_times.begin(), jump_times.end(), t);
  if (it == jump_times.begin()) return flow(model, x0, t);
  const std::size_t idx = static_cast<std::size_t>(it - jump_times.begin()) - 1;
  return flow(model, post_jump_values[idx], t - jump_times[idx]);
}

TrajectoryBuilder::TrajectoryBuilder(ModelSpec model, double x0, double horizon) {
  traj_.model = model;
  traj_.x0 = x0;
  traj_.horizon = horizon;
}

void TrajectoryBuilder::add_jump(double t, double value) {
  if (!traj_.jump_times.empty() && t <= traj_.jump_times.back()) {
    t = std::nextafter(traj_.jump_times.back(),
                       std::numeric_limits<double>::infinity());
  }
  traj_.jump_times.push_back(t);
  traj_.post_jump_values.push_back(value);
}

void TrajectoryBuilder::append_shifted(const Trajectory& segment, double offset) {
  for (std::size_t i = 0; i < segment.jump_times.size(); ++i)
    add_jump(offset + segment.jump_times[i], segment.post_jump_values[i]);
}

double TrajectoryBuilder::last_jump_time() const {
  return traj_.jump_times.empty() ? 0.0 : traj_.jump_times.back();
}

Trajectory TrajectoryBuilder::take() { return std::move(traj_); }

}  // namespace pdmplab

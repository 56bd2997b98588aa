#pragma once

#include <cstdint>

#include "pdmplab/model.hpp"
#include "pdmplab/rng.hpp"
#include "pdmplab/trajectory.hpp"

namespace pdmplab {

/// P_x(T_1 > t) = exp(-t^2/2 - x t): survival function of the first jump
/// time of the variable-rate TCP process started at x.
double tcp_survival(double x, double t);

/// Deterministic core of the jump-time sampler: T = sqrt(x^2 + 2e) - x,
/// written in a cancellation-free form.
double tcp_jump_time_from_exponential(double x, double e);

/// Draw the first jump time of the variable-rate TCP process from state x:
/// T = sqrt(x^2 + 2E) - x with E a unit-mean exponential. The survival of
/// the returned variable is tcp_survival(x, .).
double sample_tcp_jump_time(double x, RngStream& rng);

/// Poisson count with the given mean (mu >= 0).
std::uint64_t draw_poisson(double mu, RngStream& rng);

/// Exact event-driven simulation of one path on [0, horizon].
///  - tcp-variable: inter-jump times sampled recursively at the current state;
///  - tcp-constant: jump times of a homogeneous Poisson(lambda) process;
///  - storage: Poisson(alpha) jump count and times first, then unit-mean
///    exponential increments.
/// Jumps landing exactly at the horizon are included in the skeleton.
Trajectory simulate_path(const ModelSpec& model, double x0, double horizon,
                         RngStream& rng);

}  // namespace pdmplab

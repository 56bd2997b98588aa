#pragma once

#include <optional>

#include "pdmplab/density.hpp"
#include "pdmplab/model.hpp"
#include "pdmplab/rng.hpp"
#include "pdmplab/trajectory.hpp"

namespace pdmplab {

/// Result of one coupled run. Each trajectory has the marginal law of the
/// underlying model; when `coalesced` is set, the two paths occupy the same
/// state from `coalescence_time` on and every jump recorded after that time
/// is shared bit-identically between both skeletons.
struct CouplingOutcome {
  Trajectory traj_x;
  Trajectory traj_y;
  bool coalesced = false;
  std::optional<double> coalescence_time;
};

struct CoupledState {
  double x = 0.0;
  double y = 0.0;
  double t = 0.0;
};

/// Both coordinates of a coupled run at time t.
CoupledState coupled_state_at(const CouplingOutcome& outcome, double t);

/// Maximal coupling of two one-dimensional continuous laws.
/// s1 ~ d1, s2 ~ d2 marginally; P(matched) equals the overlap
/// integral of min(d1, d2), and matched implies s1 == s2.
struct MaximalCouplingResult {
  double s1 = 0.0;
  double s2 = 0.0;
  bool matched = false;
};

/// Overlap computed by adaptive quadrature; the matched branch samples the
/// normalised min-density by rejection against d1, the unmatched branch
/// samples each normalised residual by rejection against its parent.
MaximalCouplingResult maximal_coupling_1d(const DensitySpec& d1,
                                          const DensitySpec& d2,
                                          RngStream& rng);

// -- Wasserstein coupling of two variable-rate TCP paths ---------------------
//
// Between events both coordinates drift at rate 1 and the gap is constant.
// The pair is carried as (lower, gap) so those two facts are exact: a
// simultaneous event halves the gap bitwise, a drift interval leaves it
// untouched.

struct WassersteinPairState {
  double lower = 0.0;
  double gap = 0.0;       // upper - lower, >= 0
  bool x_is_upper = true; // which marginal currently sits at lower + gap
  double t = 0.0;

  double x_value() const { return x_is_upper ? lower + gap : lower; }
  double y_value() const { return x_is_upper ? lower : lower + gap; }
};

struct WassersteinEvent {
  double time = 0.0;
  bool simultaneous = false;
  bool x_jumped = false;
  bool y_jumped = false;
};

/// Advance the pair to its next event, or to the horizon when the next event
/// falls beyond it (returns nullopt in that case). The event time is drawn
/// with survival exp(-s^2/2 - (x v y) s); the event is a simultaneous
/// halving with probability ((x^y)+s)/((x v y)+s) and a solo halving of the
/// larger coordinate otherwise.
std::optional<WassersteinEvent> wasserstein_step(WassersteinPairState& state,
                                                 double horizon,
                                                 RngStream& rng);

/// The coupling in which the lower component never jumps alone. Never merges
/// distinct paths: coalesced is true iff x == y initially.
CouplingOutcome simulate_wasserstein_coupling(double x, double y,
                                              double horizon, RngStream& rng);

/// Both constant-rate TCP paths share one Poisson(lambda) clock and jump
/// simultaneously; at every t the distance is exactly |x - y| 2^{-N_t}
/// (the gap is maintained by exact halving).
CouplingOutcome synchronous_coupling_constant(double lambda, double x, double y,
                                              double horizon, RngStream& rng);

/// One-shot coalescent coupling over a window of length t, for
/// t >= |x - y| > 0 (x == y returns immediate coalescence). The first jump
/// times are maximally coupled (f_x against the shifted f_y); on a match
/// before t the paths merge at the matched time provided the earlier jumper
/// abstains from jumping across the residual gap. On failure both paths are
/// continued with correct marginals and synchronised through the Wasserstein
/// coupling.
CouplingOutcome attempt_coalescence_tcp(double x, double y, double t,
                                        RngStream& rng);

/// Repeats up to `rounds` cycles of (Wasserstein coupling for t1, coalescence
/// attempt over a window t2), stopping at the first success; horizon is
/// rounds * (t1 + t2). With rounds = 1 this is the hybrid coupling behind the
/// total-variation estimate. An attempt whose window is shorter than the
/// current gap is skipped (the Wasserstein coupling runs instead).
CouplingOutcome hybrid_tv_coupling(double x, double y, double t1, double t2,
                                   int rounds, RngStream& rng);

/// Constant-rate TV coupling: one shared Poisson clock, simultaneous jumps up
/// to the penultimate one, and maximally coupled final jump times (uniforms
/// on (T_{N-1}, t) offset by the remaining gap).
CouplingOutcome tv_coupling_constant_rate(double lambda, double x, double y,
                                          double t, RngStream& rng);

/// Storage-model TV coupling: shared Poisson(alpha) clock and shared marks
/// except the last; the final exponential marks are maximally coupled, which
/// succeeds with probability exp(-gap) by memorylessness.
CouplingOutcome tv_coupling_storage(double alpha, double beta, double x,
                                    double y, double t, RngStream& rng);

}  // namespace pdmplab

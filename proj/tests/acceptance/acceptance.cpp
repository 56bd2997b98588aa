// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit status is the number of
// failed criteria. Set PDMPLAB_FULL_W1=1 to rerun the W1-rate criterion at
// the full 10^6-sample scale.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "pdmplab/analytics.hpp"
#include "pdmplab/couplings.hpp"
#include "pdmplab/montecarlo.hpp"
#include "pdmplab/processes.hpp"
#include "pdmplab/quadrature.hpp"
#include "testutil.hpp"

using namespace pdmplab;

namespace {

struct Reporter {
  int failures = 0;
  void item(bool pass, const std::string& text) {
    if (!pass) ++failures;
    std::printf("    %s %s\n", pass ? "ok  " : "FAIL", text.c_str());
  }
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

constexpr double kSqrt2 = 1.4142135623730951;

// --- 1. deterministic contraction constants --------------------------------

bool criterion_constants(Reporter& r) {
  const ContractionConstants c = contraction_constants(0.5);
  const double M_exact = kSqrt2 * (3.0 + std::sqrt(3.0)) / 8.0;
  r.item(std::abs(c.M - M_exact) <= 1e-9,
         "M = " + fmt(c.M) + " matches sqrt(2)(3+sqrt(3))/8 to 1e-9");
  r.item(std::abs(c.lambda - kSqrt2 * (1.0 - std::sqrt(c.M))) <= 1e-9,
         "lambda = " + fmt(c.lambda) + " matches sqrt(2)(1-sqrt(M)) to 1e-9");
  r.item(c.lambda >= 0.1207 && c.lambda < 0.1208,
         "lambda begins 0.1207...");
  r.item(std::abs(c.alpha - (1.0 / std::sqrt(M_exact) - 1.0)) <= 1e-6 &&
             std::abs(c.alpha - 0.09335) <= 5e-5,
         "alpha = " + fmt(c.alpha) + " ~ 0.09335");
  r.item(std::abs(c.x0 - kSqrt2) <= 1e-6, "x0 = " + fmt(c.x0) + " = sqrt(2)");
  return r.failures == 0;
}

// --- 2. optimal exponent ----------------------------------------------------

bool criterion_optimal_p(Reporter& r) {
  double best_lambda = -1.0, best_p = 0.0;
  for (int i = 0; i <= 900; ++i) {
    const double p = 0.05 + 0.001 * i;
    const double lambda = contraction_constants(p).lambda;
    if (lambda > best_lambda) {
      best_lambda = lambda;
      best_p = p;
    }
  }
  r.item(std::abs(best_lambda - 0.1326) <= 0.001,
         "max lambda = " + fmt(best_lambda) + " = 0.1326 +/- 0.001");
  r.item(std::abs(best_p - 2.0 / 3.0) <= 0.02,
         "argmax p = " + fmt(best_p) + " = 2/3 +/- 0.02");
  return r.failures == 0;
}

// --- 3. invariant measure ---------------------------------------------------

bool criterion_invariant(Reporter& r) {
  const auto density = [](double x) { return invariant_density(x, 1e-12); };
  const double mass = integrate(density, 1e-9, 12.0, 1e-10);
  r.item(std::abs(mass - 1.0) <= 1e-8, "normalisation = " + fmt(mass));
  const double m2 =
      integrate([&](double x) { return x * x * density(x); }, 1e-9, 14.0, 1e-9);
  r.item(std::abs(m2 - 2.0) <= 1e-6, "m2 = " + fmt(m2));
  const double m4 = integrate(
      [&](double x) { return x * x * x * x * density(x); }, 1e-9, 16.0, 1e-9);
  r.item(std::abs(m4 - 48.0 / 7.0) <= 1e-6, "m4 = " + fmt(m4));

  const std::size_t m = 100000;
  std::vector<double> sample(m), relation(m);
  const double log2 = std::log(2.0);
  for (std::size_t i = 0; i < m; ++i) {
    RngStream rng(301, i);
    const double v =
        simulate_path(ModelSpec::tcp_variable(), 0.0, 50.0, rng).at(50.0);
    sample[i] = v;
    relation[i] = log2 * v - 1.0 / v;
  }
  const SummaryStats m1 = summarize_samples(sample);
  const SummaryStats rel = summarize_samples(relation);
  r.item(m1.mean + 3.0 * m1.stderr_of_mean >= 1.2011 &&
             m1.mean - 3.0 * m1.stderr_of_mean <= 1.4143,
         "stationary m1 = " + fmt(m1.mean) + " in [1.2011, 1.4142] +/- 3se");
  r.item(std::abs(rel.mean) <= 4.0 * rel.stderr_of_mean,
         "log(2) m1 - m_{-1} = " + fmt(rel.mean) + " within 4se (se = " +
             fmt(rel.stderr_of_mean) + ")");
  return r.failures == 0;
}

// --- 4 & 5. Wasserstein coupling decay rates -------------------------------

bool criterions_fig2_rates(Reporter& r) {
  const ContractionConstants c = contraction_constants(0.5);
  std::vector<double> grid;
  for (int i = 0; i <= 40; ++i) grid.push_back(0.25 * i);
  const std::size_t k = grid.size();
  const auto stats = mc_expectation(
      2 * k,
      [&](RngStream& rng, std::span<double> out) {
        const CouplingOutcome run =
            simulate_wasserstein_coupling(2.0, 10.0, 10.0, rng);
        for (std::size_t i = 0; i < k; ++i) {
          const double gap =
              std::abs(run.traj_x.at(grid[i]) - run.traj_y.at(grid[i]));
          out[i] = std::sqrt(gap);
          out[k + i] = gap;
        }
      },
      McOptions{.replicas = 10000, .seed = 407, .threads = 0});

  bool dominated = true;
  double worst = -1e300;
  std::vector<double> sqrt_means, abs_means;
  for (std::size_t i = 0; i < k; ++i) {
    const double bound =
        std::exp(-c.lambda * grid[i]) / std::sqrt(c.M) * std::sqrt(8.0);
    const double excess =
        stats[i].mean - 3.0 * stats[i].stderr_of_mean - bound;
    worst = std::max(worst, excess);
    dominated = dominated && excess <= 0.0;
    sqrt_means.push_back(stats[i].mean);
    abs_means.push_back(stats[k + i].mean);
  }
  r.item(dominated, "E|X-Y|^(1/2) <= (1/sqrt M) e^{-lambda t} sqrt(8) + 3se "
                    "at every grid t (worst margin " + fmt(worst) + ")");
  const RateFit fit_sqrt = fit_exponential_rate(grid, sqrt_means, 2.0, 10.0);
  r.item(std::abs(fit_sqrt.slope + 0.4) <= 0.1,
         "sqrt-gap slope = " + fmt(fit_sqrt.slope) + " = -0.4 +/- 0.1");
  const RateFit fit_abs = fit_exponential_rate(grid, abs_means, 2.0, 10.0);
  r.item(std::abs(fit_abs.slope + 0.48) <= 0.12,
         "abs-gap slope = " + fmt(fit_abs.slope) + " = -0.48 +/- 0.12");
  return r.failures == 0;
}

// --- 6. true W1 rate --------------------------------------------------------

bool criterion_w1_rate(Reporter& r) {
  const bool full = std::getenv("PDMPLAB_FULL_W1") != nullptr;
  const std::size_t m = full ? 1000000 : 100000;
  const int points = 20;
  const double tmax = 4.0;
  std::vector<double> ts, values;
  std::vector<double> a(m), b(m);
  for (int point = 1; point <= points; ++point) {
    const double t = tmax * point / points;
    const std::uint64_t base =
        static_cast<std::uint64_t>(2 * point) * static_cast<std::uint64_t>(m);
    for (std::size_t i = 0; i < m; ++i) {
      RngStream rng_a(601, base + i);
      a[i] = simulate_path(ModelSpec::tcp_variable(), 2.0, t, rng_a).at(t);
      RngStream rng_b(601, base + m + i);
      b[i] = simulate_path(ModelSpec::tcp_variable(), 0.5, t, rng_b).at(t);
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    ts.push_back(t);
    values.push_back(empirical_w1(a, b));
  }
  const RateFit fit = fit_exponential_rate(ts, values, 0.0, tmax);
  r.item(std::abs(fit.slope + 1.67) <= 0.25,
         "W1 slope = " + fmt(fit.slope) + " = -1.67 +/- 0.25 (m = " +
             std::to_string(m) + ")");
  return r.failures == 0;
}

// --- 7. hybrid TV coupling --------------------------------------------------

bool criterion_hybrid_tv(Reporter& r) {
  const ContractionConstants c = contraction_constants(0.5);
  const double target_rate = 2.0 * c.lambda / 3.0;
  for (const double t : {10.0, 15.0, 20.0}) {
    const ScheduleParams sp = plan_tv_schedule(t, 1.0);
    const BoundReport bound = tv_bound_hybrid(sp);
    const auto stats = mc_expectation_scalar(
        [&](RngStream& rng) {
          return hybrid_tv_coupling(2.0, 10.0, sp.t1, sp.t2, 1, rng).coalesced
                     ? 0.0
                     : 1.0;
        },
        McOptions{.replicas = 10000, .seed = 701, .threads = 0});
    const double atom = std::exp(-0.5 * t * t - 2.0 * t);
    r.item(stats.mean - 3.0 * stats.stderr_of_mean <= bound.value,
           "t = " + fmt(t) + ": non-coalescence " + fmt(stats.mean) +
               " <= bound " + fmt(bound.value) + " + 3se");
    r.item(stats.mean + 3.0 * stats.stderr_of_mean >= atom,
           "t = " + fmt(t) + ": non-coalescence >= atom " + fmt(atom) + " - 3se");
  }
  // Decay exponent of the explicit bound over {20, 40, 80}: fitted on the
  // raw bound after removing its asymptotic (1 + t) prefactor.
  std::vector<double> ts, scaled, implied;
  for (const double t : {20.0, 40.0, 80.0}) {
    const double raw = tv_bound_hybrid(plan_tv_schedule(t, 1.0)).raw_value;
    ts.push_back(t);
    scaled.push_back(raw / (1.0 + t));
    implied.push_back(-std::log(raw) / t);
  }
  const RateFit fit = fit_exponential_rate(ts, scaled, 20.0, 80.0);
  r.item(std::abs(-fit.slope - target_rate) <= 0.01,
         "bound-curve exponent = " + fmt(-fit.slope) + " = 2 lambda / 3 = " +
             fmt(target_rate) + " +/- 0.01");
  bool approaches = true;
  for (std::size_t i = 1; i < implied.size(); ++i)
    approaches = approaches && std::abs(implied[i] - target_rate) <
                                   std::abs(implied[i - 1] - target_rate);
  r.item(approaches, "-log(D)/t approaches 2 lambda / 3 through {20, 40, 80}");
  return r.failures == 0;
}

// --- 8. constant-rate model -------------------------------------------------

bool criterion_constant_rate(Reporter& r) {
  const double lambda = 1.0;
  const std::vector<double> times = {0.5, 1.0, 3.0};
  const auto stats = mc_expectation(
      2 * times.size(),
      [&](RngStream& rng, std::span<double> out) {
        const Trajectory path =
            simulate_path(ModelSpec::tcp_constant(lambda), 2.0, 3.0, rng);
        for (std::size_t i = 0; i < times.size(); ++i) {
          const double v = path.at(times[i]);
          out[i] = v;
          out[times.size() + i] = v * v;
        }
      },
      McOptions{.replicas = 100000, .seed = 801, .threads = 0});
  for (std::size_t i = 0; i < times.size(); ++i) {
    for (int order = 1; order <= 2; ++order) {
      const auto& s = stats[(order - 1) * times.size() + i];
      const double exact = constant_rate_moment(lambda, 2.0, order, times[i]);
      r.item(std::abs(s.mean - exact) <= 3.0 * s.stderr_of_mean,
             "moment n=" + std::to_string(order) + " t=" + fmt(times[i]) +
                 ": " + fmt(s.mean) + " vs exact " + fmt(exact) + " +/- 3se");
    }
  }

  bool exact_gap = true;
  for (int i = 0; i < 10000 && exact_gap; ++i) {
    RngStream rng(802, static_cast<std::uint64_t>(i));
    const CouplingOutcome out =
        synchronous_coupling_constant(lambda, 0.0, 1.0, 3.0, rng);
    const int n = static_cast<int>(out.traj_x.jump_count());
    if (n == 0) continue;
    exact_gap = out.traj_y.post_jump_values.back() -
                    out.traj_x.post_jump_values.back() ==
                std::ldexp(1.0, -n);
  }
  r.item(exact_gap, "synchronous distance equals |x-y| 2^{-N_t} exactly, "
                    "path by path (10^4 paths)");

  for (const double t : {1.0, 3.0}) {
    const auto s = mc_expectation_scalar(
        [&](RngStream& rng) {
          return tv_coupling_constant_rate(lambda, 0.0, 1.0, t, rng).coalesced
                     ? 0.0
                     : 1.0;
        },
        McOptions{.replicas = 100000, .seed = 803, .threads = 0});
    const double upper =
        lambda * std::exp(-0.5 * lambda * t) + std::exp(-lambda * t);
    const double atom = std::exp(-lambda * t);
    r.item(s.mean - 3.0 * s.stderr_of_mean <= upper,
           "TV t=" + fmt(t) + ": " + fmt(s.mean) + " <= " + fmt(upper) + " + 3se");
    r.item(s.mean + 3.0 * s.stderr_of_mean >= atom,
           "TV t=" + fmt(t) + ": " + fmt(s.mean) + " >= atom " + fmt(atom) +
               " - 3se");
  }
  return r.failures == 0;
}

// --- 9. storage model -------------------------------------------------------

bool criterion_storage(Reporter& r) {
  const std::vector<double> times = {0.5, 1.0, 2.0};
  const auto stats = mc_expectation(
      times.size(),
      [&](RngStream& rng, std::span<double> out) {
        const Trajectory path =
            simulate_path(ModelSpec::storage(1.0, 2.0), 5.0, 2.0, rng);
        for (std::size_t i = 0; i < times.size(); ++i) out[i] = path.at(times[i]);
      },
      McOptions{.replicas = 100000, .seed = 901, .threads = 0});
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double exact = 0.5 + (5.0 - 0.5) * std::exp(-2.0 * times[i]);
    r.item(std::abs(stats[i].mean - exact) <= 3.0 * stats[i].stderr_of_mean,
           "mean t=" + fmt(times[i]) + ": " + fmt(stats[i].mean) +
               " vs exact " + fmt(exact) + " +/- 3se");
  }

  {
    const auto s = mc_expectation_scalar(
        [](RngStream& rng) {
          return tv_coupling_storage(1.0, 2.0, 0.0, 1.0, 2.0, rng).coalesced
                     ? 0.0
                     : 1.0;
        },
        McOptions{.replicas = 100000, .seed = 902, .threads = 0});
    const double upper =
        std::exp(-2.0) + 1.0 * (std::exp(-4.0) - std::exp(-2.0)) / (1.0 - 2.0);
    r.item(s.mean - 3.0 * s.stderr_of_mean <= upper,
           "TV (a=1, b=2) t=2: " + fmt(s.mean) + " <= " + fmt(upper) + " + 3se");
  }
  {
    const auto s = mc_expectation_scalar(
        [](RngStream& rng) {
          return tv_coupling_storage(1.0, 1.0, 0.0, 1.0, 2.0, rng).coalesced
                     ? 0.0
                     : 1.0;
        },
        McOptions{.replicas = 100000, .seed = 903, .threads = 0});
    const double upper = (1.0 + 1.0 * 1.0 * 2.0) * std::exp(-2.0);
    r.item(s.mean - 3.0 * s.stderr_of_mean <= upper,
           "TV (a = b = 1) t=2: " + fmt(s.mean) + " <= limiting form " +
               fmt(upper) + " + 3se");
  }

  // The achievable-rate comparison table produced by the CLI.
  const std::string out = std::string(PDMPLAB_TEST_TMPDIR) + "/storage_acc.csv";
  const std::string cmd = std::string(PDMPLAB_CLI_PATH) +
                          " storage --t 1 --replicas 100 --output " + out +
                          " > /dev/null 2>&1";
  bool table_ok = false;
  if (std::system(cmd.c_str()) == 0) {
    std::ifstream in(out);
    std::string line;
    while (std::getline(in, line)) {
      if (line != "achievable_rate,small_set_rate,ratio") continue;
      double achievable = 0.0, cited = 0.0, ratio = 0.0;
      if (std::getline(in, line) &&
          std::sscanf(line.c_str(), "%lf,%lf,%lf", &achievable, &cited,
                      &ratio) == 3) {
        table_ok = achievable == 1.0 && cited == 0.05 && ratio == 20.0;
      }
      break;
    }
  }
  r.item(table_ok, "rate comparison table reports min(alpha, beta) = 1 vs 0.05");
  return r.failures == 0;
}

// --- 10. property suites ----------------------------------------------------

bool criterion_properties(Reporter& r) {
  // Moment-bound dominance across the stated grid.
  bool moments_ok = true;
  for (const double p : {1.0, 2.0, 4.0}) {
    for (const double t : {0.5, 1.0, 2.0}) {
      for (const double x0 : {0.0, 5.0, 20.0}) {
        const auto s = mc_expectation_scalar(
            [&](RngStream& rng) {
              return std::pow(
                  simulate_path(ModelSpec::tcp_variable(), x0, t, rng).at(t), p);
            },
            McOptions{.replicas = 20000,
                      .seed = 1001 + static_cast<std::uint64_t>(
                                         100.0 * p + 10.0 * t + x0),
                      .threads = 0});
        moments_ok = moments_ok && s.mean - 3.0 * s.stderr_of_mean <
                                       wasserstein_moment_bound(p, t);
      }
    }
  }
  r.item(moments_ok, "E_x[X_t^p] - 3se < (sqrt(2p) + 2p/t)^p on the full grid");

  // Deviation-bound dominance.
  bool deviations_ok = true;
  for (const double t : {1.0, 2.0}) {
    const double r_min = 2.0 * std::exp(1.0) * (1.0 + 1.0 / t);
    for (const double factor : {1.0, 1.25}) {
      const double level = r_min * factor;
      for (const double x0 : {0.0, 20.0}) {
        const auto s = mc_expectation_scalar(
            [&](RngStream& rng) {
              return simulate_path(ModelSpec::tcp_variable(), x0, t, rng).at(t) >=
                             level
                         ? 1.0
                         : 0.0;
            },
            McOptions{.replicas = 100000,
                      .seed = 1101 + static_cast<std::uint64_t>(10.0 * t + x0),
                      .threads = 0});
        const DeviationBounds bounds = deviation_bounds(t, level);
        deviations_ok = deviations_ok && bounds.finite_time_valid &&
                        s.mean - 3.0 * s.stderr_of_mean <= bounds.finite_time;
      }
    }
  }
  r.item(deviations_ok, "tail P_x(X_t >= r) - 3se <= exp(-t r / (2e(t+1)))");

  // Marginal preservation for the four couplings, two-sample at 4 sigma.
  const std::size_t m = 100000;
  const auto marginal = [&](const std::function<double(RngStream&)>& f,
                            std::uint64_t seed) {
    return mc_expectation_scalar(f, McOptions{.replicas = m, .seed = seed,
                                              .threads = 0});
  };
  struct MarginalCase {
    const char* name;
    std::function<double(RngStream&)> coupled;
    std::function<double(RngStream&)> direct;
  };
  const double t = 3.0;
  std::vector<MarginalCase> cases;
  cases.push_back(
      {"wasserstein",
       [t](RngStream& rng) {
         return simulate_wasserstein_coupling(2.0, 10.0, t, rng).traj_y.at(t);
       },
       [t](RngStream& rng) {
         return simulate_path(ModelSpec::tcp_variable(), 10.0, t, rng).at(t);
       }});
  cases.push_back(
      {"hybrid",
       [](RngStream& rng) {
         return hybrid_tv_coupling(2.0, 10.0, 2.0, 1.0, 1, rng).traj_x.at(3.0);
       },
       [](RngStream& rng) {
         return simulate_path(ModelSpec::tcp_variable(), 2.0, 3.0, rng).at(3.0);
       }});
  cases.push_back(
      {"tv_constant",
       [t](RngStream& rng) {
         return tv_coupling_constant_rate(1.0, 0.0, 1.0, t, rng).traj_y.at(t);
       },
       [t](RngStream& rng) {
         return simulate_path(ModelSpec::tcp_constant(1.0), 1.0, t, rng).at(t);
       }});
  cases.push_back(
      {"tv_storage",
       [t](RngStream& rng) {
         return tv_coupling_storage(1.0, 2.0, 0.0, 1.0, t, rng).traj_y.at(t);
       },
       [t](RngStream& rng) {
         return simulate_path(ModelSpec::storage(1.0, 2.0), 1.0, t, rng).at(t);
       }});
  std::uint64_t seed = 1201;
  for (const auto& test_case : cases) {
    bool ok = true;
    for (int order = 1; order <= 2; ++order) {
      const auto coupled = marginal(
          [&](RngStream& rng) {
            return std::pow(test_case.coupled(rng), order);
          },
          seed++);
      const auto direct = marginal(
          [&](RngStream& rng) { return std::pow(test_case.direct(rng), order); },
          seed++);
      ok = ok && testutil::two_sample_sigma_distance(coupled, direct) < 4.0;
    }
    r.item(ok, std::string("marginal preservation (4se, moments 1-2): ") +
                   test_case.name);
  }

  // Maximal-coupling marginals by Kolmogorov-Smirnov at the 1% level.
  {
    const DensitySpec d1 = tcp_jump_time_density(1.0);
    const DensitySpec d2 = shifted_tcp_jump_time_density(0.9, 0.1);
    const std::size_t n = 100000;
    std::vector<double> s1(n), s2(n);
    for (std::size_t i = 0; i < n; ++i) {
      RngStream rng(1301, i);
      const auto res = maximal_coupling_1d(d1, d2, rng);
      s1[i] = res.s1;
      s2[i] = res.s2;
    }
    const auto cdf1 = [](double s) {
      return 1.0 - tcp_survival(1.0, std::max(0.0, s));
    };
    const auto cdf2 = [](double s) {
      return 1.0 - tcp_survival(0.9, std::max(0.0, s - 0.1));
    };
    const bool ks_ok =
        testutil::ks_distance(testutil::sorted(s1), cdf1) <
            testutil::ks_critical_1pct(n) &&
        testutil::ks_distance(testutil::sorted(s2), cdf2) <
            testutil::ks_critical_1pct(n);
    r.item(ks_ok, "maximal-coupling marginals pass KS at the 1% level");
  }

  // Determinism: bit-identical reruns across independent processes/threads.
  {
    RngStream a1(1401, 3), a2(1401, 3);
    const Trajectory t1 = simulate_path(ModelSpec::tcp_variable(), 1.0, 20.0, a1);
    const Trajectory t2 = simulate_path(ModelSpec::tcp_variable(), 1.0, 20.0, a2);
    bool same = t1.jump_times == t2.jump_times &&
                t1.post_jump_values == t2.post_jump_values;
    RngStream b1(1402, 9), b2(1402, 9);
    const CouplingOutcome c1 = hybrid_tv_coupling(2.0, 10.0, 3.0, 1.5, 1, b1);
    const CouplingOutcome c2 = hybrid_tv_coupling(2.0, 10.0, 3.0, 1.5, 1, b2);
    same = same && c1.traj_x.jump_times == c2.traj_x.jump_times &&
           c1.traj_y.post_jump_values == c2.traj_y.post_jump_values;
    const auto replica = [](RngStream& rng, std::span<double> out) {
      out[0] = simulate_path(ModelSpec::tcp_variable(), 0.0, 5.0, rng).at(5.0);
    };
    const auto seq = mc_expectation(
        1, replica, McOptions{.replicas = 4000, .seed = 1403, .threads = 1});
    const auto par = mc_expectation(
        1, replica, McOptions{.replicas = 4000, .seed = 1403, .threads = 4});
    same = same && seq[0].mean == par[0].mean &&
           seq[0].stderr_of_mean == par[0].stderr_of_mean;
    r.item(same, "bit-identical reruns (paths, couplings, 1 vs 4 workers)");
  }
  return r.failures == 0;
}

struct Criterion {
  const char* name;
  std::function<bool(Reporter&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1. contraction constants (drift optimum at p = 1/2)",
       criterion_constants},
      {"2. optimal exponent p (lambda = 0.1326 near p = 2/3)",
       criterion_optimal_p},
      {"3. invariant measure (density, moments, stationary relation)",
       criterion_invariant},
      {"4/5. coupled decay rates against the explicit contraction bound",
       criterions_fig2_rates},
      {"6. true W1 decay rate (-1.67 +/- 0.25)", criterion_w1_rate},
      {"7. hybrid TV coupling against the explicit bound and rate",
       criterion_hybrid_tv},
      {"8. constant-rate model (moments, exact gap law, TV bounds)",
       criterion_constant_rate},
      {"9. storage model (mean, TV bounds, rate comparison)",
       criterion_storage},
      {"10. property suites (moment/deviation bounds, marginals, KS, "
       "determinism)",
       criterion_properties},
  };

  int failed = 0;
  for (const auto& criterion : criteria) {
    std::printf("-- %s\n", criterion.name);
    std::fflush(stdout);
    const auto start = std::chrono::steady_clock::now();
    Reporter reporter;
    bool pass = false;
    try {
      pass = criterion.run(reporter);
    } catch (const std::exception& e) {
      reporter.item(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::printf("%s %s (%.1fs)\n", pass ? "PASS" : "FAIL", criterion.name,
                seconds);
    std::fflush(stdout);
    if (!pass) ++failed;
  }
  std::printf("%d/%zu acceptance criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}

#pragma once

#include <cmath>
#include <utility>

#include "pdmplab/errors.hpp"

namespace pdmplab {

namespace detail {

template <class F>
double adaptive_simpson(const F& f, double a, double b, double fa, double fm,
                        double fb, double whole, double tol, int depth) {
  if (depth <= 0)
    throw NumericalError("adaptive quadrature did not converge to tolerance");
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson integration of f over [a, b] to absolute tolerance.
/// Throws NumericalError when the recursion depth is exhausted before the
/// tolerance is met.
template <class F>
double integrate(F&& f, double a, double b, double abs_tol, int max_depth = 48) {
  if (!(abs_tol > 0.0)) throw UsageError("integrate needs abs_tol > 0");
  if (a >= b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::adaptive_simpson(f, a, b, fa, fm, fb, whole, abs_tol,
                                  max_depth);
}

}  // namespace pdmplab

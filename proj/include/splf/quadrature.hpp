#pragma once

#include <cmath>
#include <stdexcept>

#include "splf/errors.hpp"

namespace splf {

namespace detail {

template <class F>
double simpson_recurse(F& f, double a, double m, double b, double fa, double fm, double fb,
                       double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double err = left + right - whole;
  if (std::abs(err) <= 15.0 * tol) return left + right + err / 15.0;
  if (depth <= 0) throw tolerance_error("adaptive_simpson: tolerance not reached at max depth");
  return simpson_recurse(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_recurse(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Adaptive Simpson with absolute tolerance and the usual 1/15 Richardson
// error estimate. Throws tolerance_error if max_depth bisections cannot
// settle an interval.
template <class F>
double adaptive_simpson(F&& f, double a, double b, double abs_tol, int max_depth = 48) {
  if (!(b >= a)) throw std::invalid_argument("adaptive_simpson: need a <= b");
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_recurse(f, a, m, b, fa, fm, fb, whole, abs_tol, max_depth);
}

}  // namespace splf

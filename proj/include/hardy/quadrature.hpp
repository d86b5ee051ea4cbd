#pragma once

#include <cmath>

namespace hardy {

namespace detail {

template <typename F>
double simpson_rec(const F& f, double a, double b, double fa, double fm,
                   double fb, double whole, double abs_floor, double rel_tol,
                   int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double err = left + right - whole;
  if (depth <= 0 || std::abs(err) <= 15.0 * (abs_floor + rel_tol * std::abs(left + right))) {
    return left + right + err / 15.0;
  }
  return simpson_rec(f, a, m, fa, flm, fm, left, abs_floor * 0.5, rel_tol, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, abs_floor * 0.5, rel_tol, depth - 1);
}

}  // namespace detail

// Adaptive Simpson on [a,b]; integrands here are smooth per invocation.
// Absolute floor 1e-14, relative target 1e-10, recursion capped at depth 50.
template <typename F>
double adaptive_simpson(const F& f, double a, double b,
                        double abs_floor = 1e-14, double rel_tol = 1e-10,
                        int max_depth = 50) {
  if (!(b > a)) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_rec(f, a, b, fa, fm, fb, whole, abs_floor, rel_tol,
                             max_depth);
}

}  // namespace hardy

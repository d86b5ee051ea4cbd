#pragma once

// Projection onto the two-moment constraint set through the affine family
// a*g + b, b = f - a*integral(g). The family preserves monotonicity for
// a > 0, and its p-th moment is strictly increasing in a (Chebyshev's sum
// inequality), so a single bracketed root-find suffices.

#include <cmath>
#include <vector>

#include "hardy/params.hpp"
#include "hardy/step_function.hpp"

namespace hardy {

namespace detail {

inline double affine_p_moment(const StepFunction& g, double a, double b,
                              double p) {
  double s = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double v = a * g.value(i) + b;
    s += std::pow(v > 0.0 ? v : 0.0, p) * g.length(i);
  }
  return s;
}

}  // namespace detail

inline StepFunction renormalize_moments(const StepFunction& g,
                                        const MomentPair& target,
                                        const PParams& params) {
  const double f = target.f();
  const double F = target.F();
  const double p = params.p();
  const double I = integral(g);
  if (!(I > 0.0)) {
    throw infeasible_projection("renormalize_moments: g integrates to 0");
  }
  if (std::abs(I - f) <= 1e-14 * std::max(1.0, std::abs(f)) &&
      std::abs(p_moment(g, params) - F) <= 1e-14 * std::max(1.0, std::abs(F))) {
    return g;  // already on target
  }

  // b >= -a*v_min keeps values nonnegative; that caps a at f/(I - v_min).
  const double vmin = g.value(g.size() - 1);
  const double a_max = (I > vmin) ? f / (I - vmin) : 1e6;
  const auto moment_at = [&](double a) {
    return detail::affine_p_moment(g, a, f - a * I, p);
  };
  double lo = 1e-9;
  double hi = a_max;
  if (moment_at(hi) < F - 1e-13 * std::max(1.0, F)) {
    throw infeasible_projection("renormalize_moments: p-moment unreachable");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-16 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    (moment_at(mid) < F ? lo : hi) = mid;
  }
  const double a = 0.5 * (lo + hi);
  const double b = f - a * I;
  std::vector<double> values(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    values[i] = std::max(a * g.value(i) + b, 0.0);
  }
  return StepFunction(g.rights(), std::move(values));
}

}  // namespace hardy

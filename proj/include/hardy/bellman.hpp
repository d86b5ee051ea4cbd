#pragma once

// Scalar machinery of the extremal problem: H_p, its inverse omega_p on
// [1, p/(p-1)], and the Bellman value B_p(f,F) = F * omega_p(f^p/F)^p.

#include <cmath>
#include <stdexcept>

#include "hardy/params.hpp"

namespace hardy {

// H_p(z) = -(p-1) z^p + p z^{p-1}, strictly decreasing from 1 to 0 on the
// bracket [1, p/(p-1)].
inline double hp_eval(const PParams& params, double z) {
  const double p = params.p();
  const double hi = params.conjugate_bound();
  if (!(z >= 1.0 - 1e-12) || !(z <= hi * (1.0 + 1e-12))) {
    throw std::domain_error("hp_eval: z outside [1, p/(p-1)]");
  }
  z = std::fmin(std::fmax(z, 1.0), hi);
  return -(p - 1.0) * std::pow(z, p) + p * std::pow(z, p - 1.0);
}

inline double hp_derivative(const PParams& params, double z) {
  const double p = params.p();
  return p * (p - 1.0) * std::pow(z, p - 2.0) * (1.0 - z);
}

// omega_p(x) = H_p^{-1}(x) for x in (0,1]. Bisection to bracket width 1e-14,
// then a guarded Newton polish (H_p' vanishes at z=1, so Newton alone is not
// safe near the trivial end).
inline OmegaValue omega_p(const PParams& params, double x) {
  if (!(x > 0.0) || !(x <= 1.0)) {
    throw std::domain_error("omega_p: x must lie in (0, 1]");
  }
  if (x == 1.0) return {1.0, x};

  double lo = 1.0;
  double hi = params.conjugate_bound();
  while (hi - lo > 1e-14) {
    const double mid = 0.5 * (lo + hi);
    if (hp_eval(params, mid) >= x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double c = 0.5 * (lo + hi);
  for (int i = 0; i < 3; ++i) {
    const double d = hp_derivative(params, c);
    if (d == 0.0) break;
    const double next = c - (hp_eval(params, c) - x) / d;
    if (next >= 1.0 && next <= params.conjugate_bound()) c = next;
  }
  return {c, x};
}

// B_p(f,F) = F * omega_p(f^p/F)^p. Equals F in the trivial case and is
// always < F * (p/(p-1))^p.
inline double bellman_value(const PParams& params, const MomentPair& moments) {
  if (moments.trivial(params)) return moments.F();
  const OmegaValue w = omega_p(params, moments.ratio(params));
  return moments.F() * std::pow(w.c, params.p());
}

}  // namespace hardy

#pragma once

// The Hardy functional Phi_p(g) = integral_0^1 (Hg)^p dt and the eigen-defect
// integral_0^1 |Hg - c g|^p dt. On cell i the integrand depends on t only
// through a_i/t with a_i = C_{i-1} - v_i t_{i-1}, so every piece is smooth;
// p = 2 integrates in closed form (t, ln t, 1/t), other p by adaptive Simpson.

#include <cmath>
#include <vector>

#include "hardy/params.hpp"
#include "hardy/quadrature.hpp"
#include "hardy/step_function.hpp"

namespace hardy {

namespace detail {

// integral over (x0, x1] of (v + a/t)^2 dt
inline double phi_cell_closed2(double v, double a, double x0, double x1) {
  double r = v * v * (x1 - x0);
  if (a != 0.0) {
    r += 2.0 * v * a * (std::log(x1) - std::log(x0)) + a * a * (1.0 / x0 - 1.0 / x1);
  }
  return r;
}

// Raw evaluator on (rights, values) arrays; does not require monotone values
// (any nonnegative profile has C(t) nondecreasing, so the integrand stays
// nonnegative). Used by the gradient finite-difference oracle.
inline double phi_raw(const std::vector<double>& rights,
                      const std::vector<double>& values, double p,
                      double upto = 1.0) {
  double total = 0.0;
  double C = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double t0 = prev;
    const double t1 = std::min(rights[i], upto);
    const double v = values[i];
    const double a = C - v * t0;
    if (t1 > t0) {
      if (t0 == 0.0 || a == 0.0) {
        // constant piece: the first cell has a = 0, so Hg = v_1 there
        total += std::pow(v, p) * (t1 - t0);
      } else if (p == 2.0) {
        total += phi_cell_closed2(v, a, t0, t1);
      } else {
        total += adaptive_simpson(
            [v, a, p](double t) { return std::pow(v + a / t, p); }, t0, t1);
      }
    }
    C += values[i] * (rights[i] - prev);
    prev = rights[i];
    if (prev >= upto) break;
  }
  return total;
}

}  // namespace detail

// integral_0^upto (Hg)^p dt; upto = 1 gives the full functional.
inline double phi_functional(const StepFunction& g, const PParams& params,
                             double upto = 1.0) {
  if (!(upto > 0.0) || !(upto <= 1.0)) {
    throw std::domain_error("phi_functional: upto outside (0,1]");
  }
  return detail::phi_raw(g.rights(), g.values(), params.p(), upto);
}

// The quantity integral |Hg - c g|^p dt; zero exactly when g is the power-law
// eigenfunction for c.
struct DefectValue {
  double value;
};

// On cell i the inner expression is D(t) = (1-c)v_i + a_i/t, strictly
// decreasing in t when a_i > 0, with unique zero t* = a_i/((c-1)v_i). Splitting
// there keeps |D|^p smooth on each side; the split is analytic, never sampled.
inline DefectValue defect(const StepFunction& g, double c,
                          const PParams& params) {
  if (!(c >= 1.0)) throw std::domain_error("defect: need c >= 1");
  const double p = params.p();
  double total = 0.0;
  double C = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double t0 = prev;
    const double t1 = g.right(i);
    const double v = g.value(i);
    const double a = C - v * t0;
    const double alpha = (1.0 - c) * v;
    const auto piece = [&](double x0, double x1) {
      if (!(x1 > x0)) return 0.0;
      if (p == 2.0) return detail::phi_cell_closed2(alpha, a, x0, x1);
      return adaptive_simpson(
          [alpha, a, p](double t) { return std::pow(std::abs(alpha + a / t), p); },
          x0, x1);
    };
    if (a == 0.0 || t0 == 0.0) {
      total += std::pow(std::abs(alpha), p) * (t1 - t0);
    } else if (alpha >= 0.0) {
      total += piece(t0, t1);
    } else {
      const double tstar = a / ((c - 1.0) * v);
      if (tstar <= t0 || tstar >= t1) {
        total += piece(t0, t1);
      } else {
        total += piece(t0, tstar) + piece(tstar, t1);
      }
    }
    C += v * (t1 - t0);
    prev = t1;
  }
  return {total};
}

}  // namespace hardy

#pragma once

// Constrained ascent over the feasible set: maximize Phi_p over non-increasing
// step functions on a fixed geometric grid with both moments pinned. Each
// iteration takes a step along the functional-gradient density, restores
// monotonicity by pool-adjacent-violators, and restores the moments by the
// affine renormalization; backtracking keeps accepted objectives monotone.

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "hardy/bellman.hpp"
#include "hardy/extremal.hpp"
#include "hardy/functional.hpp"
#include "hardy/params.hpp"
#include "hardy/quadrature.hpp"
#include "hardy/renormalize.hpp"
#include "hardy/step_function.hpp"

namespace hardy {

struct AscentConfig {
  std::size_t cells = 1u << 12;
  std::size_t max_iters = 3000;
  double step_size = 1e-2;   // halved on rejection, reset after 5 accepts
  double tol_obj = 1e-12;    // accepted gain below this terminates
  std::uint64_t seed = 1;

  void validate() const {
    if (cells < 8) throw std::domain_error("AscentConfig: cells must be >= 8");
    if (!(tol_obj > 0.0)) throw std::domain_error("AscentConfig: tol_obj must be > 0");
    if (!(step_size > 0.0)) throw std::domain_error("AscentConfig: step_size must be > 0");
  }
};

struct AscentRecord {
  std::size_t iter;
  double objective;
  double defect;
  double lp_dist;
  bool accepted;
};

struct AscentTrace {
  std::vector<AscentRecord> records;
  bool converged = false;
};

struct GradientResult {
  std::vector<double> component;
  bool zero_cells_flagged = false;  // p < 2 with zero-valued cells
};

// First variation of Phi_p: component i = p * integral (Hg)^{p-1} w_i(t) dt,
// w_i(t) = |cell_i intersect (0,t]| / t. Computed in O(n) with per-cell
// integrals A_j = int (Hg)^{p-1}/t and B_i = int_cell (Hg)^{p-1}(1 - t_{i-1}/t)
// plus suffix sums: grad_i = p (B_i + len_i * sum_{j>i} A_j).
inline GradientResult gradient(const StepFunction& g, const PParams& params) {
  const double p = params.p();
  const std::size_t n = g.size();
  std::vector<double> A(n, 0.0), B(n, 0.0);
  double C = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t0 = g.left(i);
    const double t1 = g.right(i);
    const double v = g.value(i);
    const double a = C - v * t0;
    if (i == 0) {
      B[0] = std::pow(v, p - 1.0) * t1;  // w_1 == 1 on the first cell
    } else if (p == 2.0) {
      const double dln = std::log(t1) - std::log(t0);
      A[i] = v * dln + a * (1.0 / t0 - 1.0 / t1);
      B[i] = v * (t1 - t0) + (a - v * t0) * dln - a * (1.0 - t0 / t1);
    } else {
      A[i] = adaptive_simpson(
          [v, a, p](double t) { return std::pow(v + a / t, p - 1.0) / t; }, t0, t1);
      B[i] = adaptive_simpson(
          [v, a, t0, p](double t) {
            return std::pow(v + a / t, p - 1.0) * (1.0 - t0 / t);
          },
          t0, t1);
    }
    C += v * (t1 - t0);
  }
  GradientResult out;
  out.component.assign(n, 0.0);
  double suffix = 0.0;
  for (std::size_t i = n; i-- > 0;) {
    out.component[i] = p * (B[i] + g.length(i) * suffix);
    suffix += A[i];
  }
  if (p < 2.0) {
    for (std::size_t i = 0; i < n; ++i) {
      if (g.value(i) == 0.0) {
        out.component[i] = 0.0;
        out.zero_cells_flagged = true;
      }
    }
  }
  return out;
}

namespace detail {

// Weighted pool-adjacent-violators for the non-increasing cone.
inline std::vector<double> pava_nonincreasing(const std::vector<double>& v,
                                              const std::vector<double>& w) {
  const std::size_t n = v.size();
  std::vector<double> bv(n), bw(n);
  std::vector<std::size_t> bc(n);
  std::size_t m = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double cv = v[i], cw = w[i];
    std::size_t cc = 1;
    while (m > 0 && bv[m - 1] < cv) {
      cv = (cv * cw + bv[m - 1] * bw[m - 1]) / (cw + bw[m - 1]);
      cw += bw[m - 1];
      cc += bc[m - 1];
      --m;
    }
    bv[m] = cv;
    bw[m] = cw;
    bc[m] = cc;
    ++m;
  }
  std::vector<double> out(n);
  std::size_t pos = 0;
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < bc[j]; ++k) out[pos++] = bv[j];
  }
  return out;
}

}  // namespace detail

// Monotone projection then exact moment restoration, in that order (the
// affine map preserves monotonicity; the reverse order can break moments).
inline StepFunction project(const std::vector<double>& v,
                            const std::vector<double>& rights,
                            const MomentPair& target, const PParams& params) {
  std::vector<double> lens(rights.size());
  double prev = 0.0;
  for (std::size_t i = 0; i < rights.size(); ++i) {
    lens[i] = rights[i] - prev;
    prev = rights[i];
  }
  std::vector<double> mono = detail::pava_nonincreasing(v, lens);
  bool any_positive = false;
  for (double& x : mono) {
    if (x < 0.0) x = 0.0;
    any_positive |= (x > 0.0);
  }
  if (!any_positive) {
    throw infeasible_projection("project: vector clamps to zero");
  }
  return renormalize_moments(StepFunction(rights, std::move(mono)), target,
                             params);
}

namespace detail {

// Deterministic Exp(1) sample independent of library distributions.
inline double exp_sample(std::mt19937_64& rng) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return -std::log1p(-u);
}

// Grid parameter for the ascent: a Phi tail budget of 2.5e-4 * B keeps the
// head value reachable by multiplicative gradient growth within max_iters,
// while the on-grid supremum stays well above 0.99 * B.
inline double ascent_grid_parameter(const PParams& params,
                                    const MomentPair& moments) {
  const PowerLawFunction g0 = build_g0(params, moments);
  const double pe1 = params.p() * g0.e() + 1.0;
  if (g0.e() == 0.0 || pe1 >= 1.0 - 1e-12) return std::log(1e8);
  const double B = bellman_value(params, moments);
  const double rhs = 2.5e-4 * B /
                     ((1.0 / pe1 - 1.0) * std::pow(moments.f(), params.p()));
  const double L = -std::log(rhs) / pe1;
  return std::min(80.0, std::max(std::log(1e8), L));
}

}  // namespace detail

// Projected gradient ascent with backtracking. The trace records every
// iteration; accepted objectives are non-decreasing by construction. Returns
// the best iterate; trace.converged is false only when max_iters ran out
// before the gain fell under tol_obj.
inline std::pair<StepFunction, AscentTrace> maximize(const AscentConfig& config,
                                                     const PParams& params,
                                                     const MomentPair& target) {
  config.validate();
  AscentTrace trace;
  if (target.trivial(params)) {
    StepFunction best({1.0}, {target.f()});
    trace.converged = true;
    trace.records.push_back(
        {0, phi_functional(best, params), 0.0, 0.0, true});
    return {best, trace};
  }

  const double L = detail::ascent_grid_parameter(params, target);
  const std::vector<double> rights = geometric_breakpoints(config.cells, L);
  const double c = omega_p(params, target.ratio(params)).c;
  const PowerLawFunction g0 = build_g0(params, target);
  const StepFunction reference = discretize_g0(g0, config.cells, target, params);

  std::mt19937_64 rng(config.seed);
  std::vector<double> start(config.cells);
  for (double& x : start) x = detail::exp_sample(rng);
  std::sort(start.begin(), start.end(), std::greater<>());
  // Spread boost: on geometric grids the sorted-exponential start can be too
  // flat in measure for the p-moment target; v -> v^1.5 until projectable.
  StepFunction current = [&] {
    for (int tries = 0; tries < 60; ++tries) {
      try {
        return project(start, rights, target, params);
      } catch (const infeasible_projection&) {
        const double vmax = start.front();
        for (double& x : start) x = std::pow(x / vmax, 1.5) * vmax;
      }
    }
    throw infeasible_projection("maximize: no feasible start");
  }();

  double objective = phi_functional(current, params);
  StepFunction best = current;
  double best_objective = objective;
  double eta = config.step_size;
  std::size_t consecutive_accepts = 0;

  const auto record = [&](std::size_t iter, bool accepted) {
    trace.records.push_back({iter, objective, defect(current, c, params).value,
                             lp_distance(current, reference, params), accepted});
  };
  record(0, true);

  for (std::size_t iter = 1; iter <= config.max_iters; ++iter) {
    const GradientResult grad = gradient(current, params);
    std::vector<double> candidate_values(current.values());
    for (std::size_t i = 0; i < candidate_values.size(); ++i) {
      candidate_values[i] += eta * grad.component[i] / current.length(i);
    }
    bool accepted = false;
    try {
      StepFunction candidate = project(candidate_values, rights, target, params);
      const double cand_obj = phi_functional(candidate, params);
      if (cand_obj > objective) {
        const double gain = cand_obj - objective;
        current = std::move(candidate);
        objective = cand_obj;
        accepted = true;
        if (objective > best_objective) {
          best = current;
          best_objective = objective;
        }
        if (++consecutive_accepts >= 5) {
          eta = config.step_size;
          consecutive_accepts = 0;
        }
        record(iter, true);
        if (gain < config.tol_obj) {
          trace.converged = true;
          break;
        }
        continue;
      }
    } catch (const infeasible_projection&) {
      // unreachable moment target from this step: treat as rejection
    }
    if (!accepted) {
      eta *= 0.5;
      consecutive_accepts = 0;
      record(iter, false);
      if (eta < 1e-14) {
        trace.converged = true;  // step size exhausted
        break;
      }
    }
  }
  return {best, trace};
}

}  // namespace hardy

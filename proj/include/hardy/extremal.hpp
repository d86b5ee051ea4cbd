#pragma once

// The closed-form extremal function g0(t) = k t^e with e = -1 + 1/c,
// c = omega_p(f^p/F), k = f/c, which satisfies Hg0 = c*g0 on all of (0,1];
// its discretizations and the near-extremal sequence factories.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hardy/bellman.hpp"
#include "hardy/functional.hpp"
#include "hardy/params.hpp"
#include "hardy/renormalize.hpp"
#include "hardy/step_function.hpp"

namespace hardy {

class PowerLawFunction {
 public:
  PowerLawFunction(double k, double e) : k_(k), e_(e) {
    if (!(k > 0.0) || !(e > -1.0) || !(e <= 0.0)) {
      throw std::domain_error("PowerLawFunction: need k > 0 and e in (-1, 0]");
    }
  }

  double k() const { return k_; }
  double e() const { return e_; }
  double eigenvalue() const { return 1.0 / (e_ + 1.0); }  // c = 1/(e+1)

  double value_at(double t) const { return k_ * std::pow(t, e_); }

  // integral_0^t of k u^e du
  double prefix_integral(double t) const {
    return k_ * std::pow(t, e_ + 1.0) / (e_ + 1.0);
  }

  double integral() const { return prefix_integral(1.0); }

  // finite iff p*e + 1 > 0, i.e. c < p/(p-1)
  double p_moment(const PParams& params) const {
    const double q = params.p() * e_ + 1.0;
    if (!(q > 0.0)) {
      throw std::domain_error("PowerLawFunction: p-th moment diverges");
    }
    return std::pow(k_, params.p()) / q;
  }

 private:
  double k_;
  double e_;
};

// Theorem-2 construction: kc = f and H_p(c) = f^p/F pin (k, e).
inline PowerLawFunction build_g0(const PParams& params,
                                 const MomentPair& moments) {
  if (moments.trivial(params)) {
    return PowerLawFunction(moments.f(), 0.0);
  }
  const double c = omega_p(params, moments.ratio(params)).c;
  return PowerLawFunction(moments.f() / c, -1.0 + 1.0 / c);
}

// |(1/t) integral_0^t g0 - c g0(t)| evaluated in closed form; identically 0
// up to roundoff when c = 1/(e+1).
inline double eigen_identity_check(const PowerLawFunction& g0, double c,
                                   double t) {
  if (!(t > 0.0) || !(t <= 1.0)) {
    throw std::domain_error("eigen_identity_check: t outside (0,1]");
  }
  return std::abs(g0.prefix_integral(t) / t - c * g0.value_at(t));
}

// ---- geometric grids ----
//
// Breakpoints t_i = r^{n-i}, i.e. exp(-L (n-i)/(n-1)) with L = ln(1/t_1).
// For the singular g0 the choice of L trades the first-cell loss
// (c-1)^p f^p e^{-(pe+1)L} against the bulk cell-average error
// (|e| L / 2(n-1))^p / ((p+1)(pe+1)); the constructor below minimizes that
// model by golden-section. Both terms are exact leading-order asymptotics of
// the discretization defect.

inline std::vector<double> geometric_breakpoints(std::size_t cells, double L) {
  if (cells < 2) throw std::domain_error("geometric grid: need cells >= 2");
  std::vector<double> rights(cells);
  const double n = static_cast<double>(cells);
  for (std::size_t i = 1; i <= cells; ++i) {
    rights[i - 1] = std::exp(-L * (n - static_cast<double>(i)) / (n - 1.0));
  }
  rights.back() = 1.0;
  return rights;
}

namespace detail {

inline double discretization_defect_model(const PParams& params,
                                          const MomentPair& moments,
                                          const PowerLawFunction& g0,
                                          std::size_t cells, double L) {
  const double p = params.p();
  const double c = g0.eigenvalue();
  const double pe1 = p * g0.e() + 1.0;
  const double s = L / (static_cast<double>(cells) - 1.0);
  const double first =
      std::pow(c - 1.0, p) * std::pow(moments.f(), p) * std::exp(-pe1 * L);
  const double bulk =
      std::pow(std::abs(g0.e()) * s / 2.0, p) / ((p + 1.0) * pe1);
  return first + bulk;
}

}  // namespace detail

// Grid parameter L = ln(1/t_1) minimizing the defect model for this triple.
inline double grid_parameter(const PParams& params, const MomentPair& moments,
                             std::size_t cells) {
  const PowerLawFunction g0 = build_g0(params, moments);
  if (g0.e() == 0.0) return std::log(1e8);  // constant case: grid immaterial
  double a = std::log(1e8), b = 320.0;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = detail::discretization_defect_model(params, moments, g0, cells, x1);
  double f2 = detail::discretization_defect_model(params, moments, g0, cells, x2);
  while (b - a > 1e-6) {
    if (f1 < f2) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - gr * (b - a);
      f1 = detail::discretization_defect_model(params, moments, g0, cells, x1);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + gr * (b - a);
      f2 = detail::discretization_defect_model(params, moments, g0, cells, x2);
    }
  }
  return 0.5 * (a + b);
}

// Exact cell averages of g0 on the geometric grid (preserves the integral and
// monotonicity), then affine renormalization onto (f, F).
inline StepFunction discretize_g0(const PowerLawFunction& g0,
                                  std::size_t cells, const MomentPair& moments,
                                  const PParams& params) {
  if (cells < 2) throw std::domain_error("discretize_g0: need cells >= 2");
  const double L = grid_parameter(params, moments, cells);
  std::vector<double> rights = geometric_breakpoints(cells, L);
  std::vector<double> values(cells);
  double prev_t = 0.0, prev_P = 0.0;
  for (std::size_t i = 0; i < cells; ++i) {
    const double P = g0.prefix_integral(rights[i]);
    values[i] = (P - prev_P) / (rights[i] - prev_t);
    prev_t = rights[i];
    prev_P = P;
  }
  StepFunction raw(std::move(rights), std::move(values));
  return renormalize_moments(raw, moments, params);
}

// ---- near-extremal sequence factories (Theorems 1 and 3 realized) ----

enum class SequenceKind : std::uint8_t { truncation, mollification, perturbation };

struct ExtremalSequenceSpec {
  SequenceKind kind;
  unsigned n;         // family index, n >= 1
  double p;
  double f;
  double F;
  std::size_t cells = 1u << 16;  // reference grid for truncation/perturbation
};

namespace detail {

// cell averages of min(g0, cap) via its exact prefix integral
inline StepFunction discretize_truncated(const PowerLawFunction& g0,
                                         double cut,
                                         const std::vector<double>& rights) {
  const double cap = g0.value_at(cut);
  const double head = cap * cut;  // integral of the capped part on (0, cut]
  const auto prefix = [&](double t) {
    return t <= cut ? cap * t
                    : head + g0.prefix_integral(t) - g0.prefix_integral(cut);
  };
  std::vector<double> values(rights.size());
  double prev_t = 0.0, prev_P = 0.0;
  for (std::size_t i = 0; i < rights.size(); ++i) {
    const double P = prefix(rights[i]);
    values[i] = (P - prev_P) / (rights[i] - prev_t);
    prev_t = rights[i];
    prev_P = P;
  }
  return StepFunction(rights, std::move(values));
}

}  // namespace detail

// truncation:  min(g0, g0(1/n)) on the reference grid, renormalized
// mollification: cell-averaged g0 on an n-cell grid (its own grid parameter)
// perturbation: g0 + zero-mean monotonicity-preserving bump of size ~1/n
inline StepFunction make_sequence(const ExtremalSequenceSpec& spec) {
  if (spec.n == 0) throw std::domain_error("make_sequence: n must be >= 1");
  const PParams params(spec.p);
  const MomentPair moments(spec.f, spec.F, params);
  if (moments.trivial(params)) {
    return StepFunction({1.0}, {moments.f()});  // constant for every n
  }
  const PowerLawFunction g0 = build_g0(params, moments);
  switch (spec.kind) {
    case SequenceKind::truncation: {
      const double L = grid_parameter(params, moments, spec.cells);
      StepFunction raw = detail::discretize_truncated(
          g0, 1.0 / static_cast<double>(spec.n),
          geometric_breakpoints(spec.cells, L));
      return renormalize_moments(raw, moments, params);
    }
    case SequenceKind::mollification: {
      return discretize_g0(g0, std::max<std::size_t>(2, spec.n), moments,
                           params);
    }
    case SequenceKind::perturbation: {
      StepFunction base = discretize_g0(g0, spec.cells, moments, params);
      // +eps on (0, 1/2], -eps on (1/2, 1]: zero-mean, keeps the cone
      const double eps =
          std::min(1.0 / static_cast<double>(spec.n),
                   0.5 * base.value(base.size() - 1));
      std::vector<double> rights;
      std::vector<double> values;
      rights.reserve(base.size() + 1);
      values.reserve(base.size() + 1);
      for (std::size_t i = 0; i < base.size(); ++i) {
        const double l = base.left(i), r = base.right(i);
        if (l < 0.5 && r > 0.5) {
          rights.push_back(0.5);
          values.push_back(base.value(i) + eps);
        }
        rights.push_back(r);
        values.push_back(r <= 0.5 ? base.value(i) + eps : base.value(i) - eps);
      }
      StepFunction raw(std::move(rights), std::move(values));
      return renormalize_moments(raw, moments, params);
    }
  }
  throw std::logic_error("make_sequence: unknown kind");
}

inline SequenceKind sequence_kind_from(const std::string& name) {
  if (name == "truncation") return SequenceKind::truncation;
  if (name == "mollification") return SequenceKind::mollification;
  if (name == "perturbation") return SequenceKind::perturbation;
  throw std::domain_error("unknown sequence kind: " + name);
}

}  // namespace hardy

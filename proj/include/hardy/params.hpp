#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace hardy {

// Thrown when an affine moment projection has no nonnegative solution.
class infeasible_projection : public std::runtime_error {
 public:
  explicit infeasible_projection(const std::string& what)
      : std::runtime_error(what) {}
};

// Exponent of the extremal problem. p > 1 strictly; values within 1e-9 of 1
// are rejected as numerically degenerate (the bracket [1, p/(p-1)] explodes).
class PParams {
 public:
  explicit PParams(double p) : p_(p) {
    if (!(p > 1.0 + 1e-9) || !std::isfinite(p)) {
      throw std::domain_error("PParams: p must be finite and > 1 (got " +
                              std::to_string(p) + ")");
    }
  }

  double p() const { return p_; }

  // p/(p-1), the sharp L^p operator constant and right end of the bracket.
  double conjugate_bound() const { return p_ / (p_ - 1.0); }

 private:
  double p_;
};

// The constraint pair: first moment f and p-th moment F, 0 < f^p <= F.
class MomentPair {
 public:
  MomentPair(double f, double F, const PParams& params) : f_(f), F_(F) {
    if (!(f > 0.0) || !std::isfinite(f) || !(F > 0.0) || !std::isfinite(F)) {
      throw std::domain_error("MomentPair: need f > 0 and F > 0");
    }
    if (std::pow(f, params.p()) > F * (1.0 + 1e-14)) {
      throw std::domain_error("infeasible: f^p > F");
    }
  }

  double f() const { return f_; }
  double F() const { return F_; }

  double ratio(const PParams& params) const {
    double x = std::pow(f_, params.p()) / F_;
    return x > 1.0 ? 1.0 : x;  // guard roundoff at the trivial boundary
  }

  // The trivial case f^p = F forces g == f a.e.
  bool trivial(const PParams& params) const {
    return std::pow(f_, params.p()) >= F_ * (1.0 - 1e-14);
  }

 private:
  double f_;
  double F_;
};

// A solved inverse: c = omega_p(x) together with the x it inverts.
struct OmegaValue {
  double c;  // in [1, p/(p-1)]
  double x;  // = H_p(c)
};

}  // namespace hardy

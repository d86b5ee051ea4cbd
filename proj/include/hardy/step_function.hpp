#pragma once

// Non-increasing nonnegative step functions on (0,1]: the computational
// stand-in for every candidate g. Value v_i is taken on (t_{i-1}, t_i] with
// 0 = t_0 < t_1 < ... < t_n = 1.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hardy/params.hpp"

namespace hardy {

class StepFunction {
 public:
  // rights = t_1..t_n (strictly increasing, last exactly 1), values = v_1..v_n.
  StepFunction(std::vector<double> rights, std::vector<double> values)
      : rights_(std::move(rights)), values_(std::move(values)) {
    validate();
  }

  std::size_t size() const { return values_.size(); }
  double right(std::size_t i) const { return rights_[i]; }
  double left(std::size_t i) const { return i == 0 ? 0.0 : rights_[i - 1]; }
  double length(std::size_t i) const { return rights_[i] - left(i); }
  double value(std::size_t i) const { return values_[i]; }
  const std::vector<double>& rights() const { return rights_; }
  const std::vector<double>& values() const { return values_; }

  // Index of the cell containing t in (0,1].
  std::size_t cell_index(double t) const {
    if (!(t > 0.0) || !(t <= 1.0)) {
      throw std::domain_error("StepFunction: t outside (0,1]");
    }
    auto it = std::lower_bound(rights_.begin(), rights_.end(), t);
    return static_cast<std::size_t>(it - rights_.begin());
  }

  double value_at(double t) const { return values_[cell_index(t)]; }

 private:
  void validate() const {
    if (values_.empty() || rights_.size() != values_.size()) {
      throw std::invalid_argument("StepFunction: need n >= 1 matching arrays");
    }
    double prev = 0.0;
    for (double t : rights_) {
      if (!(t > prev) || !std::isfinite(t)) {
        throw std::invalid_argument("StepFunction: breakpoints must increase from 0");
      }
      prev = t;
    }
    if (rights_.back() != 1.0) {
      throw std::invalid_argument("StepFunction: last breakpoint must be 1");
    }
    double vprev = std::numeric_limits<double>::infinity();
    for (double v : values_) {
      if (!(v >= 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument("StepFunction: values must be nonnegative");
      }
      if (v > vprev) {
        throw std::invalid_argument("StepFunction: values must be non-increasing");
      }
      vprev = v;
    }
  }

  std::vector<double> rights_;
  std::vector<double> values_;
};

// Prefix masses C_i = sum_{j<=i} v_j (t_j - t_{j-1}); C is concave
// piecewise-linear and C_n = integral(g).
class CumulativeProfile {
 public:
  explicit CumulativeProfile(const StepFunction& g) : prefix_(g.size() + 1) {
    prefix_[0] = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      prefix_[i + 1] = prefix_[i] + g.value(i) * g.length(i);
    }
  }

  double at_breakpoint(std::size_t i) const { return prefix_[i]; }
  double total() const { return prefix_.back(); }

  // integral_0^t g, exact for t inside cell i of g.
  double at(const StepFunction& g, double t) const {
    const std::size_t i = g.cell_index(t);
    return prefix_[i] + g.value(i) * (t - g.left(i));
  }

 private:
  std::vector<double> prefix_;
};

inline double integral(const StepFunction& g) {
  double s = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) s += g.value(i) * g.length(i);
  return s;
}

inline double p_moment(const StepFunction& g, const PParams& params) {
  double s = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    s += std::pow(g.value(i), params.p()) * g.length(i);
  }
  return s;
}

// Hardy average Hg(t) = (1/t) integral_0^t g. On cell i this equals
// v_i + a_i/t with a_i = C_{i-1} - v_i t_{i-1} >= 0; the first cell has
// a_1 = 0, so there is no singularity at 0.
inline double hardy_at(const StepFunction& g, double t) {
  const std::size_t i = g.cell_index(t);
  const CumulativeProfile profile(g);
  return (profile.at_breakpoint(i) + g.value(i) * (t - g.left(i))) / t;
}

// Exact L^p-power distance over the merged breakpoint partition.
inline double lp_distance(const StepFunction& g, const StepFunction& h,
                          const PParams& params) {
  double s = 0.0;
  double prev = 0.0;
  std::size_t ig = 0, ih = 0;
  while (ig < g.size() && ih < h.size()) {
    const double edge = std::min(g.right(ig), h.right(ih));
    s += std::pow(std::abs(g.value(ig) - h.value(ih)), params.p()) * (edge - prev);
    if (g.right(ig) <= edge) ++ig;
    if (ih < h.size() && h.right(ih) <= edge) ++ih;
    prev = edge;
  }
  return s;
}

// Equimeasurable decreasing rearrangement of (value, length) cells covering
// (0,1]. Stable sort keeps already-sorted input bit-identical.
inline StepFunction decreasing_rearrangement(
    std::vector<std::pair<double, double>> cells) {
  if (cells.empty()) {
    throw std::domain_error("decreasing_rearrangement: no cells");
  }
  double total = 0.0;
  for (const auto& [v, len] : cells) {
    if (!(len > 0.0) || !(v >= 0.0)) {
      throw std::domain_error("decreasing_rearrangement: bad cell");
    }
    total += len;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::domain_error("decreasing_rearrangement: lengths must sum to 1");
  }
  std::stable_sort(cells.begin(), cells.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<double> rights(cells.size());
  std::vector<double> values(cells.size());
  double t = 0.0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    t += cells[i].second;
    rights[i] = t;
    values[i] = cells[i].first;
  }
  rights.back() = 1.0;
  return StepFunction(std::move(rights), std::move(values));
}

// ---- CSV serialization: header "t,v", rows are right endpoints t_1..t_n ----

inline void write_csv(const StepFunction& g, std::ostream& out) {
  out << "t,v\n";
  char buf[64];
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", g.right(i), g.value(i));
    out << buf;
  }
}

inline StepFunction read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || (line != "t,v" && line != "t,v\r")) {
    throw std::invalid_argument("StepFunction CSV: missing 't,v' header");
  }
  std::vector<double> rights, values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    double t, v;
    char comma;
    if (!(row >> t >> comma >> v) || comma != ',') {
      throw std::invalid_argument("StepFunction CSV: bad row '" + line + "'");
    }
    rights.push_back(t);
    values.push_back(v);
  }
  return StepFunction(std::move(rights), std::move(values));
}

}  // namespace hardy

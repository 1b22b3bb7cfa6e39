#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "singscat/tensor.hpp"

namespace singscat {

/// Off-diagonal matrix potential q(x) on (0, infinity). Families:
///   zero            q == 0
///   exp_decay       q_jk(x) = c_jk exp(-d x), d > 0
///   bump            smooth compactly supported: c_jk B((x-center)/width)
///                   with B(u) = exp(1 - 1/(1-u^2)) on |u| < 1
///   grid_samples    piecewise-linear through given samples, zero beyond
///
/// All norms below use the induced l1 matrix norm (max column abs sum).
class Potential {
 public:
  struct Zero {};
  struct ExpDecay {
    CMatrix coeff;
    double rate = 1.0;
  };
  struct Bump {
    CMatrix amplitude;
    double center = 1.0;
    double width = 0.5;
  };
  struct GridSamples {
    std::vector<double> x;
    std::vector<CMatrix> values;
    double l1_bound = 0.0;  // declared W^1_1 proxies, checked on load
    double tv_bound = 0.0;
  };

  Potential() : value_(Zero{}) {}
  explicit Potential(Zero z) : value_(z) {}
  explicit Potential(ExpDecay e);
  explicit Potential(Bump b);
  explicit Potential(GridSamples g);

  bool is_zero() const { return std::holds_alternative<Zero>(value_); }

  CMatrix eval(double x) const;

  /// integral_0^inf ||q(t)|| dt
  double l1_norm() const;
  /// integral_x^inf ||q(t)|| dt
  double l1_tail(double x) const;
  /// integral_0^inf ||q'(t)|| dt (total variation part of the W^1_1 proxy)
  double tv_norm() const;

  /// Smallest X with l1_tail(X) <= tol (capped at x_cap).
  double support_end(double tol, double x_cap) const;

  const std::variant<Zero, ExpDecay, Bump, GridSamples>& value() const {
    return value_;
  }

  /// Mass of the unit bump profile, integral over its support.
  static double bump_mass();

 private:
  void require_offdiagonal(const CMatrix& m, const char* what) const;
  std::variant<Zero, ExpDecay, Bump, GridSamples> value_;
};

}  // namespace singscat

#include "singscat/potential.hpp"

#include <algorithm>
#include <cmath>

#include "singscat/errors.hpp"
#include "singscat/exterior.hpp"

namespace singscat {

namespace {

double bump_profile(double u) {
  const double u2 = u * u;
  if (u2 >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - u2));
}

}  // namespace

double Potential::bump_mass() {
  // integral of the unit bump over [-1, 1]; fixed quadrature, computed once
  static const double mass = [] {
    const int steps = 20000;
    double s = 0.0;
    const double h = 2.0 / steps;
    for (int i = 0; i < steps; ++i) {
      const double a = -1.0 + i * h, b = a + h, m = 0.5 * (a + b);
      s += h / 6.0 * (bump_profile(a) + 4.0 * bump_profile(m) + bump_profile(b));
    }
    return s;
  }();
  return mass;
}

void Potential::require_offdiagonal(const CMatrix& m, const char* what) const {
  if (m.rows() != m.cols())
    throw Error(Errc::validation_error, std::string(what) + ": not square");
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    if (m(i, i) != 0.0)
      throw Error(Errc::validation_error,
                  std::string(what) + ": diagonal entries must vanish");
}

Potential::Potential(ExpDecay e) : value_(std::move(e)) {
  const auto& v = std::get<ExpDecay>(value_);
  require_offdiagonal(v.coeff, "exp_decay coeff");
  if (!(v.rate > 0.0))
    throw Error(Errc::validation_error,
                "exp_decay rate must be positive (q must be integrable)");
}

Potential::Potential(Bump b) : value_(std::move(b)) {
  const auto& v = std::get<Bump>(value_);
  require_offdiagonal(v.amplitude, "bump amplitude");
  if (!(v.width > 0.0))
    throw Error(Errc::validation_error, "bump width must be positive");
}

Potential::Potential(GridSamples g) : value_(std::move(g)) {
  const auto& v = std::get<GridSamples>(value_);
  if (v.x.size() != v.values.size() || v.x.empty())
    throw Error(Errc::validation_error, "grid_samples: x/value size mismatch");
  for (size_t i = 0; i < v.x.size(); ++i) {
    if (i > 0 && v.x[i] <= v.x[i - 1])
      throw Error(Errc::validation_error, "grid_samples: x not increasing");
    require_offdiagonal(v.values[i], "grid_samples value");
  }
  // discrete W^1_1 proxies against declared bounds
  double l1 = 0.0, tv = 0.0;
  for (size_t i = 0; i + 1 < v.x.size(); ++i) {
    const double h = v.x[i + 1] - v.x[i];
    l1 += 0.5 * h * (exterior::matrix_norm_l1(v.values[i]) +
                     exterior::matrix_norm_l1(v.values[i + 1]));
    tv += exterior::matrix_norm_l1(v.values[i + 1] - v.values[i]);
  }
  if (v.l1_bound > 0.0 && l1 > v.l1_bound)
    throw Error(Errc::validation_error,
                "grid_samples: measured L1 mass exceeds declared bound");
  if (v.tv_bound > 0.0 && tv > v.tv_bound)
    throw Error(Errc::validation_error,
                "grid_samples: measured variation exceeds declared bound");
}

CMatrix Potential::eval(double x) const {
  if (const auto* e = std::get_if<ExpDecay>(&value_))
    return e->coeff * std::exp(-e->rate * x);
  if (const auto* b = std::get_if<Bump>(&value_))
    return b->amplitude * bump_profile((x - b->center) / b->width);
  if (const auto* g = std::get_if<GridSamples>(&value_)) {
    if (x <= g->x.front() || x >= g->x.back()) {
      // linear onset from 0 below the first sample keeps q continuous
      if (x <= g->x.front() && g->x.front() > 0.0 && x > 0.0)
        return g->values.front() * (x / g->x.front());
      const int n = static_cast<int>(g->values.front().rows());
      return CMatrix::Zero(n, n);
    }
    auto it = std::upper_bound(g->x.begin(), g->x.end(), x);
    const size_t i = static_cast<size_t>(it - g->x.begin()) - 1;
    const double t = (x - g->x[i]) / (g->x[i + 1] - g->x[i]);
    return (1.0 - t) * g->values[i] + t * g->values[i + 1];
  }
  return CMatrix();  // Zero family has no stored dimension; callers size it
}

double Potential::l1_norm() const {
  if (std::holds_alternative<Zero>(value_)) return 0.0;
  if (const auto* e = std::get_if<ExpDecay>(&value_))
    return exterior::matrix_norm_l1(e->coeff) / e->rate;
  if (const auto* b = std::get_if<Bump>(&value_))
    return exterior::matrix_norm_l1(b->amplitude) * b->width * bump_mass();
  const auto& g = std::get<GridSamples>(value_);
  double l1 = 0.0;
  for (size_t i = 0; i + 1 < g.x.size(); ++i)
    l1 += 0.5 * (g.x[i + 1] - g.x[i]) *
          (exterior::matrix_norm_l1(g.values[i]) +
           exterior::matrix_norm_l1(g.values[i + 1]));
  return l1;
}

double Potential::l1_tail(double x) const {
  if (std::holds_alternative<Zero>(value_)) return 0.0;
  if (const auto* e = std::get_if<ExpDecay>(&value_))
    return exterior::matrix_norm_l1(e->coeff) * std::exp(-e->rate * x) / e->rate;
  if (const auto* b = std::get_if<Bump>(&value_)) {
    const double hi = b->center + b->width;
    if (x >= hi) return 0.0;
    if (x <= b->center - b->width) return l1_norm();
    // numeric tail of the bump
    const int steps = 400;
    double s = 0.0;
    const double h = (hi - x) / steps;
    for (int i = 0; i < steps; ++i) {
      const double a = x + i * h;
      s += 0.5 * h *
           (bump_profile((a - b->center) / b->width) +
            bump_profile((a + h - b->center) / b->width));
    }
    return s * exterior::matrix_norm_l1(b->amplitude);
  }
  const auto& g = std::get<GridSamples>(value_);
  if (x >= g.x.back()) return 0.0;
  double l1 = 0.0;
  for (size_t i = 0; i + 1 < g.x.size(); ++i) {
    if (g.x[i + 1] <= x) continue;
    const double lo = std::max(x, g.x[i]);
    const double h = g.x[i + 1] - lo;
    l1 += 0.5 * h * (exterior::matrix_norm_l1(eval(lo)) +
                     exterior::matrix_norm_l1(g.values[i + 1]));
  }
  return l1;
}

double Potential::tv_norm() const {
  if (std::holds_alternative<Zero>(value_)) return 0.0;
  if (const auto* e = std::get_if<ExpDecay>(&value_))
    return exterior::matrix_norm_l1(e->coeff);  // d * ||c||/d
  if (const auto* b = std::get_if<Bump>(&value_))
    return 2.0 * exterior::matrix_norm_l1(b->amplitude);  // rises to peak, falls
  const auto& g = std::get<GridSamples>(value_);
  double tv = exterior::matrix_norm_l1(g.values.front()) +
              exterior::matrix_norm_l1(g.values.back());
  for (size_t i = 0; i + 1 < g.x.size(); ++i)
    tv += exterior::matrix_norm_l1(g.values[i + 1] - g.values[i]);
  return tv;
}

double Potential::support_end(double tol, double x_cap) const {
  if (std::holds_alternative<Zero>(value_)) return 0.0;
  if (const auto* b = std::get_if<Bump>(&value_))
    return std::min(x_cap, b->center + b->width);
  if (const auto* g = std::get_if<GridSamples>(&value_))
    return std::min(x_cap, g->x.back());
  // exp_decay: solve tail(X) = tol
  const auto& e = std::get<ExpDecay>(value_);
  const double c = exterior::matrix_norm_l1(e.coeff) / e.rate;
  if (c <= tol) return 0.0;
  return std::min(x_cap, std::log(c / tol) / e.rate);
}

}  // namespace singscat

#pragma once

#include <cmath>
#include <complex>

namespace singscat {

/// Double-double scalar: value is hi + lo with |lo| <= ulp(hi)/2.
///
/// Power series of the regular-singular fundamental matrix are evaluated at
/// arguments where the partial sums cancel by factors up to ~1e20, so plain
/// doubles lose everything. The series loop only needs +, * and scaling,
/// which keeps this type tiny.
struct DD {
  double hi = 0.0;
  double lo = 0.0;

  static DD from(double x) { return {x, 0.0}; }
  double value() const { return hi + lo; }
};

namespace detail {
inline DD two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}
inline DD quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}
inline DD two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}
}  // namespace detail

inline DD dd_add(DD a, DD b) {
  DD s = detail::two_sum(a.hi, b.hi);
  double lo = s.lo + a.lo + b.lo;
  return detail::quick_two_sum(s.hi, lo);
}

inline DD dd_add(DD a, double b) {
  DD s = detail::two_sum(a.hi, b);
  double lo = s.lo + a.lo;
  return detail::quick_two_sum(s.hi, lo);
}

inline DD dd_mul(DD a, DD b) {
  DD p = detail::two_prod(a.hi, b.hi);
  double lo = p.lo + a.hi * b.lo + a.lo * b.hi;
  return detail::quick_two_sum(p.hi, lo);
}

inline DD dd_mul(DD a, double b) {
  DD p = detail::two_prod(a.hi, b);
  double lo = p.lo + a.lo * b;
  return detail::quick_two_sum(p.hi, lo);
}

inline DD dd_neg(DD a) { return {-a.hi, -a.lo}; }

inline DD dd_sub(DD a, DD b) { return dd_add(a, dd_neg(b)); }

/// Double-double complex. Enough arithmetic for Horner loops and small
/// Gaussian eliminations; anything fancier converts back to doubles.
struct CDD {
  DD re, im;

  static CDD from(std::complex<double> z) {
    return {DD::from(z.real()), DD::from(z.imag())};
  }
  std::complex<double> value() const { return {re.value(), im.value()}; }
};

inline CDD cdd_add(CDD a, CDD b) {
  return {dd_add(a.re, b.re), dd_add(a.im, b.im)};
}
inline CDD cdd_sub(CDD a, CDD b) {
  return {dd_sub(a.re, b.re), dd_sub(a.im, b.im)};
}
inline CDD cdd_mul(CDD a, CDD b) {
  DD re = dd_sub(dd_mul(a.re, b.re), dd_mul(a.im, b.im));
  DD im = dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re));
  return {re, im};
}
inline CDD cdd_mul(CDD a, std::complex<double> b) {
  return cdd_mul(a, CDD::from(b));
}
inline CDD cdd_add(CDD a, std::complex<double> b) {
  return {dd_add(a.re, b.real()), dd_add(a.im, b.imag())};
}

inline double cdd_abs(CDD a) { return std::abs(a.value()); }

/// a / b in double-double via one Newton refinement of the double quotient.
inline CDD cdd_div(CDD a, CDD b) {
  std::complex<double> q0 = a.value() / b.value();
  CDD r = cdd_sub(a, cdd_mul(b, q0));  // residual a - b*q0, exact-ish
  std::complex<double> dq = r.value() / b.value();
  return cdd_add(CDD::from(q0), CDD::from(dq));
}

}  // namespace singscat

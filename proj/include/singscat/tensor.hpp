#pragma once

#include <Eigen/Dense>
#include <complex>

#include "singscat/multiindex.hpp"

namespace singscat {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Element of /\^m C^n stored densely over the colexicographic wedge basis.
/// Order m = 0 is the scalar line (single coefficient); order 1 is C^n.
class Tensor {
 public:
  Tensor() = default;
  Tensor(int n, int m);

  static Tensor scalar(int n, Complex value);
  static Tensor from_vector(const CVector& v);
  /// Basis tensor e_alpha.
  static Tensor basis(int n, const MultiIndex& alpha);

  int n() const { return n_; }
  int order() const { return m_; }
  int size() const { return static_cast<int>(coeffs_.size()); }

  Complex& operator[](int rank) { return coeffs_[rank]; }
  Complex operator[](int rank) const { return coeffs_[rank]; }
  Complex coeff(const MultiIndex& alpha) const { return coeffs_[alpha.rank()]; }
  Complex& coeff(const MultiIndex& alpha) { return coeffs_[alpha.rank()]; }

  const CVector& coeffs() const { return coeffs_; }
  CVector& coeffs() { return coeffs_; }

  /// l1 norm over wedge coefficients: sum_alpha |h_alpha|.
  double norm() const;

  /// Order-1 tensors viewed as plain vectors.
  CVector to_vector() const;

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(Complex s);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Complex s, Tensor a) { return a *= s; }

 private:
  int n_ = 0;
  int m_ = 0;
  CVector coeffs_;
};

}  // namespace singscat

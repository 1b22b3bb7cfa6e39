#include "singscat/tensor.hpp"

namespace singscat {

Tensor::Tensor(int n, int m) : n_(n), m_(m) {
  if (m < 0 || m > n)
    throw Error(Errc::order_mismatch,
                "tensor order must satisfy 0 <= m <= n, got m=" +
                    std::to_string(m) + " n=" + std::to_string(n));
  coeffs_ = CVector::Zero(binomial(n, m));
}

Tensor Tensor::scalar(int n, Complex value) {
  Tensor t(n, 0);
  t.coeffs_[0] = value;
  return t;
}

Tensor Tensor::from_vector(const CVector& v) {
  Tensor t(static_cast<int>(v.size()), 1);
  t.coeffs_ = v;
  return t;
}

Tensor Tensor::basis(int n, const MultiIndex& alpha) {
  Tensor t(n, alpha.order());
  t.coeffs_[alpha.rank()] = 1.0;
  return t;
}

double Tensor::norm() const { return coeffs_.lpNorm<1>(); }

CVector Tensor::to_vector() const {
  if (m_ != 1)
    throw Error(Errc::order_mismatch, "to_vector requires an order-1 tensor");
  return coeffs_;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (n_ != o.n_ || m_ != o.m_)
    throw Error(Errc::order_mismatch, "tensor shape mismatch in +=");
  coeffs_ += o.coeffs_;
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  if (n_ != o.n_ || m_ != o.m_)
    throw Error(Errc::order_mismatch, "tensor shape mismatch in -=");
  coeffs_ -= o.coeffs_;
  return *this;
}

Tensor& Tensor::operator*=(Complex s) {
  coeffs_ *= s;
  return *this;
}

}  // namespace singscat

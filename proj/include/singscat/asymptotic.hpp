#pragma once

#include <vector>

#include "singscat/sectors.hpp"
#include "singscat/system.hpp"

namespace singscat {

/// Large-argument expansions of the columns e_k(xi) = exp(xi R_k) z_k(xi),
/// z_k(xi) = f_k + h_1 xi^{-1} + h_2 xi^{-2} + ... on the closed sector.
/// The series is asymptotic; evaluation truncates at the smallest term and
/// reports it as the error proxy.
class AsymptoticModel {
 public:
  AsymptoticModel(const SystemSpec& spec, const SectorData& sector,
                  int r_max = 80);

  const SectorData& sector() const { return *sector_; }

  /// z_k(xi); sets `err` to the smallest retained term when given.
  CVector e_hat(int k, Complex xi, double* err = nullptr) const;

  /// Residual of the truncated series in z' = (xi^{-1} A + B - R_k) z,
  /// measured with the analytic derivative of the truncation. An honest
  /// a-posteriori validity check.
  double ode_residual(int k, Complex xi) const;

  /// Smallest s at which every column's smallest term drops below tol.
  double validity_radius(double tol) const;

  /// First-order coefficient, for decay diagnostics ||z_k - f_k|| <= C/|x|.
  const CVector& h1(int k) const { return h_[static_cast<size_t>(k) - 1][0]; }

 private:
  const SystemSpec* spec_;
  const SectorData* sector_;
  // h_[k-1][r-1] is h_r for column k
  std::vector<std::vector<CVector>> h_;
  std::vector<std::vector<double>> hnorm_;
};

}  // namespace singscat

#pragma once

#include <map>
#include <memory>
#include <vector>

#include "singscat/compensated.hpp"
#include "singscat/system.hpp"

namespace singscat {

struct FrobeniusOptions {
  double target_residual = 1e-13;  // relative accuracy budget at the radius
  int max_terms = 800;
  double resonance_cond = 1e12;    // NearIntegerResonance beyond this
  double tail_tol = 1e-26;         // term cutoff relative to the peak term
};

/// Entire part of one regular-singular solution around x = 0:
/// the solution is xi^{mu} H(xi) with H entire, H(0) the anchor tensor.
/// For order 1 anchors (k) this is the column c_k; for higher orders it is
/// the wedge C_{beta_1} ^ ... ^ C_{beta_m}, whose series is the convolution
/// of the column series.
struct SeriesTable {
  MultiIndex anchor;
  Complex mu;                           // mu_beta = sum of anchor mu's
  int dim = 0;                          // C(n, m)
  std::vector<std::vector<CDD>> coeff;  // coeff[j] has `dim` entries
  std::vector<double> coeff_norm;       // l1 norms, for truncation control
};

/// Power-series data for the whole exterior algebra of the unperturbed
/// problem at rho = 1. Series are evaluated in compensated (double-double)
/// arithmetic: partial sums cancel by factors up to exp(2 max|b_beta| s),
/// which fixes the usable radius for each order.
class FrobeniusTable {
 public:
  FrobeniusTable(const SystemSpec& spec, FrobeniusOptions opts = {});

  const SystemSpec& spec() const { return *spec_; }
  const FrobeniusOptions& options() const { return opts_; }

  const SeriesTable& table(const MultiIndex& beta) const;

  /// Largest |xi| at which order-m series stay within the residual budget.
  double series_radius(int m) const { return radius_[static_cast<size_t>(m)]; }

  /// Entire part H_beta(xi) in compensated precision; `tail` reports the
  /// absolute truncation estimate. Throws SeriesNotConverged past the radius.
  std::vector<CDD> entire_part_cdd(const MultiIndex& beta, Complex xi,
                                   double* tail = nullptr) const;
  Tensor entire_part(const MultiIndex& beta, Complex xi) const;

  /// xi^{mu_beta} on the branch arg xi = theta (lifted), |xi| = s.
  Complex power(const MultiIndex& beta, double s, double theta) const;

  /// Raw solution value C_beta(xi) = xi^{mu_beta} H_beta(xi), double output.
  Tensor c_wedge(const MultiIndex& beta, double s, double theta) const;

  /// mu_beta
  Complex mu_of(const MultiIndex& beta) const;

 private:
  void build_columns();
  void build_convolutions();

  const SystemSpec* spec_;
  FrobeniusOptions opts_;
  std::map<std::vector<int>, SeriesTable> tables_;
  std::vector<double> radius_;  // per order, index 0 unused
};

/// FrobeniusSolution view per column, exposed for inspection and tests.
struct FrobeniusSolution {
  int k = 0;
  Complex mu;
  std::vector<CVector> coeffs;       // a_0 .. a_J as double vectors
  int truncation_order = 0;
  double radius_at_target = 0.0;     // usable |xi| within the residual budget
};

FrobeniusSolution frobenius_solution(const FrobeniusTable& table, int k);

}  // namespace singscat

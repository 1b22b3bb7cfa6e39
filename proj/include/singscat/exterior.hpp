#pragma once

#include <optional>
#include <vector>

#include "singscat/tensor.hpp"

namespace singscat::exterior {

/// a ^ b. Bilinear, antisymmetric; requires a.n == b.n and orders p + r <= n.
Tensor wedge(const Tensor& a, const Tensor& b);

/// Wedge of a list of vectors u_1 ^ u_2 ^ ... (empty list gives the scalar 1).
Tensor wedge_columns(int n, const std::vector<CVector>& cols);

/// Compound operator M^(m) applied to u: the derivation extension of M,
/// M^(m)(u_1^...^u_m) = sum_j u_1^...^(M u_j)^...^u_m.
Tensor compound_apply(const CMatrix& M, const Tensor& u);

/// Induced l1 operator norm of a matrix (max column abs sum); the norm in
/// which ||M^(m)|| <= m ||M|| holds.
double matrix_norm_l1(const CMatrix& M);

/// Coefficient |h| in h = |h| e_1 ^ ... ^ e_n; requires order n.
Complex top_coefficient(const Tensor& h);

struct ComplementSign {
  MultiIndex complement;
  int sign;  // +1 or -1
};

/// Ordered complement alpha' and the sign |u_alpha ^ u_alpha'| / |u_1^...^u_n|
/// for a basis u that is a (possibly signed) permutation of the standard one.
/// `perm` gives u_k = e_{perm[k]} (0-based); identity when omitted.
ComplementSign complement_sign(const MultiIndex& alpha, int n,
                               const std::vector<int>* perm = nullptr);

enum class InnerProduct {
  hermitian,  // conjugate-linear in the second slot; default
  bilinear,   // plain sum u_i v_i, exposed for cross-checks only
};

/// Which side the unknown vector multiplies on. The two solutions differ by
/// (-1)^(order of T).
enum class WedgeSide {
  left,   // w ^ T = S
  right,  // T ^ w = S
};

struct WedgeDivideOptions {
  InnerProduct inner = InnerProduct::hermitian;
  WedgeSide side = WedgeSide::left;
  double solvability_tol = 1e-8;   // relative residual on w ^ T = S
  double cond_threshold = 1e12;    // DegenerateSystem beyond this
  /// Vectors u with u ^ S = 0 required; checked when provided.
  const std::vector<CVector>* span_check = nullptr;
};

/// Solve w ^ T = S (or T ^ w = S) for a vector w with (w, u) = 0 for every
/// u in `ortho`. S has order m, T order m-1. Throws SolvabilityViolated when
/// the residual exceeds tolerance and DegenerateSystem when the induced
/// linear system is numerically singular.
CVector wedge_divide(const Tensor& S, const Tensor& T,
                     const std::vector<CVector>& ortho,
                     const WedgeDivideOptions& opts = {});

}  // namespace singscat::exterior

#include "singscat/exterior.hpp"

#include <algorithm>

namespace singscat::exterior {

Tensor wedge(const Tensor& a, const Tensor& b) {
  if (a.n() != b.n())
    throw Error(Errc::dimension_mismatch, "wedge: dimension mismatch");
  const int n = a.n(), p = a.order(), r = b.order();
  if (p + r > n)
    throw Error(Errc::order_mismatch,
                "wedge: order overflow, p+r = " + std::to_string(p + r) +
                    " > n = " + std::to_string(n));
  Tensor out(n, p + r);
  if (p == 0) {
    out.coeffs() = a[0] * b.coeffs();
    return out;
  }
  if (r == 0) {
    out.coeffs() = b[0] * a.coeffs();
    return out;
  }
  const auto as = MultiIndex::all(n, p);
  const auto bs = MultiIndex::all(n, r);
  std::vector<int> merged(static_cast<size_t>(p + r));
  for (const auto& alpha : as) {
    const Complex ca = a.coeff(alpha);
    if (ca == 0.0) continue;
    for (const auto& beta : bs) {
      const Complex cb = b.coeff(beta);
      if (cb == 0.0) continue;
      // disjointness plus merge
      bool disjoint = true;
      for (int v : beta.entries())
        if (alpha.contains(v)) { disjoint = false; break; }
      if (!disjoint) continue;
      std::merge(alpha.entries().begin(), alpha.entries().end(),
                 beta.entries().begin(), beta.entries().end(), merged.begin());
      const int sign = (interleave_inversions(alpha, beta) & 1) ? -1 : 1;
      out.coeff(MultiIndex(merged)) += double(sign) * ca * cb;
    }
  }
  return out;
}

Tensor wedge_columns(int n, const std::vector<CVector>& cols) {
  Tensor acc = Tensor::scalar(n, 1.0);
  for (const auto& c : cols) acc = wedge(acc, Tensor::from_vector(c));
  return acc;
}

Tensor compound_apply(const CMatrix& M, const Tensor& u) {
  const int n = u.n(), m = u.order();
  if (M.rows() != n || M.cols() != n)
    throw Error(Errc::dimension_mismatch, "compound_apply: matrix is not n x n");
  Tensor out(n, m);
  if (m == 0) return out;  // M^(0) = 0
  const auto basis = MultiIndex::all(n, m);
  std::vector<int> work;
  for (const auto& alpha : basis) {
    const Complex ua = u.coeff(alpha);
    if (ua == 0.0) continue;
    for (int t = 0; t < m; ++t) {
      const int from = alpha[t];
      for (int i = 1; i <= n; ++i) {
        const Complex mij = M(i - 1, from - 1);
        if (mij == 0.0) continue;
        if (i != from && alpha.contains(i)) continue;  // repeated factor
        // replace entry `from` by i, re-sort, track the sign
        work.assign(alpha.entries().begin(), alpha.entries().end());
        work[static_cast<size_t>(t)] = i;
        int swaps = 0;
        for (size_t j = static_cast<size_t>(t); j + 1 < work.size() &&
                                                work[j] > work[j + 1]; ++j) {
          std::swap(work[j], work[j + 1]);
          ++swaps;
        }
        for (size_t j = static_cast<size_t>(t); j > 0 && work[j - 1] > work[j];
             --j) {
          std::swap(work[j - 1], work[j]);
          ++swaps;
        }
        const double sign = (swaps & 1) ? -1.0 : 1.0;
        out.coeff(MultiIndex(work)) += sign * mij * ua;
      }
    }
  }
  return out;
}

double matrix_norm_l1(const CMatrix& M) {
  double best = 0.0;
  for (Eigen::Index c = 0; c < M.cols(); ++c)
    best = std::max(best, M.col(c).lpNorm<1>());
  return best;
}

Complex top_coefficient(const Tensor& h) {
  if (h.order() != h.n())
    throw Error(Errc::order_mismatch,
                "top_coefficient requires order n, got m=" +
                    std::to_string(h.order()));
  return h[0];
}

ComplementSign complement_sign(const MultiIndex& alpha, int n,
                               const std::vector<int>* perm) {
  ComplementSign out;
  out.complement = alpha.complement(n);
  int sign = (merge_parity(alpha) & 1) ? -1 : 1;
  if (perm) {
    if (static_cast<int>(perm->size()) != n)
      throw Error(Errc::dimension_mismatch, "complement_sign: bad permutation");
    sign *= permutation_sign(*perm);
  }
  out.sign = sign;
  return out;
}

CVector wedge_divide(const Tensor& S, const Tensor& T,
                     const std::vector<CVector>& ortho,
                     const WedgeDivideOptions& opts) {
  const int n = S.n(), m = S.order();
  if (T.n() != n || T.order() != m - 1)
    throw Error(Errc::order_mismatch, "wedge_divide: T must have order m-1");
  if (opts.span_check) {
    for (const auto& u : *opts.span_check) {
      const double r = wedge(Tensor::from_vector(u), S).norm();
      if (r > opts.solvability_tol * std::max(S.norm(), 1e-300) *
                  std::max(u.norm(), 1e-300))
        throw Error(Errc::solvability_violated,
                    "u ^ S residual above tolerance in wedge_divide precheck");
    }
  }

  // rows: coefficients of w ^ T = S over the order-m wedge basis,
  // then one row per orthogonality constraint
  const auto gammas = MultiIndex::all(n, m);
  const Eigen::Index rows =
      static_cast<Eigen::Index>(gammas.size() + ortho.size());
  CMatrix A = CMatrix::Zero(rows, n);
  CVector rhs = CVector::Zero(rows);
  // T ^ w flips the interleaving sign by (-1)^(m-1) relative to w ^ T
  const double side_sign =
      (opts.side == WedgeSide::right && ((m - 1) & 1)) ? -1.0 : 1.0;
  for (size_t g = 0; g < gammas.size(); ++g) {
    const auto& gamma = gammas[g];
    // (w ^ T)_gamma = sum_{i in gamma} sign(i, gamma\i) w_i T_{gamma\i}
    for (int pos = 0; pos < m; ++pos) {
      const int i = gamma[pos];
      std::vector<int> rest;
      rest.reserve(static_cast<size_t>(m) - 1);
      for (int j = 0; j < m; ++j)
        if (j != pos) rest.push_back(gamma[j]);
      const double sign = (pos & 1) ? -1.0 : 1.0;  // move w_i to the front
      A(static_cast<Eigen::Index>(g), i - 1) +=
          side_sign * sign * T.coeff(MultiIndex(rest));
    }
    rhs[static_cast<Eigen::Index>(g)] = S.coeff(gamma);
  }
  for (size_t r = 0; r < ortho.size(); ++r) {
    const auto& u = ortho[r];
    for (int i = 0; i < n; ++i)
      A(static_cast<Eigen::Index>(gammas.size() + r), i) =
          opts.inner == InnerProduct::hermitian ? std::conj(u[i]) : u[i];
  }

  if (rows < n)
    throw Error(Errc::degenerate_system,
                "wedge_divide: underdetermined system (more unknowns than rows)");
  Eigen::ColPivHouseholderQR<CMatrix> qr(A);
  const auto& R = qr.matrixR();
  const double rmax = std::abs(R(0, 0));
  const double rmin = std::abs(R(n - 1, n - 1));
  if (!(rmax > 0.0) || rmax / std::max(rmin, 1e-300) > opts.cond_threshold)
    throw Error(Errc::degenerate_system,
                "wedge_divide: induced system numerically singular");
  const CVector w = qr.solve(rhs);

  const Tensor rewedge = opts.side == WedgeSide::left
                             ? wedge(Tensor::from_vector(w), T)
                             : wedge(T, Tensor::from_vector(w));
  const double resid = (rewedge - S).norm();
  if (resid > opts.solvability_tol * std::max(S.norm(), 1e-300))
    throw Error(Errc::solvability_violated,
                "wedge_divide: residual " + std::to_string(resid) +
                    " above tolerance");
  return w;
}

}  // namespace singscat::exterior

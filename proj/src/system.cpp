#include "singscat/system.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "singscat/errors.hpp"

namespace singscat {

namespace {

double dist_to_integers(Complex z) {
  const double re = z.real();
  const double frac = re - std::round(re);
  return std::hypot(frac, z.imag());
}

}  // namespace

ValidationReport validate_assumption1(SystemSpec& spec,
                                      const ValidationThresholds& thr) {
  ValidationReport rep;
  const int n = spec.n;
  auto add = [&rep](std::string name, bool pass, double margin,
                    std::string detail = {}) {
    rep.clauses.push_back({std::move(name), pass, margin, std::move(detail)});
  };

  add("n > 2", n > 2, double(n - 2),
      n > 2 ? "" : "need at least a 3 x 3 system");

  bool a_off = spec.A.rows() == n && spec.A.cols() == n;
  double a_diag = 0.0;
  if (a_off)
    for (int i = 0; i < n; ++i) a_diag = std::max(a_diag, std::abs(spec.A(i, i)));
  add("A off-diagonal", a_off && a_diag <= thr.diag_tol, -a_diag,
      a_off ? "" : "A has wrong shape");

  // q off-diagonal on a few samples; analytic families enforce it on input
  double q_diag = 0.0;
  if (!spec.q.is_zero())
    for (double x : {0.01, 0.37, 1.0, 3.3, 11.0}) {
      CMatrix qx = spec.q.eval(x);
      if (qx.size() == 0) continue;
      for (int i = 0; i < n; ++i) q_diag = std::max(q_diag, std::abs(qx(i, i)));
    }
  add("q off-diagonal", q_diag <= thr.diag_tol, -q_diag);

  const bool q_w11 = std::isfinite(spec.q.l1_norm()) &&
                     std::isfinite(spec.q.tv_norm());
  add("q in W^1_1", q_w11, 0.0,
      "L1 = " + std::to_string(spec.q.l1_norm()) +
          ", TV = " + std::to_string(spec.q.tv_norm()));

  // B diagonal entries: sum zero, nonzero, distinct
  const double bsum = std::abs(spec.b.sum());
  add("sum of B diagonal = 0", bsum <= thr.b_sum_tol, thr.b_sum_tol - bsum,
      "Σ b_j = " + std::to_string(bsum));
  double bmin = std::numeric_limits<double>::infinity();
  for (int j = 0; j < n; ++j) bmin = std::min(bmin, std::abs(spec.b[j]));
  add("b_j nonzero", bmin > thr.b_gap_min, bmin - thr.b_gap_min);
  double bgap = std::numeric_limits<double>::infinity();
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      bgap = std::min(bgap, std::abs(spec.b[j] - spec.b[k]));
  add("b_j distinct", bgap > thr.b_gap_min, bgap - thr.b_gap_min);

  // eigendata of A
  Eigen::ComplexEigenSolver<CMatrix> es(spec.A);
  if (es.info() != Eigen::Success)
    throw Error(Errc::assumption_violated, "eigendecomposition of A failed");
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  CVector ev = es.eigenvalues();
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (ev[a].real() != ev[b].real()) return ev[a].real() < ev[b].real();
    return ev[a].imag() < ev[b].imag();
  });
  spec.mu = CVector(n);
  spec.H = CMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    spec.mu[j] = ev[order[static_cast<size_t>(j)]];
    spec.H.col(j) = es.eigenvectors().col(order[static_cast<size_t>(j)]);
  }
  // scale all eigenvectors by the same factor so det H = 1 (deterministic)
  const Complex detH = spec.H.determinant();
  if (std::abs(detH) < 1e-14)
    add("eigenvectors independent", false, std::abs(detH),
        "eigenvector matrix numerically singular");
  else {
    spec.H *= std::exp(-std::log(detH) / double(n));
    add("eigenvectors independent", true, std::abs(detH), "det normalized to 1");
  }

  double mu_re_gap = std::numeric_limits<double>::infinity();
  for (int j = 0; j + 1 < n; ++j)
    mu_re_gap = std::min(mu_re_gap, spec.mu[j + 1].real() - spec.mu[j].real());
  add("Re mu strictly increasing", mu_re_gap > thr.mu_re_gap,
      mu_re_gap - thr.mu_re_gap);

  double int_gap = std::numeric_limits<double>::infinity();
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      if (j != k) int_gap = std::min(int_gap, dist_to_integers(spec.mu[j] - spec.mu[k]));
  add("mu_j - mu_k not integer", int_gap > thr.mu_integer_gap,
      int_gap - thr.mu_integer_gap,
      "min distance to Z = " + std::to_string(int_gap));

  spec.report = rep;
  return rep;
}

SystemSpec SystemSpec::make(CMatrix A, CVector b, Potential q,
                            const ValidationThresholds& thr) {
  SystemSpec s;
  s.n = static_cast<int>(b.size());
  s.A = std::move(A);
  s.b = std::move(b);
  s.q = std::move(q);
  auto rep = validate_assumption1(s, thr);
  if (!rep.all_pass()) {
    const auto* f = rep.failing();
    throw Error(Errc::assumption_violated,
                "clause '" + f->name + "' failed (margin " +
                    std::to_string(f->margin) + ") " + f->detail);
  }
  return s;
}

}  // namespace singscat

#include "singscat/frobenius.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/LU>

#include "singscat/errors.hpp"
#include "singscat/exterior.hpp"

namespace singscat {

namespace {

/// Solve M x = rhs with rhs in compensated precision: double LU plus one
/// residual-refinement step keeps the full double-double accuracy of rhs.
std::vector<CDD> refined_solve(const Eigen::PartialPivLU<CMatrix>& lu,
                               const CMatrix& M, const std::vector<CDD>& rhs) {
  const int n = static_cast<int>(rhs.size());
  CVector r0(n);
  for (int i = 0; i < n; ++i) r0[i] = rhs[static_cast<size_t>(i)].value();
  CVector x0 = lu.solve(r0);
  // residual rhs - M x0 in compensated arithmetic
  std::vector<CDD> res(rhs);
  for (int i = 0; i < n; ++i) {
    CDD acc = res[static_cast<size_t>(i)];
    for (int j = 0; j < n; ++j)
      acc = cdd_sub(acc, cdd_mul(CDD::from(M(i, j)), CDD::from(x0[j])));
    res[static_cast<size_t>(i)] = acc;
  }
  CVector r1(n);
  for (int i = 0; i < n; ++i) r1[i] = res[static_cast<size_t>(i)].value();
  CVector dx = lu.solve(r1);
  std::vector<CDD> out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    out[static_cast<size_t>(i)] =
        cdd_add(CDD::from(x0[i]), CDD::from(dx[i]));
  return out;
}

double l1_norm(const std::vector<CDD>& v) {
  double s = 0.0;
  for (const auto& c : v) s += cdd_abs(c);
  return s;
}

}  // namespace

FrobeniusTable::FrobeniusTable(const SystemSpec& spec, FrobeniusOptions opts)
    : spec_(&spec), opts_(opts) {
  if (spec.mu.size() != spec.n)
    throw Error(Errc::validation_error,
                "FrobeniusTable requires validated eigendata");
  build_columns();
  build_convolutions();

  // per-order cancellation budget: partial sums peak at exp(max|b_beta| s)
  // while the value can be as small as exp(-max|b_beta| s)
  radius_.assign(static_cast<size_t>(spec.n) + 1, 0.0);
  const double dd_eps = 4.9e-32;
  for (int m = 1; m <= spec.n; ++m) {
    double bmax = 0.0;
    for (const auto& beta : MultiIndex::all(spec.n, m)) {
      Complex bsum = 0.0;
      for (int v : beta.entries()) bsum += spec.b[v - 1];
      bmax = std::max(bmax, std::abs(bsum));
    }
    const double kappa = 2.0 * bmax;
    radius_[static_cast<size_t>(m)] =
        kappa > 0 ? std::log(opts_.target_residual / dd_eps) / kappa : 1e9;
  }
}

void FrobeniusTable::build_columns() {
  const auto& spec = *spec_;
  const int n = spec.n;
  const CMatrix B = spec.b.asDiagonal();
  for (int k = 1; k <= n; ++k) {
    SeriesTable st;
    st.anchor = MultiIndex({k});
    st.mu = spec.mu[k - 1];
    st.dim = n;
    std::vector<CDD> a(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) a[static_cast<size_t>(i)] = CDD::from(spec.H(i, k - 1));
    st.coeff.push_back(a);
    st.coeff_norm.push_back(l1_norm(a));
    const double peak_guard = st.coeff_norm[0];

    for (int j = 1; j <= opts_.max_terms; ++j) {
      // a_j = -(A - (mu + j) I)^{-1} B a_{j-1}
      CMatrix M = spec.A - (st.mu + double(j)) * CMatrix::Identity(n, n);
      Eigen::PartialPivLU<CMatrix> lu(M);
      const double cond_proxy =
          exterior::matrix_norm_l1(M) * exterior::matrix_norm_l1(lu.inverse());
      if (cond_proxy > opts_.resonance_cond)
        throw Error(Errc::near_integer_resonance,
                    "A - (mu_k + j) I nearly singular at k=" +
                        std::to_string(k) + " j=" + std::to_string(j));
      std::vector<CDD> rhs(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) {
        CDD acc{};
        for (int c = 0; c < n; ++c)
          acc = cdd_add(acc, cdd_mul(a[static_cast<size_t>(c)], -B(i, c)));
        rhs[static_cast<size_t>(i)] = acc;
      }
      a = refined_solve(lu, M, rhs);
      st.coeff.push_back(a);
      st.coeff_norm.push_back(l1_norm(a));
      // stop once the term can never matter inside the usable radius;
      // log space, the peak term alone reaches ~exp(|b| s)
      double bmax = 0.0;
      for (int i = 0; i < n; ++i) bmax = std::max(bmax, std::abs(spec.b[i]));
      const double srad =
          std::log(opts_.target_residual / 4.9e-32) / (2.0 * bmax);
      const double log_term =
          std::log(std::max(st.coeff_norm.back(), 1e-300)) +
          j * std::log(srad);
      if (j > 8 &&
          log_term < std::log(opts_.tail_tol) + std::max(0.0, std::log(peak_guard)))
        break;
      if (j == opts_.max_terms)
        throw Error(Errc::series_not_converged,
                    "column series for k=" + std::to_string(k) +
                        " did not decay within max_terms");
    }
    tables_[st.anchor.entries()] = std::move(st);
  }
}

void FrobeniusTable::build_convolutions() {
  const int n = spec_->n;
  for (int m = 2; m <= n; ++m) {
    for (const auto& beta : MultiIndex::all(n, m)) {
      // wedge the order-(m-1) prefix series with the last column series
      std::vector<int> head(beta.entries().begin(),
                            beta.entries().end() - 1);
      const auto& A = tables_.at(head);
      const auto& Bt = tables_.at({beta.entries().back()});
      SeriesTable st;
      st.anchor = beta;
      st.mu = A.mu + Bt.mu;
      st.dim = static_cast<int>(binomial(n, m));
      const size_t JA = A.coeff.size(), JB = Bt.coeff.size();
      const size_t J = JA + JB - 1;
      st.coeff.assign(J, std::vector<CDD>(static_cast<size_t>(st.dim)));

      // index bookkeeping for the wedge of a (m-1)-tensor with a vector
      const auto gammas = MultiIndex::all(n, m);
      const auto alphas = MultiIndex::all(n, m - 1);
      struct Term { int g, a, v, sign; };
      std::vector<Term> terms;
      for (const auto& gamma : gammas) {
        for (int pos = 0; pos < m; ++pos) {
          const int v = gamma[pos];
          std::vector<int> rest;
          for (int t = 0; t < m; ++t)
            if (t != pos) rest.push_back(gamma[t]);
          // vector factor moves to the last slot: sign (-1)^(m-1-pos)
          const int sign = ((m - 1 - pos) & 1) ? -1 : 1;
          terms.push_back({gamma.rank(), MultiIndex(rest).rank(), v - 1, sign});
        }
      }
      for (size_t ja = 0; ja < JA; ++ja)
        for (size_t jb = 0; jb < JB; ++jb) {
          auto& out = st.coeff[ja + jb];
          for (const auto& t : terms) {
            CDD prod = cdd_mul(A.coeff[ja][static_cast<size_t>(t.a)],
                               Bt.coeff[jb][static_cast<size_t>(t.v)]);
            if (t.sign < 0) prod = {dd_neg(prod.re), dd_neg(prod.im)};
            out[static_cast<size_t>(t.g)] =
                cdd_add(out[static_cast<size_t>(t.g)], prod);
          }
        }
      st.coeff_norm.resize(J);
      for (size_t j = 0; j < J; ++j) st.coeff_norm[j] = l1_norm(st.coeff[j]);
      while (st.coeff.size() > 1 && st.coeff_norm.back() == 0.0) {
        st.coeff.pop_back();
        st.coeff_norm.pop_back();
      }
      tables_[beta.entries()] = std::move(st);
    }
  }
}

const SeriesTable& FrobeniusTable::table(const MultiIndex& beta) const {
  auto it = tables_.find(beta.entries());
  if (it == tables_.end())
    throw Error(Errc::validation_error, "no series table for given anchor");
  return it->second;
}

std::vector<CDD> FrobeniusTable::entire_part_cdd(const MultiIndex& beta,
                                                 Complex xi,
                                                 double* tail) const {
  const auto& st = table(beta);
  const double s = std::abs(xi);
  if (s > radius_[static_cast<size_t>(beta.order())] * (1.0 + 1e-9))
    throw Error(Errc::series_not_converged,
                "series evaluation outside the cancellation budget: |xi| = " +
                    std::to_string(s));
  // truncation: last term that can matter, tracked in log space
  const double logs = s > 0 ? std::log(s) : -700.0;
  double log_peak = -1e30;
  std::vector<double> log_term(st.coeff.size());
  for (size_t j = 0; j < st.coeff.size(); ++j) {
    log_term[j] =
        std::log(std::max(st.coeff_norm[j], 1e-300)) + double(j) * logs;
    log_peak = std::max(log_peak, log_term[j]);
  }
  size_t J = st.coeff.size() - 1;
  const double log_cut = std::log(opts_.tail_tol) + std::max(log_peak, 0.0);
  while (J > 0 && log_term[J] < log_cut) --J;
  if (tail)
    *tail = std::exp(std::min(700.0, (J + 1 < log_term.size()
                                          ? log_term[J + 1]
                                          : log_term[J] + logs)));

  std::vector<CDD> acc = st.coeff[J];
  for (size_t j = J; j-- > 0;) {
    for (auto& c : acc) c = cdd_mul(c, xi);
    for (size_t i = 0; i < acc.size(); ++i)
      acc[i] = cdd_add(acc[i], st.coeff[j][i]);
  }
  return acc;
}

Tensor FrobeniusTable::entire_part(const MultiIndex& beta, Complex xi) const {
  auto cdd = entire_part_cdd(beta, xi);
  Tensor out(spec_->n, beta.order());
  for (size_t i = 0; i < cdd.size(); ++i)
    out[static_cast<int>(i)] = cdd[i].value();
  return out;
}

Complex FrobeniusTable::mu_of(const MultiIndex& beta) const {
  Complex m = 0.0;
  for (int v : beta.entries()) m += spec_->mu[v - 1];
  return m;
}

Complex FrobeniusTable::power(const MultiIndex& beta, double s,
                              double theta) const {
  return std::exp(mu_of(beta) * Complex(std::log(s), theta));
}

Tensor FrobeniusTable::c_wedge(const MultiIndex& beta, double s,
                               double theta) const {
  const Complex xi = std::polar(s, theta);
  Tensor h = entire_part(beta, xi);
  h *= power(beta, s, theta);
  return h;
}

FrobeniusSolution frobenius_solution(const FrobeniusTable& table, int k) {
  const auto& st = table.table(MultiIndex({k}));
  FrobeniusSolution out;
  out.k = k;
  out.mu = st.mu;
  out.truncation_order = static_cast<int>(st.coeff.size()) - 1;
  out.radius_at_target = table.series_radius(1);
  for (const auto& c : st.coeff) {
    CVector v(static_cast<Eigen::Index>(c.size()));
    for (size_t i = 0; i < c.size(); ++i)
      v[static_cast<Eigen::Index>(i)] = c[i].value();
    out.coeffs.push_back(std::move(v));
  }
  return out;
}

}  // namespace singscat

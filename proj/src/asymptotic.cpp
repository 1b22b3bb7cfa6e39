#include "singscat/asymptotic.hpp"

#include <algorithm>
#include <cmath>

#include "singscat/errors.hpp"

namespace singscat {

AsymptoticModel::AsymptoticModel(const SystemSpec& spec,
                                 const SectorData& sector, int r_max)
    : spec_(&spec), sector_(&sector) {
  const int n = spec.n;
  h_.resize(static_cast<size_t>(n));
  hnorm_.resize(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) {
    const int p = sector.perm[static_cast<size_t>(k) - 1];  // f_k = e_p
    const Complex Rk = sector.R[k - 1];
    CVector f = CVector::Zero(n);
    f[p] = 1.0;
    std::vector<CVector> h;
    // (B - R_k) h_1 = -A f_k; row p is 0 = 0 since A is off-diagonal
    CVector prev = f;
    CVector cur = CVector::Zero(n);
    CVector Af = spec_->A * f;
    for (int i = 0; i < n; ++i)
      if (i != p) cur[i] = -Af[i] / (spec_->b[i] - Rk);
    // the free p-component of h_r closes at the next order:
    // r h_{r,p} = -(A h_r)_p, then (B - R_k) h_{r+1} = -(r I + A) h_r off p
    for (int r = 1; r <= r_max; ++r) {
      CVector Ah = spec_->A * cur;
      cur[p] = -Ah[p] / double(r);
      h.push_back(cur);
      Ah = spec_->A * cur;
      CVector next = CVector::Zero(n);
      for (int i = 0; i < n; ++i)
        if (i != p) next[i] = -(double(r) * cur[i] + Ah[i]) / (spec_->b[i] - Rk);
      prev = cur;
      cur = next;
    }
    std::vector<double> norms;
    norms.reserve(h.size());
    for (const auto& v : h) norms.push_back(v.lpNorm<1>());
    h_[static_cast<size_t>(k) - 1] = std::move(h);
    hnorm_[static_cast<size_t>(k) - 1] = std::move(norms);
  }
}

CVector AsymptoticModel::e_hat(int k, Complex xi, double* err) const {
  const int n = spec_->n;
  const int p = sector_->perm[static_cast<size_t>(k) - 1];
  const auto& h = h_[static_cast<size_t>(k) - 1];
  const auto& hn = hnorm_[static_cast<size_t>(k) - 1];
  const double s = std::abs(xi);

  // optimal truncation: stop before the first growing term
  const double logs = std::log(s);
  size_t R = 0;
  double best = 0.0;  // log of term r = log ||h_r|| - r log s; term 0 is f_k
  for (size_t r = 0; r < h.size(); ++r) {
    const double lt =
        std::log(std::max(hn[r], 1e-300)) - double(r + 1) * logs;
    if (lt < best) {
      best = lt;
      R = r + 1;
    } else if (r + 1 > R + 4) {
      break;  // terms started growing for good
    }
  }
  CVector acc = CVector::Zero(n);
  const Complex inv = 1.0 / xi;
  for (size_t r = R; r-- > 0;) {
    acc = (acc + h[r]) * inv;
  }
  acc[p] += 1.0;
  if (err) *err = std::exp(best);
  return acc;
}

double AsymptoticModel::ode_residual(int k, Complex xi) const {
  // z(xi) = f + sum_{r<=R} h_r xi^{-r};  z' + sum r h_r xi^{-r-1} = 0 termwise
  // residual = z' - (xi^{-1} A + B - R_k) z with the analytic derivative
  const int n = spec_->n;
  const Complex Rk = sector_->R[k - 1];
  const auto& h = h_[static_cast<size_t>(k) - 1];
  const double s = std::abs(xi);
  const double logs = std::log(s);
  const auto& hn = hnorm_[static_cast<size_t>(k) - 1];
  size_t R = 0;
  double best = 0.0;
  for (size_t r = 0; r < h.size(); ++r) {
    const double lt = std::log(std::max(hn[r], 1e-300)) - double(r + 1) * logs;
    if (lt < best) { best = lt; R = r + 1; }
    else if (r + 1 > R + 4) break;
  }
  CVector z = e_hat(k, xi);
  CVector dz = CVector::Zero(n);
  Complex xr = 1.0 / (xi * xi);
  for (size_t r = 1; r <= R; ++r) {
    dz -= double(r) * h[r - 1] * xr;
    xr /= xi;
  }
  CMatrix M = spec_->A / xi;
  for (int i = 0; i < n; ++i) M(i, i) += spec_->b[i] - Rk;
  return (dz - M * z).lpNorm<1>() / std::max(z.lpNorm<1>(), 1e-300);
}

double AsymptoticModel::validity_radius(double tol) const {
  // bisection on the smallest-term model per column
  double lo = 1.0, hi = 1e7;
  auto ok = [&](double s) {
    const double logs = std::log(s);
    for (size_t k = 0; k < h_.size(); ++k) {
      double best = 0.0;
      for (size_t r = 0; r < hnorm_[k].size(); ++r)
        best = std::min(best, std::log(std::max(hnorm_[k][r], 1e-300)) -
                                  double(r + 1) * logs);
      if (best > std::log(tol)) return false;
    }
    return true;
  };
  if (ok(lo)) return lo;
  if (!ok(hi))
    throw Error(Errc::asymptotic_not_reached,
                "no radius reaches the requested truncation tolerance");
  for (int it = 0; it < 200; ++it) {
    const double mid = std::sqrt(lo * hi);
    (ok(mid) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace singscat

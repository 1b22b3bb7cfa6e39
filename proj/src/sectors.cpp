#include "singscat/sectors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "singscat/errors.hpp"
#include "singscat/multiindex.hpp"

namespace singscat {

namespace {
constexpr double kPi = 3.14159265358979323846;

double wrap_to(double theta, double lo) {
  // representative of theta mod 2 pi in [lo, lo + 2 pi)
  double t = std::fmod(theta - lo, 2.0 * kPi);
  if (t < 0) t += 2.0 * kPi;
  return lo + t;
}
}  // namespace

Sectorization compute_sectors(const CVector& b,
                              const SectorizationOptions& opts) {
  const int n = static_cast<int>(b.size());
  // Each pair (j,k) contributes the line Re(x (b_j - b_k)) = 0, i.e. angles
  // pi/2 - arg(b_j - b_k) mod pi.
  std::vector<double> line_angles;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      const Complex d = b[j] - b[k];
      if (std::abs(d) == 0.0)
        throw Error(Errc::degenerate_sectorization, "coincident b entries");
      double a = wrap_to(kPi / 2.0 - std::arg(d), 0.0);
      if (a >= kPi) a -= kPi;  // lines, not rays
      line_angles.push_back(a);
    }
  std::sort(line_angles.begin(), line_angles.end());
  std::vector<double> lines;
  for (double a : line_angles) {
    if (!lines.empty() && a - lines.back() <= opts.merge_tol) continue;
    // wrap-around duplicate: angle ~ pi matches angle ~ 0
    if (!lines.empty() && kPi - a + lines.front() <= opts.merge_tol) continue;
    lines.push_back(a);
  }
  // near-coincident but not merged: refuse to guess
  for (size_t i = 0; i + 1 < lines.size(); ++i)
    if (lines[i + 1] - lines[i] < opts.degenerate_tol)
      throw Error(Errc::degenerate_sectorization,
                  "two critical lines within angular tolerance " +
                      std::to_string(lines[i + 1] - lines[i]));
  if (lines.size() >= 2 &&
      kPi - lines.back() + lines.front() < opts.degenerate_tol)
    throw Error(Errc::degenerate_sectorization,
                "two critical lines within angular tolerance (wrap)");

  Sectorization out;
  for (double a : lines) out.ray_angles.push_back(a);
  for (double a : lines) out.ray_angles.push_back(a + kPi);
  std::sort(out.ray_angles.begin(), out.ray_angles.end());

  const int N = static_cast<int>(out.ray_angles.size());
  if (N <= 2)
    throw Error(Errc::degenerate_sectorization,
                "configuration yields N = " + std::to_string(N) +
                    " sectors; N > 2 is required");

  for (int nu = 1; nu <= N; ++nu) {
    SectorData s;
    s.index = nu;
    s.theta_lo = out.ray_angles[static_cast<size_t>(nu) - 1];
    s.theta_hi = nu < N ? out.ray_angles[static_cast<size_t>(nu)]
                        : out.ray_angles[0] + 2.0 * kPi;
    s.theta_mid = 0.5 * (s.theta_lo + s.theta_hi);
    const Complex u = std::polar(1.0, s.theta_mid);
    std::vector<int> ord(static_cast<size_t>(n));
    std::iota(ord.begin(), ord.end(), 0);
    std::sort(ord.begin(), ord.end(), [&](int a, int c) {
      return (b[a] * u).real() < (b[c] * u).real();
    });
    s.perm = ord;
    s.perm_sign = permutation_sign(ord);
    s.R = CVector(n);
    for (int k = 0; k < n; ++k) s.R[k] = b[ord[static_cast<size_t>(k)]];
    // the ordering must be strict strictly inside the sector
    for (int k = 0; k + 1 < n; ++k)
      if (!((s.R[k + 1] * u).real() - (s.R[k] * u).real() > 0))
        throw Error(Errc::degenerate_sectorization,
                    "non-strict ordering at sector midpoint");
    out.sectors.push_back(std::move(s));
  }

  // ray between S_nu and S_{nu+1} is theta_hi of S_nu; keep angles lifted
  out.ray_angles.clear();
  for (const auto& s : out.sectors) out.ray_angles.push_back(s.theta_hi);

  // adjacent sectors must differ in their ordering
  for (int nu = 0; nu < N; ++nu) {
    const auto& a = out.sectors[static_cast<size_t>(nu)];
    const auto& c = out.sectors[static_cast<size_t>((nu + 1) % N)];
    if (a.perm == c.perm)
      throw Error(Errc::degenerate_sectorization,
                  "adjacent sectors share an ordering");
  }
  return out;
}

const SectorData& Sectorization::locate(double theta, int side) const {
  const double lo = sectors.front().theta_lo;
  double t = wrap_to(theta, lo);
  const double tol = 1e-12;
  for (const auto& s : sectors) {
    if (t > s.theta_lo + tol && t < s.theta_hi - tol) return s;
  }
  // boundary direction: pick the requested side
  for (size_t i = 0; i < sectors.size(); ++i) {
    if (std::abs(t - sectors[i].theta_hi) <= tol ||
        std::abs(t + 2.0 * kPi - sectors[i].theta_hi) <= tol) {
      if (side <= 0) return sectors[i];
      return sectors[(i + 1) % sectors.size()];
    }
    if (std::abs(t - sectors[i].theta_lo) <= tol) {
      if (side <= 0) return sectors[i == 0 ? sectors.size() - 1 : i - 1];
      return sectors[i];
    }
  }
  throw Error(Errc::branch_crossing,
              "direction " + std::to_string(theta) + " not located");
}

}  // namespace singscat

#pragma once

#include <vector>

#include "singscat/tensor.hpp"

namespace singscat {

/// One open sector S_nu of C \ Sigma on which the ordering of Re(b_j x) is
/// constant. Sectors are enumerated counterclockwise; sector nu spans
/// (theta_lo, theta_hi) with theta_hi = ray angle nu separating S_nu from
/// S_{nu+1}. The stored branch of arg x on the closed sector is the literal
/// interval [theta_lo, theta_hi]; angles are lifted monotonically, so the
/// last sector's upper edge sits at first ray + 2 pi.
struct SectorData {
  int index = 0;          // nu, 1-based
  double theta_lo = 0.0;  // boundary ray angles (lifted)
  double theta_hi = 0.0;
  double theta_mid = 0.0;

  /// ordering R_1..R_n with Re(R_1 x) < ... < Re(R_n x) inside the sector
  CVector R;
  /// perm[k] = original index j with R_k = b_j (0-based); f_k = e_{perm[k]}
  std::vector<int> perm;
  int perm_sign = 1;  // det of the permutation matrix Pi_nu

  bool contains_angle(double theta, double tol = 1e-12) const {
    return theta >= theta_lo - tol && theta <= theta_hi + tol;
  }
};

struct SectorizationOptions {
  double merge_tol = 1e-9;      // rays closer than this are one line
  double degenerate_tol = 1e-6; // near-coincident but distinct: error
};

struct Sectorization {
  std::vector<SectorData> sectors;     // counterclockwise
  std::vector<double> ray_angles;      // lifted; ray nu separates S_nu, S_nu+1
  int count() const { return static_cast<int>(sectors.size()); }

  /// Sector whose closure contains direction theta; boundary directions
  /// resolve to the lower sector. `side = +1` picks the upper sector on a
  /// boundary ray instead.
  const SectorData& locate(double theta, int side = -1) const;
};

/// Critical rays Re(x(b_j - b_k)) = 0 and the sector list between them.
/// Throws DegenerateSectorization for nearly-coincident distinct rays and
/// rejects N = 2 configurations.
Sectorization compute_sectors(const CVector& b,
                              const SectorizationOptions& opts = {});

}  // namespace singscat

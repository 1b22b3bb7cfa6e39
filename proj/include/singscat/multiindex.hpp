#pragma once

#include <cstdint>
#include <vector>

#include "singscat/errors.hpp"

namespace singscat {

/// Binomial coefficients, cached. Dimensions here are tiny (n <= ~12).
int64_t binomial(int n, int k);

/// Ordered multi-index alpha = (a_1 < a_2 < ... < a_m), entries in 1..n.
///
/// Multi-indices label the wedge basis of /\^m C^n. The enumeration order of
/// the basis is colexicographic and fixed once, so tensor coefficient layouts
/// are identical everywhere (including in serialized output).
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries);

  int order() const { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const { return entries_; }
  int operator[](int j) const { return entries_[static_cast<size_t>(j)]; }

  bool contains(int value) const;

  /// Position in the colexicographic enumeration of all order-m indices:
  /// rank = sum_j C(alpha_j - 1, j), j = 1..m.
  int rank() const;

  /// Ordered complement in (1, ..., n).
  MultiIndex complement(int n) const;

  /// All order-m multi-indices over 1..n in colexicographic order.
  static std::vector<MultiIndex> all(int n, int m);

  /// Inverse of rank() for given (n, m).
  static MultiIndex from_rank(int n, int m, int rank);

  bool operator==(const MultiIndex& o) const { return entries_ == o.entries_; }

 private:
  std::vector<int> entries_;
};

/// Parity of the permutation that merges (alpha, alpha') into (1..n):
/// returns 0 or 1 with f_alpha ^ f_alpha' = (-1)^parity f_1 ^ ... ^ f_n
/// for any basis f. Equals sum_j (alpha_j - j) mod 2.
int merge_parity(const MultiIndex& alpha);

/// Number of pairs (a in alpha, b in beta) with a > b; the wedge sign of
/// interleaving two ordered disjoint index sets is (-1)^inversions.
int interleave_inversions(const MultiIndex& alpha, const MultiIndex& beta);

/// Sign of a permutation given as images perm[i] (0-based).
int permutation_sign(const std::vector<int>& perm);

}  // namespace singscat

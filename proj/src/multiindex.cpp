#include "singscat/multiindex.hpp"

#include <algorithm>
#include <array>

namespace singscat {

namespace {
constexpr int kMaxN = 40;
}

int64_t binomial(int n, int k) {
  static const auto table = [] {
    std::array<std::array<int64_t, kMaxN + 1>, kMaxN + 1> t{};
    for (int i = 0; i <= kMaxN; ++i) {
      t[i][0] = 1;
      for (int j = 1; j <= i; ++j)
        t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
    }
    return t;
  }();
  if (k < 0 || k > n || n < 0) return 0;
  if (n > kMaxN) throw Error(Errc::dimension_mismatch, "binomial overflow");
  return table[n][k];
}

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  for (size_t j = 0; j < entries_.size(); ++j) {
    if (entries_[j] < 1 ||
        (j > 0 && entries_[j] <= entries_[j - 1]))
      throw Error(Errc::validation_error,
                  "multi-index entries must be strictly increasing and >= 1");
  }
}

bool MultiIndex::contains(int value) const {
  return std::binary_search(entries_.begin(), entries_.end(), value);
}

int MultiIndex::rank() const {
  int64_t r = 0;
  for (size_t j = 0; j < entries_.size(); ++j)
    r += binomial(entries_[j] - 1, static_cast<int>(j) + 1);
  return static_cast<int>(r);
}

MultiIndex MultiIndex::complement(int n) const {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(n) - entries_.size());
  for (int v = 1; v <= n; ++v)
    if (!contains(v)) out.push_back(v);
  return MultiIndex(std::move(out));
}

std::vector<MultiIndex> MultiIndex::all(int n, int m) {
  std::vector<MultiIndex> out;
  if (m < 0 || m > n) return out;
  out.reserve(static_cast<size_t>(binomial(n, m)));
  if (m == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> cur(static_cast<size_t>(m));
  for (int j = 0; j < m; ++j) cur[static_cast<size_t>(j)] = j + 1;
  while (true) {
    out.emplace_back(cur);
    // next in colex: bump the smallest position that can move without
    // touching larger entries
    int j = 0;
    while (j + 1 < m && cur[static_cast<size_t>(j)] + 1 ==
                            cur[static_cast<size_t>(j) + 1])
      ++j;
    cur[static_cast<size_t>(j)] += 1;
    if (cur[static_cast<size_t>(m) - 1] > n) break;
    for (int i = 0; i < j; ++i) cur[static_cast<size_t>(i)] = i + 1;
  }
  return out;
}

MultiIndex MultiIndex::from_rank(int n, int m, int rank) {
  // invert the colex rank formula greedily from the top entry down
  std::vector<int> entries(static_cast<size_t>(m));
  int64_t r = rank;
  for (int j = m; j >= 1; --j) {
    int v = j;
    while (binomial(v, j) <= r) ++v;  // largest v with C(v-1, j) <= r
    entries[static_cast<size_t>(j) - 1] = v;
    r -= binomial(v - 1, j);
  }
  (void)n;
  return MultiIndex(std::move(entries));
}

int merge_parity(const MultiIndex& alpha) {
  int s = 0;
  const auto& e = alpha.entries();
  for (size_t j = 0; j < e.size(); ++j)
    s += e[j] - (static_cast<int>(j) + 1);
  return s & 1;
}

int interleave_inversions(const MultiIndex& alpha, const MultiIndex& beta) {
  int inv = 0;
  for (int a : alpha.entries())
    for (int b : beta.entries())
      if (a > b) ++inv;
  return inv;
}

int permutation_sign(const std::vector<int>& perm) {
  int inv = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return (inv & 1) ? -1 : 1;
}

}  // namespace singscat

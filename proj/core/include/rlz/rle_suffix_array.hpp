// Copyright the rlz contributors. MIT license, see LICENSE in the project root.
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <vector>

#include "rlz/rle.hpp"
#include "rlz/suffix_sort.hpp"

namespace rlz {

// Suffix array of the run sequence under the run order (character first,
// exponent second), together with its inverse. sa_at(i) is the start run of
// the i-th smallest suffix; rank_at(j) is the position of suffix j in that
// order. Both directions are 1-based. A suffix that is a proper prefix of
// another sorts first.
class RleSuffixArray {
 public:
  template <typename Sym>
  [[nodiscard]] static RleSuffixArray build(const RleString<Sym>& s) {
    const std::size_t n = s.size();

    // Rank-reduce the runs to dense integers; the run order is total, so the
    // sorted distinct runs define the ranks. Then any integer suffix sorter
    // applies.
    std::vector<RlFactor<Sym>> distinct(s.runs());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<std::uint32_t> seq(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto it = std::lower_bound(distinct.begin(), distinct.end(), s.runs()[i]);
      seq[i] = static_cast<std::uint32_t>(it - distinct.begin());
    }

    RleSuffixArray out;
    const auto sa0 = sort_suffixes_by_rank(seq);
    out.sa_.resize(n);
    out.rank_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      out.sa_[i] = sa0[i] + 1;
      out.rank_[sa0[i]] = i + 1;
    }
    return out;
  }

  [[nodiscard]] std::size_t size() const { return sa_.size(); }

  [[nodiscard]] std::size_t sa_at(std::size_t i) const {
    RLZ_REQUIRE(i >= 1 && i <= sa_.size(), "RleSuffixArray::sa_at: index out of range");
    return sa_[i - 1];
  }

  [[nodiscard]] std::size_t rank_at(std::size_t j) const {
    RLZ_REQUIRE(j >= 1 && j <= rank_.size(), "RleSuffixArray::rank_at: index out of range");
    return rank_[j - 1];
  }

  // 1-based run indices, sorted by suffix order.
  [[nodiscard]] const std::vector<std::size_t>& sa() const { return sa_; }

 private:
  std::vector<std::size_t> sa_;
  std::vector<std::size_t> rank_;
};

// Order of the run suffixes starting at runs i and j, by direct comparison.
// Equal only when i == j; when one suffix prefixes the other, the shorter one
// is smaller. O(n) worst case; the suffix array covers the fast path.
template <typename Sym>
[[nodiscard]] std::strong_ordering suffix_compare(const RleString<Sym>& s, std::size_t i,
                                                  std::size_t j) {
  const std::size_t n = s.size();
  RLZ_REQUIRE(i >= 1 && i <= n && j >= 1 && j <= n, "suffix_compare: run index out of range");
  while (i <= n && j <= n) {
    const auto c = factor_compare(s.run(i), s.run(j));
    if (c != std::strong_ordering::equal) return c;
    ++i;
    ++j;
  }
  if (i > n && j > n) return std::strong_ordering::equal;
  return i > n ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace rlz

// Copyright the rlz contributors. MIT license, see LICENSE in the project root.
#include "rlz/suffix_sort.hpp"

#include <numeric>

#include "rlz/contract.hpp"

namespace rlz {

std::vector<std::uint32_t> sort_suffixes_by_rank(const std::vector<std::uint32_t>& seq) {
  const std::uint32_t n = static_cast<std::uint32_t>(seq.size());
  if (n == 0) return {};

  // rank[i] is the sort key of suffix i restricted to its first k values;
  // key2 is the rank of the second half, shifted by one so that 0 means "no
  // second half" and sorts first.
  std::vector<std::uint32_t> rank(seq), key2(n), sa(n), tmp(n), cnt;
  for (std::uint32_t v : seq) RLZ_REQUIRE(v < n, "sort_suffixes_by_rank: ranks must be dense");

  for (std::uint64_t k = 1;; k <<= 1) {
    for (std::uint32_t i = 0; i < n; ++i) key2[i] = (i + k < n) ? rank[i + k] + 1 : 0;

    // two-pass counting sort: by key2, then stably by rank
    cnt.assign(n + 2, 0);
    for (std::uint32_t i = 0; i < n; ++i) ++cnt[key2[i] + 1];
    std::partial_sum(cnt.begin(), cnt.end(), cnt.begin());
    for (std::uint32_t i = 0; i < n; ++i) tmp[cnt[key2[i]]++] = i;

    cnt.assign(n + 1, 0);
    for (std::uint32_t i = 0; i < n; ++i) ++cnt[rank[i] + 1];
    std::partial_sum(cnt.begin(), cnt.end(), cnt.begin());
    for (std::uint32_t i = 0; i < n; ++i) sa[cnt[rank[tmp[i]]]++] = tmp[i];

    std::vector<std::uint32_t> next(n);
    next[sa[0]] = 0;
    for (std::uint32_t i = 1; i < n; ++i) {
      const bool same = rank[sa[i]] == rank[sa[i - 1]] && key2[sa[i]] == key2[sa[i - 1]];
      next[sa[i]] = next[sa[i - 1]] + (same ? 0 : 1);
    }
    rank.swap(next);
    if (rank[sa[n - 1]] == n - 1) break;
  }
  return sa;
}

}  // namespace rlz

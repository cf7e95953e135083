// Copyright the rlz contributors. MIT license, see LICENSE in the project root.
#pragma once

#include <cstdint>
#include <vector>

namespace rlz {

// Suffix array of an integer sequence by prefix doubling with counting sort,
// O(len log len). Values must be dense ranks below seq.size(). No sentinel is
// used: a suffix that runs out inside a doubling round ranks below every
// suffix that still has a value there, so a proper prefix sorts before any
// suffix it prefixes. Returns 0-based start indices in sorted order.
[[nodiscard]] std::vector<std::uint32_t> sort_suffixes_by_rank(
    const std::vector<std::uint32_t>& seq);

}  // namespace rlz

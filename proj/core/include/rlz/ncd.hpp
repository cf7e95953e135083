// Copyright the rlz contributors. MIT license, see LICENSE in the project root.
#pragma once

#include <cstdint>
#include <string_view>

namespace rlz {

enum class FactorMode { offline, online, naive };

// Greedy factor count of a byte string, the compressed-size proxy used by the
// distance below.
[[nodiscard]] std::uint64_t s_factor_count(std::string_view text, FactorMode mode);

struct NcdResult {
  std::uint64_t c_a = 0;
  std::uint64_t c_b = 0;
  std::uint64_t c_ab = 0;
  double value = 0.0;
};

// Normalized compression distance with C = s-factor count:
// (C(AB) - min(C(A), C(B))) / max(C(A), C(B)); defined as 0 when both inputs
// are empty.
[[nodiscard]] NcdResult ncd_bytes(std::string_view a, std::string_view b, FactorMode mode);

}  // namespace rlz

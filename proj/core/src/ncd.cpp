// Copyright the rlz contributors. MIT license, see LICENSE in the project root.
#include "rlz/ncd.hpp"

#include <algorithm>
#include <string>

#include "rlz/lz_offline.hpp"
#include "rlz/lz_online.hpp"
#include "rlz/oracle.hpp"
#include "rlz/rle.hpp"

namespace rlz {

std::uint64_t s_factor_count(std::string_view text, FactorMode mode) {
  switch (mode) {
    case FactorMode::offline:
      return factorize_offline(encode_bytes(text)).size();
    case FactorMode::online:
      return factorize_online(encode_bytes(text)).size();
    case FactorMode::naive:
      return oracle::naive_s_factorize_bytes(text).size();
  }
  return 0;  // unreachable
}

NcdResult ncd_bytes(std::string_view a, std::string_view b, FactorMode mode) {
  NcdResult out;
  out.c_a = s_factor_count(a, mode);
  out.c_b = s_factor_count(b, mode);
  const std::string ab = std::string(a) + std::string(b);
  out.c_ab = s_factor_count(ab, mode);
  const std::uint64_t hi = std::max(out.c_a, out.c_b);
  const std::uint64_t lo = std::min(out.c_a, out.c_b);
  out.value = hi == 0 ? 0.0 : double(out.c_ab - lo) / double(hi);
  return out;
}

}  // namespace rlz

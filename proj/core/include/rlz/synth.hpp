// Copyright the rlz contributors. MIT license, see LICENSE in the project root.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace rlz {

// Synthetic text generation with controlled run structure, for tests and
// benchmarks. Characters alternate by construction; run lengths follow the
// chosen distribution, so the run count per character is steerable.
struct RunDist {
  enum class Kind { geometric, uniform };
  Kind kind = Kind::geometric;
  double rho = 0.25;       // geometric success probability (mean run 1/rho)
  std::uint64_t upper = 6; // uniform run length in 1..upper

  // Parses "geometric:<rho>" or "uniform:<upper>"; throws
  // std::invalid_argument otherwise.
  [[nodiscard]] static RunDist parse(std::string_view text);

  [[nodiscard]] std::string to_string() const;
};

// Exactly n_chars bytes over an alphabet of sigma symbols (1 <= sigma <= 256),
// deterministic per seed. Symbols are letters for small alphabets and raw
// byte values beyond that. sigma = 1 degenerates to a single run.
[[nodiscard]] std::string random_rle_text(std::uint64_t n_chars, unsigned sigma,
                                          const RunDist& dist, std::uint64_t seed);

}  // namespace rlz

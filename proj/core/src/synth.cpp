// Copyright the rlz contributors. MIT license, see LICENSE in the project root.
#include "rlz/synth.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <stdexcept>

#include "rlz/contract.hpp"

namespace rlz {

RunDist RunDist::parse(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("run distribution: expected geometric:<rho> or uniform:<K>");
  const std::string_view kind = text.substr(0, colon);
  const std::string_view arg = text.substr(colon + 1);
  RunDist out;
  if (kind == "geometric") {
    out.kind = Kind::geometric;
    try {
      out.rho = std::stod(std::string(arg));
    } catch (const std::exception&) {
      throw std::invalid_argument("run distribution: bad rho");
    }
    if (!(out.rho > 0.0 && out.rho <= 1.0))
      throw std::invalid_argument("run distribution: rho must be in (0, 1]");
  } else if (kind == "uniform") {
    out.kind = Kind::uniform;
    const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), out.upper);
    if (ec != std::errc() || ptr != arg.data() + arg.size() || out.upper < 1)
      throw std::invalid_argument("run distribution: bad upper bound");
  } else {
    throw std::invalid_argument("run distribution: unknown kind");
  }
  return out;
}

std::string RunDist::to_string() const {
  if (kind == Kind::geometric) return "geometric:" + std::to_string(rho);
  return "uniform:" + std::to_string(upper);
}

namespace {

// letters first so small-alphabet fixtures stay readable in dumps
char symbol_for(unsigned index) {
  if (index < 26) return char('a' + index);
  return char(static_cast<unsigned char>(index));
}

}  // namespace

std::string random_rle_text(std::uint64_t n_chars, unsigned sigma, const RunDist& dist,
                            std::uint64_t seed) {
  RLZ_REQUIRE(sigma >= 1 && sigma <= 256, "random_rle_text: sigma must be in 1..256");
  std::string out;
  if (n_chars == 0) return out;
  out.reserve(n_chars);
  if (sigma == 1) return std::string(n_chars, symbol_for(0));

  std::mt19937_64 rng(seed);
  std::geometric_distribution<std::uint64_t> geo(dist.rho);
  std::uniform_int_distribution<std::uint64_t> uni(1, dist.upper);
  std::uniform_int_distribution<unsigned> first_sym(0, sigma - 1);
  std::uniform_int_distribution<unsigned> next_sym(0, sigma - 2);

  unsigned prev = first_sym(rng);
  while (out.size() < n_chars) {
    std::uint64_t len = dist.kind == RunDist::Kind::geometric ? geo(rng) + 1 : uni(rng);
    len = std::min<std::uint64_t>(len, n_chars - out.size());
    out.append(std::size_t(len), symbol_for(prev));
    unsigned sym = next_sym(rng);
    if (sym >= prev) ++sym;  // skip the previous symbol to force alternation
    prev = sym;
  }
  return out;
}

}  // namespace rlz

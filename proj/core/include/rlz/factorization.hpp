// Copyright the rlz contributors. MIT license, see LICENSE in the project root.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "rlz/rle.hpp"

namespace rlz {

// A factor is either a fresh single character or a reference to an earlier
// occurrence. src is a 1-based character position; the referenced range may
// overlap the factor itself (self-reference), so src + len - 1 can run past
// the factor start.
template <typename Sym>
struct Literal {
  Sym ch{};
  friend bool operator==(const Literal&, const Literal&) = default;
};

struct Ref {
  std::uint64_t src = 0;
  std::uint64_t len = 0;
  friend bool operator==(const Ref&, const Ref&) = default;
};

template <typename Sym>
using FactorElem = std::variant<Literal<Sym>, Ref>;

template <typename Sym>
using Factorization = std::vector<FactorElem<Sym>>;

template <typename Sym>
[[nodiscard]] std::uint64_t factor_length(const FactorElem<Sym>& f) {
  if (std::holds_alternative<Ref>(f)) return std::get<Ref>(f).len;
  return 1;
}

template <typename Sym>
[[nodiscard]] std::vector<std::uint64_t> factor_lengths(const Factorization<Sym>& fs) {
  std::vector<std::uint64_t> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(factor_length(f));
  return out;
}

// Rebuilds the text a factor at a time. References are expanded left to
// right one character at a time, which handles self-overlap.
template <typename Sym>
[[nodiscard]] std::vector<Sym> materialize(const Factorization<Sym>& fs) {
  std::vector<Sym> out;
  for (const auto& f : fs) {
    if (const auto* lit = std::get_if<Literal<Sym>>(&f)) {
      out.push_back(lit->ch);
      continue;
    }
    const auto& ref = std::get<Ref>(f);
    RLZ_REQUIRE(ref.src >= 1 && ref.src <= out.size(),
                "materialize: reference source outside the prefix");
    for (std::uint64_t t = 0; t < ref.len; ++t) out.push_back(out[ref.src - 1 + t]);
  }
  return out;
}

// Checks a factorization against the text it claims to describe: lengths
// cover the text exactly, every reference starts before its factor and its
// source range matches character for character. Returns an explanation for
// the first problem found, or nothing when the factorization is valid.
template <typename Sym>
[[nodiscard]] std::optional<std::string> check_factorization(const Factorization<Sym>& fs,
                                                             std::span<const Sym> text) {
  std::uint64_t pos = 1;
  for (std::size_t idx = 0; idx < fs.size(); ++idx) {
    const auto& f = fs[idx];
    const std::uint64_t len = factor_length(f);
    if (len == 0) return "factor " + std::to_string(idx + 1) + " has zero length";
    if (pos + len - 1 > text.size())
      return "factor " + std::to_string(idx + 1) + " runs past the end of the text";
    if (const auto* lit = std::get_if<Literal<Sym>>(&f)) {
      if (!(text[pos - 1] == lit->ch))
        return "literal at factor " + std::to_string(idx + 1) + " does not match the text";
    } else {
      const auto& ref = std::get<Ref>(f);
      if (ref.src < 1 || ref.src >= pos)
        return "reference at factor " + std::to_string(idx + 1) +
               " does not start before the factor";
      for (std::uint64_t t = 0; t < len; ++t)
        if (!(text[ref.src - 1 + t] == text[pos - 1 + t]))
          return "reference at factor " + std::to_string(idx + 1) + " mismatches the text";
    }
    pos += len;
  }
  if (pos != text.size() + 1) return "factor lengths do not cover the text";
  return std::nullopt;
}

}  // namespace rlz

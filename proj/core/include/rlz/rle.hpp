// Copyright the rlz contributors. MIT license, see LICENSE in the project root.
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rlz/contract.hpp"

namespace rlz {

// One maximal run: exp copies of ch. Runs are ordered by character first and
// exponent second, so a^1 < a^3 < a^4 < b^5.
template <typename Sym>
struct RlFactor {
  Sym ch{};
  std::uint64_t exp = 0;

  friend bool operator==(const RlFactor&, const RlFactor&) = default;
};

template <typename Sym>
[[nodiscard]] std::strong_ordering factor_compare(const RlFactor<Sym>& f, const RlFactor<Sym>& g) {
  if (f.ch < g.ch) return std::strong_ordering::less;
  if (g.ch < f.ch) return std::strong_ordering::greater;
  if (f.exp != g.exp)
    return f.exp < g.exp ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

template <typename Sym>
[[nodiscard]] bool operator<(const RlFactor<Sym>& f, const RlFactor<Sym>& g) {
  return factor_compare(f, g) == std::strong_ordering::less;
}

// Run-length encoded string. Invariants: exponents are positive and adjacent
// runs carry distinct characters, so the run sequence is maximal and unique.
// Immutable after construction. size() counts runs (n), length() counts
// decoded characters (N). Run indices are 1-based everywhere.
template <typename Sym>
class RleString {
 public:
  RleString() = default;

  explicit RleString(std::vector<RlFactor<Sym>> runs) : runs_(std::move(runs)) {
    cum_.reserve(runs_.size());
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < runs_.size(); ++i) {
      RLZ_REQUIRE(runs_[i].exp >= 1, "RleString: run exponent must be positive");
      RLZ_REQUIRE(i == 0 || runs_[i].ch < runs_[i - 1].ch || runs_[i - 1].ch < runs_[i].ch,
                  "RleString: adjacent runs must have distinct characters");
      total += runs_[i].exp;
      cum_.push_back(total);
    }
  }

  [[nodiscard]] std::size_t size() const { return runs_.size(); }
  [[nodiscard]] std::uint64_t length() const { return cum_.empty() ? 0 : cum_.back(); }
  [[nodiscard]] bool empty() const { return runs_.empty(); }

  [[nodiscard]] const RlFactor<Sym>& run(std::size_t i) const {
    RLZ_REQUIRE(i >= 1 && i <= runs_.size(), "RleString::run: index out of range");
    return runs_[i - 1];
  }

  // Characters covered by runs 1..i; cum(0) is 0 and cum(size()) is length().
  [[nodiscard]] std::uint64_t cum(std::size_t i) const {
    RLZ_REQUIRE(i <= runs_.size(), "RleString::cum: index out of range");
    return i == 0 ? 0 : cum_[i - 1];
  }

  // Maps a 1-based character position to (run index r, q) where q counts the
  // characters of run r from ell through the run's end: q = cum(r) - ell + 1.
  [[nodiscard]] std::pair<std::size_t, std::uint64_t> locate(std::uint64_t ell) const {
    if (ell < 1 || ell > length())
      throw std::out_of_range("RleString::locate: position outside the string");
    auto it = std::lower_bound(cum_.begin(), cum_.end(), ell);
    return {std::size_t(it - cum_.begin()) + 1, *it - ell + 1};
  }

  [[nodiscard]] const std::vector<RlFactor<Sym>>& runs() const { return runs_; }

  friend bool operator==(const RleString& a, const RleString& b) { return a.runs_ == b.runs_; }

 private:
  std::vector<RlFactor<Sym>> runs_;
  std::vector<std::uint64_t> cum_;
};

// Amortized O(1) variant of RleString::locate for factorization passes, where
// query positions never decrease.
template <typename Sym>
class RunCursor {
 public:
  explicit RunCursor(const RleString<Sym>& s) : s_(&s) {}

  [[nodiscard]] std::pair<std::size_t, std::uint64_t> locate(std::uint64_t ell) {
    RLZ_REQUIRE(ell >= last_, "RunCursor::locate: positions must be non-decreasing");
    if (ell < 1 || ell > s_->length())
      throw std::out_of_range("RunCursor::locate: position outside the string");
    last_ = ell;
    while (s_->cum(run_) < ell) ++run_;
    return {run_, s_->cum(run_) - ell + 1};
  }

 private:
  const RleString<Sym>* s_;
  std::size_t run_ = 1;
  std::uint64_t last_ = 1;
};

template <typename Sym>
[[nodiscard]] RleString<Sym> encode(std::span<const Sym> text) {
  std::vector<RlFactor<Sym>> runs;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = i + 1;
    while (j < text.size() && text[j] == text[i]) ++j;
    runs.push_back({text[i], j - i});
    i = j;
  }
  return RleString<Sym>(std::move(runs));
}

template <typename Sym>
[[nodiscard]] std::vector<Sym> decode(const RleString<Sym>& s) {
  std::vector<Sym> out;
  out.reserve(s.length());
  for (const auto& f : s.runs()) out.insert(out.end(), f.exp, f.ch);
  return out;
}

[[nodiscard]] inline RleString<unsigned char> encode_bytes(std::string_view text) {
  return encode(std::span<const unsigned char>(
      reinterpret_cast<const unsigned char*>(text.data()), text.size()));
}

[[nodiscard]] inline std::string decode_bytes(const RleString<unsigned char>& s) {
  std::string out;
  out.reserve(s.length());
  for (const auto& f : s.runs()) out.append(f.exp, char(f.ch));
  return out;
}

namespace detail {

// Character-level lcp of two run sequences, run by run. Counts one comparison
// per run pair inspected, including the pair that ends the scan; callers use
// the counter for complexity accounting.
template <typename Sym>
[[nodiscard]] std::uint64_t rle_lcp_runs(std::span<const RlFactor<Sym>> x,
                                         std::span<const RlFactor<Sym>> y,
                                         std::uint64_t* comparisons = nullptr) {
  std::uint64_t chars = 0;
  const std::size_t m = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (comparisons) ++*comparisons;
    if (x[i] == y[i]) {
      chars += x[i].exp;
      continue;
    }
    if (x[i].ch == y[i].ch) chars += std::min(x[i].exp, y[i].exp);
    return chars;
  }
  return chars;
}

}  // namespace detail

// Length in characters of the longest common prefix of decode(x), decode(y).
// Equal runs contribute their full exponent; the first differing pair adds
// min of the exponents when the characters agree. Time is proportional to the
// number of runs spanned by the result.
template <typename Sym>
[[nodiscard]] std::uint64_t rle_lcp(const RleString<Sym>& x, const RleString<Sym>& y) {
  return detail::rle_lcp_runs<Sym>(x.runs(), y.runs());
}

}  // namespace rlz

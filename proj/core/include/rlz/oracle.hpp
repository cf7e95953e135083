// Copyright the rlz contributors. MIT license, see LICENSE in the project root.
#pragma once

// Brute-force reference implementations, written straight from the
// definitions and sharing no logic with the production code paths. Tests
// treat these as ground truth; nothing here aims to be fast.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "rlz/contract.hpp"
#include "rlz/factorization.hpp"
#include "rlz/rle.hpp"

namespace rlz::oracle {

// Greedy factorization by definition: at each position take the longest
// prefix of the remainder that also starts at some earlier position (the
// occurrence may overlap the factor); a character never seen before becomes a
// literal. The recorded source is the leftmost among maximal matches.
template <typename Sym>
[[nodiscard]] Factorization<Sym> naive_s_factorize(std::span<const Sym> text) {
  Factorization<Sym> out;
  const std::size_t n = text.size();
  std::size_t ell = 0;
  while (ell < n) {
    std::size_t best_len = 0, best_src = 0;
    for (std::size_t s = 0; s < ell; ++s) {
      std::size_t t = 0;
      while (ell + t < n && text[s + t] == text[ell + t]) ++t;
      if (t > best_len) {
        best_len = t;
        best_src = s;
      }
    }
    if (best_len == 0) {
      out.push_back(Literal<Sym>{text[ell]});
      ell += 1;
    } else {
      out.push_back(Ref{best_src + 1, best_len});
      ell += best_len;
    }
  }
  return out;
}

[[nodiscard]] inline Factorization<unsigned char> naive_s_factorize_bytes(std::string_view text) {
  return naive_s_factorize(std::span<const unsigned char>(
      reinterpret_cast<const unsigned char*>(text.data()), text.size()));
}

// Longest prefix of pattern occurring anywhere in text, by quadratic scan.
template <typename Sym>
[[nodiscard]] std::uint64_t naive_longest_prefix_in(std::span<const Sym> text,
                                                    std::span<const Sym> pattern) {
  std::size_t best = 0;
  for (std::size_t s = 0; s < text.size(); ++s) {
    std::size_t t = 0;
    while (s + t < text.size() && t < pattern.size() && text[s + t] == pattern[t]) ++t;
    best = std::max(best, t);
  }
  return best;
}

[[nodiscard]] inline std::uint64_t naive_longest_prefix_in_bytes(std::string_view text,
                                                                 std::string_view pattern) {
  const auto* t = reinterpret_cast<const unsigned char*>(text.data());
  const auto* p = reinterpret_cast<const unsigned char*>(pattern.data());
  return naive_longest_prefix_in(std::span<const unsigned char>(t, text.size()),
                                 std::span<const unsigned char>(p, pattern.size()));
}

// One equivalence class of run substrings: all members share the same set of
// end positions (1-based run indices; the empty string's set is 0..n).
// Members are listed shortest first.
template <typename Sym>
struct EndposClass {
  std::vector<std::size_t> ends;
  std::vector<std::vector<RlFactor<Sym>>> members;
};

// Groups every substring of the run sequence (the empty one included) by its
// end-position set. Exponential-ish enumeration, hence the size guard.
template <typename Sym>
[[nodiscard]] std::vector<EndposClass<Sym>> naive_endpos_classes(
    std::span<const RlFactor<Sym>> runs) {
  const std::size_t n = runs.size();
  RLZ_REQUIRE(n <= 64, "naive_endpos_classes: input too large for brute force");

  std::map<std::vector<std::size_t>, std::vector<std::vector<RlFactor<Sym>>>> groups;

  std::vector<std::size_t> all;
  for (std::size_t e = 0; e <= n; ++e) all.push_back(e);
  groups[all].push_back({});

  // distinct substrings, then their end sets
  std::map<std::vector<RlFactor<Sym>>, std::vector<std::size_t>> ends_of;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      std::vector<RlFactor<Sym>> member(runs.begin() + (i - 1), runs.begin() + j);
      if (ends_of.count(member)) continue;
      std::vector<std::size_t> ends;
      const std::size_t len = member.size();
      for (std::size_t s = 1; s + len - 1 <= n; ++s) {
        bool match = true;
        for (std::size_t t = 0; t < len; ++t)
          if (!(runs[s - 1 + t] == member[t])) {
            match = false;
            break;
          }
        if (match) ends.push_back(s + len - 1);
      }
      ends_of[member] = ends;
    }
  }
  for (auto& [member, ends] : ends_of) groups[ends].push_back(member);

  std::vector<EndposClass<Sym>> out;
  for (auto& [ends, members] : groups) {
    std::sort(members.begin(), members.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    out.push_back({ends, std::move(members)});
  }
  return out;
}

// All distinct substrings of the run sequence, the empty one included.
template <typename Sym>
[[nodiscard]] std::set<std::vector<RlFactor<Sym>>> naive_run_substrings(
    std::span<const RlFactor<Sym>> runs) {
  std::set<std::vector<RlFactor<Sym>>> out;
  out.insert(std::vector<RlFactor<Sym>>{});
  for (std::size_t i = 0; i < runs.size(); ++i)
    for (std::size_t j = i + 1; j <= runs.size(); ++j)
      out.insert(std::vector<RlFactor<Sym>>(runs.begin() + i, runs.begin() + j));
  return out;
}

// Linear-scan mirror of PstPairSet with identical contracts, including the
// duplicate-x and absent-delete violations.
class PstReference {
 public:
  using Value = std::int64_t;
  struct Pair {
    Value x;
    Value y;
    friend bool operator==(const Pair&, const Pair&) = default;
  };

  void insert(Value x, Value y) {
    for (const auto& p : pairs_) RLZ_REQUIRE(p.x != x, "PstReference::insert: duplicate x");
    pairs_.push_back({x, y});
  }

  void erase(Value x, Value y) {
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if (pairs_[i].x == x && pairs_[i].y == y) {
        pairs_.erase(pairs_.begin() + i);
        return;
      }
    }
    RLZ_REQUIRE(false, "PstReference::erase: pair not present");
  }

  [[nodiscard]] std::optional<Pair> min_x_in_rectangle(Value lo, Value hi, Value bound) const {
    std::optional<Pair> best;
    for (const auto& p : pairs_)
      if (p.x >= lo && p.x <= hi && p.y >= bound && (!best || p.x < best->x)) best = p;
    return best;
  }

  [[nodiscard]] std::optional<Pair> max_x_in_rectangle(Value lo, Value hi, Value bound) const {
    std::optional<Pair> best;
    for (const auto& p : pairs_)
      if (p.x >= lo && p.x <= hi && p.y >= bound && (!best || p.x > best->x)) best = p;
    return best;
  }

  [[nodiscard]] std::optional<Pair> max_y_in_range(Value lo, Value hi) const {
    std::optional<Pair> best;
    for (const auto& p : pairs_)
      if (p.x >= lo && p.x <= hi &&
          (!best || p.y > best->y || (p.y == best->y && p.x < best->x)))
        best = p;
    return best;
  }

  [[nodiscard]] std::size_t size() const { return pairs_.size(); }

 private:
  std::vector<Pair> pairs_;
};

}  // namespace rlz::oracle

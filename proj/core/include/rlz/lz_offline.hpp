// Copyright the rlz contributors. MIT license, see LICENSE in the project root.
#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>

#include "rlz/factorization.hpp"
#include "rlz/pst.hpp"
#include "rlz/rle.hpp"
#include "rlz/rle_suffix_array.hpp"

namespace rlz {

// Off-line factorizer over a fixed run sequence. One pair set per character c
// holds, for every suffix 2 <= i <= inserted-up-to whose preceding run
// carries c, the pair (rank of suffix i, exponent of run i-1). A factor
// starting inside run r is then resolved by two rectangle queries around the
// rank of suffix r+1: the admitted occurrences are exactly those whose
// preceding run can absorb the factor's leading partial run, and the rank
// neighbors maximize the continuation lcp among them.
template <typename Sym>
class OfflineFactorizer {
 public:
  struct Stats {
    // run pairs inspected by lcp scans, one count per pair including the
    // terminating pair
    std::uint64_t lcp_run_comparisons = 0;
    std::uint64_t pst_pairs = 0;
  };

  struct Next {
    std::uint64_t len = 0;
    std::optional<std::uint64_t> src;  // absent exactly for literals
  };

  explicit OfflineFactorizer(const RleString<Sym>& s)
      : s_(&s), sa_(RleSuffixArray::build(s)), cursor_(s) {}

  // Brings the pair sets up to suffix index upto exactly: pairs for suffixes
  // 2..upto present, none beyond. Monotone; repeated calls are no-ops.
  void catch_up_insert(std::size_t upto) {
    RLZ_REQUIRE(upto <= s_->size(), "OfflineFactorizer::catch_up_insert: index out of range");
    for (std::size_t i = std::max<std::size_t>(inserted_upto_, 1) + 1; i <= upto; ++i) {
      const RlFactor<Sym>& prev = s_->run(i - 1);
      trees_[prev.ch].insert(Value(sa_.rank_at(i)), Value(prev.exp));
      ++stats_.pst_pairs;
      auto& best = best_run_[prev.ch];
      if (prev.exp > best.exp) best = {prev.exp, i - 1};
    }
    inserted_upto_ = std::max(inserted_upto_, upto);
  }

  // Computes the factor starting at character position ell. The pair sets
  // must be caught up to exactly the run containing ell. Successive calls
  // must use non-decreasing positions. The returned source is a valid
  // previous occurrence, not necessarily the leftmost one.
  [[nodiscard]] Next next_factor(std::uint64_t ell) {
    const auto [r, q] = cursor_.locate(ell);
    RLZ_REQUIRE(inserted_upto_ == std::max<std::size_t>(r, 1),
                "OfflineFactorizer::next_factor: pair sets not caught up to the factor's run");
    const Sym a = s_->run(r).ch;
    const std::uint64_t p = s_->run(r).exp;

    std::uint64_t k = 0;
    std::size_t k_run = 0;
    if (auto it = best_run_.find(a); it != best_run_.end()) {
      k = it->second.exp;
      k_run = it->second.run;
    }

    // Factor starts at a run boundary and no earlier run of a reaches q: the
    // factor cannot extend into run r+1, so it is the best earlier run of a,
    // or a fresh literal when there is none.
    if (q == p && q > k) {
      if (k == 0) return {1, std::nullopt};
      return {k, s_->cum(k_run - 1) + 1};
    }

    // Otherwise a^q occurs before ell. Occurrences that continue past their
    // a-run live at suffixes whose preceding a-run has exponent >= q; among
    // those, the two rank neighbors of suffix d = r+1 maximize the lcp of the
    // continuation.
    const std::size_t d = r + 1;
    const std::size_t n = s_->size();
    std::uint64_t best_lcp = 0;
    std::size_t best_suffix = 0;
    if (d <= n) {
      if (auto tt = trees_.find(a); tt != trees_.end()) {
        const auto rd = Value(sa_.rank_at(d));
        const auto consider = [&](Value rank) {
          const std::size_t start = sa_.sa_at(std::size_t(rank));
          const std::uint64_t lcp = detail::rle_lcp_runs<Sym>(
              suffix_runs(start), suffix_runs(d), &stats_.lcp_run_comparisons);
          if (best_suffix == 0 || lcp > best_lcp) {
            best_lcp = lcp;
            best_suffix = start;
          }
        };
        if (rd >= 2)
          if (auto m = tt->second.max_x_in_rectangle(1, rd - 1, Value(q))) consider(m->x);
        if (rd + 1 <= Value(n))
          if (auto m = tt->second.min_x_in_rectangle(rd + 1, Value(n), Value(q))) consider(m->x);
      }
    }

    if (best_suffix != 0) {
      // occurrence: q characters ending run best_suffix - 1, then the lcp
      return {q + best_lcp, s_->cum(best_suffix - 1) + 1 - q};
    }
    // No qualifying neighbor: the factor is a^q alone. Mid-run starts overlap
    // themselves one character back; boundary starts (q = p <= k) reuse the
    // best earlier run of a.
    if (q < p) return {q, ell - 1};
    return {q, s_->cum(k_run - 1) + 1};
  }

  [[nodiscard]] const Stats& stats() const { return stats_; }
  [[nodiscard]] const RleSuffixArray& suffix_array() const { return sa_; }

 private:
  using Value = PstPairSet::Value;

  struct BestRun {
    std::uint64_t exp = 0;
    std::size_t run = 0;
  };

  [[nodiscard]] std::span<const RlFactor<Sym>> suffix_runs(std::size_t i) const {
    return std::span<const RlFactor<Sym>>(s_->runs()).subspan(i - 1);
  }

  const RleString<Sym>* s_;
  RleSuffixArray sa_;
  RunCursor<Sym> cursor_;
  std::map<Sym, PstPairSet> trees_;
  std::map<Sym, BestRun> best_run_;
  std::size_t inserted_upto_ = 1;  // suffix indices 2..inserted_upto_ are present
  Stats stats_;
};

// The full greedy factorization with previous-occurrence positions,
// O(n log n) after the O(N) encode.
template <typename Sym>
[[nodiscard]] Factorization<Sym> factorize_offline(const RleString<Sym>& s) {
  Factorization<Sym> out;
  OfflineFactorizer<Sym> fac(s);
  RunCursor<Sym> cursor(s);
  std::uint64_t ell = 1;
  const std::uint64_t n_chars = s.length();
  while (ell <= n_chars) {
    const auto [r, q] = cursor.locate(ell);
    fac.catch_up_insert(r);
    const auto next = fac.next_factor(ell);
    if (next.src)
      out.push_back(Ref{*next.src, next.len});
    else
      out.push_back(Literal<Sym>{s.run(r).ch});
    ell += next.len;
  }
  return out;
}

}  // namespace rlz

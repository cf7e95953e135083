// Copyright the rlz contributors. MIT license, see LICENSE in the project root.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "rlz/contract.hpp"
#include "rlz/rle.hpp"
#include "rlz/rle_dawg.hpp"

namespace rlz {

// On-line factorizer: feed runs as they arrive, collect factor lengths as
// soon as they are final. A factor length is final once its match fails
// strictly inside the text seen so far, because later runs alternate away
// from the failure; only the factor still matching at the input frontier
// stays pending, and finish() flushes it.
//
// The automaton trails the text by one run while matching: pattern run i of a
// factor starting in run r is matched against the automaton of runs
// 1..r+i-2, then run r+i-1 is appended. Every occurrence the automaton can
// report therefore starts before the factor, while self-overlap past the
// factor start remains possible. Factors that would start exactly at a run
// boundary are screened first against the per-character exponent maximum over
// runs 1..r-1 (one run of lag for the same reason); a fresh character falls
// out of that screen as a length-1 factor.
template <typename Sym>
class OnlineFactorizer {
 public:
  // Appends one run. Returns the factor lengths completed by this run.
  [[nodiscard]] std::vector<std::uint64_t> push_run(const RlFactor<Sym>& f) {
    RLZ_REQUIRE(!finished_, "OnlineFactorizer::push_run: already finished");
    RLZ_REQUIRE(f.exp >= 1, "OnlineFactorizer::push_run: exponent must be positive");
    RLZ_REQUIRE(runs_.empty() || !(runs_.back().ch == f.ch),
                "OnlineFactorizer::push_run: adjacent runs must have distinct characters");
    runs_.push_back(f);
    cum_.push_back((cum_.empty() ? 0 : cum_.back()) + f.exp);
    advance(false);
    return take_emitted();
  }

  // Flushes the pending factor. The factorizer accepts no input afterwards.
  [[nodiscard]] std::vector<std::uint64_t> finish() {
    RLZ_REQUIRE(!finished_, "OnlineFactorizer::finish: already finished");
    finished_ = true;
    advance(true);
    return take_emitted();
  }

  [[nodiscard]] bool finished() const { return finished_; }
  [[nodiscard]] const std::vector<std::uint64_t>& emitted() const { return emitted_; }
  [[nodiscard]] const RleDawg<Sym>& dawg() const { return dawg_; }

 private:
  void advance(bool final) {
    const std::uint64_t n_chars = cum_.empty() ? 0 : cum_.back();
    for (;;) {
      if (!matching_) {
        if (ell_ > n_chars) return;
        const auto [r, q] = locate(ell_);
        absorb_best_exps(r - 1);
        const RlFactor<Sym>& cur = run(r);
        if (q == cur.exp) {
          std::uint64_t k = 0;
          if (auto it = best_exp_.find(cur.ch); it != best_exp_.end()) k = it->second;
          if (q > k) {
            // no earlier run absorbs the whole leading run: the factor is the
            // best earlier run of this character, or a fresh literal
            emit(std::max<std::uint64_t>(k, 1));
            continue;
          }
        }
        // a^q occurs before ell (inside this run when q < exp, in an earlier
        // run otherwise); match continues run by run through the automaton
        extend_dawg_through(r);
        first_ch_ = cur.ch;
        first_exp_ = q;
        matched_ = q;
        consumed_runs_ = 1;
        node_ = dawg_.root();
        shortcut_ = false;
        start_run_ = r;
        matching_ = true;
      }

      for (;;) {
        const std::size_t j = start_run_ + consumed_runs_;
        if (j > runs_.size()) {
          if (!final) return;  // still matching at the frontier
          emit(matched_);
          matching_ = false;
          break;
        }
        const RlFactor<Sym>& f = run(j);
        auto it = dawg_.node(node_).edges.find(f);
        const bool can_take = it != dawg_.node(node_).edges.end() &&
                              (shortcut_ || dawg_.mpe(node_, f, first_ch_) >= first_exp_);
        if (!can_take) {
          const std::uint64_t k = shortcut_
                                      ? dawg_.max_edge_exp(node_, f.ch)
                                      : dawg_.max_exp_with_mpe(node_, f.ch, first_ch_, first_exp_);
          emit(matched_ + std::min(f.exp, k));
          matching_ = false;
          break;
        }
        node_ = it->second;
        matched_ += f.exp;
        ++consumed_runs_;
        if (std::int64_t(consumed_runs_ - 1) < dawg_.node(node_).len) shortcut_ = true;
        const auto ext = dawg_.extend(f);
        // the matched part may have moved into the clone
        if (ext.split_from == node_ &&
            std::int64_t(consumed_runs_ - 1) <= dawg_.node(ext.clone).len)
          node_ = ext.clone;
      }
    }
  }

  void emit(std::uint64_t len) {
    emitted_.push_back(len);
    ell_ += len;
  }

  [[nodiscard]] std::vector<std::uint64_t> take_emitted() {
    std::vector<std::uint64_t> out(emitted_.begin() + std::ptrdiff_t(reported_), emitted_.end());
    reported_ = emitted_.size();
    return out;
  }

  [[nodiscard]] const RlFactor<Sym>& run(std::size_t i) const { return runs_[i - 1]; }

  [[nodiscard]] std::pair<std::size_t, std::uint64_t> locate(std::uint64_t ell) {
    while (cum_[cursor_ - 1] < ell) ++cursor_;
    return {cursor_, cum_[cursor_ - 1] - ell + 1};
  }

  void absorb_best_exps(std::size_t upto) {
    for (std::size_t i = best_upto_ + 1; i <= upto; ++i) {
      auto& best = best_exp_[run(i).ch];
      best = std::max(best, run(i).exp);
    }
    best_upto_ = std::max(best_upto_, upto);
  }

  void extend_dawg_through(std::size_t r) {
    while (dawg_.run_count() < r) dawg_.extend(run(dawg_.run_count() + 1));
  }

  RleDawg<Sym> dawg_;
  std::vector<RlFactor<Sym>> runs_;
  std::vector<std::uint64_t> cum_;
  std::vector<std::uint64_t> emitted_;
  std::size_t reported_ = 0;
  std::uint64_t ell_ = 1;
  std::size_t cursor_ = 1;
  std::map<Sym, std::uint64_t> best_exp_;
  std::size_t best_upto_ = 0;
  bool finished_ = false;

  // pending match
  bool matching_ = false;
  int node_ = 0;
  bool shortcut_ = false;
  std::uint64_t matched_ = 0;
  std::size_t consumed_runs_ = 0;
  Sym first_ch_{};
  std::uint64_t first_exp_ = 0;
  std::size_t start_run_ = 0;
};

// Factor lengths of the whole string through the on-line path.
template <typename Sym>
[[nodiscard]] std::vector<std::uint64_t> factorize_online(const RleString<Sym>& s) {
  OnlineFactorizer<Sym> fz;
  std::vector<std::uint64_t> out;
  for (const auto& f : s.runs()) {
    auto part = fz.push_run(f);
    out.insert(out.end(), part.begin(), part.end());
  }
  auto tail = fz.finish();
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

}  // namespace rlz

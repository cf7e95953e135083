// Copyright the rlz contributors. MIT license, see LICENSE in the project root.
#include <doctest.h>

#include <cmath>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "rlz/contract.hpp"
#include "rlz/oracle.hpp"
#include "rlz/pst.hpp"

using rlz::PstPairSet;
using rlz::oracle::PstReference;
using Pair = PstPairSet::Pair;

namespace {

bool same(const std::optional<Pair>& got, const std::optional<PstReference::Pair>& want) {
  if (got.has_value() != want.has_value()) return false;
  if (!got) return true;
  return got->x == want->x && got->y == want->y;
}

}  // namespace

TEST_SUITE("pst") {
  TEST_CASE("insert builds the expected set") {
    PstPairSet d;
    CHECK(d.empty());
    d.insert(3, 7);
    CHECK(d.to_vector() == std::vector<Pair>{{3, 7}});
    d.insert(1, 5);
    d.insert(4, 2);
    CHECK(d.to_vector() == std::vector<Pair>{{1, 5}, {3, 7}, {4, 2}});
    CHECK(d.size() == 3);
    d.validate();
  }

  TEST_CASE("duplicate x insertion is a contract violation") {
    PstPairSet d;
    d.insert(3, 7);
    CHECK_THROWS_AS(d.insert(3, 9), rlz::contract_error);
  }

  TEST_CASE("erase removes exactly the given pair") {
    PstPairSet d;
    d.insert(3, 7);
    d.erase(3, 7);
    CHECK(d.empty());
    CHECK_THROWS_AS(d.erase(3, 7), rlz::contract_error);
    d.insert(3, 9);  // same x, fresh y is fine after the erase
    CHECK(d.to_vector() == std::vector<Pair>{{3, 9}});
    d.insert(5, 1);
    CHECK_THROWS_AS(d.erase(5, 2), rlz::contract_error);  // wrong y
  }

  TEST_CASE("rectangle queries on a tiny set") {
    PstPairSet d;
    d.insert(1, 5);
    d.insert(3, 2);
    d.insert(4, 7);
    CHECK(d.min_x_in_rectangle(2, 4, 3) == Pair{4, 7});
    CHECK(d.min_x_in_rectangle(1, 4, 0) == Pair{1, 5});
    CHECK(d.max_x_in_rectangle(1, 4, 3) == Pair{4, 7});
    CHECK(d.max_x_in_rectangle(1, 3, 6) == std::nullopt);
    CHECK(d.max_y_in_range(1, 3) == Pair{1, 5});
    CHECK(d.max_y_in_range(1, 4) == Pair{4, 7});
  }

  TEST_CASE("queries on an empty set find nothing") {
    const PstPairSet d;
    CHECK(d.min_x_in_rectangle(-10, 10, -100) == std::nullopt);
    CHECK(d.max_x_in_rectangle(-10, 10, -100) == std::nullopt);
    CHECK(d.max_y_in_range(-10, 10) == std::nullopt);
  }

  TEST_CASE("empty x interval is a contract violation") {
    const PstPairSet d;
    CHECK_THROWS_AS((void)d.min_x_in_rectangle(2, 1, 0), rlz::contract_error);
    CHECK_THROWS_AS((void)d.max_x_in_rectangle(2, 1, 0), rlz::contract_error);
    CHECK_THROWS_AS((void)d.max_y_in_range(2, 1), rlz::contract_error);
  }

  TEST_CASE("max_y ties break toward the smallest x") {
    PstPairSet d;
    d.insert(5, 9);
    d.insert(2, 9);
    d.insert(7, 9);
    d.insert(3, 1);
    CHECK(d.max_y_in_range(1, 10) == Pair{2, 9});
    CHECK(d.max_y_in_range(3, 10) == Pair{5, 9});
    CHECK(d.max_y_in_range(6, 10) == Pair{7, 9});
  }

  // the acceptance gate runs 10^5 operations; this is the fast everyday tier
  TEST_CASE("fuzz against the linear reference") {
    std::mt19937_64 rng(0xF00D);
    PstPairSet d;
    PstReference ref;
    std::set<std::pair<std::int64_t, std::int64_t>> live;
    const auto coord = [&rng] { return std::int64_t(rng() % 200) - 100; };

    for (int step = 0; step < 20000; ++step) {
      const unsigned op = unsigned(rng() % 6);
      if (op == 0 && !live.empty()) {
        const auto it = std::next(live.begin(), std::ptrdiff_t(rng() % live.size()));
        d.erase(it->first, it->second);
        ref.erase(it->first, it->second);
        live.erase(it);
      } else if (op <= 2) {
        const auto x = coord();
        const auto y = coord();
        bool taken = false;
        for (const auto& p : live) taken = taken || p.first == x;
        if (taken) continue;
        d.insert(x, y);
        ref.insert(x, y);
        live.insert({x, y});
      } else {
        auto lo = coord(), hi = coord();
        if (lo > hi) std::swap(lo, hi);
        const auto b = coord();
        if (op == 3) CHECK(same(d.min_x_in_rectangle(lo, hi, b), ref.min_x_in_rectangle(lo, hi, b)));
        if (op == 4) CHECK(same(d.max_x_in_rectangle(lo, hi, b), ref.max_x_in_rectangle(lo, hi, b)));
        if (op == 5) CHECK(same(d.max_y_in_range(lo, hi), ref.max_y_in_range(lo, hi)));
      }
      if (step % 512 == 0) d.validate();
      CHECK(d.size() == ref.size());
    }
    d.validate();
  }

  TEST_CASE("height stays logarithmic") {
    PstPairSet d;
    std::mt19937_64 rng(0xBEEF);
    std::vector<std::int64_t> xs(4096);
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = std::int64_t(i);
    std::shuffle(xs.begin(), xs.end(), rng);
    for (const auto x : xs) d.insert(x, std::int64_t(rng() % 1000));
    d.validate();
    // AVL height is below 1.4405 log2(n + 2)
    CHECK(double(d.height()) <= 1.4405 * std::log2(double(d.size()) + 2.0));

    // the same bound holds through a deletion-heavy phase
    const auto pairs = d.to_vector();
    for (std::size_t i = 0; i < pairs.size() / 2; ++i) d.erase(pairs[i].x, pairs[i].y);
    d.validate();
    CHECK(double(d.height()) <= 1.4405 * std::log2(double(d.size()) + 2.0));
  }

  TEST_CASE("sorted insertion stays balanced") {
    PstPairSet d;
    for (std::int64_t x = 0; x < 10000; ++x) d.insert(x, -x);
    d.validate();
    CHECK(double(d.height()) <= 1.4405 * std::log2(double(d.size()) + 2.0));
  }
}

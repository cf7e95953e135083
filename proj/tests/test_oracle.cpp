// Copyright the rlz contributors. MIT license, see LICENSE in the project root.
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "rlz/factorization.hpp"
#include "rlz/oracle.hpp"
#include "rlz/rle.hpp"
#include "rlz/synth.hpp"

using rlz::check_factorization;
using rlz::factor_lengths;
using namespace rlz::oracle;

TEST_SUITE("oracle") {
  TEST_CASE("factorization of small strings by hand") {
    {
      const auto fs = naive_s_factorize_bytes("abcabc");
      CHECK(factor_lengths(fs) == std::vector<std::uint64_t>{1, 1, 1, 3});
      const auto& ref = std::get<rlz::Ref>(fs.back());
      CHECK(ref.src == 1);
      CHECK(ref.len == 3);
    }
    {
      // self-referencing factor: the copy extends past its own start
      const auto fs = naive_s_factorize_bytes("aaaa");
      CHECK(factor_lengths(fs) == std::vector<std::uint64_t>{1, 3});
      const auto& ref = std::get<rlz::Ref>(fs.back());
      CHECK(ref.src == 1);
      CHECK(ref.len == 3);
    }
    CHECK(naive_s_factorize_bytes("").empty());
    CHECK(factor_lengths(naive_s_factorize_bytes("ab")) == std::vector<std::uint64_t>{1, 1});
  }

  TEST_CASE("factorization of the running example") {
    const std::string text = "abaabababaaaaabbabab";
    const auto fs = naive_s_factorize_bytes(text);
    CHECK(factor_lengths(fs) == std::vector<std::uint64_t>{1, 1, 1, 3, 4, 4, 1, 5});
    CHECK(check_factorization(fs, std::span<const unsigned char>(
                                      reinterpret_cast<const unsigned char*>(text.data()),
                                      text.size())) == std::nullopt);
  }

  TEST_CASE("every factorization it emits passes the checker") {
    std::mt19937_64 seeds(11);
    for (int iter = 0; iter < 120; ++iter) {
      const auto text = rlz::random_rle_text(1 + std::size_t(seeds() % 400),
                                             1 + unsigned(seeds() % 4), rlz::RunDist{},
                                             std::uint64_t(seeds()));
      const auto fs = naive_s_factorize_bytes(text);
      const std::span<const unsigned char> bytes(
          reinterpret_cast<const unsigned char*>(text.data()), text.size());
      CHECK(check_factorization(fs, bytes) == std::nullopt);
    }
  }

  TEST_CASE("greedy factors are maximal") {
    // each factor is exactly as long as the best overlapping match that
    // starts strictly earlier; one more character would have no source
    std::mt19937_64 seeds(12);
    for (int iter = 0; iter < 60; ++iter) {
      const auto text = rlz::random_rle_text(2 + std::size_t(seeds() % 200), 2,
                                             rlz::RunDist{}, std::uint64_t(seeds()));
      const std::span<const unsigned char> bytes(
          reinterpret_cast<const unsigned char*>(text.data()), text.size());
      const auto best_at = [&](std::size_t pos) {
        std::size_t best = 0;
        for (std::size_t s = 0; s < pos; ++s) {
          std::size_t t = 0;
          while (pos + t < bytes.size() && bytes[s + t] == bytes[pos + t]) ++t;
          best = std::max(best, t);
        }
        return best;
      };
      const auto fs = naive_s_factorize_bytes(text);
      std::size_t pos = 0;
      for (const auto& f : fs) {
        const auto len = rlz::factor_length(f);
        if (std::holds_alternative<rlz::Ref>(f)) {
          CHECK(best_at(pos) == len);
        } else {
          CHECK(best_at(pos) == 0);
        }
        pos += len;
      }
      CHECK(pos == bytes.size());
    }
  }

  TEST_CASE("end set classes of a single run") {
    // in the run alphabet "aaa" is one symbol, so the only substrings are
    // the empty string (ending before and after it) and the run itself
    const auto s = rlz::encode_bytes("aaa");
    const auto classes = naive_endpos_classes<unsigned char>(s.runs());
    REQUIRE(classes.size() == 2);
    CHECK(classes[0].ends == std::vector<std::size_t>{0, 1});
    CHECK(classes[0].members == std::vector<std::vector<rlz::RlFactor<unsigned char>>>{{}});
    CHECK(classes[1].ends == std::vector<std::size_t>{1});
    CHECK(classes[1].members ==
          std::vector<std::vector<rlz::RlFactor<unsigned char>>>{{{'a', 3}}});
  }

  TEST_CASE("end set classes of the matching example") {
    // runs: a^3 b^2 a^5 b^2 a^5 c^4 a^10
    const std::string text = std::string(3, 'a') + std::string(2, 'b') + std::string(5, 'a') +
                             std::string(2, 'b') + std::string(5, 'a') + std::string(4, 'c') +
                             std::string(10, 'a');
    const auto s = rlz::encode_bytes(text);
    REQUIRE(s.size() == 7);
    const auto classes = naive_endpos_classes<unsigned char>(s.runs());
    // b^2 and a^5 b^2 share {3, 5}, and b^2 a^5 ends at runs 3 and 5 as well
    bool found_b2 = false;
    bool found_b2a5 = false;
    for (const auto& c : classes) {
      for (const auto& m : c.members) {
        if (m == std::vector<rlz::RlFactor<unsigned char>>{{'b', 2}}) {
          found_b2 = true;
          CHECK(c.ends == std::vector<std::size_t>{2, 4});
        }
        if (m == std::vector<rlz::RlFactor<unsigned char>>{{'b', 2}, {'a', 5}}) {
          found_b2a5 = true;
          CHECK(c.ends == std::vector<std::size_t>{3, 5});
        }
      }
    }
    CHECK(found_b2);
    CHECK(found_b2a5);
  }

  TEST_CASE("class members are nested suffixes") {
    // within one class, every member is a run-suffix of the longest member
    std::mt19937_64 seeds(13);
    for (int iter = 0; iter < 80; ++iter) {
      const auto text = rlz::random_rle_text(1 + std::size_t(seeds() % 40),
                                             1 + unsigned(seeds() % 3), rlz::RunDist{},
                                             std::uint64_t(seeds()));
      const auto s = rlz::encode_bytes(text);
      if (s.size() > 10) continue;
      const auto classes = naive_endpos_classes<unsigned char>(s.runs());
      for (const auto& c : classes) {
        REQUIRE(!c.members.empty());
        const auto& longest = c.members.back();
        for (const auto& m : c.members) {
          REQUIRE(m.size() <= longest.size());
          const std::vector<rlz::RlFactor<unsigned char>> tail(
              longest.end() - std::ptrdiff_t(m.size()), longest.end());
          CHECK(m == tail);
        }
      }
    }
  }

  TEST_CASE("run substring enumeration") {
    const auto s = rlz::encode_bytes("aabbb");
    const auto subs = naive_run_substrings<unsigned char>(s.runs());
    // {}, a^2, b^3, a^2 b^3
    CHECK(subs.size() == 4);
    CHECK(subs.count({}) == 1);
    CHECK(subs.count({{'a', 2}}) == 1);
    CHECK(subs.count({{'b', 3}}) == 1);
    CHECK(subs.count({{'a', 2}, {'b', 3}}) == 1);
    CHECK(subs.count({{'a', 1}}) == 0);  // a^1 is not a run-aligned substring here
  }

  TEST_CASE("factor count never exceeds twice the run count") {
    std::mt19937_64 seeds(14);
    for (int iter = 0; iter < 100; ++iter) {
      const auto text = rlz::random_rle_text(1 + std::size_t(seeds() % 600),
                                             1 + unsigned(seeds() % 6), rlz::RunDist{},
                                             std::uint64_t(seeds()));
      const auto s = rlz::encode_bytes(text);
      const auto fs = naive_s_factorize_bytes(text);
      CHECK(fs.size() <= 2 * s.size());
    }
  }

  TEST_CASE("pair set reference answers by scan") {
    PstReference d;
    d.insert(1, 5);
    d.insert(3, 2);
    d.insert(4, 7);
    REQUIRE(d.min_x_in_rectangle(2, 4, 3).has_value());
    CHECK(d.min_x_in_rectangle(2, 4, 3)->x == 4);
    CHECK(d.max_y_in_range(1, 3)->y == 5);
    CHECK(!d.max_x_in_rectangle(1, 3, 6).has_value());
    CHECK_THROWS_AS(d.insert(3, 9), rlz::contract_error);
    CHECK_THROWS_AS(d.erase(9, 9), rlz::contract_error);
  }
}

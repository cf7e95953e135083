// Copyright the rlz contributors. MIT license, see LICENSE in the project root.
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rlz/contract.hpp"
#include "rlz/oracle.hpp"
#include "rlz/rle.hpp"
#include "rlz/rle_dawg.hpp"
#include "rlz/synth.hpp"

using Dawg = rlz::RleDawg<unsigned char>;
using Factor = rlz::RlFactor<unsigned char>;
using Value = rlz::PstPairSet::Value;
using Pair = rlz::PstPairSet::Pair;

namespace {

Dawg build(const std::string& text) {
  Dawg d;
  const auto s = rlz::encode_bytes(text);
  for (const auto& f : s.runs()) d.extend(f);
  return d;
}

// the class's longest member, read back off the primary in-edge chain
std::vector<Factor> longest_member(const Dawg& d, int id) {
  std::vector<Factor> out;
  while (id != d.root()) {
    out.push_back(d.node(id).primary_label);
    id = d.node(id).primary_parent;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

// maximum exponent of an a-run immediately preceding an occurrence of x
std::uint64_t brute_mpe(const std::vector<Factor>& runs, const std::vector<Factor>& x,
                        unsigned char a) {
  std::uint64_t best = 0;
  for (std::size_t s = 2; s + x.size() - 1 <= runs.size(); ++s) {
    bool match = true;
    for (std::size_t t = 0; t < x.size(); ++t)
      if (!(runs[s - 1 + t] == x[t])) {
        match = false;
        break;
      }
    if (match && runs[s - 2].ch == a) best = std::max(best, runs[s - 2].exp);
  }
  return best;
}

void collect_paths(const Dawg& d, int v, std::vector<Factor>& cur,
                   std::set<std::vector<Factor>>& out) {
  out.insert(cur);
  for (const auto& [label, target] : d.node(v).edges) {
    cur.push_back(label);
    collect_paths(d, target, cur, out);
    cur.pop_back();
  }
}

std::vector<unsigned char> alphabet_of(const std::vector<Factor>& runs) {
  std::set<unsigned char> chars;
  for (const auto& f : runs) chars.insert(f.ch);
  chars.insert('z' + 1);  // one character that never occurs
  return {chars.begin(), chars.end()};
}

const std::string kMatchText = std::string(3, 'a') + "bb" + std::string(5, 'a') + "bb" +
                               std::string(5, 'a') + "cccc" + std::string(10, 'a');

}  // namespace

TEST_SUITE("rle_dawg") {
  TEST_CASE("single run") {
    const auto d = build("aaaa");
    CHECK(d.node_count() == 2);
    CHECK(d.edge_count() == 1);
    CHECK(d.sink() != d.root());
    CHECK(d.edge_is_primary(d.root(), Factor{'a', 4}));
    CHECK(d.max_edge_exp(d.root(), 'a') == 4);
    CHECK(d.max_edge_exp(d.root(), 'b') == 0);
    // the sink's suffix link carries the whole run as its label
    CHECK(d.node(d.sink()).slink == d.root());
    CHECK(d.node(d.root()).link_max.at('a') == 4);
    CHECK(d.mpe(d.root(), Factor{'a', 4}, 'a') == 0);  // nothing precedes run 1
  }

  TEST_CASE("rejects a zero exponent") {
    Dawg d;
    CHECK_THROWS_AS(d.extend(Factor{'a', 0}), rlz::contract_error);
  }

  TEST_CASE("classes of the matching example") {
    // runs: a^3 b^2 a^5 b^2 a^5 c^4 a^10
    const auto d = build(kMatchText);
    REQUIRE(d.run_count() == 7);

    // b^2 a^5 and a^5 end at the same runs, so they share a node
    const std::vector<Factor> b2a5 = {{'b', 2}, {'a', 5}};
    const std::vector<Factor> a5 = {{'a', 5}};
    const auto w1 = d.traverse(b2a5);
    const auto w2 = d.traverse(a5);
    REQUIRE(w1.has_value());
    REQUIRE(w2.has_value());
    CHECK(*w1 == *w2);
    CHECK(d.node(*w1).len == 2);
    CHECK(d.node(*w1).sample_end == 3);

    // and b^2 alone lives one class up, reachable by a primary edge
    const auto u = d.traverse(std::vector<Factor>{{'b', 2}});
    REQUIRE(u.has_value());
    CHECK(d.node(*u).len == 1);
    CHECK(d.edge_is_primary(*u, Factor{'a', 5}));
    CHECK_FALSE(d.edge_is_primary(d.root(), Factor{'a', 5}));
  }

  TEST_CASE("preceding-run maxima of the matching example") {
    const auto d = build(kMatchText);
    // occurrences of b^2 follow a^3 and a^5
    CHECK(d.mpe(d.root(), Factor{'b', 2}, 'a') == 5);
    // so do occurrences of b^2 a^5
    const auto u = d.traverse(std::vector<Factor>{{'b', 2}});
    REQUIRE(u.has_value());
    CHECK(d.mpe(*u, Factor{'a', 5}, 'a') == 5);
    // a^5 itself is always preceded by b^2, never by an a-run
    CHECK(d.mpe(d.root(), Factor{'a', 5}, 'a') == 0);
    CHECK(d.mpe(d.root(), Factor{'a', 5}, 'b') == 2);
    CHECK_THROWS_AS((void)d.mpe(d.root(), Factor{'b', 7}, 'a'), rlz::contract_error);
  }

  TEST_CASE("best fallback edge under a constraint") {
    const auto d = build(kMatchText);
    const auto u = d.traverse(std::vector<Factor>{{'b', 2}});
    REQUIRE(u.has_value());
    CHECK(d.max_exp_with_mpe(*u, 'a', 'a', 5) == 5);
    CHECK(d.max_exp_with_mpe(*u, 'a', 'a', 6) == 0);  // no occurrence follows a^6
    CHECK(d.max_exp_with_mpe(*u, 'c', 'a', 1) == 0);  // no such edge at all
  }

  TEST_CASE("longest prefix of a pattern") {
    const auto d = build(kMatchText);
    // a^5 b^2 a^7: the a^7 tail is cut to a^5 by the best qualifying edge
    CHECK(d.longest_prefix_match(rlz::encode_bytes("aaaaabbaaaaaaa")) == 12);
    CHECK(d.longest_prefix_match(rlz::encode_bytes("aaaaabb")) == 7);
    CHECK(d.longest_prefix_match(rlz::encode_bytes("a")) == 1);
    CHECK(d.longest_prefix_match(rlz::encode_bytes(std::string(12, 'a'))) == 10);
    CHECK(d.longest_prefix_match(rlz::encode_bytes("z")) == 0);
    CHECK(d.longest_prefix_match(rlz::encode_bytes("ccbb")) == 2);
    CHECK_THROWS_AS((void)d.longest_prefix_match(rlz::RleString<unsigned char>{}),
                    rlz::contract_error);

    const Dawg empty;
    CHECK(empty.longest_prefix_match(rlz::encode_bytes("aaaa")) == 0);
  }

  TEST_CASE("paths spell exactly the run substrings") {
    std::mt19937_64 seeds(901);
    for (int iter = 0; iter < 250; ++iter) {
      const auto text = rlz::random_rle_text(1 + std::size_t(seeds() % 60),
                                             1 + unsigned(seeds() % 3), rlz::RunDist{},
                                             std::uint64_t(seeds()));
      const auto s = rlz::encode_bytes(text);
      if (s.size() > 12) continue;
      Dawg d;
      for (const auto& f : s.runs()) d.extend(f);

      std::set<std::vector<Factor>> paths;
      std::vector<Factor> cur;
      collect_paths(d, d.root(), cur, paths);
      CHECK(paths == rlz::oracle::naive_run_substrings<unsigned char>(s.runs()));
      REQUIRE(d.traverse(s.runs()).has_value());
      CHECK(*d.traverse(s.runs()) == d.sink());
    }
  }

  TEST_CASE("nodes are the end-set classes") {
    std::mt19937_64 seeds(902);
    int done = 0;
    for (int iter = 0; done < 150; ++iter) {
      REQUIRE(iter < 4000);
      const auto text = rlz::random_rle_text(1 + std::size_t(seeds() % 40),
                                             1 + unsigned(seeds() % 3), rlz::RunDist{},
                                             std::uint64_t(seeds()));
      const auto s = rlz::encode_bytes(text);
      if (s.size() > 10) continue;
      ++done;
      Dawg d;
      for (const auto& f : s.runs()) d.extend(f);

      const auto classes = rlz::oracle::naive_endpos_classes<unsigned char>(s.runs());
      CHECK(classes.size() == d.node_count());
      std::set<int> seen;
      for (const auto& c : classes) {
        std::optional<int> id;
        for (const auto& m : c.members) {
          const auto v = d.traverse(m);
          REQUIRE(v.has_value());
          if (!id) id = *v;
          CHECK(*v == *id);  // equivalent substrings share a node
        }
        REQUIRE(id.has_value());
        seen.insert(*id);
        CHECK(d.node(*id).len == std::int64_t(c.members.back().size()));
        CHECK(longest_member(d, *id) == c.members.back());
        const auto& ends = c.ends;
        CHECK(std::find(ends.begin(), ends.end(), std::size_t(d.node(*id).sample_end)) !=
              ends.end());
      }
      CHECK(seen.size() == d.node_count());  // distinct classes, distinct nodes
    }
  }

  TEST_CASE("every edge agrees with the brute-force preceding maximum") {
    std::mt19937_64 seeds(903);
    int done = 0;
    for (int iter = 0; done < 150; ++iter) {
      REQUIRE(iter < 4000);
      const auto text = rlz::random_rle_text(1 + std::size_t(seeds() % 50),
                                             1 + unsigned(seeds() % 3), rlz::RunDist{},
                                             std::uint64_t(seeds()));
      const auto s = rlz::encode_bytes(text);
      if (s.size() > 12) continue;
      ++done;
      Dawg d;
      for (const auto& f : s.runs()) d.extend(f);
      const auto alpha = alphabet_of(s.runs());

      for (int id = 0; std::size_t(id) < d.node_count(); ++id) {
        auto x = longest_member(d, id);
        CHECK(std::int64_t(x.size()) == d.node(id).len);
        x.push_back(Factor{});
        for (const auto& [f, target] : d.node(id).edges) {
          x.back() = f;
          for (const auto a : alpha) CHECK(d.mpe(id, f, a) == brute_mpe(s.runs(), x, a));
        }
      }
    }
  }

  TEST_CASE("pair sets mirror the edge data") {
    std::mt19937_64 seeds(904);
    for (int iter = 0; iter < 120; ++iter) {
      const auto text = rlz::random_rle_text(1 + std::size_t(seeds() % 120),
                                             1 + unsigned(seeds() % 4), rlz::RunDist{},
                                             std::uint64_t(seeds()));
      const auto s = rlz::encode_bytes(text);
      Dawg d;
      for (const auto& f : s.runs()) d.extend(f);
      const auto alpha = alphabet_of(s.runs());

      std::uint64_t live = 0;
      for (int id = 0; std::size_t(id) < d.node_count(); ++id) {
        const auto& nd = d.node(id);
        // expected pair content per (preceding char, edge char) key
        std::map<std::pair<unsigned char, unsigned char>, std::vector<Pair>> want;
        for (const auto& [f, target] : nd.edges) {
          for (const auto a : alpha) {
            const auto m = d.mpe(id, f, a);
            if (m > 0) want[{a, f.ch}].push_back({Value(f.exp), Value(m)});
          }
        }
        for (auto& [key, pairs] : want) {
          std::sort(pairs.begin(), pairs.end(),
                    [](const Pair& l, const Pair& r) { return l.x < r.x; });
          auto it = nd.trees.find(key);
          REQUIRE(it != nd.trees.end());
          CHECK(it->second.to_vector() == pairs);
        }
        for (const auto& [key, tree] : nd.trees) {
          live += tree.size();
          if (!want.count(key)) CHECK(tree.size() == 0);
        }
      }
      CHECK(live == d.stats().pst_pairs_live);
    }
  }

  TEST_CASE("size bounds") {
    std::mt19937_64 seeds(905);
    for (int iter = 0; iter < 150; ++iter) {
      const auto text = rlz::random_rle_text(3 + std::size_t(seeds() % 2000),
                                             1 + unsigned(seeds() % 6), rlz::RunDist{},
                                             std::uint64_t(seeds()));
      const auto s = rlz::encode_bytes(text);
      Dawg d;
      for (const auto& f : s.runs()) d.extend(f);
      const auto n = s.size();
      if (n >= 3) {
        CHECK(d.node_count() <= 2 * n);
        CHECK(d.edge_count() <= 3 * n);
      }
      CHECK(d.stats().pst_pairs_created <= 5 * n + 4);
      CHECK(d.stats().pst_pairs_live <= d.stats().pst_pairs_created);
    }
  }

  TEST_CASE("prefix match agrees with the brute force") {
    std::mt19937_64 seeds(906);
    for (int iter = 0; iter < 250; ++iter) {
      const unsigned sigma = 1 + unsigned(seeds() % 3);
      const auto text = rlz::random_rle_text(1 + std::size_t(seeds() % 400), sigma,
                                             rlz::RunDist{}, std::uint64_t(seeds()));
      const auto pattern = rlz::random_rle_text(1 + std::size_t(seeds() % 40), sigma,
                                                rlz::RunDist{}, std::uint64_t(seeds()));
      const auto d = build(text);
      CHECK(d.longest_prefix_match(rlz::encode_bytes(pattern)) ==
            rlz::oracle::naive_longest_prefix_in_bytes(text, pattern));
    }
  }

  TEST_CASE("dot dump names every node") {
    const auto d = build("aabba");
    const auto dot = d.to_dot();
    CHECK(dot.find("digraph") != std::string::npos);
    for (std::size_t id = 0; id < d.node_count(); ++id)
      CHECK(dot.find("n" + std::to_string(id) + " [shape=box") != std::string::npos);
  }
}

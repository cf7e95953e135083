// Copyright the rlz contributors. MIT license, see LICENSE in the project root.
#pragma once

#include <cctype>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "rlz/contract.hpp"
#include "rlz/pst.hpp"
#include "rlz/rle.hpp"

namespace rlz {

namespace detail {

template <typename Sym>
[[nodiscard]] std::string sym_repr(const Sym& s) {
  if constexpr (std::is_same_v<Sym, unsigned char> || std::is_same_v<Sym, char>) {
    const auto c = static_cast<unsigned char>(s);
    if (std::isalnum(c) || std::ispunct(c)) return std::string(1, char(c));
    return std::to_string(unsigned(c));
  } else if constexpr (std::is_integral_v<Sym>) {
    return std::to_string(static_cast<long long>(s));
  } else {
    std::ostringstream os;
    os << s;
    return os.str();
  }
}

}  // namespace detail

// Suffix automaton of the run sequence, grown one run at a time. Nodes are
// the end-position equivalence classes of run substrings; an edge is primary
// when it extends the source's longest member to the target's longest member
// (len(source) + 1 == len(target)) and secondary otherwise.
//
// Two augmentations ride along for the factorizers:
//
//  - mpe: for an edge ([u], b^q, [w]) and a character a, the largest p such
//    that the run sequence a^p longest(u) b^q occurs. Secondary edges read it
//    off the run preceding a fixed sample occurrence of the target (every
//    occurrence is preceded by the same interior run of longest(w)); primary
//    edges read the target's incoming suffix-link label maxima, which record
//    exactly the runs preceding occurrences of longest(w).
//
//  - per-node pair sets keyed (preceding char a, edge char b): one pair
//    (edge exponent, mpe for a) per out-edge with positive mpe, so the best
//    fallback edge under an mpe constraint is a rectangle query.
template <typename Sym>
class RleDawg {
 public:
  using Factor = RlFactor<Sym>;
  using Value = PstPairSet::Value;

  struct Node {
    std::map<Factor, int> edges;
    int slink = -1;
    // run count of the class's longest member
    std::int64_t len = 0;
    // one end position (1-based run index) of the class's members, frozen at
    // creation; a clone inherits the split node's sample
    std::int64_t sample_end = 0;
    // the unique primary in-edge, fixed for the node's lifetime
    int primary_parent = -1;
    Factor primary_label{};
    // per character, the max exponent among incoming suffix-link labels
    std::map<Sym, std::uint64_t> link_max;
    // (preceding char, edge char) -> pairs (edge exponent, mpe)
    std::map<std::pair<Sym, Sym>, PstPairSet> trees;
  };

  struct ExtendResult {
    int sink = -1;
    // when a node was split: the node that kept the long members, and the
    // clone that took the short ones
    int split_from = -1;
    int clone = -1;
  };

  struct Stats {
    std::uint64_t pst_pairs_created = 0;
    std::uint64_t pst_pairs_live = 0;
  };

  RleDawg() { nodes_.emplace_back(); }

  RleDawg(const RleDawg&) = delete;
  RleDawg& operator=(const RleDawg&) = delete;
  RleDawg(RleDawg&&) noexcept = default;
  RleDawg& operator=(RleDawg&&) noexcept = default;

  // Appends one run and restores every invariant. Amortized O(log n).
  ExtendResult extend(const Factor& f) {
    RLZ_REQUIRE(f.exp >= 1, "RleDawg::extend: exponent must be positive");
    runs_.push_back(f);
    chars_ += f.exp;
    const auto d = std::int64_t(runs_.size());

    ExtendResult res;
    const int cur = new_node();
    res.sink = cur;
    nodes_[cur].len = nodes_[last_].len + 1;
    nodes_[cur].sample_end = d;
    nodes_[cur].primary_parent = last_;
    nodes_[cur].primary_label = f;
    add_edge(last_, f, cur, /*with_pair=*/false);

    int p = nodes_[last_].slink;
    while (p != -1 && !nodes_[p].edges.count(f)) {
      add_edge(p, f, cur, /*with_pair=*/true);
      p = nodes_[p].slink;
    }

    if (p == -1) {
      attach_link(cur, 0, /*from_sink=*/true);
    } else {
      const int q = nodes_[p].edges.find(f)->second;
      if (nodes_[p].len + 1 == nodes_[q].len) {
        attach_link(cur, q, /*from_sink=*/true);
      } else {
        const int c = new_node();
        res.split_from = q;
        res.clone = c;
        nodes_[c].len = nodes_[p].len + 1;
        nodes_[c].sample_end = nodes_[q].sample_end;
        nodes_[c].primary_parent = p;
        nodes_[c].primary_label = f;
        // the clone's out-edges are copies, secondary by construction
        for (const auto& [label, target] : nodes_[q].edges) add_edge(c, label, target, true);
        // the clone keeps q's old suffix link; the target's label data stays
        // valid because the label repeats with the clone's identical sample
        attach_link(c, nodes_[q].slink, /*from_sink=*/false);
        // members no longer than the clone move over: redirect their edges,
        // which turns p's edge into the clone's primary in-edge
        int pp = p;
        while (pp != -1) {
          auto it = nodes_[pp].edges.find(f);
          if (it == nodes_[pp].edges.end() || it->second != q) break;
          it->second = c;
          pp = nodes_[pp].slink;
        }
        attach_link(q, c, /*from_sink=*/false);
        attach_link(cur, c, /*from_sink=*/true);
      }
    }
    last_ = cur;
    return res;
  }

  // --- structure access -----------------------------------------------

  [[nodiscard]] int root() const { return 0; }
  [[nodiscard]] int sink() const { return last_; }
  [[nodiscard]] std::size_t node_count() const { return nodes_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return edge_count_; }
  [[nodiscard]] std::size_t run_count() const { return runs_.size(); }
  [[nodiscard]] const std::vector<Factor>& runs() const { return runs_; }
  [[nodiscard]] const Stats& stats() const { return stats_; }

  [[nodiscard]] const Node& node(int id) const {
    RLZ_REQUIRE(id >= 0 && std::size_t(id) < nodes_.size(), "RleDawg::node: bad id");
    return nodes_[std::size_t(id)];
  }

  [[nodiscard]] bool edge_is_primary(int source, const Factor& label) const {
    const Node& u = node(source);
    auto it = u.edges.find(label);
    RLZ_REQUIRE(it != u.edges.end(), "RleDawg::edge_is_primary: no such edge");
    return u.len + 1 == nodes_[it->second].len;
  }

  // Follows exact edge labels from the root; nothing when the path dies.
  [[nodiscard]] std::optional<int> traverse(std::span<const Factor> path) const {
    int v = 0;
    for (const auto& f : path) {
      auto it = nodes_[v].edges.find(f);
      if (it == nodes_[v].edges.end()) return std::nullopt;
      v = it->second;
    }
    return v;
  }

  // --- queries ----------------------------------------------------------

  // Max exponent among source out-edges carrying character b, 0 when none.
  [[nodiscard]] std::uint64_t max_edge_exp(int source, Sym b) const {
    const Node& u = node(source);
    auto it = u.edges.upper_bound(Factor{b, std::numeric_limits<std::uint64_t>::max()});
    if (it == u.edges.begin()) return 0;
    --it;
    return it->first.ch == b ? it->first.exp : 0;
  }

  // Largest p with a^p longest(source) label in the run-substring set, 0 when
  // no run of a ever precedes. The edge must exist.
  [[nodiscard]] std::uint64_t mpe(int source, const Factor& label, Sym a) const {
    const Node& u = node(source);
    auto it = u.edges.find(label);
    RLZ_REQUIRE(it != u.edges.end(), "RleDawg::mpe: no such edge");
    const Node& w = nodes_[it->second];
    if (u.len + 1 == w.len) {
      auto jt = w.link_max.find(a);
      return jt == w.link_max.end() ? 0 : jt->second;
    }
    const std::int64_t idx = w.sample_end - (u.len + 1);
    const Factor& before = runs_[std::size_t(idx - 1)];
    return before.ch == a ? before.exp : 0;
  }

  // Largest edge exponent p such that the out-edge b^p of source has
  // mpe(edge, a) >= q; 0 when none qualifies.
  [[nodiscard]] std::uint64_t max_exp_with_mpe(int source, Sym b, Sym a, std::uint64_t q) const {
    const Node& u = node(source);
    auto it = u.trees.find({a, b});
    if (it == u.trees.end()) return 0;
    const auto m = it->second.max_x_in_rectangle(1, Value(chars_), Value(q));
    return m ? std::uint64_t(m->x) : 0;
  }

  // Length in characters of the longest prefix of decode(pattern) occurring
  // in the text. The first run is matched by exponent against the root's
  // out-edges; subsequent runs must match exactly, and an edge is taken only
  // while some occurrence of the matched part is preceded by a run absorbing
  // the pattern's first run (mpe >= first exponent). Once the matched part
  // is shorter than its node's longest member, every continuation stays
  // left-extensible and the check is dropped (shortcut). On failure the best
  // partial last run comes from the pair set (or the plain edge map under
  // shortcut).
  [[nodiscard]] std::uint64_t longest_prefix_match(const RleString<Sym>& pattern) const {
    RLZ_REQUIRE(!pattern.empty(), "RleDawg::longest_prefix_match: empty pattern");
    const auto& pruns = pattern.runs();
    const Sym b1 = pruns[0].ch;
    const std::uint64_t q1 = pruns[0].exp;

    const std::uint64_t h = max_edge_exp(0, b1);
    if (pruns.size() == 1 || h < q1) return std::min(h, q1);

    std::uint64_t matched = q1;
    int v = 0;
    bool shortcut = false;
    for (std::size_t i = 2; i <= pruns.size(); ++i) {
      const Factor& f = pruns[i - 1];
      auto it = nodes_[v].edges.find(f);
      const bool can_take =
          it != nodes_[v].edges.end() && (shortcut || mpe(v, f, b1) >= q1);
      if (!can_take) {
        const std::uint64_t k =
            shortcut ? max_edge_exp(v, f.ch) : max_exp_with_mpe(v, f.ch, b1, q1);
        return matched + std::min(f.exp, k);
      }
      v = it->second;
      matched += f.exp;
      if (std::int64_t(i - 1) < nodes_[v].len) shortcut = true;
    }
    return matched;
  }

  // --- debug output -------------------------------------------------------

  // Graphviz dump: solid edges (dotted when secondary), dashed suffix links
  // annotated with their strongest label per character.
  void write_dot(std::ostream& os) const {
    os << "digraph rle_dawg {\n  rankdir=LR;\n";
    for (std::size_t id = 0; id < nodes_.size(); ++id) {
      const Node& nd = nodes_[id];
      os << "  n" << id << " [shape=box label=\"" << id << " len=" << nd.len
         << " end=" << nd.sample_end << "\"];\n";
    }
    for (std::size_t id = 0; id < nodes_.size(); ++id) {
      const Node& nd = nodes_[id];
      for (const auto& [label, target] : nd.edges) {
        const bool primary = nd.len + 1 == nodes_[target].len;
        os << "  n" << id << " -> n" << target << " [label=\"" << detail::sym_repr(label.ch)
           << "^" << label.exp << "\"" << (primary ? "" : " style=dotted") << "];\n";
      }
      if (nd.slink != -1) {
        os << "  n" << id << " -> n" << nd.slink << " [style=dashed color=gray";
        os << " label=\"";
        bool first = true;
        for (const auto& [ch, exp] : nodes_[nd.slink].link_max) {
          if (!std::exchange(first, false)) os << ",";
          os << detail::sym_repr(ch) << "^" << exp;
        }
        os << "\"];\n";
      }
    }
    os << "}\n";
  }

  [[nodiscard]] std::string to_dot() const {
    std::ostringstream os;
    write_dot(os);
    return os.str();
  }

 private:
  [[nodiscard]] int new_node() {
    nodes_.emplace_back();
    return int(nodes_.size()) - 1;
  }

  void add_edge(int u, const Factor& f, int w, bool with_pair) {
    const bool inserted = nodes_[u].edges.emplace(f, w).second;
    RLZ_REQUIRE(inserted, "RleDawg: duplicate edge label");
    ++edge_count_;
    if (!with_pair) return;
    // secondary edge: its mpe is the run in front of the sample occurrence,
    // which exists because the matched part is strictly shorter than the
    // target's longest member
    const std::int64_t idx = nodes_[w].sample_end - (nodes_[u].len + 1);
    RLZ_REQUIRE(idx >= 1, "RleDawg: secondary edge lacks a preceding run");
    const Factor& before = runs_[std::size_t(idx - 1)];
    nodes_[u].trees[{before.ch, f.ch}].insert(Value(f.exp), Value(before.exp));
    ++stats_.pst_pairs_created;
    ++stats_.pst_pairs_live;
  }

  // Sets the suffix link of src to tgt and records the link's label, the run
  // in front of tgt's longest member inside src's sample occurrence. When the
  // label raises the target's per-character maximum and the link comes from
  // the sink, the target's primary in-edge has a new mpe, so its pair moves.
  // Split links need only the map write: the link onto a fresh clone carries
  // the same label as the pair already sitting on the clone's redirected
  // primary in-edge, and the clone's own link to the old target repeats a
  // label recorded when the split node first linked there.
  void attach_link(int src, int tgt, bool from_sink) {
    nodes_[src].slink = tgt;
    const std::int64_t idx = nodes_[src].sample_end - nodes_[tgt].len;
    const Factor& label = runs_[std::size_t(idx - 1)];
    auto& current = nodes_[tgt].link_max[label.ch];
    if (label.exp > current) {
      if (from_sink && tgt != 0) {
        Node& parent = nodes_[nodes_[tgt].primary_parent];
        auto& tree = parent.trees[{label.ch, nodes_[tgt].primary_label.ch}];
        if (current > 0) {
          tree.erase(Value(nodes_[tgt].primary_label.exp), Value(current));
          --stats_.pst_pairs_live;
        }
        tree.insert(Value(nodes_[tgt].primary_label.exp), Value(label.exp));
        ++stats_.pst_pairs_created;
        ++stats_.pst_pairs_live;
      }
      current = label.exp;
    }
  }

  std::vector<Node> nodes_;
  std::vector<Factor> runs_;
  std::uint64_t chars_ = 0;
  int last_ = 0;
  std::size_t edge_count_ = 0;
  Stats stats_;
};

}  // namespace rlz

// Copyright the rlz contributors. MIT license, see LICENSE in the project root.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace rlz {

// Dynamic set of integer pairs with distinct x keys, answering the rectangle
// and range queries the factorizers need: leftmost/rightmost pair in
// [L, R] x [B, +inf), and the highest-y pair over an x interval. Every
// operation is O(log size); storage is one tree node per pair.
//
// Implemented as an AVL tree keyed on x where each subtree caches its best
// pair, best meaning largest y with ties broken toward smaller x.
class PstPairSet {
 public:
  using Value = std::int64_t;

  struct Pair {
    Value x;
    Value y;
    friend bool operator==(const Pair&, const Pair&) = default;
  };

  // defined in pst.cpp
  struct Node;

  PstPairSet() = default;
  ~PstPairSet();
  PstPairSet(PstPairSet&& other) noexcept;
  PstPairSet& operator=(PstPairSet&& other) noexcept;
  PstPairSet(const PstPairSet&) = delete;
  PstPairSet& operator=(const PstPairSet&) = delete;

  // x must not be present yet; every usage site keys pairs by a unique x.
  void insert(Value x, Value y);

  // The exact pair (x, y) must be present.
  void erase(Value x, Value y);

  // Smallest x with lo <= x <= hi and y >= bound, or nothing.
  [[nodiscard]] std::optional<Pair> min_x_in_rectangle(Value lo, Value hi, Value bound) const;

  // Largest x with lo <= x <= hi and y >= bound, or nothing.
  [[nodiscard]] std::optional<Pair> max_x_in_rectangle(Value lo, Value hi, Value bound) const;

  // Highest y with lo <= x <= hi (ties: smallest x), or nothing.
  [[nodiscard]] std::optional<Pair> max_y_in_range(Value lo, Value hi) const;

  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] bool empty() const { return size_ == 0; }

  // Tree height; 0 when empty. Exposed so tests can pin the balance bound.
  [[nodiscard]] int height() const;

  // Full structural audit (ordering, balance, cached bests, size). Throws
  // contract_error on any breach. Test hook, linear time.
  void validate() const;

  // All pairs in increasing x order. Test and debug hook, linear time.
  [[nodiscard]] std::vector<Pair> to_vector() const;

 private:
  Node* root_ = nullptr;
  std::size_t size_ = 0;
};

}  // namespace rlz

// Copyright the rlz contributors. MIT license, see LICENSE in the project root.
#include "rlz/pst.hpp"

#include <algorithm>
#include <cstdlib>

#include "rlz/contract.hpp"

namespace rlz {

struct PstPairSet::Node {
  Value x;
  Value y;
  Node* left = nullptr;
  Node* right = nullptr;
  int height = 1;
  // Best pair in this subtree: largest y, ties toward smaller x. Since the
  // in-order sequence is sorted by x, combining left / self / right in that
  // order with a strict-greater test realizes the tie rule.
  Value best_x;
  Value best_y;

  Node(Value xx, Value yy) : x(xx), y(yy), best_x(xx), best_y(yy) {}
};

namespace {

using Node = PstPairSet::Node;
using Value = PstPairSet::Value;
using Pair = PstPairSet::Pair;

int height_of(const Node* n) { return n ? n->height : 0; }

void pull(Node* n) {
  n->height = 1 + std::max(height_of(n->left), height_of(n->right));
  n->best_x = n->x;
  n->best_y = n->y;
  // The left subtree holds the smaller x keys, so it wins ties; the right
  // subtree loses them.
  if (n->left && n->left->best_y >= n->best_y) {
    n->best_x = n->left->best_x;
    n->best_y = n->left->best_y;
  }
  if (n->right && n->right->best_y > n->best_y) {
    n->best_x = n->right->best_x;
    n->best_y = n->right->best_y;
  }
}

Node* rotate_right(Node* n) {
  Node* l = n->left;
  n->left = l->right;
  l->right = n;
  pull(n);
  pull(l);
  return l;
}

Node* rotate_left(Node* n) {
  Node* r = n->right;
  n->right = r->left;
  r->left = n;
  pull(n);
  pull(r);
  return r;
}

Node* rebalance(Node* n) {
  pull(n);
  const int bf = height_of(n->left) - height_of(n->right);
  if (bf > 1) {
    if (height_of(n->left->left) < height_of(n->left->right)) n->left = rotate_left(n->left);
    return rotate_right(n);
  }
  if (bf < -1) {
    if (height_of(n->right->right) < height_of(n->right->left)) n->right = rotate_right(n->right);
    return rotate_left(n);
  }
  return n;
}

Node* insert_rec(Node* n, Value x, Value y) {
  if (!n) return new Node(x, y);
  RLZ_REQUIRE(x != n->x, "PstPairSet::insert: x key already present");
  if (x < n->x)
    n->left = insert_rec(n->left, x, y);
  else
    n->right = insert_rec(n->right, x, y);
  return rebalance(n);
}

Node* detach_min(Node* n, Node** out) {
  if (!n->left) {
    *out = n;
    return n->right;
  }
  n->left = detach_min(n->left, out);
  return rebalance(n);
}

Node* erase_rec(Node* n, Value x, Value y) {
  RLZ_REQUIRE(n != nullptr, "PstPairSet::erase: pair not present");
  if (x < n->x) {
    n->left = erase_rec(n->left, x, y);
    return rebalance(n);
  }
  if (n->x < x) {
    n->right = erase_rec(n->right, x, y);
    return rebalance(n);
  }
  RLZ_REQUIRE(n->y == y, "PstPairSet::erase: pair not present");
  if (!n->left || !n->right) {
    Node* child = n->left ? n->left : n->right;
    delete n;
    return child;
  }
  Node* succ = nullptr;
  Node* right = detach_min(n->right, &succ);
  succ->left = n->left;
  succ->right = right;
  delete n;
  return rebalance(succ);
}

void destroy(Node* n) {
  if (!n) return;
  destroy(n->left);
  destroy(n->right);
  delete n;
}

// Leftmost pair with y >= bound, no x constraint.
const Node* leftmost_tall(const Node* n, Value bound) {
  if (!n || n->best_y < bound) return nullptr;
  if (const Node* r = leftmost_tall(n->left, bound)) return r;
  if (n->y >= bound) return n;
  return leftmost_tall(n->right, bound);
}

// Rightmost pair with y >= bound, no x constraint.
const Node* rightmost_tall(const Node* n, Value bound) {
  if (!n || n->best_y < bound) return nullptr;
  if (const Node* r = rightmost_tall(n->right, bound)) return r;
  if (n->y >= bound) return n;
  return rightmost_tall(n->left, bound);
}

// Leftmost pair with x >= lo and y >= bound. Follows the lo boundary path;
// off-path subtrees are either rejected in O(1) via best_y or resolved by a
// single leftmost_tall descent, so the total is O(height).
const Node* leftmost_tall_from(const Node* n, Value lo, Value bound) {
  if (!n || n->best_y < bound) return nullptr;
  if (n->x < lo) return leftmost_tall_from(n->right, lo, bound);
  if (const Node* r = leftmost_tall_from(n->left, lo, bound)) return r;
  if (n->y >= bound) return n;
  return leftmost_tall(n->right, bound);
}

// Leftmost pair with x <= hi and y >= bound.
const Node* leftmost_tall_until(const Node* n, Value hi, Value bound) {
  if (!n || n->best_y < bound) return nullptr;
  if (n->x > hi) return leftmost_tall_until(n->left, hi, bound);
  if (const Node* r = leftmost_tall(n->left, bound)) return r;
  if (n->y >= bound) return n;
  return leftmost_tall_until(n->right, hi, bound);
}

// Rightmost pair with x <= hi and y >= bound.
const Node* rightmost_tall_until(const Node* n, Value hi, Value bound) {
  if (!n || n->best_y < bound) return nullptr;
  if (n->x > hi) return rightmost_tall_until(n->left, hi, bound);
  if (const Node* r = rightmost_tall_until(n->right, hi, bound)) return r;
  if (n->y >= bound) return n;
  return rightmost_tall(n->left, bound);
}

// Rightmost pair with x >= lo and y >= bound.
const Node* rightmost_tall_from(const Node* n, Value lo, Value bound) {
  if (!n || n->best_y < bound) return nullptr;
  if (n->x < lo) return rightmost_tall_from(n->right, lo, bound);
  if (const Node* r = rightmost_tall(n->right, bound)) return r;
  if (n->y >= bound) return n;
  return rightmost_tall_from(n->left, lo, bound);
}

const Node* min_x_rec(const Node* n, Value lo, Value hi, Value bound) {
  if (!n || n->best_y < bound) return nullptr;
  if (n->x < lo) return min_x_rec(n->right, lo, hi, bound);
  if (n->x > hi) return min_x_rec(n->left, lo, hi, bound);
  // lo <= n->x <= hi: the left arm is bounded below only, the right arm
  // bounded above only.
  if (const Node* r = leftmost_tall_from(n->left, lo, bound)) return r;
  if (n->y >= bound) return n;
  return leftmost_tall_until(n->right, hi, bound);
}

const Node* max_x_rec(const Node* n, Value lo, Value hi, Value bound) {
  if (!n || n->best_y < bound) return nullptr;
  if (n->x < lo) return max_x_rec(n->right, lo, hi, bound);
  if (n->x > hi) return max_x_rec(n->left, lo, hi, bound);
  if (const Node* r = rightmost_tall_until(n->right, hi, bound)) return r;
  if (n->y >= bound) return n;
  return rightmost_tall_from(n->left, lo, bound);
}

void consider(std::optional<Pair>& best, Value x, Value y) {
  // Candidates arrive in increasing x order, so strict-greater keeps the
  // smallest x among equal-y pairs.
  if (!best || y > best->y) best = Pair{x, y};
}

// Best pair with x >= lo (whole subtree bounded above by the caller).
void max_y_from(const Node* n, Value lo, std::optional<Pair>& best) {
  if (!n) return;
  if (n->x < lo) {
    max_y_from(n->right, lo, best);
    return;
  }
  max_y_from(n->left, lo, best);
  consider(best, n->x, n->y);
  if (n->right) consider(best, n->right->best_x, n->right->best_y);
}

// Best pair with x <= hi.
void max_y_until(const Node* n, Value hi, std::optional<Pair>& best) {
  if (!n) return;
  if (n->x > hi) {
    max_y_until(n->left, hi, best);
    return;
  }
  if (n->left) consider(best, n->left->best_x, n->left->best_y);
  consider(best, n->x, n->y);
  max_y_until(n->right, hi, best);
}

void max_y_rec(const Node* n, Value lo, Value hi, std::optional<Pair>& best) {
  if (!n) return;
  if (n->x < lo) {
    max_y_rec(n->right, lo, hi, best);
    return;
  }
  if (n->x > hi) {
    max_y_rec(n->left, lo, hi, best);
    return;
  }
  max_y_from(n->left, lo, best);
  consider(best, n->x, n->y);
  // max_y_until visits in x order too, but its candidates all lie right of
  // everything recorded so far, so the combined tie rule still holds.
  std::optional<Pair> right;
  max_y_until(n->right, hi, right);
  if (right) consider(best, right->x, right->y);
}

struct AuditResult {
  Value min_x, max_x;
  Value best_x, best_y;
  std::size_t count;
  int height;
};

AuditResult audit(const Node* n) {
  AuditResult res{n->x, n->x, n->x, n->y, 1, 1};
  if (n->left) {
    AuditResult l = audit(n->left);
    RLZ_REQUIRE(l.max_x < n->x, "PstPairSet::validate: x order broken");
    res.min_x = l.min_x;
    if (l.best_y >= res.best_y) {
      res.best_x = l.best_x;
      res.best_y = l.best_y;
    }
    res.count += l.count;
    res.height = std::max(res.height, l.height + 1);
  }
  if (n->right) {
    AuditResult r = audit(n->right);
    RLZ_REQUIRE(n->x < r.min_x, "PstPairSet::validate: x order broken");
    res.max_x = r.max_x;
    if (r.best_y > res.best_y) {
      res.best_x = r.best_x;
      res.best_y = r.best_y;
    }
    res.count += r.count;
    res.height = std::max(res.height, r.height + 1);
  }
  RLZ_REQUIRE(res.height == n->height, "PstPairSet::validate: stale height");
  RLZ_REQUIRE(std::abs(height_of(n->left) - height_of(n->right)) <= 1,
              "PstPairSet::validate: balance factor out of range");
  RLZ_REQUIRE(res.best_x == n->best_x && res.best_y == n->best_y,
              "PstPairSet::validate: stale best pair");
  return res;
}

void collect(const Node* n, std::vector<Pair>& out) {
  if (!n) return;
  collect(n->left, out);
  out.push_back({n->x, n->y});
  collect(n->right, out);
}

}  // namespace

PstPairSet::~PstPairSet() { destroy(root_); }

PstPairSet::PstPairSet(PstPairSet&& other) noexcept : root_(other.root_), size_(other.size_) {
  other.root_ = nullptr;
  other.size_ = 0;
}

PstPairSet& PstPairSet::operator=(PstPairSet&& other) noexcept {
  if (this != &other) {
    destroy(root_);
    root_ = other.root_;
    size_ = other.size_;
    other.root_ = nullptr;
    other.size_ = 0;
  }
  return *this;
}

void PstPairSet::insert(Value x, Value y) {
  root_ = insert_rec(root_, x, y);
  ++size_;
}

void PstPairSet::erase(Value x, Value y) {
  root_ = erase_rec(root_, x, y);
  --size_;
}

std::optional<PstPairSet::Pair> PstPairSet::min_x_in_rectangle(Value lo, Value hi,
                                                               Value bound) const {
  RLZ_REQUIRE(lo <= hi, "PstPairSet::min_x_in_rectangle: empty x interval");
  const Node* n = min_x_rec(root_, lo, hi, bound);
  if (!n) return std::nullopt;
  return Pair{n->x, n->y};
}

std::optional<PstPairSet::Pair> PstPairSet::max_x_in_rectangle(Value lo, Value hi,
                                                               Value bound) const {
  RLZ_REQUIRE(lo <= hi, "PstPairSet::max_x_in_rectangle: empty x interval");
  const Node* n = max_x_rec(root_, lo, hi, bound);
  if (!n) return std::nullopt;
  return Pair{n->x, n->y};
}

std::optional<PstPairSet::Pair> PstPairSet::max_y_in_range(Value lo, Value hi) const {
  RLZ_REQUIRE(lo <= hi, "PstPairSet::max_y_in_range: empty x interval");
  std::optional<Pair> best;
  max_y_rec(root_, lo, hi, best);
  return best;
}

int PstPairSet::height() const { return height_of(root_); }

void PstPairSet::validate() const {
  if (!root_) {
    RLZ_REQUIRE(size_ == 0, "PstPairSet::validate: size mismatch");
    return;
  }
  AuditResult res = audit(root_);
  RLZ_REQUIRE(res.count == size_, "PstPairSet::validate: size mismatch");
}

std::vector<PstPairSet::Pair> PstPairSet::to_vector() const {
  std::vector<Pair> out;
  out.reserve(size_);
  collect(root_, out);
  return out;
}

}  // namespace rlz

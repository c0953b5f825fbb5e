#pragma once

// Batanin trees, their positions, and the linear (zigzag) encoding of
// globular cardinals.

#include <algorithm>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "cattkit/globular.hpp"

namespace cattkit {

class BataninTree {
 public:
  BataninTree() = default;  // br[]
  explicit BataninTree(std::vector<BataninTree> children) : children_(std::move(children)) {}

  const std::vector<BataninTree>& children() const noexcept { return children_; }
  bool is_leaf() const noexcept { return children_.empty(); }

  friend bool operator==(const BataninTree&, const BataninTree&) = default;
  friend std::strong_ordering operator<=>(const BataninTree& a, const BataninTree& b) {
    return std::lexicographical_compare_three_way(a.children_.begin(), a.children_.end(),
                                                  b.children_.begin(), b.children_.end());
  }

 private:
  std::vector<BataninTree> children_;
};

int dim_tree(const BataninTree& b);
/// ∂_0 B = br[], ∂_{k+1} br[B_1..B_n] = br[∂_k B_1 .. ∂_k B_n].
BataninTree boundary_tree(const BataninTree& b, std::size_t k);
/// Number of positions (cells of Pos(B)): 2·edges + 1.
std::size_t position_count(const BataninTree& b);

/// `br[br[br[]],br[]]`
std::string to_string(const BataninTree& b);
/// Whitespace-insensitive inverse of to_string; throws InvalidTree.
BataninTree parse_tree(std::string_view text);

/// Pos(B) as a canonical cardinal: within each dimension, position indices
/// follow the Sol order.
struct PosSet {
  BataninTree tree;
  GlobCardinal cardinal;
};

/// Pos(br[B_1..B_n]) = ⋁ Σ Pos(B_i).
PosSet pos(const BataninTree& b);
/// s^B_k, t^B_k : Pos(∂_k B) → Pos(B).
GlobMorphism src_pos(const BataninTree& b, std::size_t k);
GlobMorphism tgt_pos(const BataninTree& b, std::size_t k);

/// A smooth zigzag sequence: starts and ends at 0, unit steps.
class Zigzag {
 public:
  /// Throws NotSmooth.
  static Zigzag make(std::vector<std::size_t> values);

  const std::vector<std::size_t>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::size_t operator[](std::size_t i) const { return values_.at(i); }

  friend bool operator==(const Zigzag&, const Zigzag&) = default;
  friend auto operator<=>(const Zigzag&, const Zigzag&) = default;

 private:
  explicit Zigzag(std::vector<std::size_t> values) : values_(std::move(values)) {}
  std::vector<std::size_t> values_;
};

bool is_smooth(const std::vector<std::size_t>& values);

/// `(0,1,2,1,0,1,0)`
std::string to_string(const Zigzag& z);
/// Inverse of to_string (whitespace-insensitive); throws NotSmooth or InvalidTree.
Zigzag parse_zigzag(std::string_view text);

/// Dimensions of the cells in Sol order.
Zigzag zig(const GlobCardinal& x);
/// Card(m): k-cells are the indices i with m_i = k;
/// src(i) = max{j < i | m_j = m_i − 1}, tgt(i) = min{j > i | m_j = m_i − 1}.
GlobCardinal card(const Zigzag& m);
/// Splits at the zeroes and recurses on each block lowered by one.
BataninTree tree_of_zig(const Zigzag& m);
/// Zig ∘ Pos computed by the concatenation formula, without building Pos(B).
Zigzag zig_of_tree(const BataninTree& b);

/// All smooth zigzag sequences of the given length (empty for even lengths),
/// in lexicographic order.
std::vector<Zigzag> enumerate_zigzags(std::size_t length);
/// All trees with at most `max_positions` positions (exactly, if `exact`),
/// ordered by position count then zigzag; no duplicates.
std::vector<BataninTree> enumerate_trees(std::size_t max_positions, bool exact = false);

}  // namespace cattkit

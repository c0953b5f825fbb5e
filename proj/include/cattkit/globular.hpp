#pragma once

// Finite globular sets and globular cardinals.
//
// Cells are addressed by (dimension, dense index within that dimension).
// Every construction goes through GlobSet::add_cell, which enforces
// globularity, so a GlobSet value is always a globular set.

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "cattkit/error.hpp"

namespace cattkit {

struct CellRef {
  int dim = 0;
  std::size_t index = 0;

  friend auto operator<=>(const CellRef&, const CellRef&) = default;
};

class GlobSet {
 public:
  /// -1 for the empty globular set.
  int dim() const noexcept { return static_cast<int>(levels_.size()) - 1; }
  bool empty() const noexcept { return levels_.empty(); }
  std::size_t count(int n) const noexcept;
  std::size_t total() const noexcept;

  /// Precondition: c.dim >= 1.
  CellRef src(CellRef c) const;
  CellRef tgt(CellRef c) const;
  bool contains(CellRef c) const noexcept;

  /// All cells, ordered by dimension then index.
  std::vector<CellRef> cells() const;

  CellRef add_point();
  /// Adds an n-cell (n >= 1) from (n-1)-cell `src` to (n-1)-cell `tgt`.
  /// Throws NotParallel unless src and tgt exist and share their boundary.
  CellRef add_cell(int n, std::size_t src, std::size_t tgt);

  friend bool operator==(const GlobSet&, const GlobSet&) = default;

 private:
  struct Level {
    std::size_t count = 0;
    std::vector<std::size_t> src;
    std::vector<std::size_t> tgt;
    friend bool operator==(const Level&, const Level&) = default;
  };
  std::vector<Level> levels_;
};

/// A morphism of globular sets, one index map per dimension.
struct GlobMorphism {
  std::vector<std::vector<std::size_t>> maps;

  CellRef operator()(CellRef c) const;

  static GlobMorphism identity(const GlobSet& x);
  /// Throws InvalidMorphism unless sizes match and src/tgt commute.
  void validate(const GlobSet& domain, const GlobSet& codomain) const;
  std::vector<CellRef> image() const;

  friend bool operator==(const GlobMorphism&, const GlobMorphism&) = default;
};

/// g ∘ f
GlobMorphism compose(const GlobMorphism& g, const GlobMorphism& f);

/// The n-disk D^n; n >= 0.
GlobSet disk(int n);
/// The sphere S^n = D^{n+1} without its top cell; n >= -1 (S^{-1} is empty).
GlobSet sphere(int n);
/// ι_n : S^{n-1} → D^n.
GlobMorphism iota(int n);

/// The Sol order: the reflexive-transitive closure of src x ≺ x ≺ tgt x.
/// Returns the cells in increasing order, or throws NotCardinal when the
/// closure is not a non-empty total order.
std::vector<CellRef> sol_order(const GlobSet& x);

class GlobCardinal {
 public:
  /// Throws NotCardinal.
  static GlobCardinal from(GlobSet x);

  const GlobSet& set() const noexcept { return set_; }
  const std::vector<CellRef>& order() const noexcept { return order_; }
  std::size_t size() const noexcept { return order_.size(); }
  std::size_t rank(CellRef c) const;
  CellRef at(std::size_t rank) const { return order_.at(rank); }
  int dim() const noexcept { return set_.dim(); }
  CellRef min() const { return order_.front(); }
  CellRef max() const { return order_.back(); }
  /// Indices within each dimension increase along the Sol order.
  bool is_canonical() const;

  friend bool operator==(const GlobCardinal& a, const GlobCardinal& b) { return a.set_ == b.set_; }

 private:
  GlobCardinal() = default;
  GlobSet set_;
  std::vector<CellRef> order_;
  std::vector<std::vector<std::size_t>> rank_;
};

/// The rank-preserving bijection, if it is a morphism (hence an isomorphism).
std::optional<GlobMorphism> cardinal_iso(const GlobCardinal& a, const GlobCardinal& b);

/// Relabels cells so that the cardinal is canonical; returns it with the
/// isomorphism from the input.
std::pair<GlobCardinal, GlobMorphism> canonical(const GlobCardinal& x);

struct CardBoundary {
  GlobCardinal cardinal;
  GlobMorphism source;  // least representative of each class
  GlobMorphism target;  // greatest representative
};

/// ∂_k X: cells below k, k-cells up to "same source and target", nothing above.
CardBoundary boundary(const GlobCardinal& x, std::size_t k);
GlobCardinal boundary_card(const GlobCardinal& x, std::size_t k);
GlobMorphism src_incl(const GlobCardinal& x, std::size_t k);
GlobMorphism tgt_incl(const GlobCardinal& x, std::size_t k);

struct Bipointed {
  GlobSet set;
  std::size_t minus = 0;  // 0-cell indices
  std::size_t plus = 0;

  friend bool operator==(const Bipointed&, const Bipointed&) = default;
};

/// D^0 with both basepoints at its only cell: the unit of the wedge sum.
Bipointed wedge_unit();
/// D^1 with its source and target as basepoints.
Bipointed disk1_bipointed();

/// ΣX: two new 0-cells v- (index 0) and v+ (index 1), every n-cell of X
/// becomes an (n+1)-cell, 0-cells of X go from v- to v+.
Bipointed suspend(const GlobSet& x);
/// Σf : ΣX → ΣY.
GlobMorphism suspend(const GlobMorphism& f);

struct WedgeSum {
  Bipointed sum;
  std::vector<GlobMorphism> injections;
};

/// X_1 ∨ ... ∨ X_n, gluing the plus point of each summand to the minus point
/// of the next; the empty wedge is wedge_unit().
WedgeSum wedge(const std::vector<Bipointed>& parts);
Bipointed wedge(const Bipointed& x, const Bipointed& y);
/// f_1 ∨ ... ∨ f_n between two wedge sums with the same number of summands.
/// Throws InvalidMorphism if the parts disagree on a glued basepoint.
GlobMorphism wedge_map(const WedgeSum& domain, const WedgeSum& codomain,
                       const std::vector<GlobMorphism>& parts);

/// A parallel pair of (dim)-cells, or the unit sphere when dim == -1.
struct GlobSphere {
  int dim = -1;
  std::size_t src = 0;
  std::size_t tgt = 0;
};

struct GlobExtension {
  GlobSet set;
  CellRef cell;
  GlobMorphism projection;  // X → X.A
};

/// X.A: adjoins an (A.dim + 1)-cell bounded by A. Throws NotParallel.
GlobExtension extend_glob(const GlobSet& x, const GlobSphere& a);

}  // namespace cattkit

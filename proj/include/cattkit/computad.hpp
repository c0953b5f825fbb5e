#pragma once

// Finite computads for weak ω-categories.
//
// A computad is a stratified table of generators, each attached along a
// sphere of the free ω-category on the generators below it. Cells of that
// free ω-category are intensional syntax trees (generators and coherences)
// and are never enumerated; membership is decided by check_cell.

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "cattkit/batanin.hpp"

namespace cattkit {

struct GenRef {
  int dim = 0;
  std::size_t index = 0;

  friend auto operator<=>(const GenRef&, const GenRef&) = default;
};

using GenSet = std::set<GenRef>;

class Cell;
class Sphere;
struct CompMorphism;

/// An n-cell: `var v` for a generator v, or `coh(B, A, f)` with a Batanin
/// tree B, a full (n-1)-sphere A over Free Pos(B) and a morphism
/// f : Free Pos(B) → C given on positions.
class Cell {
 public:
  static Cell gen(GenRef g);
  static Cell coh(BataninTree tree, Sphere sphere, CompMorphism map);

  bool is_gen() const noexcept;
  bool is_coh() const noexcept { return !is_gen(); }
  int dim() const noexcept;

  GenRef generator() const;         // is_gen()
  const BataninTree& tree() const;  // is_coh()
  const Sphere& sphere() const;
  const CompMorphism& map() const;

  friend bool operator==(const Cell& a, const Cell& b);

 private:
  struct CohNode;
  GenRef gen_{};
  std::shared_ptr<const CohNode> coh_;
};

/// A pair of parallel n-cells, or the unit (-1)-sphere.
class Sphere {
 public:
  Sphere() = default;  // unit
  static Sphere unit() { return Sphere(); }
  /// Does not check parallelism; see check_sphere.
  static Sphere make(Cell src, Cell tgt);

  int dim() const noexcept { return dim_; }
  bool is_unit() const noexcept { return dim_ < 0; }
  const Cell& src() const;
  const Cell& tgt() const;

  friend bool operator==(const Sphere& a, const Sphere& b);

 private:
  int dim_ = -1;
  std::shared_ptr<const std::pair<Cell, Cell>> cells_;
};

/// f : C → D given generator-wise: images[n][i] is the n-cell of D that the
/// i-th n-generator of C goes to.
struct CompMorphism {
  std::vector<std::vector<Cell>> images;

  const Cell& operator()(GenRef g) const;
  std::size_t count(int n) const noexcept;

  friend bool operator==(const CompMorphism& a, const CompMorphism& b) = default;
};

class Computad {
 public:
  int dim() const noexcept { return static_cast<int>(attach_.size()) - 1; }
  bool empty() const noexcept { return attach_.empty(); }
  std::size_t count(int n) const noexcept;
  std::size_t total() const noexcept;
  bool contains(GenRef g) const noexcept { return g.dim >= 0 && g.index < count(g.dim); }
  const Sphere& attach(GenRef g) const;
  std::vector<GenRef> generators() const;

  /// Appends a generator attached along `s` (dimension s.dim() + 1) without
  /// validation. Prefer extend_comp.
  GenRef add_generator(Sphere s);
  /// The computad without generator g. Precondition: g has maximal dimension.
  Computad without(GenRef g) const;

  friend bool operator==(const Computad&, const Computad&) = default;

 private:
  std::vector<std::vector<Sphere>> attach_;
};

// --- structure --------------------------------------------------------------

/// bdry(var v) = φ(v); bdry(coh(B, A, f)) = Sphere(f)(A).
Sphere bdry(const Computad& c, const Cell& cell);

/// Cell_n(g): var v ↦ g(v), coh(B, A, f) ↦ coh(B, A, g ∘ f).
Cell apply_cell(const CompMorphism& g, const Cell& cell);
Sphere apply_sphere(const CompMorphism& g, const Sphere& s);
/// g ∘ f
CompMorphism compose(const CompMorphism& g, const CompMorphism& f);
CompMorphism identity(const Computad& c);

/// Free X: generators are the cells of X attached along (var src, var tgt).
Computad free(const GlobSet& x);
/// Free f : Free X → Free Y.
CompMorphism free(const GlobMorphism& f);

/// The generators of Free Pos(B) are its positions.
const Computad& position_computad(const BataninTree& b);

// --- support and fullness ---------------------------------------------------

/// supp_n: the n-dimensional generators a cell uses; n = cell.dim().
GenSet support(const Cell& cell, int n);
/// Every generator a cell depends on, in any dimension: a generator and
/// everything below it, or the union over all positions of a coherence.
GenSet full_support(const Computad& c, const Cell& cell);
GenSet full_support(const Computad& c, const Sphere& s);

/// A sphere over Free Pos(B) is full when the supports of its cells are
/// exactly the top positions in the images of s^B_n and t^B_n, and its
/// boundary is full. The unit sphere is full.
bool is_full(const BataninTree& b, const Sphere& s);

// --- validity ---------------------------------------------------------------

void check_cell(const Computad& c, const Cell& cell);
void check_sphere(const Computad& c, const Sphere& s);
/// Throws InvalidMorphism unless f assigns to every generator of `domain` a
/// cell of `codomain` of its dimension whose boundary is the image of its
/// attaching sphere.
void check_morphism(const Computad& domain, const Computad& codomain, const CompMorphism& f);
void check_computad(const Computad& c);

// --- extension --------------------------------------------------------------

struct CompExtension {
  Computad computad;
  GenRef generator;
  CompMorphism projection;  // C → C.A
};

/// C.A: adjoins a generator of dimension A.dim() + 1. Throws InvalidSphere.
CompExtension extend_comp(const Computad& c, const Sphere& a);
/// ⟨γ, u⟩ : C.A → D for γ : C → D and a cell u of D with bdry u = Sphere(γ)(A).
/// Throws DomainMismatch.
CompMorphism pair_morphism(const CompExtension& ext, const Computad& d, const CompMorphism& gamma, const Cell& u);

// --- isomorphism ------------------------------------------------------------

/// A dimension-preserving bijection of generators: renaming[n][i] is the
/// index in D of the i-th n-generator of C.
using GenRenaming = std::vector<std::vector<std::size_t>>;

CompMorphism renaming_morphism(const GenRenaming& r);
/// Backtracking search for a bijection that commutes with attaching spheres.
std::optional<GenRenaming> iso_computads(const Computad& c, const Computad& d);

/// Human-readable rendering, positions/generators as `v<dim>.<index>`.
std::string debug_string(const Cell& cell);
std::string debug_string(const Sphere& s);

}  // namespace cattkit

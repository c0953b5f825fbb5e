#pragma once

// The comparison morphisms. V sends GSeTT contexts to globular sets, R sends
// CaTT contexts to computads; both identify the variables of a context with
// the cells (generators) they create, in order.

#include <map>
#include <vector>

#include "cattkit/batanin.hpp"
#include "cattkit/computad.hpp"
#include "cattkit/pasting.hpp"

namespace cattkit {

// --- V ----------------------------------------------------------------------

struct GlobTranslation {
  GlobSet set;
  std::vector<CellRef> cells;  // variable i ↦ cell
};

GlobTranslation v_ctx(const CheckedCtx& ctx);
/// Types are sent to parallel pairs; * to the unit sphere.
GlobSphere v_ty(const GlobTranslation& t, const Ty& ty);
/// Precondition: tm is a variable (GSeTT has no other terms).
CellRef v_tm(const GlobTranslation& t, const Tm& tm);
/// For γ : Δ → Γ, Vγ : VΓ → VΔ.
GlobMorphism v_sub(const Sub& sub, const GlobTranslation& delta, const GlobTranslation& gamma);

// --- pasting contexts and trees ---------------------------------------------

/// B_Γ = Tree(Zig(VΓ)).
BataninTree tree_of_psctx(const PsCtx& ps);
/// R^Bat_Γ : VΓ ≅ Pos(B_Γ) as a variable ↦ position table (Sol ranks agree).
std::vector<CellRef> r_bat(const PsCtx& ps);
/// The pasting context whose tree is B: one (pse) per ascent of the zigzag,
/// one (psd) per descent.
PsCtx psctx_of_tree(const BataninTree& b);

// --- R ----------------------------------------------------------------------

struct Translation {
  Ctx ctx;
  Computad computad;
  std::vector<GenRef> vars;             // variable i ↦ generator
  std::map<GenRef, std::size_t> index;  // generator ↦ variable

  /// Γ.A ↦ RΓ.(R A), literally through extend_comp.
  Translation extended(const Ty& ty) const;
};

Translation r_ctx(const CheckedCtx& ctx);
Sphere r_ty(const Translation& t, const Ty& ty);
/// R(coh_{Γ,A}[γ]) = coh(B_Γ, Free R^Bat_Γ ∘ R A, Rγ ∘ (Free R^Bat_Γ)^{-1}).
Cell r_tm(const Translation& t, const Tm& tm);
/// For γ : Δ → Γ, Rγ : RΓ → RΔ.
CompMorphism r_sub(const Sub& sub, const Translation& delta, const Translation& gamma);

/// Structural inverses; inputs must be valid over t.computad.
Ty inv_r_ty(const Translation& t, const Sphere& s);
Tm inv_r_tm(const Translation& t, const Cell& cell);

struct ContextOfComputad {
  CheckedCtx ctx;
  Translation translation;  // r_ctx(ctx)
  GenRenaming iso;          // C ≅ r_ctx(ctx)
};

/// Strips the top-dimensional generator with the largest index, recurses,
/// and re-extends along the pulled-back sphere. Generators therefore come
/// back in (dimension, index) order.
ContextOfComputad ctx_of_computad(const Computad& c);

}  // namespace cattkit

#pragma once

// CaTT: GSeTT plus the coherence constructor, guarded by the pasting-scheme
// premise and the variable-coverage side condition.

#include "cattkit/gsett.hpp"

namespace cattkit::catt {

/// Checks `coh` in context `ctx` against `expected` (rule coh).
CheckedTm check_coh(const CheckedCtx& ctx, const Tm& coh, const Ty& expected);

/// Type of a coherence node: its declared type under its substitution.
Ty infer_coh(const Ctx& ctx, const Tm& coh);

/// Unified side condition for `psctx ⊢ u ->_A v`, with k = dim(u ->_A v):
///   Var(s_k) = Var(u) ∪ Var(A)  and  Var(t_k) = Var(v) ∪ Var(A),
/// together with dim Γ <= k + 1, which the unified form does not imply.
/// Throws SideConditionFailedSource/Target carrying both index sets.
/// Preconditions: psctx is a pasting context and `ty` is a valid arrow in it.
void check_side_condition(const Ctx& psctx, const Ty& ty);

/// The two-variant formulation (dim Γ ≥ 1 with the (dim Γ − 1)-boundaries,
/// or full coverage of Γ on both sides). Same preconditions.
bool side_condition_two_variant(const Ctx& psctx, const Ty& ty);

CheckedCtx check_ctx(const Ctx& ctx);
CheckedTy check_ty(const CheckedCtx& ctx, const Ty& ty);
CheckedTm check_tm(const CheckedCtx& ctx, const Tm& tm, const Ty& ty);
CheckedSub check_sub(const CheckedCtx& domain, const Sub& sub, const CheckedCtx& codomain);

/// Synthesises and returns the checked type of `tm`.
CheckedTm infer(const CheckedCtx& ctx, const Tm& tm);

}  // namespace cattkit::catt

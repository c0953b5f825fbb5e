#include "cattkit/catt.hpp"

#include "cattkit/pasting.hpp"

namespace cattkit::catt {

void check_side_condition(const Ctx& psctx, const Ty& ty) {
  const PsCtx ps = check_ps(psctx);
  const auto k = static_cast<std::size_t>(ty.dim());
  const IndexSet base = vars_of(ty.base());

  // The unified condition only applies when dim Γ <= dim A + 1; above that it
  // would accept low-dimensional types over high-dimensional contexts.
  if (ps.dim() > ty.dim() + 1) {
    IndexSet source = vars_of(ty.src());
    source.insert(base.begin(), base.end());
    const auto top = static_cast<std::size_t>(ps.dim() - 1);
    const IndexSet s_top = boundary_vars(ps, top, Side::Source);
    throw Error(ErrorKind::SideConditionFailedSource,
                "context of dimension " + std::to_string(ps.dim()) + " admits no coherence of type dimension " +
                    std::to_string(ty.dim()))
        .with_sets(s_top, source);
  }

  IndexSet source = vars_of(ty.src());
  source.insert(base.begin(), base.end());
  const IndexSet s_k = boundary_vars(ps, k, Side::Source);
  if (s_k != source) {
    throw Error(ErrorKind::SideConditionFailedSource,
                "Var(s_" + std::to_string(k) + ") differs from Var(u) ∪ Var(A)")
        .with_sets(s_k, source);
  }

  IndexSet target = vars_of(ty.tgt());
  target.insert(base.begin(), base.end());
  const IndexSet t_k = boundary_vars(ps, k, Side::Target);
  if (t_k != target) {
    throw Error(ErrorKind::SideConditionFailedTarget,
                "Var(t_" + std::to_string(k) + ") differs from Var(v) ∪ Var(A)")
        .with_sets(t_k, target);
  }
}

bool side_condition_two_variant(const Ctx& psctx, const Ty& ty) {
  const PsCtx ps = check_ps(psctx);
  const IndexSet base = vars_of(ty.base());
  IndexSet source = vars_of(ty.src());
  source.insert(base.begin(), base.end());
  IndexSet target = vars_of(ty.tgt());
  target.insert(base.begin(), base.end());

  const int d = ps.dim();
  if (d >= 1) {
    const auto k = static_cast<std::size_t>(d - 1);
    if (boundary_vars(ps, k, Side::Source) == source && boundary_vars(ps, k, Side::Target) == target) {
      return true;
    }
  }
  const IndexSet all = vars_of(psctx);
  return all == source && all == target;
}

Ty infer_coh(const Ctx& ctx, const Tm& coh) {
  CATTKIT_ASSERT(coh.is_coh(), "infer_coh on a variable");
  const Ctx& psctx = coh.psctx();
  const Ty& ty = coh.coh_type();

  try {
    check_ps(psctx);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InternalInvariant) throw;
    throw Error(ErrorKind::NotPasting, "the context of a coherence must be a pasting scheme").caused_by(e);
  }
  if (!ty.is_arr()) throw Error(ErrorKind::TypeNotArrow, "the type of a coherence must be an arrow");
  detail::judge_ty(psctx, ty, Theory::CaTT);
  check_side_condition(psctx, ty);
  try {
    detail::judge_sub(ctx, coh.sub(), psctx, Theory::CaTT);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InternalInvariant) throw;
    throw Error(ErrorKind::SubstitutionIllTyped, "the substitution of a coherence is ill-typed").caused_by(e);
  }
  return subst_ty(ty, coh.sub());
}

CheckedTm check_coh(const CheckedCtx& ctx, const Tm& coh, const Ty& expected) {
  const Ty actual = infer_coh(ctx.ctx(), coh);
  if (!(actual == expected)) {
    throw Error(ErrorKind::AnnotationMismatch,
                "coherence has type " + debug_string(actual) + ", expected " + debug_string(expected));
  }
  return detail::Witness::tm(ctx, coh, expected);
}

CheckedCtx check_ctx(const Ctx& ctx) {
  detail::judge_ctx(ctx, Theory::CaTT);
  return detail::Witness::ctx(ctx, Theory::CaTT);
}

CheckedTy check_ty(const CheckedCtx& ctx, const Ty& ty) {
  detail::judge_ty(ctx.ctx(), ty, Theory::CaTT);
  return detail::Witness::ty(ctx, ty);
}

CheckedTm check_tm(const CheckedCtx& ctx, const Tm& tm, const Ty& ty) {
  detail::judge_tm(ctx.ctx(), tm, ty, Theory::CaTT);
  return detail::Witness::tm(ctx, tm, ty);
}

CheckedSub check_sub(const CheckedCtx& domain, const Sub& sub, const CheckedCtx& codomain) {
  detail::judge_sub(domain.ctx(), sub, codomain.ctx(), Theory::CaTT);
  return detail::Witness::sub(domain, sub, codomain);
}

CheckedTm infer(const CheckedCtx& ctx, const Tm& tm) {
  Ty ty = detail::infer_tm(ctx.ctx(), tm, Theory::CaTT);
  return detail::Witness::tm(ctx, tm, std::move(ty));
}

}  // namespace cattkit::catt

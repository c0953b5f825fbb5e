#include <span>
#include <string>

#include "cattkit/catt.hpp"
#include "cattkit/gsett.hpp"

namespace cattkit {
namespace detail {
namespace {

using Scope = std::span<const Ty>;

Ctx to_ctx(Scope scope) { return Ctx(std::vector<Ty>(scope.begin(), scope.end())); }

Ty infer(Scope scope, const Tm& tm, Theory theory) {
  if (tm.is_var()) {
    if (tm.index() >= scope.size()) {
      throw Error(ErrorKind::IndexOutOfRange, "variable #" + std::to_string(tm.index()) +
                                                  " is not bound in a context of length " +
                                                  std::to_string(scope.size()));
    }
    return scope[tm.index()];
  }
  if (theory == Theory::GSeTT) {
    throw Error(ErrorKind::CohNotAllowedInGSeTT, "GSeTT has no term constructors");
  }
  return catt::infer_coh(to_ctx(scope), tm);
}

void type(Scope scope, const Ty& ty, Theory theory) {
  if (ty.is_obj()) return;
  type(scope, ty.base(), theory);
  if (!(infer(scope, ty.src(), theory) == ty.base())) {
    throw Error(ErrorKind::SourceTypeMismatch,
                "source " + debug_string(ty.src()) + " does not have type " + debug_string(ty.base()));
  }
  if (!(infer(scope, ty.tgt(), theory) == ty.base())) {
    throw Error(ErrorKind::TargetTypeMismatch,
                "target " + debug_string(ty.tgt()) + " does not have type " + debug_string(ty.base()));
  }
}

void term(Scope scope, const Tm& tm, const Ty& ty, Theory theory) {
  const Ty actual = infer(scope, tm, theory);
  if (actual == ty) return;
  if (tm.is_var()) {
    throw Error(ErrorKind::VariableTypeMismatch, "variable #" + std::to_string(tm.index()) +
                                                     " has type " + debug_string(actual) +
                                                     ", expected " + debug_string(ty));
  }
  throw Error(ErrorKind::AnnotationMismatch,
              "coherence has type " + debug_string(actual) + ", expected " + debug_string(ty));
}

}  // namespace

void judge_ctx(const Ctx& ctx, Theory theory) {
  const Scope all(ctx.entries);
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    try {
      type(all.first(i), ctx[i], theory);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::InternalInvariant) throw;
      throw Error(ErrorKind::IllTypedEntry, "context entry " + std::to_string(i) + " is not a valid type")
          .at(i)
          .caused_by(e);
    }
  }
}

void judge_ty(const Ctx& ctx, const Ty& ty, Theory theory) { type(Scope(ctx.entries), ty, theory); }

Ty infer_tm(const Ctx& ctx, const Tm& tm, Theory theory) { return infer(Scope(ctx.entries), tm, theory); }

void judge_tm(const Ctx& ctx, const Tm& tm, const Ty& ty, Theory theory) {
  term(Scope(ctx.entries), tm, ty, theory);
}

void judge_sub(const Ctx& domain, const Sub& sub, const Ctx& codomain, Theory theory) {
  if (sub.size() != codomain.size()) {
    throw Error(ErrorKind::LengthMismatch, "substitution has " + std::to_string(sub.size()) +
                                               " entries for a context of length " +
                                               std::to_string(codomain.size()));
  }
  // Rule (sc) peels the last entry first; errors report the highest failing entry.
  for (std::size_t i = sub.size(); i-- > 0;) {
    try {
      term(Scope(domain.entries), sub[i], subst_ty(codomain[i], sub), theory);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::InternalInvariant) throw;
      throw Error(ErrorKind::EntryIllTyped, "substitution entry " + std::to_string(i) + " is ill-typed")
          .at(i)
          .caused_by(e);
    }
  }
}

}  // namespace detail

namespace gsett {

CheckedCtx check_ctx(const Ctx& ctx) {
  detail::judge_ctx(ctx, Theory::GSeTT);
  return detail::Witness::ctx(ctx, Theory::GSeTT);
}

CheckedTy check_ty(const CheckedCtx& ctx, const Ty& ty) {
  detail::judge_ty(ctx.ctx(), ty, Theory::GSeTT);
  return detail::Witness::ty(ctx, ty);
}

CheckedTm check_tm(const CheckedCtx& ctx, const Tm& tm, const Ty& ty) {
  detail::judge_tm(ctx.ctx(), tm, ty, Theory::GSeTT);
  return detail::Witness::tm(ctx, tm, ty);
}

CheckedSub check_sub(const CheckedCtx& domain, const Sub& sub, const CheckedCtx& codomain) {
  detail::judge_sub(domain.ctx(), sub, codomain.ctx(), Theory::GSeTT);
  return detail::Witness::sub(domain, sub, codomain);
}

}  // namespace gsett
}  // namespace cattkit

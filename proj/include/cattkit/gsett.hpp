#pragma once

// Judgements of GSeTT: valid contexts, types, terms and substitutions.
// The Checked* witnesses can only be produced by the checkers in this header
// and in catt.hpp.

#include "cattkit/syntax.hpp"

namespace cattkit {

enum class Theory { GSeTT, CaTT };

namespace detail {
struct Witness;
}

class CheckedCtx {
 public:
  const Ctx& ctx() const noexcept { return ctx_; }
  Theory theory() const noexcept { return theory_; }
  std::size_t size() const noexcept { return ctx_.size(); }
  int dim() const { return dim_ctx(ctx_); }

 private:
  friend struct detail::Witness;
  CheckedCtx(Ctx ctx, Theory theory) : ctx_(std::move(ctx)), theory_(theory) {}
  Ctx ctx_;
  Theory theory_;
};

class CheckedTy {
 public:
  const CheckedCtx& ctx() const noexcept { return ctx_; }
  const Ty& ty() const noexcept { return ty_; }

 private:
  friend struct detail::Witness;
  CheckedTy(CheckedCtx ctx, Ty ty) : ctx_(std::move(ctx)), ty_(std::move(ty)) {}
  CheckedCtx ctx_;
  Ty ty_;
};

class CheckedTm {
 public:
  const CheckedCtx& ctx() const noexcept { return ctx_; }
  const Tm& tm() const noexcept { return tm_; }
  const Ty& ty() const noexcept { return ty_; }

 private:
  friend struct detail::Witness;
  CheckedTm(CheckedCtx ctx, Tm tm, Ty ty) : ctx_(std::move(ctx)), tm_(std::move(tm)), ty_(std::move(ty)) {}
  CheckedCtx ctx_;
  Tm tm_;
  Ty ty_;
};

/// domain ⊢ sub : codomain
class CheckedSub {
 public:
  const CheckedCtx& domain() const noexcept { return domain_; }
  const CheckedCtx& codomain() const noexcept { return codomain_; }
  const Sub& sub() const noexcept { return sub_; }

 private:
  friend struct detail::Witness;
  CheckedSub(CheckedCtx domain, Sub sub, CheckedCtx codomain)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), sub_(std::move(sub)) {}
  CheckedCtx domain_;
  CheckedCtx codomain_;
  Sub sub_;
};

namespace gsett {

CheckedCtx check_ctx(const Ctx& ctx);
CheckedTy check_ty(const CheckedCtx& ctx, const Ty& ty);
/// Precondition: `ty` is valid in `ctx`.
CheckedTm check_tm(const CheckedCtx& ctx, const Tm& tm, const Ty& ty);
CheckedSub check_sub(const CheckedCtx& domain, const Sub& sub, const CheckedCtx& codomain);

}  // namespace gsett

namespace detail {

// Shared rule implementation; `theory` decides whether coherences are admitted.
struct Witness {
  static CheckedCtx ctx(Ctx ctx, Theory theory) { return CheckedCtx(std::move(ctx), theory); }
  static CheckedTy ty(CheckedCtx ctx, Ty ty) { return CheckedTy(std::move(ctx), std::move(ty)); }
  static CheckedTm tm(CheckedCtx ctx, Tm tm, Ty ty) {
    return CheckedTm(std::move(ctx), std::move(tm), std::move(ty));
  }
  static CheckedSub sub(CheckedCtx domain, Sub sub, CheckedCtx codomain) {
    return CheckedSub(std::move(domain), std::move(sub), std::move(codomain));
  }
};

void judge_ctx(const Ctx& ctx, Theory theory);
void judge_ty(const Ctx& ctx, const Ty& ty, Theory theory);
/// Synthesises the type of `tm`; for a variable that is its context entry.
Ty infer_tm(const Ctx& ctx, const Tm& tm, Theory theory);
void judge_tm(const Ctx& ctx, const Tm& tm, const Ty& ty, Theory theory);
void judge_sub(const Ctx& domain, const Sub& sub, const Ctx& codomain, Theory theory);

}  // namespace detail

}  // namespace cattkit

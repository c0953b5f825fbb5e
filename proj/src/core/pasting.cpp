#include "cattkit/pasting.hpp"

#include <sstream>

namespace cattkit {

std::string_view to_string(PsRule rule) {
  switch (rule) {
    case PsRule::Pss: return "pss";
    case PsRule::Pse: return "pse";
    case PsRule::Psd: return "psd";
    case PsRule::Ps: return "ps";
  }
  return "?";
}

std::vector<PsRule> PsDerivation::rules() const {
  std::vector<PsRule> out;
  out.reserve(steps_.size());
  for (const auto& s : steps_) out.push_back(s.rule);
  return out;
}

std::string PsDerivation::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < steps_.size();) {
    std::size_t j = i;
    while (j < steps_.size() && steps_[j].rule == steps_[i].rule) ++j;
    out << '(' << cattkit::to_string(steps_[i].rule) << ')';
    if (j - i > 1) out << '^' << (j - i);
    i = j;
  }
  return out.str();
}

namespace {

Error not_pasting(std::size_t position, const std::string& why) {
  return std::move(Error(ErrorKind::NotAPastingContext, "entry " + std::to_string(position) + ": " + why)
                       .at(position));
}

}  // namespace

PsCtx check_ps(const Ctx& ctx) {
  if (ctx.empty()) throw not_pasting(0, "the empty context is not a pasting scheme");
  if (!ctx[0].is_obj()) throw not_pasting(0, "a pasting scheme starts with an object");

  std::vector<PsStep> steps;
  std::size_t focus = 0;
  Ty focus_type = ctx[0];
  steps.push_back({PsRule::Pss, focus, focus_type});

  auto descend = [&] {
    // (psd): Γ ⊢ps f : x ->_A y  gives  Γ ⊢ps y : A.
    const Tm& target = focus_type.tgt();
    CATTKIT_ASSERT(target.is_var(), "pasting focus types only mention variables");
    focus = target.index();
    focus_type = Ty(focus_type.base());
    steps.push_back({PsRule::Psd, focus, focus_type});
  };

  std::size_t i = 1;
  while (i < ctx.size()) {
    const bool extends = i + 1 < ctx.size() && ctx[i] == focus_type &&
                         ctx[i + 1] == Ty::arr(focus_type, Tm::var(focus), Tm::var(i));
    if (extends) {
      focus = i + 1;
      focus_type = ctx[i + 1];
      steps.push_back({PsRule::Pse, focus, focus_type});
      i += 2;
    } else if (focus_type.is_arr()) {
      descend();
    } else if (i + 1 >= ctx.size()) {
      throw not_pasting(i, "dangling entry; variables arrive in (target, arrow) pairs");
    } else {
      throw not_pasting(i, "entries " + std::to_string(i) + "," + std::to_string(i + 1) +
                               " do not extend the pasting scheme at any focus");
    }
  }
  while (focus_type.is_arr()) descend();
  steps.push_back({PsRule::Ps, focus, focus_type});

  return PsCtx(gsett::check_ctx(ctx), PsDerivation(std::move(steps)));
}

namespace {

std::vector<std::size_t> boundary_variables(const PsCtx& ps, std::size_t k, Side side) {
  const Ctx& ctx = ps.ctx();
  const auto kk = static_cast<int>(k);
  std::vector<std::size_t> vars;
  for (const auto& step : ps.derivation().steps()) {
    switch (step.rule) {
      case PsRule::Pss:
        vars.push_back(step.focus);
        break;
      case PsRule::Pse: {
        const std::size_t f = step.focus;
        const std::size_t y = f - 1;
        // Dimension of the new cell y (the source focus has the same type).
        const int d = ctx[y].dim() + 1;
        if (d > kk) break;
        if (d < kk) {
          vars.push_back(y);
          vars.push_back(f);
        } else if (side == Side::Target) {
          CATTKIT_ASSERT(!vars.empty() && vars.back() == ctx[f].src().index(),
                         "target boundary ends with the extended focus");
          vars.back() = y;
        }
        break;
      }
      case PsRule::Psd:
      case PsRule::Ps:
        break;
    }
  }
  return vars;
}

Tm rename_tm(const Tm& tm, const std::vector<std::size_t>& position) {
  CATTKIT_ASSERT(tm.is_var(), "pasting contexts only mention variables");
  const std::size_t p = position.at(tm.index());
  CATTKIT_ASSERT(p != SIZE_MAX, "boundary entry refers to a dropped variable");
  return Tm::var(p);
}

Ty rename_ty(const Ty& ty, const std::vector<std::size_t>& position) {
  if (ty.is_obj()) return ty;
  return Ty::arr(rename_ty(ty.base(), position), rename_tm(ty.src(), position), rename_tm(ty.tgt(), position));
}

}  // namespace

PsBoundary boundary(const PsCtx& ps, std::size_t k, Side side) {
  auto inclusion = boundary_variables(ps, k, side);
  std::vector<std::size_t> position(ps.size(), SIZE_MAX);
  for (std::size_t j = 0; j < inclusion.size(); ++j) position[inclusion[j]] = j;
  Ctx out;
  for (auto v : inclusion) out.entries.push_back(rename_ty(ps.ctx()[v], position));
  return PsBoundary{check_ps(out), std::move(inclusion)};
}

PsCtx boundary_ctx(const PsCtx& ps, std::size_t k, Side side) { return boundary(ps, k, side).ctx; }

namespace {

CheckedSub inclusion_sub(const PsCtx& ps, std::size_t k, Side side) {
  auto b = boundary(ps, k, side);
  Sub sub;
  for (auto v : b.inclusion) sub.terms.push_back(Tm::var(v));
  return gsett::check_sub(ps.checked(), sub, b.ctx.checked());
}

}  // namespace

CheckedSub src_sub(const PsCtx& ps, std::size_t k) { return inclusion_sub(ps, k, Side::Source); }
CheckedSub tgt_sub(const PsCtx& ps, std::size_t k) { return inclusion_sub(ps, k, Side::Target); }

IndexSet boundary_vars(const PsCtx& ps, std::size_t k, Side side) {
  auto vars = boundary_variables(ps, k, side);
  return IndexSet(vars.begin(), vars.end());
}

}  // namespace cattkit

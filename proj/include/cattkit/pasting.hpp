#pragma once

// Pasting schemes: the judgement Γ ⊢ps, its (unique) derivation, the
// boundary contexts ∂±_k Γ and the source/target substitutions s_k, t_k.

#include <string>
#include <vector>

#include "cattkit/gsett.hpp"

namespace cattkit {

enum class PsRule { Pss, Pse, Psd, Ps };

std::string_view to_string(PsRule rule);

/// One rule application; `focus` is the variable on the right of ⊢ps after
/// the step (for Ps, the final 0-dimensional focus).
struct PsStep {
  PsRule rule;
  std::size_t focus;
  Ty focus_type;
};

class PsDerivation {
 public:
  PsDerivation() = default;
  explicit PsDerivation(std::vector<PsStep> steps) : steps_(std::move(steps)) {}

  const std::vector<PsStep>& steps() const noexcept { return steps_; }
  std::vector<PsRule> rules() const;
  /// Run-length form, e.g. "(pss)(pse)^2(psd)^2(pse)(psd)(ps)".
  std::string to_string() const;

 private:
  std::vector<PsStep> steps_;
};

enum class Side { Source, Target };

class PsCtx {
 public:
  const CheckedCtx& checked() const noexcept { return checked_; }
  const Ctx& ctx() const noexcept { return checked_.ctx(); }
  const PsDerivation& derivation() const noexcept { return derivation_; }
  std::size_t size() const noexcept { return checked_.size(); }
  int dim() const { return checked_.dim(); }

 private:
  friend PsCtx check_ps(const Ctx&);
  PsCtx(CheckedCtx checked, PsDerivation derivation)
      : checked_(std::move(checked)), derivation_(std::move(derivation)) {}
  CheckedCtx checked_;
  PsDerivation derivation_;
};

/// Reconstructs the unique derivation of Γ ⊢ps, scanning left to right.
/// Throws NotAPastingContext positioned at the offending entry.
PsCtx check_ps(const Ctx& ctx);

struct PsBoundary {
  PsCtx ctx;
  /// inclusion[j] is the variable of the original context that boundary
  /// variable j stands for.
  std::vector<std::size_t> inclusion;
};

PsBoundary boundary(const PsCtx& ps, std::size_t k, Side side);
PsCtx boundary_ctx(const PsCtx& ps, std::size_t k, Side side);

/// Γ ⊢ s_k : ∂⁻_k Γ  and  Γ ⊢ t_k : ∂⁺_k Γ.
CheckedSub src_sub(const PsCtx& ps, std::size_t k);
CheckedSub tgt_sub(const PsCtx& ps, std::size_t k);

/// Variables of Γ hit by s_k (resp. t_k).
IndexSet boundary_vars(const PsCtx& ps, std::size_t k, Side side);

}  // namespace cattkit

#pragma once

// Raw syntax of GSeTT and CaTT. Variables are De Bruijn levels: entry i of a
// context is referred to as Var(i) by every later entry, so weakening never
// renumbers anything. Values are immutable and cheap to copy.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "cattkit/error.hpp"

namespace cattkit {

class Tm;
class Ty;
struct Ctx;
struct Sub;

/// Either the base type `*` or an arrow `src ->_base tgt`.
class Ty {
 public:
  Ty() = default;  // `*`

  static Ty obj() { return Ty(); }
  static Ty arr(Ty base, Tm src, Tm tgt);

  bool is_obj() const noexcept { return arrow_ == nullptr; }
  bool is_arr() const noexcept { return arrow_ != nullptr; }

  // Precondition: is_arr().
  const Ty& base() const;
  const Tm& src() const;
  const Tm& tgt() const;

  /// dim(*) = -1, dim(u ->_A v) = dim A + 1.
  int dim() const noexcept;

  friend bool operator==(const Ty& a, const Ty& b);

 private:
  struct Arrow;
  std::shared_ptr<const Arrow> arrow_;
};

/// A variable or a coherence `coh_{psctx, ty}[sub]`. The coherence node
/// stores its pasting context inline, so terms are closed syntax.
class Tm {
 public:
  static Tm var(std::size_t index);
  static Tm coh(Ctx psctx, Ty ty, Sub sub);

  bool is_var() const noexcept { return coh_ == nullptr; }
  bool is_coh() const noexcept { return coh_ != nullptr; }

  std::size_t index() const;  // is_var()
  const Ctx& psctx() const;   // is_coh()
  const Ty& coh_type() const;
  const Sub& sub() const;

  friend bool operator==(const Tm& a, const Tm& b);

 private:
  struct CohNode;
  std::size_t index_ = 0;
  std::shared_ptr<const CohNode> coh_;
};

struct Ctx {
  std::vector<Ty> entries;

  Ctx() = default;
  explicit Ctx(std::vector<Ty> e) : entries(std::move(e)) {}

  std::size_t size() const noexcept { return entries.size(); }
  bool empty() const noexcept { return entries.empty(); }
  const Ty& operator[](std::size_t i) const { return entries.at(i); }
  Ctx extended(Ty ty) const;

  friend bool operator==(const Ctx& a, const Ctx& b) = default;
};

/// Positional substitution: terms[i] is the image of variable i of the
/// codomain context; the terms live in the domain context.
struct Sub {
  std::vector<Tm> terms;

  Sub() = default;
  explicit Sub(std::vector<Tm> t) : terms(std::move(t)) {}

  std::size_t size() const noexcept { return terms.size(); }
  const Tm& operator[](std::size_t i) const { return terms.at(i); }

  friend bool operator==(const Sub& a, const Sub& b) = default;
};

Sub identity_sub(std::size_t length);

/// A[g]. Throws IndexOutOfRange when A mentions a variable >= g.size().
Ty subst_ty(const Ty& ty, const Sub& g);
/// t[g]; coherences compose their own substitution with g.
Tm subst_tm(const Tm& tm, const Sub& g);
/// g ∘ d: entrywise g[i][d].
Sub compose_sub(const Sub& g, const Sub& d);

IndexSet vars_of(const Tm& tm);
IndexSet vars_of(const Ty& ty);
IndexSet vars_of(const Sub& sub);
IndexSet vars_of(const Ctx& ctx);

int dim_ty(const Ty& ty);
int dim_ctx(const Ctx& ctx);

/// Largest variable index mentioned plus one (0 for closed syntax).
std::size_t scope_of(const Ty& ty);
std::size_t scope_of(const Tm& tm);

/// Nesting depth of coherence constructors: 0 for variables.
int coh_depth(const Tm& tm);
int coh_depth(const Ty& ty);

// Unambiguous De Bruijn rendering, e.g. `coh[(*,*,#0->#1);#0->#1](#2,#3,#4)`.
// Structurally equal values render identically, so the text doubles as a key.
std::string debug_string(const Ty& ty);
std::string debug_string(const Tm& tm);
std::string debug_string(const Ctx& ctx);
std::string debug_string(const Sub& sub);

}  // namespace cattkit

#include "cattkit/syntax.hpp"

#include <algorithm>
#include <sstream>

namespace cattkit {

struct Ty::Arrow {
  Ty base;
  Tm src;
  Tm tgt;
  int dim;
};

struct Tm::CohNode {
  Ctx psctx;
  Ty ty;
  Sub sub;
};

Ty Ty::arr(Ty base, Tm src, Tm tgt) {
  Ty out;
  const int d = base.dim() + 1;
  out.arrow_ = std::make_shared<const Arrow>(Arrow{std::move(base), std::move(src), std::move(tgt), d});
  return out;
}

const Ty& Ty::base() const {
  CATTKIT_ASSERT(arrow_ != nullptr, "base() of *");
  return arrow_->base;
}
const Tm& Ty::src() const {
  CATTKIT_ASSERT(arrow_ != nullptr, "src() of *");
  return arrow_->src;
}
const Tm& Ty::tgt() const {
  CATTKIT_ASSERT(arrow_ != nullptr, "tgt() of *");
  return arrow_->tgt;
}

int Ty::dim() const noexcept { return arrow_ ? arrow_->dim : -1; }

bool operator==(const Ty& a, const Ty& b) {
  if (a.arrow_ == b.arrow_) return true;
  if (!a.arrow_ || !b.arrow_) return false;
  return a.arrow_->dim == b.arrow_->dim && a.arrow_->src == b.arrow_->src &&
         a.arrow_->tgt == b.arrow_->tgt && a.arrow_->base == b.arrow_->base;
}

Tm Tm::var(std::size_t index) {
  Tm out;
  out.index_ = index;
  return out;
}

Tm Tm::coh(Ctx psctx, Ty ty, Sub sub) {
  Tm out;
  out.coh_ = std::make_shared<const CohNode>(CohNode{std::move(psctx), std::move(ty), std::move(sub)});
  return out;
}

std::size_t Tm::index() const {
  CATTKIT_ASSERT(coh_ == nullptr, "index() of a coherence");
  return index_;
}
const Ctx& Tm::psctx() const {
  CATTKIT_ASSERT(coh_ != nullptr, "psctx() of a variable");
  return coh_->psctx;
}
const Ty& Tm::coh_type() const {
  CATTKIT_ASSERT(coh_ != nullptr, "coh_type() of a variable");
  return coh_->ty;
}
const Sub& Tm::sub() const {
  CATTKIT_ASSERT(coh_ != nullptr, "sub() of a variable");
  return coh_->sub;
}

bool operator==(const Tm& a, const Tm& b) {
  if (a.is_var() != b.is_var()) return false;
  if (a.is_var()) return a.index_ == b.index_;
  if (a.coh_ == b.coh_) return true;
  return a.coh_->sub == b.coh_->sub && a.coh_->ty == b.coh_->ty && a.coh_->psctx == b.coh_->psctx;
}

Ctx Ctx::extended(Ty ty) const {
  Ctx out = *this;
  out.entries.push_back(std::move(ty));
  return out;
}

Sub identity_sub(std::size_t length) {
  Sub out;
  out.terms.reserve(length);
  for (std::size_t i = 0; i < length; ++i) out.terms.push_back(Tm::var(i));
  return out;
}

Ty subst_ty(const Ty& ty, const Sub& g) {
  if (ty.is_obj()) return ty;
  return Ty::arr(subst_ty(ty.base(), g), subst_tm(ty.src(), g), subst_tm(ty.tgt(), g));
}

Tm subst_tm(const Tm& tm, const Sub& g) {
  if (tm.is_var()) {
    if (tm.index() >= g.size()) {
      throw Error(ErrorKind::IndexOutOfRange, "variable #" + std::to_string(tm.index()) +
                                                  " outside a substitution of length " +
                                                  std::to_string(g.size()));
    }
    return g.terms[tm.index()];
  }
  return Tm::coh(tm.psctx(), tm.coh_type(), compose_sub(tm.sub(), g));
}

Sub compose_sub(const Sub& g, const Sub& d) {
  Sub out;
  out.terms.reserve(g.size());
  for (const auto& t : g.terms) out.terms.push_back(subst_tm(t, d));
  return out;
}

namespace {

void collect(const Tm& tm, IndexSet& out);

void collect(const Ty& ty, IndexSet& out) {
  if (ty.is_obj()) return;
  collect(ty.base(), out);
  collect(ty.src(), out);
  collect(ty.tgt(), out);
}

void collect(const Sub& sub, IndexSet& out) {
  for (const auto& t : sub.terms) collect(t, out);
}

void collect(const Tm& tm, IndexSet& out) {
  if (tm.is_var()) {
    out.insert(tm.index());
  } else {
    collect(tm.sub(), out);
  }
}

}  // namespace

IndexSet vars_of(const Tm& tm) {
  IndexSet out;
  collect(tm, out);
  return out;
}

IndexSet vars_of(const Ty& ty) {
  IndexSet out;
  collect(ty, out);
  return out;
}

IndexSet vars_of(const Sub& sub) {
  IndexSet out;
  collect(sub, out);
  return out;
}

IndexSet vars_of(const Ctx& ctx) {
  IndexSet out;
  for (std::size_t i = 0; i < ctx.size(); ++i) out.insert(out.end(), i);
  return out;
}

int dim_ty(const Ty& ty) { return ty.dim(); }

int dim_ctx(const Ctx& ctx) {
  int d = -1;
  for (const auto& ty : ctx.entries) d = std::max(d, ty.dim() + 1);
  return d;
}

std::size_t scope_of(const Tm& tm) {
  const auto vars = vars_of(tm);
  return vars.empty() ? 0 : *vars.rbegin() + 1;
}

std::size_t scope_of(const Ty& ty) {
  const auto vars = vars_of(ty);
  return vars.empty() ? 0 : *vars.rbegin() + 1;
}

int coh_depth(const Ty& ty) {
  if (ty.is_obj()) return 0;
  return std::max({coh_depth(ty.base()), coh_depth(ty.src()), coh_depth(ty.tgt())});
}

int coh_depth(const Tm& tm) {
  if (tm.is_var()) return 0;
  int d = coh_depth(tm.coh_type());
  for (const auto& t : tm.sub().terms) d = std::max(d, coh_depth(t));
  return d + 1;
}

namespace {

void render(std::ostream& out, const Tm& tm);

void render(std::ostream& out, const Ty& ty) {
  if (ty.is_obj()) {
    out << '*';
    return;
  }
  if (!ty.base().is_obj()) {
    out << '[';
    render(out, ty.base());
    out << ']';
  }
  render(out, ty.src());
  out << "->";
  render(out, ty.tgt());
}

void render(std::ostream& out, const Ctx& ctx) {
  out << '(';
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (i) out << ',';
    render(out, ctx[i]);
  }
  out << ')';
}

void render(std::ostream& out, const Sub& sub) {
  out << '<';
  for (std::size_t i = 0; i < sub.size(); ++i) {
    if (i) out << ',';
    render(out, sub[i]);
  }
  out << '>';
}

void render(std::ostream& out, const Tm& tm) {
  if (tm.is_var()) {
    out << '#' << tm.index();
    return;
  }
  out << "coh[";
  render(out, tm.psctx());
  out << ';';
  render(out, tm.coh_type());
  out << ']';
  render(out, tm.sub());
}

template <class T>
std::string render_string(const T& value) {
  std::ostringstream out;
  render(out, value);
  return out.str();
}

}  // namespace

std::string debug_string(const Ty& ty) { return render_string(ty); }
std::string debug_string(const Tm& tm) { return render_string(tm); }
std::string debug_string(const Ctx& ctx) { return render_string(ctx); }
std::string debug_string(const Sub& sub) { return render_string(sub); }

}  // namespace cattkit

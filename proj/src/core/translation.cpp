#include "cattkit/translation.hpp"

#include <memory>
#include <mutex>
#include <unordered_map>

#include "cattkit/catt.hpp"

namespace cattkit {

// --- V ----------------------------------------------------------------------

GlobTranslation v_ctx(const CheckedCtx& ctx) {
  GlobTranslation t;
  for (const Ty& ty : ctx.ctx().entries) {
    GlobExtension ext = extend_glob(t.set, v_ty(t, ty));
    t.set = std::move(ext.set);
    t.cells.push_back(ext.cell);
  }
  return t;
}

GlobSphere v_ty(const GlobTranslation& t, const Ty& ty) {
  if (ty.is_obj()) return {};
  const CellRef s = v_tm(t, ty.src());
  const CellRef u = v_tm(t, ty.tgt());
  CATTKIT_ASSERT(s.dim == u.dim, "arrow between cells of different dimensions");
  return {s.dim, s.index, u.index};
}

CellRef v_tm(const GlobTranslation& t, const Tm& tm) {
  CATTKIT_ASSERT(tm.is_var(), "V is only defined on variables");
  CATTKIT_ASSERT(tm.index() < t.cells.size(), "variable out of scope");
  return t.cells[tm.index()];
}

GlobMorphism v_sub(const Sub& sub, const GlobTranslation& delta, const GlobTranslation& gamma) {
  CATTKIT_ASSERT(sub.size() == gamma.cells.size(), "substitution length differs from its codomain");
  GlobMorphism f;
  f.maps.resize(static_cast<std::size_t>(gamma.set.dim() + 1));
  for (int n = 0; n <= gamma.set.dim(); ++n) f.maps[n].resize(gamma.set.count(n));
  for (std::size_t i = 0; i < sub.size(); ++i) {
    const CellRef from = gamma.cells[i];
    const CellRef to = v_tm(delta, sub[i]);
    CATTKIT_ASSERT(from.dim == to.dim, "substitution changes dimension");
    f.maps[from.dim][from.index] = to.index;
  }
  return f;
}

// --- pasting contexts and trees ---------------------------------------------

namespace {

struct PsData {
  BataninTree tree;
  Translation translation;     // RΓ = Free VΓ
  std::vector<CellRef> rbat;   // variable ↦ position
  CompMorphism to_positions;   // Free R^Bat : RΓ → Free Pos(B)
  CompMorphism from_positions; // its inverse
};

struct PsCache {
  std::mutex mutex;
  std::unordered_map<std::string, std::shared_ptr<const PsData>> by_ctx;
  std::map<BataninTree, std::shared_ptr<const PsData>> by_tree;
};

PsCache& ps_cache() {
  static PsCache cache;
  return cache;
}

std::vector<CellRef> compute_rbat(const PsCtx& ps, BataninTree* tree_out) {
  const GlobTranslation v = v_ctx(ps.checked());
  const GlobCardinal card = GlobCardinal::from(v.set);
  BataninTree tree = tree_of_zig(zig(card));
  const GlobCardinal positions = pos(tree).cardinal;
  CATTKIT_ASSERT(positions.size() == card.size(), "tree of a pasting context has the wrong size");
  CATTKIT_ASSERT(cardinal_iso(card, positions).has_value(), "Sol ranks do not give an isomorphism");
  std::vector<CellRef> out;
  out.reserve(v.cells.size());
  for (CellRef c : v.cells) out.push_back(positions.at(card.rank(c)));
  if (tree_out) *tree_out = std::move(tree);
  return out;
}

Translation translate_unchecked(const Ctx& ctx) {
  Translation t;
  for (const Ty& ty : ctx.entries) t = t.extended(ty);
  return t;
}

std::shared_ptr<const PsData> build_ps_data(const PsCtx& ps) {
  auto data = std::make_shared<PsData>();
  data->rbat = compute_rbat(ps, &data->tree);
  data->translation = translate_unchecked(ps.ctx());
  const Computad& positions = position_computad(data->tree);
  const Translation& t = data->translation;

  data->to_positions.images.resize(static_cast<std::size_t>(t.computad.dim() + 1));
  data->from_positions.images.resize(static_cast<std::size_t>(positions.dim() + 1));
  for (int n = 0; n <= t.computad.dim(); ++n) data->to_positions.images[n].resize(t.computad.count(n));
  for (int n = 0; n <= positions.dim(); ++n) data->from_positions.images[n].resize(positions.count(n));
  for (std::size_t i = 0; i < t.vars.size(); ++i) {
    const GenRef g = t.vars[i];
    const GenRef p{data->rbat[i].dim, data->rbat[i].index};
    data->to_positions.images[g.dim][g.index] = Cell::gen(p);
    data->from_positions.images[p.dim][p.index] = Cell::gen(g);
  }
  return data;
}

std::shared_ptr<const PsData> ps_data_of_ctx(const Ctx& ctx) {
  const std::string key = debug_string(ctx);
  auto& cache = ps_cache();
  {
    std::lock_guard lock(cache.mutex);
    auto it = cache.by_ctx.find(key);
    if (it != cache.by_ctx.end()) return it->second;
  }
  auto data = build_ps_data(check_ps(ctx));
  std::lock_guard lock(cache.mutex);
  cache.by_ctx.emplace(key, data);
  return data;
}

std::shared_ptr<const PsData> ps_data_of_tree(const BataninTree& b) {
  auto& cache = ps_cache();
  {
    std::lock_guard lock(cache.mutex);
    auto it = cache.by_tree.find(b);
    if (it != cache.by_tree.end()) return it->second;
  }
  const PsCtx ps = psctx_of_tree(b);
  auto data = ps_data_of_ctx(ps.ctx());
  CATTKIT_ASSERT(data->tree == b, "psctx_of_tree is not a section of tree_of_psctx");
  std::lock_guard lock(cache.mutex);
  cache.by_tree.emplace(b, data);
  return data;
}

}  // namespace

BataninTree tree_of_psctx(const PsCtx& ps) {
  BataninTree tree;
  compute_rbat(ps, &tree);
  return tree;
}

std::vector<CellRef> r_bat(const PsCtx& ps) { return compute_rbat(ps, nullptr); }

PsCtx psctx_of_tree(const BataninTree& b) {
  const Zigzag m = zig_of_tree(b);
  Ctx ctx({Ty::obj()});
  std::size_t focus = 0;
  Ty focus_type = Ty::obj();
  for (std::size_t i = 1; i < m.size(); ++i) {
    if (m[i] > m[i - 1]) {
      // (pse): y : A, f : x -> y
      const std::size_t y = ctx.size();
      ctx = ctx.extended(focus_type);
      Ty arrow = Ty::arr(focus_type, Tm::var(focus), Tm::var(y));
      ctx = ctx.extended(arrow);
      focus = y + 1;
      focus_type = arrow;
    } else {
      // (psd): move to the target of the focus
      focus = focus_type.tgt().index();
      focus_type = focus_type.base();
    }
  }
  return check_ps(ctx);
}

// --- R ----------------------------------------------------------------------

Translation Translation::extended(const Ty& ty) const {
  CompExtension ext = extend_comp(computad, r_ty(*this, ty));
  Translation out;
  out.ctx = ctx.extended(ty);
  out.computad = std::move(ext.computad);
  out.vars = vars;
  out.vars.push_back(ext.generator);
  out.index = index;
  out.index.emplace(ext.generator, vars.size());
  return out;
}

Translation r_ctx(const CheckedCtx& ctx) { return translate_unchecked(ctx.ctx()); }

Sphere r_ty(const Translation& t, const Ty& ty) {
  if (ty.is_obj()) return Sphere::unit();
  return Sphere::make(r_tm(t, ty.src()), r_tm(t, ty.tgt()));
}

Cell r_tm(const Translation& t, const Tm& tm) {
  if (tm.is_var()) {
    CATTKIT_ASSERT(tm.index() < t.vars.size(), "variable out of scope");
    return Cell::gen(t.vars[tm.index()]);
  }
  const auto data = ps_data_of_ctx(tm.psctx());
  Sphere sphere = apply_sphere(data->to_positions, r_ty(data->translation, tm.coh_type()));
  CATTKIT_ASSERT(is_full(data->tree, sphere), "translated coherence sphere is not full");

  const Computad& positions = position_computad(data->tree);
  CompMorphism posmap;
  posmap.images.resize(static_cast<std::size_t>(positions.dim() + 1));
  for (int n = 0; n <= positions.dim(); ++n) posmap.images[n].resize(positions.count(n));
  const Sub& sub = tm.sub();
  CATTKIT_ASSERT(sub.size() == data->rbat.size(), "coherence substitution has the wrong length");
  for (std::size_t i = 0; i < sub.size(); ++i) {
    const CellRef p = data->rbat[i];
    posmap.images[p.dim][p.index] = r_tm(t, sub[i]);
  }
  return Cell::coh(data->tree, std::move(sphere), std::move(posmap));
}

CompMorphism r_sub(const Sub& sub, const Translation& delta, const Translation& gamma) {
  CATTKIT_ASSERT(sub.size() == gamma.vars.size(), "substitution length differs from its codomain");
  CompMorphism f;
  f.images.resize(static_cast<std::size_t>(gamma.computad.dim() + 1));
  for (int n = 0; n <= gamma.computad.dim(); ++n) f.images[n].resize(gamma.computad.count(n));
  for (std::size_t i = 0; i < sub.size(); ++i) {
    const GenRef g = gamma.vars[i];
    f.images[g.dim][g.index] = r_tm(delta, sub[i]);
  }
  return f;
}

Ty inv_r_ty(const Translation& t, const Sphere& s) {
  if (s.is_unit()) return Ty::obj();
  return Ty::arr(inv_r_ty(t, bdry(t.computad, s.src())), inv_r_tm(t, s.src()), inv_r_tm(t, s.tgt()));
}

Tm inv_r_tm(const Translation& t, const Cell& cell) {
  if (cell.is_gen()) {
    auto it = t.index.find(cell.generator());
    CATTKIT_ASSERT(it != t.index.end(), "generator outside the translated context");
    return Tm::var(it->second);
  }
  const auto data = ps_data_of_tree(cell.tree());
  const Ty ty = inv_r_ty(data->translation, apply_sphere(data->from_positions, cell.sphere()));
  Sub sub;
  sub.terms.reserve(data->rbat.size());
  for (CellRef p : data->rbat) sub.terms.push_back(inv_r_tm(t, cell.map()({p.dim, p.index})));
  return Tm::coh(data->translation.ctx, ty, std::move(sub));
}

namespace {

struct Stripped {
  Translation translation;
  GenRenaming iso;
};

Stripped strip(const Computad& c) {
  if (c.empty()) return {};
  const GenRef top{c.dim(), c.count(c.dim()) - 1};
  Stripped rest = strip(c.without(top));
  const Sphere pulled = apply_sphere(renaming_morphism(rest.iso), c.attach(top));
  Translation t = rest.translation.extended(inv_r_ty(rest.translation, pulled));
  const GenRef fresh = t.vars.back();
  CATTKIT_ASSERT(fresh.dim == top.dim, "re-extension changed the generator dimension");

  GenRenaming iso = std::move(rest.iso);
  if (iso.size() <= static_cast<std::size_t>(top.dim)) iso.resize(top.dim + 1);
  iso[top.dim].push_back(fresh.index);
  return {std::move(t), std::move(iso)};
}

}  // namespace

ContextOfComputad ctx_of_computad(const Computad& c) {
  Stripped s = strip(c);
  CheckedCtx checked = catt::check_ctx(s.translation.ctx);
  return {std::move(checked), std::move(s.translation), std::move(s.iso)};
}

}  // namespace cattkit

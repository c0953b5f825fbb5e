#include "cattkit/computad.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>

namespace cattkit {

struct Cell::CohNode {
  BataninTree tree;
  Sphere sphere;
  CompMorphism map;
};

Cell Cell::gen(GenRef g) {
  Cell c;
  c.gen_ = g;
  return c;
}

Cell Cell::coh(BataninTree tree, Sphere sphere, CompMorphism map) {
  Cell c;
  c.gen_ = GenRef{sphere.dim() + 1, 0};
  c.coh_ = std::make_shared<const CohNode>(CohNode{std::move(tree), std::move(sphere), std::move(map)});
  return c;
}

bool Cell::is_gen() const noexcept { return coh_ == nullptr; }
int Cell::dim() const noexcept { return gen_.dim; }

GenRef Cell::generator() const {
  CATTKIT_ASSERT(is_gen(), "generator() of a coherence cell");
  return gen_;
}

const BataninTree& Cell::tree() const {
  CATTKIT_ASSERT(is_coh(), "tree() of a generator cell");
  return coh_->tree;
}

const Sphere& Cell::sphere() const {
  CATTKIT_ASSERT(is_coh(), "sphere() of a generator cell");
  return coh_->sphere;
}

const CompMorphism& Cell::map() const {
  CATTKIT_ASSERT(is_coh(), "map() of a generator cell");
  return coh_->map;
}

bool operator==(const Cell& a, const Cell& b) {
  if (a.gen_ != b.gen_) return false;
  if (a.coh_ == b.coh_) return true;
  if (!a.coh_ || !b.coh_) return false;
  return a.coh_->tree == b.coh_->tree && a.coh_->sphere == b.coh_->sphere && a.coh_->map == b.coh_->map;
}

Sphere Sphere::make(Cell src, Cell tgt) {
  CATTKIT_ASSERT(src.dim() == tgt.dim(), "sphere cells of different dimensions");
  Sphere s;
  s.dim_ = src.dim();
  s.cells_ = std::make_shared<const std::pair<Cell, Cell>>(std::move(src), std::move(tgt));
  return s;
}

const Cell& Sphere::src() const {
  CATTKIT_ASSERT(!is_unit(), "src() of the unit sphere");
  return cells_->first;
}

const Cell& Sphere::tgt() const {
  CATTKIT_ASSERT(!is_unit(), "tgt() of the unit sphere");
  return cells_->second;
}

bool operator==(const Sphere& a, const Sphere& b) {
  if (a.dim_ != b.dim_) return false;
  if (a.cells_ == b.cells_) return true;
  if (!a.cells_ || !b.cells_) return false;
  return *a.cells_ == *b.cells_;
}

const Cell& CompMorphism::operator()(GenRef g) const {
  if (g.dim < 0 || static_cast<std::size_t>(g.dim) >= images.size() || g.index >= images[g.dim].size())
    throw Error(ErrorKind::DomainMismatch, "morphism undefined on generator v" + std::to_string(g.dim) + "." +
                                               std::to_string(g.index));
  return images[g.dim][g.index];
}

std::size_t CompMorphism::count(int n) const noexcept {
  if (n < 0 || static_cast<std::size_t>(n) >= images.size()) return 0;
  return images[n].size();
}

std::size_t Computad::count(int n) const noexcept {
  if (n < 0 || n > dim()) return 0;
  return attach_[n].size();
}

std::size_t Computad::total() const noexcept {
  std::size_t t = 0;
  for (const auto& level : attach_) t += level.size();
  return t;
}

const Sphere& Computad::attach(GenRef g) const {
  if (!contains(g))
    throw Error(ErrorKind::UnknownGenerator,
                "no generator v" + std::to_string(g.dim) + "." + std::to_string(g.index));
  return attach_[g.dim][g.index];
}

std::vector<GenRef> Computad::generators() const {
  std::vector<GenRef> out;
  for (int n = 0; n <= dim(); ++n)
    for (std::size_t i = 0; i < attach_[n].size(); ++i) out.push_back({n, i});
  return out;
}

GenRef Computad::add_generator(Sphere s) {
  const int n = s.dim() + 1;
  if (static_cast<int>(attach_.size()) <= n) attach_.resize(n + 1);
  attach_[n].push_back(std::move(s));
  return {n, attach_[n].size() - 1};
}

Computad Computad::without(GenRef g) const {
  CATTKIT_ASSERT(contains(g) && g.dim == dim(), "only a top-dimensional generator can be removed");
  Computad out = *this;
  auto& level = out.attach_[g.dim];
  level.erase(level.begin() + static_cast<std::ptrdiff_t>(g.index));
  while (!out.attach_.empty() && out.attach_.back().empty()) out.attach_.pop_back();
  return out;
}

// --- structure --------------------------------------------------------------

Sphere bdry(const Computad& c, const Cell& cell) {
  if (cell.is_gen()) return c.attach(cell.generator());
  return apply_sphere(cell.map(), cell.sphere());
}

Cell apply_cell(const CompMorphism& g, const Cell& cell) {
  if (cell.is_gen()) return g(cell.generator());
  return Cell::coh(cell.tree(), cell.sphere(), compose(g, cell.map()));
}

Sphere apply_sphere(const CompMorphism& g, const Sphere& s) {
  if (s.is_unit()) return s;
  return Sphere::make(apply_cell(g, s.src()), apply_cell(g, s.tgt()));
}

CompMorphism compose(const CompMorphism& g, const CompMorphism& f) {
  CompMorphism out;
  out.images.resize(f.images.size());
  for (std::size_t n = 0; n < f.images.size(); ++n) {
    out.images[n].reserve(f.images[n].size());
    for (const Cell& c : f.images[n]) out.images[n].push_back(apply_cell(g, c));
  }
  return out;
}

CompMorphism identity(const Computad& c) {
  CompMorphism out;
  out.images.resize(static_cast<std::size_t>(c.dim() + 1));
  for (GenRef g : c.generators()) out.images[g.dim].push_back(Cell::gen(g));
  return out;
}

Computad free(const GlobSet& x) {
  Computad c;
  for (CellRef cell : x.cells()) {
    if (cell.dim == 0) {
      c.add_generator(Sphere::unit());
    } else {
      const CellRef s = x.src(cell);
      const CellRef t = x.tgt(cell);
      c.add_generator(Sphere::make(Cell::gen({s.dim, s.index}), Cell::gen({t.dim, t.index})));
    }
  }
  return c;
}

CompMorphism free(const GlobMorphism& f) {
  CompMorphism out;
  out.images.resize(f.maps.size());
  for (std::size_t n = 0; n < f.maps.size(); ++n)
    for (std::size_t j : f.maps[n]) out.images[n].push_back(Cell::gen({static_cast<int>(n), j}));
  return out;
}

namespace {

struct PositionCache {
  std::mutex mutex;
  std::map<BataninTree, std::unique_ptr<const Computad>> computads;
  std::map<std::pair<BataninTree, int>, std::pair<GenSet, GenSet>> images;
};

PositionCache& position_cache() {
  static PositionCache cache;
  return cache;
}

GenSet image_at(const GlobMorphism& m, int n) {
  GenSet out;
  if (n < 0 || static_cast<std::size_t>(n) >= m.maps.size()) return out;
  for (std::size_t j : m.maps[n]) out.insert({n, j});
  return out;
}

// n-positions in the image of s^B_n and t^B_n.
std::pair<GenSet, GenSet> boundary_positions(const BataninTree& b, int n) {
  auto& cache = position_cache();
  {
    std::lock_guard lock(cache.mutex);
    auto it = cache.images.find({b, n});
    if (it != cache.images.end()) return it->second;
  }
  std::pair<GenSet, GenSet> result{image_at(src_pos(b, static_cast<std::size_t>(n)), n),
                                   image_at(tgt_pos(b, static_cast<std::size_t>(n)), n)};
  std::lock_guard lock(cache.mutex);
  cache.images.emplace(std::make_pair(b, n), result);
  return result;
}

}  // namespace

const Computad& position_computad(const BataninTree& b) {
  auto& cache = position_cache();
  {
    std::lock_guard lock(cache.mutex);
    auto it = cache.computads.find(b);
    if (it != cache.computads.end()) return *it->second;
  }
  auto built = std::make_unique<const Computad>(free(pos(b).cardinal.set()));
  std::lock_guard lock(cache.mutex);
  auto [it, inserted] = cache.computads.emplace(b, std::move(built));
  return *it->second;
}

// --- support and fullness ---------------------------------------------------

GenSet support(const Cell& cell, int n) {
  if (cell.is_gen()) return {cell.generator()};
  GenSet out;
  const CompMorphism& f = cell.map();
  for (std::size_t i = 0; i < f.count(n); ++i) {
    GenSet part = support(f.images[n][i], n);
    out.insert(part.begin(), part.end());
  }
  return out;
}

GenSet full_support(const Computad& c, const Cell& cell) {
  GenSet out;
  if (cell.is_gen()) {
    out.insert(cell.generator());
    GenSet below = full_support(c, c.attach(cell.generator()));
    out.insert(below.begin(), below.end());
    return out;
  }
  // every position contributes, not only the top-dimensional ones
  for (GenRef p : position_computad(cell.tree()).generators()) {
    GenSet part = full_support(c, cell.map()(p));
    out.insert(part.begin(), part.end());
  }
  return out;
}

GenSet full_support(const Computad& c, const Sphere& s) {
  if (s.is_unit()) return {};
  GenSet out = full_support(c, s.src());
  GenSet other = full_support(c, s.tgt());
  out.insert(other.begin(), other.end());
  return out;
}

bool is_full(const BataninTree& b, const Sphere& s) {
  if (s.is_unit()) return true;
  const int n = s.dim();
  const auto [src_image, tgt_image] = boundary_positions(b, n);
  if (support(s.src(), n) != src_image) return false;
  if (support(s.tgt(), n) != tgt_image) return false;
  return is_full(b, bdry(position_computad(b), s.src()));
}

// --- validity ---------------------------------------------------------------

void check_cell(const Computad& c, const Cell& cell) {
  if (cell.is_gen()) {
    const GenRef g = cell.generator();
    if (!c.contains(g))
      throw Error(ErrorKind::UnknownGenerator, "no generator " + debug_string(cell));
    return;
  }
  const int n = cell.dim();
  if (n <= 0) throw Error(ErrorKind::DimensionViolation, "coherence cell of dimension 0");
  if (dim_tree(cell.tree()) > n)
    throw Error(ErrorKind::DimensionViolation,
                "tree " + to_string(cell.tree()) + " has dimension above " + std::to_string(n));
  const Computad& positions = position_computad(cell.tree());
  try {
    check_sphere(positions, cell.sphere());
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidSphere, "ill-formed sphere in coherence over " + to_string(cell.tree()))
        .caused_by(e);
  }
  if (!is_full(cell.tree(), cell.sphere()))
    throw Error(ErrorKind::NotFull, "sphere " + debug_string(cell.sphere()) + " is not full over " +
                                        to_string(cell.tree()));
  check_morphism(positions, c, cell.map());
}

void check_sphere(const Computad& c, const Sphere& s) {
  if (s.is_unit()) return;
  check_cell(c, s.src());
  check_cell(c, s.tgt());
  if (!(bdry(c, s.src()) == bdry(c, s.tgt())))
    throw Error(ErrorKind::InvalidSphere, "cells of " + debug_string(s) + " are not parallel");
}

void check_morphism(const Computad& domain, const Computad& codomain, const CompMorphism& f) {
  const auto top = static_cast<std::size_t>(domain.dim() + 1);
  if (f.images.size() < top)
    throw Error(ErrorKind::InvalidMorphism, "morphism does not cover every dimension of its domain");
  for (std::size_t n = 0; n < f.images.size(); ++n)
    if (f.images[n].size() != domain.count(static_cast<int>(n)))
      throw Error(ErrorKind::InvalidMorphism,
                  "morphism has the wrong number of images in dimension " + std::to_string(n));
  for (GenRef g : domain.generators()) {
    const Cell& image = f(g);
    try {
      check_cell(codomain, image);
    } catch (const Error& e) {
      throw Error(ErrorKind::InvalidMorphism, "image of v" + std::to_string(g.dim) + "." +
                                                  std::to_string(g.index) + " is not a cell")
          .caused_by(e);
    }
    if (image.dim() != g.dim)
      throw Error(ErrorKind::InvalidMorphism, "image of v" + std::to_string(g.dim) + "." +
                                                  std::to_string(g.index) + " has the wrong dimension");
    if (!(bdry(codomain, image) == apply_sphere(f, domain.attach(g))))
      throw Error(ErrorKind::InvalidMorphism, "image of v" + std::to_string(g.dim) + "." +
                                                  std::to_string(g.index) + " has the wrong boundary");
  }
}

void check_computad(const Computad& c) {
  Computad prefix;
  for (GenRef g : c.generators()) {
    const Sphere& s = c.attach(g);
    if (s.dim() != g.dim - 1)
      throw Error(ErrorKind::DimensionViolation, "attaching sphere of the wrong dimension");
    try {
      check_sphere(prefix, s);
    } catch (const Error& e) {
      throw Error(ErrorKind::InvalidSphere, "attaching sphere of v" + std::to_string(g.dim) + "." +
                                                std::to_string(g.index) + " is ill-formed")
          .caused_by(e);
    }
    prefix.add_generator(s);
  }
}

// --- extension --------------------------------------------------------------

CompExtension extend_comp(const Computad& c, const Sphere& a) {
  try {
    check_sphere(c, a);
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidSphere, "cannot extend along " + debug_string(a)).caused_by(e);
  }
  CompExtension ext{c, {}, identity(c)};
  ext.generator = ext.computad.add_generator(a);
  return ext;
}

CompMorphism pair_morphism(const CompExtension& ext, const Computad& d, const CompMorphism& gamma, const Cell& u) {
  const Sphere& a = ext.computad.attach(ext.generator);
  if (u.dim() != ext.generator.dim)
    throw Error(ErrorKind::DomainMismatch, "cell " + debug_string(u) + " has the wrong dimension");
  if (!(bdry(d, u) == apply_sphere(gamma, a)))
    throw Error(ErrorKind::DomainMismatch, "boundary of " + debug_string(u) + " is not the image of the sphere");
  CompMorphism out = gamma;
  const auto n = static_cast<std::size_t>(ext.generator.dim);
  if (out.images.size() <= n) out.images.resize(n + 1);
  CATTKIT_ASSERT(out.images[n].size() == ext.generator.index, "morphism does not match the extended computad");
  out.images[n].push_back(u);
  return out;
}

// --- isomorphism ------------------------------------------------------------

CompMorphism renaming_morphism(const GenRenaming& r) {
  CompMorphism out;
  out.images.resize(r.size());
  for (std::size_t n = 0; n < r.size(); ++n)
    for (std::size_t j : r[n]) out.images[n].push_back(Cell::gen({static_cast<int>(n), j}));
  return out;
}

namespace {

void mentions(const Cell& cell, GenSet& out);

void mentions(const Sphere& s, GenSet& out) {
  if (s.is_unit()) return;
  mentions(s.src(), out);
  mentions(s.tgt(), out);
}

void mentions(const Cell& cell, GenSet& out) {
  if (cell.is_gen()) {
    out.insert(cell.generator());
    return;
  }
  for (const auto& level : cell.map().images)
    for (const Cell& c : level) mentions(c, out);
}

// How many attaching spheres mention each generator; preserved by isos.
std::map<GenRef, std::size_t> degrees(const Computad& c) {
  std::map<GenRef, std::size_t> out;
  for (GenRef g : c.generators()) {
    out[g];
    GenSet m;
    mentions(c.attach(g), m);
    for (GenRef h : m) ++out[h];
  }
  return out;
}

}  // namespace

std::optional<GenRenaming> iso_computads(const Computad& c, const Computad& d) {
  if (c.dim() != d.dim()) return std::nullopt;
  for (int n = 0; n <= c.dim(); ++n)
    if (c.count(n) != d.count(n)) return std::nullopt;

  const std::vector<GenRef> gens = c.generators();
  const auto deg_c = degrees(c);
  const auto deg_d = degrees(d);

  GenRenaming r(static_cast<std::size_t>(c.dim() + 1));
  std::vector<std::vector<bool>> used(r.size());
  for (int n = 0; n <= c.dim(); ++n) used[n].assign(d.count(n), false);

  std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
    if (k == gens.size()) return true;
    const GenRef g = gens[k];
    // Everything below g.dim is already assigned, so the renamed sphere is
    // determined.
    const Sphere renamed = apply_sphere(renaming_morphism(r), c.attach(g));
    for (std::size_t j = 0; j < d.count(g.dim); ++j) {
      if (used[g.dim][j]) continue;
      const GenRef h{g.dim, j};
      if (deg_c.at(g) != deg_d.at(h)) continue;
      if (!(renamed == d.attach(h))) continue;
      used[g.dim][j] = true;
      r[g.dim].push_back(j);
      if (search(k + 1)) return true;
      r[g.dim].pop_back();
      used[g.dim][j] = false;
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  return r;
}

std::string debug_string(const Cell& cell) {
  if (cell.is_gen()) {
    const GenRef g = cell.generator();
    return "v" + std::to_string(g.dim) + "." + std::to_string(g.index);
  }
  std::ostringstream out;
  out << "coh(" << to_string(cell.tree()) << ";" << debug_string(cell.sphere()) << ";";
  const auto& images = cell.map().images;
  for (std::size_t n = 0; n < images.size(); ++n) {
    out << (n ? "|" : "");
    for (std::size_t i = 0; i < images[n].size(); ++i) out << (i ? "," : "") << debug_string(images[n][i]);
  }
  out << ")";
  return out.str();
}

std::string debug_string(const Sphere& s) {
  if (s.is_unit()) return "()";
  return "(" + debug_string(s.src()) + "=>" + debug_string(s.tgt()) + ")";
}

}  // namespace cattkit

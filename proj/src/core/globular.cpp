#include "cattkit/globular.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace cattkit {

namespace {

std::string cell_name(CellRef c) { return std::to_string(c.dim) + ":" + std::to_string(c.index); }

}  // namespace

std::size_t GlobSet::count(int n) const noexcept {
  if (n < 0 || n >= static_cast<int>(levels_.size())) return 0;
  return levels_[static_cast<std::size_t>(n)].count;
}

std::size_t GlobSet::total() const noexcept {
  std::size_t out = 0;
  for (const auto& l : levels_) out += l.count;
  return out;
}

bool GlobSet::contains(CellRef c) const noexcept { return c.dim >= 0 && c.index < count(c.dim); }

CellRef GlobSet::src(CellRef c) const {
  CATTKIT_ASSERT(c.dim >= 1 && contains(c), "src of " + cell_name(c));
  return {c.dim - 1, levels_[static_cast<std::size_t>(c.dim)].src[c.index]};
}

CellRef GlobSet::tgt(CellRef c) const {
  CATTKIT_ASSERT(c.dim >= 1 && contains(c), "tgt of " + cell_name(c));
  return {c.dim - 1, levels_[static_cast<std::size_t>(c.dim)].tgt[c.index]};
}

std::vector<CellRef> GlobSet::cells() const {
  std::vector<CellRef> out;
  out.reserve(total());
  for (std::size_t n = 0; n < levels_.size(); ++n) {
    for (std::size_t i = 0; i < levels_[n].count; ++i) out.push_back({static_cast<int>(n), i});
  }
  return out;
}

CellRef GlobSet::add_point() {
  if (levels_.empty()) levels_.emplace_back();
  return {0, levels_[0].count++};
}

CellRef GlobSet::add_cell(int n, std::size_t src, std::size_t tgt) {
  if (n < 1) throw Error(ErrorKind::NotParallel, "add_cell needs dimension >= 1");
  const CellRef s{n - 1, src};
  const CellRef t{n - 1, tgt};
  if (!contains(s) || !contains(t)) {
    throw Error(ErrorKind::NotParallel, "boundary cells " + cell_name(s) + ", " + cell_name(t) + " do not exist");
  }
  if (n >= 2 && (this->src(s) != this->src(t) || this->tgt(s) != this->tgt(t))) {
    throw Error(ErrorKind::NotParallel, "cells " + cell_name(s) + " and " + cell_name(t) + " are not parallel");
  }
  if (static_cast<int>(levels_.size()) == n) levels_.emplace_back();
  auto& level = levels_[static_cast<std::size_t>(n)];
  level.src.push_back(src);
  level.tgt.push_back(tgt);
  return {n, level.count++};
}

CellRef GlobMorphism::operator()(CellRef c) const {
  CATTKIT_ASSERT(c.dim >= 0 && static_cast<std::size_t>(c.dim) < maps.size() &&
                     c.index < maps[static_cast<std::size_t>(c.dim)].size(),
                 "morphism applied outside its domain");
  return {c.dim, maps[static_cast<std::size_t>(c.dim)][c.index]};
}

GlobMorphism GlobMorphism::identity(const GlobSet& x) {
  GlobMorphism out;
  for (int n = 0; n <= x.dim(); ++n) {
    auto& m = out.maps.emplace_back(x.count(n));
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = i;
  }
  return out;
}

void GlobMorphism::validate(const GlobSet& domain, const GlobSet& codomain) const {
  for (std::size_t n = 0; n < maps.size(); ++n) {
    if (maps[n].size() != domain.count(static_cast<int>(n)) && !(maps[n].empty() && domain.count(static_cast<int>(n)) == 0)) {
      throw Error(ErrorKind::InvalidMorphism, "dimension " + std::to_string(n) + " has the wrong size");
    }
  }
  for (int n = static_cast<int>(maps.size()); n <= domain.dim(); ++n) {
    if (domain.count(n) != 0) throw Error(ErrorKind::InvalidMorphism, "missing dimension " + std::to_string(n));
  }
  for (auto c : domain.cells()) {
    const CellRef fc = (*this)(c);
    if (!codomain.contains(fc)) throw Error(ErrorKind::InvalidMorphism, "image of " + cell_name(c) + " missing");
    if (c.dim >= 1 && ((*this)(domain.src(c)) != codomain.src(fc) || (*this)(domain.tgt(c)) != codomain.tgt(fc))) {
      throw Error(ErrorKind::InvalidMorphism, "does not commute with the boundary of " + cell_name(c));
    }
  }
}

std::vector<CellRef> GlobMorphism::image() const {
  std::vector<CellRef> out;
  for (std::size_t n = 0; n < maps.size(); ++n) {
    for (auto i : maps[n]) out.push_back({static_cast<int>(n), i});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GlobMorphism compose(const GlobMorphism& g, const GlobMorphism& f) {
  GlobMorphism out;
  out.maps.resize(f.maps.size());
  for (std::size_t n = 0; n < f.maps.size(); ++n) {
    for (auto i : f.maps[n]) out.maps[n].push_back(g({static_cast<int>(n), i}).index);
  }
  return out;
}

GlobSet disk(int n) {
  CATTKIT_ASSERT(n >= 0, "disk dimension");
  GlobSet out = sphere(n - 1);
  if (n == 0) {
    out.add_point();
  } else {
    out.add_cell(n, 0, 1);
  }
  return out;
}

GlobSet sphere(int n) {
  CATTKIT_ASSERT(n >= -1, "sphere dimension");
  GlobSet out;
  for (int k = 0; k <= n; ++k) {
    if (k == 0) {
      out.add_point();
      out.add_point();
    } else {
      out.add_cell(k, 0, 1);
      out.add_cell(k, 0, 1);
    }
  }
  return out;
}

GlobMorphism iota(int n) { return GlobMorphism::identity(sphere(n - 1)); }

std::vector<CellRef> sol_order(const GlobSet& x) {
  if (x.empty()) throw Error(ErrorKind::NotCardinal, "the empty globular set is not a cardinal");
  const auto cells = x.cells();
  const std::size_t n = cells.size();
  std::vector<std::size_t> offset(static_cast<std::size_t>(x.dim()) + 1, 0);
  for (int d = 1; d <= x.dim(); ++d) offset[static_cast<std::size_t>(d)] = offset[static_cast<std::size_t>(d - 1)] + x.count(d - 1);
  auto flat = [&](CellRef c) { return offset[static_cast<std::size_t>(c.dim)] + c.index; };

  std::vector<std::vector<std::size_t>> succ(n);
  for (auto c : cells) {
    if (c.dim == 0) continue;
    succ[flat(x.src(c))].push_back(flat(c));
    succ[flat(c)].push_back(flat(x.tgt(c)));
  }
  // reach[a][b]: a ◀ b
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::size_t> stack{a};
    reach[a][a] = 1;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : succ[v]) {
        if (!reach[a][w]) {
          reach[a][w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (reach[a][b] && reach[b][a]) {
        throw Error(ErrorKind::NotCardinal,
                    "cells " + cell_name(cells[a]) + " and " + cell_name(cells[b]) + " form a cycle");
      }
      if (!reach[a][b] && !reach[b][a]) {
        throw Error(ErrorKind::NotCardinal,
                    "cells " + cell_name(cells[a]) + " and " + cell_name(cells[b]) + " are incomparable");
      }
    }
  }
  std::vector<std::pair<std::size_t, CellRef>> ranked;
  for (std::size_t b = 0; b < n; ++b) {
    std::size_t below = 0;
    for (std::size_t a = 0; a < n; ++a) below += reach[a][b] ? 1 : 0;
    ranked.emplace_back(below, cells[b]);
  }
  std::sort(ranked.begin(), ranked.end());
  std::vector<CellRef> out;
  for (auto& [r, c] : ranked) out.push_back(c);
  return out;
}

GlobCardinal GlobCardinal::from(GlobSet x) {
  GlobCardinal out;
  out.order_ = sol_order(x);
  out.rank_.resize(static_cast<std::size_t>(x.dim()) + 1);
  for (int n = 0; n <= x.dim(); ++n) out.rank_[static_cast<std::size_t>(n)].resize(x.count(n));
  for (std::size_t r = 0; r < out.order_.size(); ++r) {
    const auto c = out.order_[r];
    out.rank_[static_cast<std::size_t>(c.dim)][c.index] = r;
  }
  out.set_ = std::move(x);
  return out;
}

std::size_t GlobCardinal::rank(CellRef c) const {
  CATTKIT_ASSERT(set_.contains(c), "rank of a foreign cell");
  return rank_[static_cast<std::size_t>(c.dim)][c.index];
}

bool GlobCardinal::is_canonical() const {
  std::vector<std::size_t> next(rank_.size(), 0);
  for (auto c : order_) {
    if (c.index != next[static_cast<std::size_t>(c.dim)]++) return false;
  }
  return true;
}

std::optional<GlobMorphism> cardinal_iso(const GlobCardinal& a, const GlobCardinal& b) {
  if (a.size() != b.size()) return std::nullopt;
  GlobMorphism f;
  f.maps.resize(static_cast<std::size_t>(std::max(a.dim(), 0)) + 1);
  for (int n = 0; n <= a.dim(); ++n) f.maps[static_cast<std::size_t>(n)].resize(a.set().count(n));
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a.at(r).dim != b.at(r).dim) return std::nullopt;
    f.maps[static_cast<std::size_t>(a.at(r).dim)][a.at(r).index] = b.at(r).index;
  }
  try {
    f.validate(a.set(), b.set());
  } catch (const Error&) {
    return std::nullopt;
  }
  return f;
}

std::pair<GlobCardinal, GlobMorphism> canonical(const GlobCardinal& x) {
  GlobMorphism relabel;
  relabel.maps.resize(static_cast<std::size_t>(x.dim()) + 1);
  for (int n = 0; n <= x.dim(); ++n) relabel.maps[static_cast<std::size_t>(n)].resize(x.set().count(n));
  std::vector<std::size_t> next(relabel.maps.size(), 0);
  for (auto c : x.order()) relabel.maps[static_cast<std::size_t>(c.dim)][c.index] = next[static_cast<std::size_t>(c.dim)]++;

  // Insert cells in Sol order: boundaries always precede the cell.
  GlobSet out;
  std::vector<std::vector<char>> placed(relabel.maps.size());
  for (int n = 0; n <= x.dim(); ++n) placed[static_cast<std::size_t>(n)].assign(x.set().count(n), 0);
  std::vector<std::vector<CellRef>> by_new_index(relabel.maps.size());
  for (int n = 0; n <= x.dim(); ++n) by_new_index[static_cast<std::size_t>(n)].resize(x.set().count(n));
  for (auto c : x.set().cells()) by_new_index[static_cast<std::size_t>(c.dim)][relabel(c).index] = c;
  for (int n = 0; n <= x.dim(); ++n) {
    for (auto c : by_new_index[static_cast<std::size_t>(n)]) {
      if (n == 0) {
        out.add_point();
      } else {
        out.add_cell(n, relabel(x.set().src(c)).index, relabel(x.set().tgt(c)).index);
      }
    }
  }
  return {GlobCardinal::from(std::move(out)), std::move(relabel)};
}

CardBoundary boundary(const GlobCardinal& x, std::size_t k) {
  const GlobSet& set = x.set();
  const bool collapses = k <= static_cast<std::size_t>(set.dim());
  const int kk = collapses ? static_cast<int>(k) : set.dim() + 1;
  GlobSet out;
  GlobMorphism source;
  GlobMorphism target;
  source.maps.resize(static_cast<std::size_t>(collapses ? kk + 1 : kk));
  target.maps.resize(source.maps.size());
  for (int n = 0; n < kk; ++n) {
    for (std::size_t i = 0; i < set.count(n); ++i) {
      if (n == 0) {
        out.add_point();
      } else {
        out.add_cell(n, set.src({n, i}).index, set.tgt({n, i}).index);
      }
      source.maps[static_cast<std::size_t>(n)].push_back(i);
      target.maps[static_cast<std::size_t>(n)].push_back(i);
    }
  }
  if (collapses) {
    // Classes of k-cells keyed by (src, tgt), listed by least representative.
    using Key = std::pair<std::size_t, std::size_t>;
    std::map<Key, std::pair<CellRef, CellRef>> classes;
    std::vector<Key> keys;
    for (auto c : x.order()) {
      if (c.dim != kk) continue;
      const Key key = kk == 0 ? Key{0, 0} : Key{set.src(c).index, set.tgt(c).index};
      auto it = classes.find(key);
      if (it == classes.end()) {
        classes.emplace(key, std::pair{c, c});
        keys.push_back(key);
      } else {
        it->second.second = c;
      }
    }
    for (const auto& key : keys) {
      const auto& [least, greatest] = classes.at(key);
      if (kk == 0) {
        out.add_point();
      } else {
        out.add_cell(kk, key.first, key.second);
      }
      source.maps[static_cast<std::size_t>(kk)].push_back(least.index);
      target.maps[static_cast<std::size_t>(kk)].push_back(greatest.index);
    }
  }
  return CardBoundary{GlobCardinal::from(std::move(out)), std::move(source), std::move(target)};
}

GlobCardinal boundary_card(const GlobCardinal& x, std::size_t k) { return boundary(x, k).cardinal; }
GlobMorphism src_incl(const GlobCardinal& x, std::size_t k) { return boundary(x, k).source; }
GlobMorphism tgt_incl(const GlobCardinal& x, std::size_t k) { return boundary(x, k).target; }

Bipointed wedge_unit() {
  Bipointed out;
  out.set.add_point();
  return out;
}

Bipointed disk1_bipointed() { return Bipointed{disk(1), 0, 1}; }

Bipointed suspend(const GlobSet& x) {
  Bipointed out;
  out.minus = out.set.add_point().index;
  out.plus = out.set.add_point().index;
  for (auto c : x.cells()) {
    if (c.dim == 0) {
      out.set.add_cell(1, out.minus, out.plus);
    } else {
      out.set.add_cell(c.dim + 1, x.src(c).index, x.tgt(c).index);
    }
  }
  return out;
}

GlobMorphism suspend(const GlobMorphism& f) {
  GlobMorphism out;
  out.maps.push_back({0, 1});
  for (const auto& m : f.maps) out.maps.push_back(m);
  return out;
}

namespace {

// Appends y to acc, gluing y.minus onto acc.plus; returns the injection of y.
GlobMorphism append_summand(Bipointed& acc, const Bipointed& y) {
  GlobMorphism inj;
  inj.maps.resize(static_cast<std::size_t>(std::max(y.set.dim(), 0)) + 1);
  for (auto c : y.set.cells()) {
    std::size_t image;
    if (c.dim == 0) {
      image = c.index == y.minus ? acc.plus : acc.set.add_point().index;
    } else {
      const auto& src_map = inj.maps[static_cast<std::size_t>(c.dim - 1)];
      image = acc.set.add_cell(c.dim, src_map[y.set.src(c).index], src_map[y.set.tgt(c).index]).index;
    }
    inj.maps[static_cast<std::size_t>(c.dim)].push_back(image);
  }
  acc.plus = inj.maps[0][y.plus];
  return inj;
}

}  // namespace

WedgeSum wedge(const std::vector<Bipointed>& parts) {
  WedgeSum out;
  out.sum = wedge_unit();
  for (const auto& p : parts) out.injections.push_back(append_summand(out.sum, p));
  return out;
}

Bipointed wedge(const Bipointed& x, const Bipointed& y) { return wedge(std::vector<Bipointed>{x, y}).sum; }

GlobMorphism wedge_map(const WedgeSum& domain, const WedgeSum& codomain, const std::vector<GlobMorphism>& parts) {
  CATTKIT_ASSERT(domain.injections.size() == parts.size() && codomain.injections.size() == parts.size(),
                 "wedge_map needs one part per summand");
  constexpr std::size_t unset = SIZE_MAX;
  GlobMorphism out;
  const GlobSet& dom = domain.sum.set;
  out.maps.resize(static_cast<std::size_t>(std::max(dom.dim(), 0)) + 1);
  for (int n = 0; n <= dom.dim(); ++n) out.maps[static_cast<std::size_t>(n)].assign(dom.count(n), unset);
  if (parts.empty()) {
    out.maps[0][0] = 0;
    return out;
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& inj = domain.injections[i];
    for (std::size_t n = 0; n < inj.maps.size(); ++n) {
      for (std::size_t c = 0; c < inj.maps[n].size(); ++c) {
        const CellRef cell{static_cast<int>(n), c};
        const std::size_t to = codomain.injections[i](parts[i](cell)).index;
        auto& slot = out.maps[n][inj.maps[n][c]];
        if (slot != unset && slot != to) throw Error(ErrorKind::InvalidMorphism, "summands disagree on a basepoint");
        slot = to;
      }
    }
  }
  return out;
}

GlobExtension extend_glob(const GlobSet& x, const GlobSphere& a) {
  GlobExtension out{x, {}, GlobMorphism::identity(x)};
  if (a.dim < 0) {
    out.cell = out.set.add_point();
  } else {
    out.cell = out.set.add_cell(a.dim + 1, a.src, a.tgt);
  }
  return out;
}

}  // namespace cattkit

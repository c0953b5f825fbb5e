// One line per acceptance criterion: "criterion N: PASS|FAIL <summary>".
// Exit status is 0 only when every criterion passes.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cattkit/batanin.hpp"
#include "cattkit/catt.hpp"
#include "cattkit/computad.hpp"
#include "cattkit/driver.hpp"
#include "cattkit/pasting.hpp"
#include "cattkit/translation.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace cattkit;

namespace {

struct Report {
  bool ok = true;
  std::vector<std::string> failures;
  std::string summary;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

Ty arr(const Ty& base, std::size_t u, std::size_t v) { return Ty::arr(base, Tm::var(u), Tm::var(v)); }

Ctx whisker() {
  const Ty o = Ty::obj();
  const Ty f = arr(o, 0, 1);
  return Ctx({o, o, f, f, arr(f, 2, 3), o, arr(o, 1, 5)});
}

// The same globular set with cells renumbered within each dimension.
GlobSet shuffled(const GlobSet& x, std::mt19937& rng) {
  std::vector<std::vector<std::size_t>> perm(static_cast<std::size_t>(x.dim() + 1));
  for (int n = 0; n <= x.dim(); ++n) {
    perm[n].resize(x.count(n));
    for (std::size_t i = 0; i < perm[n].size(); ++i) perm[n][i] = i;
    std::shuffle(perm[n].begin(), perm[n].end(), rng);
  }
  GlobSet out;
  for (int n = 0; n <= x.dim(); ++n) {
    std::vector<std::size_t> inverse(x.count(n));
    for (std::size_t i = 0; i < inverse.size(); ++i) inverse[perm[n][i]] = i;
    for (std::size_t j = 0; j < inverse.size(); ++j) {
      if (n == 0) {
        out.add_point();
      } else {
        const CellRef c{n, inverse[j]};
        out.add_cell(n, perm[n - 1][x.src(c).index], perm[n - 1][x.tgt(c).index]);
      }
    }
  }
  return out;
}

Bipointed bipointed(const GlobCardinal& x) { return {x.set(), x.min().index, x.max().index}; }

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(CATTKIT_TEST_DATA) + "/" + name);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Free R^Bat : R Γ → Free Pos(B_Γ) for a pasting context.
CompMorphism to_positions(const PsCtx& ps, const Translation& t) {
  const auto table = r_bat(ps);
  CompMorphism m;
  m.images.resize(static_cast<std::size_t>(t.computad.dim() + 1));
  for (GenRef g : t.computad.generators()) {
    const CellRef p = table[t.index.at(g)];
    m.images[g.dim].push_back(Cell::gen({p.dim, p.index}));
  }
  return m;
}

GenSet generators_of(const Translation& t, const IndexSet& vars) {
  GenSet out;
  for (std::size_t v : vars) out.insert(t.vars[v]);
  return out;
}

// --- criteria ---------------------------------------------------------------

Report golden() {
  Report r;
  const PsCtx ps = check_ps(whisker());
  const std::string derivation = ps.derivation().to_string();
  r.expect(derivation == "(pss)(pse)^2(psd)^2(pse)(psd)(ps)", "derivation " + derivation);

  const std::vector<std::string> names{"x", "y", "f", "g", "α", "z", "h"};
  const GlobTranslation v = v_ctx(gsett::check_ctx(whisker()));
  std::string order;
  for (CellRef c : sol_order(v.set)) {
    const auto it = std::find(v.cells.begin(), v.cells.end(), c);
    order += (order.empty() ? "" : "≺") + names[static_cast<std::size_t>(it - v.cells.begin())];
  }
  r.expect(order == "x≺f≺α≺g≺y≺h≺z", "Sol order " + order);

  const Zigzag z = zig(GlobCardinal::from(v.set));
  r.expect(to_string(z) == "(0,1,2,1,0,1,0)", "zigzag " + to_string(z));
  const BataninTree b = tree_of_zig(z);
  r.expect(to_string(b) == "br[br[br[]],br[]]", "tree " + to_string(b));
  r.expect(tree_of_psctx(ps) == b, "tree_of_psctx");
  r.expect(psctx_of_tree(b).ctx() == whisker(), "psctx_of_tree");
  r.summary = derivation + "; " + order + "; " + to_string(z) + "; " + to_string(b);
  return r;
}

Report bijection_counts() {
  Report r;
  const std::uint64_t expected[] = {1, 1, 2, 5, 14};
  std::string counts;
  for (std::size_t k = 0; k <= 4; ++k) {
    const std::size_t n = 2 * k + 1;
    const std::uint64_t contexts = testing::count_pasting_contexts_brute(n);
    const std::uint64_t trees = enumerate_trees(n, true).size();
    const std::uint64_t zigzags = enumerate_zigzags(n).size();
    const std::uint64_t zigzag_oracle = testing::zigzags_brute(n);
    const std::uint64_t dyck = testing::dyck_paths_brute(k);
    r.expect(contexts == expected[k] && trees == expected[k] && zigzags == expected[k] &&
                 zigzag_oracle == expected[k] && dyck == expected[k] && testing::catalan(k) == expected[k],
             "k=" + std::to_string(k));
    counts += (counts.empty() ? "" : ", ") + std::to_string(dyck);
  }
  r.summary = "pasting contexts = trees = zigzags = Dyck paths: " + counts;
  return r;
}

Report round_trips() {
  Report r;
  std::mt19937 rng(31);
  std::size_t sequences = 0, cardinals = 0, trees = 0;
  for (std::size_t n = 1; n <= 9; n += 2) {
    for (const Zigzag& m : enumerate_zigzags(n)) {
      ++sequences;
      const GlobCardinal c = card(m);
      r.expect(zig(c) == m, "zig(card " + to_string(m) + ")");
      // a renumbered copy, so the iso is not the identity on indices
      for (int copy = 0; copy < 3; ++copy) {
        const GlobCardinal x = GlobCardinal::from(shuffled(c.set(), rng));
        const GlobCardinal back = card(zig(x));
        r.expect(cardinal_iso(back, x).has_value(), "cardinal iso for " + to_string(m));
        r.expect(iso_computads(free(back.set()), free(x.set())).has_value(), "computad iso for " + to_string(m));
        ++cardinals;
      }
    }
  }
  for (const BataninTree& b : enumerate_trees(9)) {
    r.expect(tree_of_zig(zig(pos(b).cardinal)) == b, "tree " + to_string(b));
    ++trees;
  }
  r.summary = std::to_string(sequences) + " sequences, " + std::to_string(cardinals) + " relabeled cardinals, " +
              std::to_string(trees) + " trees";
  return r;
}

Report boundary_lemmas() {
  Report r;
  const auto trees = enumerate_trees(7);
  std::size_t instances = 0;
  for (const BataninTree& b : trees) {
    const GlobCardinal x = pos(b).cardinal;
    for (std::size_t k = 0; k <= 3; ++k) {
      // trees: ∂_k Pos(B) ≅ Pos(∂_k B), compatibly with both inclusions
      const CardBoundary bd = boundary(x, k);
      const auto iso = cardinal_iso(pos(boundary_tree(b, k)).cardinal, bd.cardinal);
      r.expect(iso.has_value(), "no iso for " + to_string(b));
      if (iso) {
        r.expect(compose(bd.source, *iso) == src_pos(b, k), "source triangle " + to_string(b));
        r.expect(compose(bd.target, *iso) == tgt_pos(b, k), "target triangle " + to_string(b));
      }

      // suspension: ∂_{k+1} ΣX ≅ Σ ∂_k X
      const Bipointed s = suspend(x.set());
      const GlobCardinal sx = GlobCardinal::from(s.set);
      r.expect(sx.min() == CellRef{0, s.minus} && sx.max() == CellRef{0, s.plus}, "suspension basepoints");
      const CardBoundary sbd = boundary(sx, k + 1);
      const GlobCardinal sb = GlobCardinal::from(suspend(bd.cardinal.set()).set);
      const auto siso = cardinal_iso(sb, sbd.cardinal);
      r.expect(siso.has_value(), "suspension iso " + to_string(b));
      r.expect(sbd.cardinal.set() == sb.set(), "suspension boundary equality " + to_string(b));
      if (siso) {
        r.expect(compose(sbd.source, *siso) == suspend(bd.source), "suspension source " + to_string(b));
        r.expect(compose(sbd.target, *siso) == suspend(bd.target), "suspension target " + to_string(b));
      }

      // wedge: ∂_{k+1} (X ∨ Y) ≅ ∂_{k+1} X ∨ ∂_{k+1} Y
      for (const BataninTree& c : trees) {
        if (position_count(b) + position_count(c) > 8) continue;
        const GlobCardinal y = pos(c).cardinal;
        const WedgeSum whole = wedge({bipointed(x), bipointed(y)});
        const GlobCardinal wx = GlobCardinal::from(whole.sum.set);
        r.expect(wx.min() == CellRef{0, whole.sum.minus} && wx.max() == CellRef{0, whole.sum.plus},
                 "wedge basepoints");
        const CardBoundary bx = boundary(x, k + 1), by = boundary(y, k + 1);
        const WedgeSum parts = wedge({bipointed(bx.cardinal), bipointed(by.cardinal)});
        const CardBoundary wbd = boundary(wx, k + 1);
        const auto wiso = cardinal_iso(GlobCardinal::from(parts.sum.set), wbd.cardinal);
        r.expect(wiso.has_value(), "wedge iso " + to_string(b) + " " + to_string(c));
        if (wiso) {
          r.expect(compose(wbd.source, *wiso) == wedge_map(parts, whole, {bx.source, by.source}),
                   "wedge source " + to_string(b) + " " + to_string(c));
          r.expect(compose(wbd.target, *wiso) == wedge_map(parts, whole, {bx.target, by.target}),
                   "wedge target " + to_string(b) + " " + to_string(c));
        }
        ++instances;
      }
    }
  }
  r.summary = std::to_string(trees.size()) + " trees, k <= 3, " + std::to_string(instances) + " wedge instances";
  return r;
}

Report side_condition_fullness() {
  Report r;
  std::mt19937 rng(5);
  const auto library = testing::coherence_library(5);
  std::size_t types = 0, literal = 0, accepted = 0;
  for (const PsCtx& ps : testing::pasting_contexts(7)) {
    if (ps.dim() > 2) continue;
    const Translation t = r_ctx(catt::check_ctx(ps.ctx()));
    const BataninTree b = tree_of_psctx(ps);
    const CompMorphism rbat = to_positions(ps, t);
    std::vector<Ty> candidates = testing::variable_types(ps.ctx());
    const auto pool = testing::term_pool(ps.ctx(), library, 1, 30, rng);
    for (const Ty& ty : testing::type_pool(ps.ctx(), pool, 200, rng)) candidates.push_back(ty);
    for (const Ty& ty : candidates) {
      bool side = true;
      try {
        catt::check_side_condition(ps.ctx(), ty);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::InternalInvariant) throw;
        side = false;
      }
      const Sphere sphere = apply_sphere(rbat, r_ty(t, ty));
      const bool full = is_full(b, sphere);
      const bool fits = dim_tree(b) <= ty.dim() + 1;
      r.expect(side == (full && fits), "side condition vs fullness for " + debug_string(ty));
      if (fits) {
        r.expect(side == full, "side condition vs is_full for " + debug_string(ty));
        ++literal;
      }
      accepted += side ? 1 : 0;
      ++types;
    }
  }

  std::size_t terms = 0;
  for (const Ctx& ctx : testing::sample_contexts()) {
    const Translation t = r_ctx(catt::check_ctx(ctx));
    for (const auto& typed : testing::term_pool(ctx, library, 2, 40, rng)) {
      IndexSet vars = vars_of(typed.tm);
      const IndexSet tv = vars_of(typed.ty);
      vars.insert(tv.begin(), tv.end());
      r.expect(full_support(t.computad, r_tm(t, typed.tm)) == generators_of(t, vars),
               "support of " + debug_string(typed.tm));
      ++terms;
    }
  }
  r.expect(terms >= 500, "only " + std::to_string(terms) + " terms");
  r.summary = std::to_string(types) + " types (" + std::to_string(accepted) + " admissible, " +
              std::to_string(literal) + " with dim Γ <= dim + 1), " + std::to_string(terms) + " support checks";
  return r;
}

Report faithfulness() {
  Report r;
  std::mt19937 rng(6);
  const auto library = testing::coherence_library(5);
  std::size_t pairs = 0;
  for (const Ctx& ctx : testing::sample_contexts()) {
    const Translation t = r_ctx(catt::check_ctx(ctx));
    const auto pool = testing::term_pool(ctx, library, 2, 12, rng);
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        if (pool[i].tm == pool[j].tm) continue;
        r.expect(!(r_tm(t, pool[i].tm) == r_tm(t, pool[j].tm)), "terms collide");
        ++pairs;
      }
    const auto types = testing::type_pool(ctx, pool, 20, rng);
    for (std::size_t i = 0; i < types.size(); ++i)
      for (std::size_t j = i + 1; j < types.size(); ++j) {
        if (types[i] == types[j]) continue;
        r.expect(!(r_ty(t, types[i]) == r_ty(t, types[j])), "types collide");
        ++pairs;
      }
    // substitutions from the whiskering context into ctx
    const Translation w = r_ctx(catt::check_ctx(whisker()));
    const auto subs = testing::all_subs(whisker(), pool, 12);
    for (std::size_t i = 0; i < subs.size(); ++i)
      for (std::size_t j = i + 1; j < subs.size(); ++j) {
        if (subs[i] == subs[j]) continue;
        r.expect(!(r_sub(subs[i], t, w) == r_sub(subs[j], t, w)), "substitutions collide");
        ++pairs;
      }
  }
  r.expect(pairs >= 200, "only " + std::to_string(pairs) + " pairs");
  r.summary = std::to_string(pairs) + " distinct pairs, all translations distinct";
  return r;
}

Report essential_surjectivity() {
  Report r;
  std::mt19937 rng(7);
  const auto library = testing::coherence_library(5);
  std::size_t computads = 0, cells = 0, terms = 0;
  for (int round = 0; round < 120; ++round) {
    const std::size_t size = 1 + static_cast<std::size_t>(round % 5);
    const Computad c = testing::random_computad(size, rng);
    const ContextOfComputad back = ctx_of_computad(c);
    const Translation t = r_ctx(back.ctx);
    r.expect(iso_computads(c, t.computad).has_value(), "no iso after round trip");
    ++computads;
    for (const Cell& cell : testing::cell_pool(t.computad, 1, 6, rng)) {
      r.expect(r_tm(t, inv_r_tm(t, cell)) == cell, "r_tm(inv_r_tm) on " + debug_string(cell));
      ++cells;
    }
    if (round % 4 == 0) {
      for (const auto& typed : testing::term_pool(back.ctx.ctx(), library, 1, 6, rng)) {
        r.expect(inv_r_tm(t, r_tm(t, typed.tm)) == typed.tm, "inv_r_tm(r_tm) on " + debug_string(typed.tm));
        ++terms;
      }
    }
  }
  r.summary = std::to_string(computads) + " random computads (<= 5 generators), " + std::to_string(cells) +
              " cells and " + std::to_string(terms) + " terms round-tripped";
  return r;
}

Report cwf_laws() {
  Report r;
  std::mt19937 rng(8);
  const auto library = testing::coherence_library(5);
  const auto contexts = testing::sample_contexts();
  std::vector<Translation> translations;
  std::vector<std::vector<testing::TypedTm>> pools;
  for (const Ctx& ctx : contexts) {
    translations.push_back(r_ctx(catt::check_ctx(ctx)));
    pools.push_back(testing::term_pool(ctx, library, 1, 20, rng));
  }
  std::size_t pairs = 0, natural = 0, extensions = 0;
  for (int round = 0; round < 400 && pairs < 120; ++round) {
    const std::size_t g = rng() % contexts.size(), d = rng() % contexts.size(), e = rng() % contexts.size();
    const auto gamma = testing::random_sub(contexts[g], pools[d], rng);
    const auto delta = testing::random_sub(contexts[d], pools[e], rng);
    if (!gamma || !delta) continue;
    const CompMorphism rg = r_sub(*gamma, translations[d], translations[g]);
    const CompMorphism rd = r_sub(*delta, translations[e], translations[d]);
    r.expect(r_sub(compose_sub(*gamma, *delta), translations[e], translations[g]) == compose(rd, rg),
             "functoriality");
    ++pairs;
    for (std::size_t i = 0; i < pools[g].size(); i += 3) {
      const auto& typed = pools[g][i];
      r.expect(r_ty(translations[d], subst_ty(typed.ty, *gamma)) == apply_sphere(rg, r_ty(translations[g], typed.ty)),
               "naturality of types");
      r.expect(r_tm(translations[d], subst_tm(typed.tm, *gamma)) == apply_cell(rg, r_tm(translations[g], typed.tm)),
               "naturality of terms");
      ++natural;
    }
  }
  r.expect(pairs >= 100, "only " + std::to_string(pairs) + " pairs");

  for (std::size_t i = 0; i < contexts.size(); ++i) {
    const Translation& t = translations[i];
    r.expect(t.computad == free(v_ctx(gsett::check_ctx(contexts[i])).set), "R = Free V");
    std::vector<Ty> types = testing::variable_types(contexts[i]);
    for (const Ty& ty : testing::type_pool(contexts[i], pools[i], 10, rng)) types.push_back(ty);
    for (const Ty& ty : types) {
      const CompExtension ext = extend_comp(t.computad, r_ty(t, ty));
      const Translation wider = r_ctx(catt::check_ctx(contexts[i].extended(ty)));
      r.expect(wider.computad == ext.computad, "extension on the nose");
      r.expect(wider.vars.back() == ext.generator, "extension generator");
      r.expect(t.extended(ty).computad == ext.computad, "Translation::extended");
      ++extensions;
    }
  }
  r.summary = std::to_string(pairs) + " composable pairs, " + std::to_string(natural) + " naturality instances, " +
              std::to_string(extensions) + " extensions";
  return r;
}

Report conservativity_determinism() {
  Report r;
  std::size_t contexts = 0;
  std::vector<Ctx> all = testing::sample_contexts();
  for (const PsCtx& ps : testing::pasting_contexts(9)) all.push_back(ps.ctx());
  for (const Ctx& ctx : all) {
    for (const Ty& ty : testing::variable_types(ctx)) {
      const Ctx wider = ctx.extended(ty);
      bool gsett_ok = true;
      try {
        gsett::check_ctx(wider);
      } catch (const Error&) {
        gsett_ok = false;
      }
      if (!gsett_ok) continue;
      try {
        catt::check_ctx(wider);
      } catch (const Error& e) {
        r.expect(false, std::string("CaTT rejects a GSeTT context: ") + e.what());
      }
      ++contexts;
    }
  }
  const std::string globular = slurp("globular.catt");
  r.expect(driver::check(globular, driver::Format::Text, Theory::GSeTT).status == driver::Ok, "globular.catt GSeTT");
  r.expect(driver::check(globular, driver::Format::Text, Theory::CaTT).status == driver::Ok, "globular.catt CaTT");

  std::size_t commands = 0;
  auto same = [&](auto&& run, const std::string& what) {
    const driver::Outcome a = run(), b = run();
    r.expect(a.status == b.status && a.out == b.out && a.err == b.err, "non-deterministic " + what);
    ++commands;
  };
  const std::string source = slurp("composition.catt");
  const std::string bad = slurp("bad_composition.catt");
  const std::string computad = slurp("computad.json");
  for (driver::Format f : {driver::Format::Text, driver::Format::Json}) {
    same([&] { return driver::check(source, f); }, "check");
    same([&] { return driver::check(bad, f); }, "check (failing)");
    same([&] { return driver::check(globular, f, Theory::GSeTT); }, "check --theory gsett");
    same([&] { return driver::translate(source, f); }, "translate");
    same([&] { return driver::roundtrip(source, f); }, "roundtrip");
    same([&] { return driver::roundtrip(computad, f); }, "roundtrip json");
    same([&] { return driver::tree("br[br[br[]],br[]]", std::nullopt, f); }, "tree");
    same([&] { return driver::enumerate(9, false, f); }, "enumerate");
  }
  r.summary = std::to_string(contexts) + " GSeTT contexts accepted by CaTT, " + std::to_string(commands) +
              " commands byte-identical on re-run";
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    Report (*run)();
  };
  const Criterion criteria[] = {
      {1, "golden whiskering example", golden},
      {2, "bijection counts", bijection_counts},
      {3, "round-trip laws", round_trips},
      {4, "boundary, suspension and wedge lemmas", boundary_lemmas},
      {5, "side condition and fullness", side_condition_fullness},
      {6, "faithfulness", faithfulness},
      {7, "fullness and essential surjectivity", essential_surjectivity},
      {8, "CwF-morphism laws", cwf_laws},
      {9, "conservativity and determinism", conservativity_determinism},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Report r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.ok = false;
      r.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << "criterion " << c.number << ": " << (r.ok ? "PASS" : "FAIL") << " " << c.name;
    if (!r.summary.empty()) line << " (" << r.summary << ")";
    line << " [" << seconds << "s]";
    std::cout << line.str() << "\n";
    for (const std::string& f : r.failures) std::cout << "    " << f << "\n";
    all = all && r.ok;
  }
  return all ? 0 : 1;
}

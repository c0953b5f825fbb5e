#include <doctest.h>

#include <random>

#include "cattkit/catt.hpp"
#include "cattkit/pasting.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace cattkit;
using fixtures::arr;
using fixtures::obj;

namespace {

Error error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected an error");
  return Error(ErrorKind::InternalInvariant, "unreachable");
}

Tm identity_on(std::size_t x) { return Tm::coh(fixtures::point(), arr(obj(), 0, 0), Sub({Tm::var(x)})); }

}  // namespace

TEST_CASE("identity coherence") {
  const CheckedCtx point = catt::check_ctx(fixtures::point());
  CHECK_NOTHROW(catt::check_tm(point, identity_on(0), arr(obj(), 0, 0)));
  const CheckedCtx arrow = catt::check_ctx(Ctx({obj(), obj(), arr(obj(), 0, 1)}));
  const CheckedTm t = catt::check_tm(arrow, identity_on(1), arr(obj(), 1, 1));
  CHECK(t.ty() == arr(obj(), 1, 1));
  CHECK(catt::infer(arrow, identity_on(0)).ty() == arr(obj(), 0, 0));
}

TEST_CASE("composition and its failing variant") {
  const Ctx comp = fixtures::composable();
  const CheckedCtx ctx = catt::check_ctx(comp);
  const Tm ok = Tm::coh(comp, arr(obj(), 0, 3), identity_sub(5));
  CHECK_NOTHROW(catt::check_tm(ctx, ok, arr(obj(), 0, 3)));

  const Tm bad = Tm::coh(comp, arr(obj(), 0, 1), identity_sub(5));
  const Error e = error_of([&] { catt::check_tm(ctx, bad, arr(obj(), 0, 1)); });
  CHECK(e.kind() == ErrorKind::SideConditionFailedTarget);
  CHECK(e.expected() == IndexSet{3});
  CHECK(e.actual() == IndexSet{1});
  CHECK_FALSE(catt::side_condition_two_variant(comp, arr(obj(), 0, 1)));
}

TEST_CASE("rule errors") {
  const Ctx comp = fixtures::composable();
  const CheckedCtx ctx = catt::check_ctx(comp);
  const Ctx two_points({obj(), obj()});
  CHECK(error_of([&] { catt::check_tm(ctx, Tm::coh(two_points, arr(obj(), 0, 1), Sub({Tm::var(0), Tm::var(1)})),
                                      arr(obj(), 0, 1)); })
            .kind() == ErrorKind::NotPasting);
  CHECK(error_of([&] { catt::check_tm(ctx, Tm::coh(fixtures::point(), obj(), Sub({Tm::var(0)})), obj()); }).kind() ==
        ErrorKind::TypeNotArrow);
  CHECK(error_of([&] { catt::check_tm(ctx, identity_on(2), arr(obj(), 2, 2)); }).kind() ==
        ErrorKind::SubstitutionIllTyped);
  CHECK(error_of([&] { catt::check_tm(ctx, identity_on(0), arr(obj(), 1, 1)); }).kind() ==
        ErrorKind::AnnotationMismatch);
  // source side fails when the source misses x
  CHECK(error_of([&] { catt::check_side_condition(comp, arr(obj(), 1, 3)); }).kind() ==
        ErrorKind::SideConditionFailedSource);
}

TEST_CASE("a coherence whose context is too high fails") {
  const PsCtx w = check_ps(fixtures::whisker());
  for (const Ty& ty : testing::variable_types(w.ctx())) {
    if (ty.dim() + 1 >= w.dim()) continue;
    CHECK_THROWS_AS(catt::check_side_condition(w.ctx(), ty), Error);
  }
}

TEST_CASE("unified and two-variant side conditions agree") {
  std::size_t checked = 0;
  for (const PsCtx& ps : testing::pasting_contexts(9)) {
    if (ps.dim() > 2) continue;
    for (const Ty& ty : testing::variable_types(ps.ctx())) {
      bool unified = true;
      try {
        catt::check_side_condition(ps.ctx(), ty);
      } catch (const Error&) {
        unified = false;
      }
      CHECK(unified == catt::side_condition_two_variant(ps.ctx(), ty));
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("checked coherences are stable under substitution") {
  std::mt19937 rng(99);
  const auto library = testing::coherence_library(5);
  const auto contexts = testing::sample_contexts();
  std::size_t instances = 0;
  for (std::size_t round = 0; round < 30; ++round) {
    const Ctx& d = contexts[rng() % contexts.size()];
    const Ctx& e = contexts[rng() % contexts.size()];
    const CheckedCtx dc = catt::check_ctx(d);
    const CheckedCtx ec = catt::check_ctx(e);
    const auto pool = testing::term_pool(d, library, 2, 20, rng);
    const auto over_e = testing::term_pool(e, library, 1, 20, rng);
    const auto delta = testing::random_sub(d, over_e, rng);
    if (!delta) continue;
    CHECK_NOTHROW(catt::check_sub(ec, *delta, dc));
    for (const auto& t : pool) {
      if (!t.tm.is_coh()) continue;
      CHECK_NOTHROW(catt::check_tm(ec, subst_tm(t.tm, *delta), subst_ty(t.ty, *delta)));
      ++instances;
    }
  }
  CHECK(instances > 50);
}

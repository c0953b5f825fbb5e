#include <doctest.h>

#include "cattkit/pasting.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace cattkit;
using fixtures::arr;
using fixtures::obj;

TEST_CASE("derivations") {
  CHECK(check_ps(fixtures::point()).derivation().to_string() == "(pss)(ps)");
  const PsCtx w = check_ps(fixtures::whisker());
  CHECK(w.derivation().to_string() == "(pss)(pse)^2(psd)^2(pse)(psd)(ps)");
  CHECK(w.dim() == 2);
  CHECK(check_ps(fixtures::composable()).derivation().to_string() == "(pss)(pse)(psd)(pse)(psd)(ps)");
}

TEST_CASE("non pasting contexts") {
  for (const Ctx& bad : {Ctx({obj(), obj()}), Ctx(), Ctx({obj(), arr(obj(), 0, 0)}),
                         Ctx({obj(), obj(), arr(obj(), 0, 1), arr(obj(), 0, 1)}),
                         Ctx({obj(), obj(), arr(obj(), 1, 0)})}) {
    try {
      check_ps(bad);
      FAIL("accepted " << debug_string(bad));
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotAPastingContext);
    }
  }
}

TEST_CASE("boundaries of the whiskering context") {
  const PsCtx w = check_ps(fixtures::whisker());
  CHECK(boundary_ctx(w, 0, Side::Source).ctx() == fixtures::point());
  CHECK(boundary_ctx(w, 0, Side::Target).ctx() == fixtures::point());
  CHECK(boundary(w, 0, Side::Source).inclusion == std::vector<std::size_t>{0});
  CHECK(boundary(w, 0, Side::Target).inclusion == std::vector<std::size_t>{5});
  CHECK(boundary_ctx(w, 1, Side::Source).ctx() == fixtures::composable());
  CHECK(boundary(w, 1, Side::Source).inclusion == std::vector<std::size_t>{0, 1, 2, 5, 6});
  CHECK(boundary(w, 1, Side::Target).inclusion == std::vector<std::size_t>{0, 1, 3, 5, 6});
  CHECK(boundary_vars(w, 1, Side::Target) == IndexSet{0, 1, 3, 5, 6});
  for (std::size_t k = 2; k < 5; ++k) {
    CHECK(boundary_ctx(w, k, Side::Source).ctx() == w.ctx());
    CHECK(src_sub(w, k).sub() == identity_sub(w.size()));
    CHECK(tgt_sub(w, k).sub() == identity_sub(w.size()));
  }
  CHECK(src_sub(w, 0).sub() == Sub({Tm::var(0)}));
  CHECK(vars_of(tgt_sub(w, 1).sub()) == IndexSet{0, 1, 3, 5, 6});
}

TEST_CASE("boundaries are pasting contexts and compose") {
  for (const PsCtx& ps : testing::pasting_contexts(9)) {
    const std::size_t top = static_cast<std::size_t>(ps.dim());
    for (std::size_t k = 0; k <= top + 1; ++k) {
      for (Side side : {Side::Source, Side::Target}) {
        const PsCtx b = boundary_ctx(ps, k, side);
        CHECK_NOTHROW(check_ps(b.ctx()));
        for (std::size_t j = 0; j < k; ++j) {
          for (Side inner : {Side::Source, Side::Target}) {
            CHECK(boundary_ctx(b, j, inner).ctx() == boundary_ctx(ps, j, inner).ctx());
            // inclusions compose as well
            const auto outer = boundary(ps, k, side).inclusion;
            std::vector<std::size_t> via;
            for (std::size_t v : boundary(b, j, inner).inclusion) via.push_back(outer[v]);
            CHECK(via == boundary(ps, j, inner).inclusion);
          }
        }
      }
    }
    // the two top boundaries cover every variable below dimension dim Γ - 1
    if (ps.dim() >= 1) {
      IndexSet covered = boundary_vars(ps, top - 1, Side::Source);
      const IndexSet t = boundary_vars(ps, top - 1, Side::Target);
      covered.insert(t.begin(), t.end());
      for (std::size_t i = 0; i < ps.size(); ++i)
        if (ps.ctx()[i].dim() + 2 < ps.dim()) CHECK(covered.count(i) == 1);
    }
  }
}

TEST_CASE("top boundaries can miss variables of dimension dim Γ - 1") {
  // y in x -> y -> z is in neither 0-boundary
  const PsCtx c = check_ps(fixtures::composable());
  CHECK(boundary_vars(c, 0, Side::Source) == IndexSet{0});
  CHECK(boundary_vars(c, 0, Side::Target) == IndexSet{3});
}

#include <doctest.h>

#include <random>

#include "cattkit/catt.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace cattkit;
using fixtures::arr;
using fixtures::obj;

namespace {

Sub subs(std::initializer_list<std::size_t> vars) {
  Sub s;
  for (std::size_t v : vars) s.terms.push_back(Tm::var(v));
  return s;
}

// A coherence instance over the composable pair, reused below.
Tm composite(std::size_t x, std::size_t y, std::size_t f, std::size_t z, std::size_t g) {
  return Tm::coh(fixtures::composable(), arr(obj(), 0, 3), subs({x, y, f, z, g}));
}

}  // namespace

TEST_CASE("substitution on types") {
  CHECK(subst_ty(obj(), subs({7})) == obj());
  CHECK(subst_ty(arr(obj(), 0, 1), subs({3, 4})) == arr(obj(), 3, 4));
  const Ty two = Ty::arr(arr(obj(), 0, 1), Tm::var(2), Tm::var(3));
  CHECK(subst_ty(two, identity_sub(4)) == two);
  CHECK_THROWS_AS(subst_ty(arr(obj(), 0, 2), subs({0, 1})), Error);
  try {
    subst_ty(arr(obj(), 0, 2), subs({0, 1}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IndexOutOfRange);
  }
}

TEST_CASE("substitution on terms") {
  CHECK(subst_tm(Tm::var(0), subs({2})) == Tm::var(2));
  const Tm c = composite(0, 1, 2, 3, 4);
  CHECK(subst_tm(c, identity_sub(5)) == c);
  const Tm moved = subst_tm(c, subs({5, 6, 7, 8, 9}));
  CHECK(moved == composite(5, 6, 7, 8, 9));
  CHECK(moved.psctx() == c.psctx());
}

TEST_CASE("free variables") {
  CHECK(vars_of(obj()).empty());
  CHECK(vars_of(arr(obj(), 0, 1)) == IndexSet{0, 1});
  // a coherence only exposes the variables of its substitution
  CHECK(vars_of(composite(4, 4, 6, 4, 6)) == IndexSet{4, 6});
  CHECK(vars_of(fixtures::whisker()) == IndexSet{0, 1, 2, 3, 4, 5, 6});
  CHECK(vars_of(subs({3, 1, 3})) == IndexSet{1, 3});
}

TEST_CASE("dimensions") {
  CHECK(dim_ty(obj()) == -1);
  CHECK(dim_ctx(Ctx()) == -1);
  CHECK(dim_ctx(fixtures::point()) == 0);
  CHECK(dim_ctx(fixtures::whisker()) == 2);
  CHECK(arr(obj(), 0, 1).dim() == 0);
}

TEST_CASE("debug rendering separates distinct syntax") {
  CHECK(debug_string(composite(0, 1, 2, 3, 4)) != debug_string(composite(0, 1, 2, 3, 2)));
  CHECK(debug_string(composite(0, 1, 2, 3, 4)) == debug_string(composite(0, 1, 2, 3, 4)));
  CHECK(coh_depth(Tm::var(0)) == 0);
  CHECK(coh_depth(composite(0, 1, 2, 3, 4)) == 1);
  CHECK(scope_of(arr(obj(), 0, 6)) == 7);
}

TEST_CASE("composition of substitutions is associative and unital") {
  std::mt19937 rng(17);
  const auto library = testing::coherence_library(5);
  const auto contexts = testing::sample_contexts();
  std::size_t triples = 0;
  for (std::size_t round = 0; round < 60; ++round) {
    const Ctx& gamma = contexts[rng() % contexts.size()];
    const Ctx& delta = contexts[rng() % contexts.size()];
    const Ctx& eps = contexts[rng() % contexts.size()];
    const auto pool_delta = testing::term_pool(delta, library, 1, 40, rng);
    const auto pool_eps = testing::term_pool(eps, library, 1, 40, rng);
    const auto pool_phi = testing::term_pool(fixtures::whisker(), library, 1, 40, rng);
    auto g = testing::random_sub(gamma, pool_delta, rng);
    auto d = testing::random_sub(delta, pool_eps, rng);
    auto r = testing::random_sub(eps, pool_phi, rng);
    if (!g || !d || !r) continue;
    ++triples;
    CHECK(compose_sub(compose_sub(*g, *d), *r) == compose_sub(*g, compose_sub(*d, *r)));
    CHECK(compose_sub(identity_sub(gamma.size()), *g) == *g);
    CHECK(compose_sub(*g, identity_sub(delta.size())) == *g);
    // coherences compose their substitutions
    for (const auto& t : pool_delta) {
      CHECK(subst_tm(subst_tm(t.tm, *d), *r) == subst_tm(t.tm, compose_sub(*d, *r)));
      IndexSet expected;
      for (std::size_t i : vars_of(t.tm)) {
        const IndexSet vi = vars_of((*d)[i]);
        expected.insert(vi.begin(), vi.end());
      }
      CHECK(vars_of(subst_tm(t.tm, *d)) == expected);
    }
  }
  CHECK(triples >= 20);
}

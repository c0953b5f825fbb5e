#pragma once

#include "cattkit/syntax.hpp"

namespace fixtures {

using cattkit::Ctx;
using cattkit::Tm;
using cattkit::Ty;

inline Ty arr(const Ty& base, std::size_t u, std::size_t v) { return Ty::arr(base, Tm::var(u), Tm::var(v)); }
inline Ty obj() { return Ty::obj(); }

// x y f g α z h, with f g : x -> y, α : f -> g and h : y -> z.
inline Ctx whisker() {
  const Ty f = arr(obj(), 0, 1);
  return Ctx({obj(), obj(), f, f, arr(f, 2, 3), obj(), arr(obj(), 1, 5)});
}

// x y f z g: two composable arrows.
inline Ctx composable() { return Ctx({obj(), obj(), arr(obj(), 0, 1), obj(), arr(obj(), 1, 3)}); }

inline Ctx point() { return Ctx({obj()}); }

}  // namespace fixtures

#pragma once

#include "veech/orbit.hpp"
#include "veech/platonic.hpp"

// The dodecahedron orbit takes a few seconds; build it once per process.
inline const veech::OrbitTable& dodeca_orbit() {
  static const veech::OrbitTable table = [] {
    using namespace veech;
    auto t = enumerate_orbit(build_unfolding(Solid::dodecahedron), {generator_R(), generator_T()}, "RT");
    t.j = compute_j(t);
    return t;
  }();
  return table;
}

#include <doctest.h>

#include "veech/platonic.hpp"

using namespace veech;

TEST_CASE("origami normal form") {
  auto cube = platonic_origami(Solid::cube);
  auto nf = origami_normal_form(cube);
  CHECK(origami_normal_form(nf) == nf);
  // Relabel by an arbitrary bijection.
  std::vector<int> lab(24);
  for (int i = 0; i < 24; ++i) lab[static_cast<std::size_t>(i)] = (7 * i + 3) % 24;
  Permutation p(lab);
  Origami moved{p * cube.h * p.inverse(), p * cube.v * p.inverse()};
  CHECK(origami_normal_form(moved) == nf);
  CHECK_THROWS(origami_normal_form({Permutation::identity(2), Permutation::identity(2)}));
}

TEST_CASE("action convention follows the shear") {
  auto c = default_convention();
  auto o = platonic_origami(Solid::octahedron);
  Mat2 t{Nf(1), Nf(1), Nf(0), Nf(1)}, s{Nf(0), Nf(-1), Nf(1), Nf(0)};
  CHECK(canonicalize(apply_matrix(t, origami_surface(o))) == canonicalize(origami_surface(act_T(o, c))));
  CHECK(canonicalize(apply_matrix(s, origami_surface(o))) == canonicalize(origami_surface(act_S(o, c))));
}

TEST_CASE("Veech data of the arithmetic solids") {
  struct Row {
    Solid s;
    int index;
    std::vector<int> widths;
    int nu2, nu3, genus;
  };
  std::vector<Row> rows = {{Solid::tetrahedron, 1, {1}, 1, 1, 0},
                           {Solid::octahedron, 4, {1, 3}, 0, 1, 0},
                           {Solid::cube, 9, {2, 3, 4}, 1, 0, 0},
                           {Solid::icosahedron, 10, {2, 3, 5}, 0, 1, 0}};
  for (auto& r : rows) {
    CAPTURE(solid_name(r.s));
    auto orbit = sl2z_orbit(platonic_origami(r.s));
    auto d = veech_data(orbit);
    CHECK(d.index == r.index);
    CHECK(d.cusp_widths == r.widths);
    CHECK(d.nu2 == r.nu2);
    CHECK(d.nu3 == r.nu3);
    CHECK(d.genus == r.genus);
    int sum = 0;
    for (int w : d.cusp_widths) sum += w;
    CHECK(sum == d.index);
    auto rep = blocking_report(platonic_origami(r.s));
    CHECK(rep.blocked);
    CHECK(rep.cusps_checked == static_cast<int>(r.widths.size()));
  }
}

TEST_CASE("cylinder directions") {
  auto cube = platonic_origami(Solid::cube);
  for (auto& c : horizontal_cylinders({cube.v, cube.h})) CHECK(c.circumference == 4);
  auto oct = platonic_origami(Solid::octahedron);
  for (auto& c : horizontal_cylinders(oct)) CHECK(c.circumference == 3);
}

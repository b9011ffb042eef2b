#include <doctest.h>

#include "orbit_fixture.hpp"
#include "veech/saddle.hpp"
#include "veech/teichcurve.hpp"

using namespace veech;

TEST_CASE("double pentagon is its own orbit") {
  auto t = enumerate_orbit(double_pentagon(), {generator_R(), generator_T()}, "RT");
  CHECK(t.N == 1);
  CHECK(t.r.is_identity());
  CHECK(t.t.is_identity());
  CHECK(is_j_invariant(double_pentagon()));
  auto c = topology_over_pi5(t.r, t.t);
  CHECK(c.genus == 0);
  CHECK(c.cusps == 1);
  CHECK(c.cone_pi == 1);
  CHECK(c.cone_two_pi_fifths == 1);
}

TEST_CASE("orbit cap") {
  OrbitOptions o;
  o.cap = 50;
  CHECK_THROWS_AS(enumerate_orbit(build_unfolding(Solid::dodecahedron), {generator_R(), generator_T()}, "RT", o),
                  std::runtime_error);
  CHECK_THROWS_AS(enumerate_orbit(double_pentagon(), {generator_R()}, "RT"), std::invalid_argument);
}

TEST_CASE("dodecahedron orbit permutations") {
  const auto& t = dodeca_orbit();
  REQUIRE(t.N == 2106);
  CHECK(t.words[0].empty());
  CHECK(t.r.cycle_type() == std::map<int, int>{{1, 1}, {5, 421}});
  CHECK(t.t.num_cycles() == 362);
  CHECK((t.r * t.t.inverse()).cycle_type() == std::map<int, int>{{1, 18}, {2, 1044}});
  CHECK(t.r.pow(10).is_identity());
  CHECK((t.r * t.t.inverse()).pow(2).is_identity());
  CHECK((t.j * t.j).is_identity());
  CHECK(t.j * t.t * t.j == t.t.inverse());
  CHECK(t.j * t.r * t.j == t.r.inverse());
  CHECK(is_j_invariant(build_unfolding(Solid::dodecahedron)));
}

TEST_CASE("orbit words are sorted and replay to their index") {
  const auto& t = dodeca_orbit();
  for (int i = 1; i < t.N; ++i) CHECK(word_less(t.words[static_cast<std::size_t>(i - 1)], t.words[static_cast<std::size_t>(i)]));
  int bad = 0;
  for (int i = 0; i < t.N; ++i) bad += replay_word(t, t.words[static_cast<std::size_t>(i)]) != i;
  CHECK(bad == 0);
  // The canonical form of w(D) for a few words, recomputed from scratch.
  auto d = build_unfolding(Solid::dodecahedron);
  for (int i : {1, 2, 17, 500, 2105})
    CHECK(canonicalize(apply_matrix(word_matrix(t.words[static_cast<std::size_t>(i)]), d)) == t.surfaces[static_cast<std::size_t>(i)]);
  CHECK(word_less("TRR", "RTR"));
  CHECK(!word_less("RTR", "TRR"));
  CHECK(word_less("T", "RR"));
}

TEST_CASE("j by direct reflection") {
  const auto& t = dodeca_orbit();
  for (int i : {0, 3, 44, 901, 2000}) {
    auto mirrored = canonicalize(apply_reflection(generator_J(), t.surfaces[static_cast<std::size_t>(i)].surface));
    CHECK(mirrored == t.surfaces[static_cast<std::size_t>(t.j(i))]);
  }
}

TEST_CASE("equivalence classes and the Teichmuller curve") {
  const auto& t = dodeca_orbit();
  auto cl = equivalence_classes(t);
  CHECK(cl.count() == 211);
  for (int c = 0; c < cl.count(); ++c) {
    int rep = cl.representative[static_cast<std::size_t>(c)];
    CHECK(cl.class_of[static_cast<std::size_t>(rep)] == c);
    CHECK(cl.class_of[static_cast<std::size_t>(t.t(rep))] == c);
    CHECK(cl.class_of[static_cast<std::size_t>(t.j(rep))] == c);
  }
  for (int i = 0; i < t.N; ++i) CHECK(cl.representative[static_cast<std::size_t>(cl.class_of[static_cast<std::size_t>(i)])] <= i);

  auto c = topology_over_pi5(t.r, t.t);
  CHECK(c.index == 2106);
  CHECK(c.genus == 131);
  CHECK(c.cusps == 362);
  CHECK(c.cone_pi == 18);
  CHECK(c.cone_two_pi_fifths == 1);
  CHECK(riemann_hurwitz_genus(t.r, t.t) == 131);
}

TEST_CASE("malformed permutations are rejected") {
  auto three = Permutation::from_cycles(3, {{0, 1, 2}});
  CHECK_THROWS_AS(topology_over_pi5(three, Permutation::identity(3)), std::invalid_argument);
  CHECK_THROWS_AS(topology_over_pi5(Permutation::identity(2), Permutation::identity(3)), std::invalid_argument);
}

TEST_CASE("Veech group generators stabilize the unfolding") {
  const auto& t = dodeca_orbit();
  auto gens = veech_generators(t, {generator_R(), generator_T()}, "RT");
  REQUIRE(gens.size() == 2 * 2106);
  auto base = build_unfolding(Solid::dodecahedron);
  // Every 84th of them, which gives 50.
  for (std::size_t k = 0; k < gens.size(); k += 84) {
    CHECK(gens[k].det() == Nf(1));
    CHECK(canonicalize(apply_matrix(gens[k], base)) == t.surfaces[0]);
  }
}

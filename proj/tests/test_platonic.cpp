#include <doctest.h>

#include "veech/platonic.hpp"

using namespace veech;

namespace {

std::vector<std::vector<int>> cycles_of(const Permutation& p) {
  std::vector<std::vector<int>> out;
  for (auto& c : p.cycles())
    if (c.size() > 1) out.push_back(c);
  return out;
}

}  // namespace

TEST_CASE("adjacency nets") {
  auto a = build_adj(Solid::cube, {0, 0});
  CHECK(a == std::vector<FaceCoord>{{3, 4}, {0, 1}, {1, 5}, {0, 3}});
  for (int i = 0; i < 10; ++i) {
    auto d = build_adj(Solid::dodecahedron, {i, 0});
    // The listed row [1..5], rotated by the sheet's edge shift 2i.
    for (int e = 0; e < 5; ++e) CHECK(d[static_cast<std::size_t>(e)].poly == (e + 2 * i) % 5 + 1);
  }
  CHECK_THROWS(build_adj(Solid::octahedron, {0, 0}));
  CHECK_THROWS(build_adj(Solid::cube, {4, 0}));
  // Crossing the same edge back returns to the start.
  for (Solid s : {Solid::cube, Solid::icosahedron, Solid::dodecahedron}) {
    int p = face_sides(s);
    for (int i = 0; i < deck_order(s); ++i)
      for (int f = 0; f < face_count(s); ++f) {
        auto adj = build_adj(s, {i, f});
        for (int e = 0; e < p; ++e) {
          int back = s == Solid::cube ? (e + 2) % 4 : e;
          CHECK(build_adj(s, adj[static_cast<std::size_t>(e)])[static_cast<std::size_t>(back)] == FaceCoord{i, f});
        }
      }
  }
}

TEST_CASE("sheets and monodromy") {
  CHECK(sheet_labels(Solid::dodecahedron).size() == 60);
  CHECK(sheet_labels(Solid::cube).size() == 24);
  CHECK(sheet_labels(Solid::icosahedron).size() == 60);
  CHECK(cycles_of(monodromy_perm(Solid::cube, 0)) ==
        std::vector<std::vector<int>>{{0, 22, 14, 11}, {1, 4, 15, 5}, {2, 10, 12, 23}, {3, 16, 13, 17}, {6, 9, 8, 7}, {18, 19, 20, 21}});
  CHECK(cycles_of(monodromy_perm(Solid::cube, 1)) ==
        std::vector<std::vector<int>>{{0, 1, 2, 3}, {4, 20, 17, 6}, {5, 8, 16, 18}, {7, 10, 21, 11}, {9, 22, 19, 23}, {12, 15, 14, 13}});
  auto i1 = cycles_of(monodromy_perm(Solid::icosahedron, 1));
  CHECK(i1.front() == std::vector<int>{0, 45, 13, 17, 9});
  CHECK(i1.size() == 12);
  CHECK(cycles_of(monodromy_perm(Solid::icosahedron, 2)).front() == std::vector<int>{0, 4, 3, 2, 1});
  CHECK(monodromy_group_order(Solid::octahedron) == 12);
  CHECK(monodromy_group_order(Solid::cube) == 24);
  CHECK(monodromy_group_order(Solid::icosahedron) == 60);
  CHECK(monodromy_group_order(Solid::dodecahedron) == 60);
  for (Solid s : all_solids()) CHECK(is_transitive(monodromy_generators(s)));
}

TEST_CASE("unfoldings and strata") {
  for (Solid s : all_solids()) {
    int k = deck_order(s);
    auto st = stratum_of_k_cover(k);
    auto d = singularity_data(build_unfolding(s));
    CAPTURE(solid_name(s));
    CHECK(d.genus == st.genus);
    CHECK(static_cast<int>(d.cone_turns.size()) == st.zero_count);
    for (int t : d.cone_turns) CHECK(t == st.zero_order + 1);
    auto c = covering_to_pi_n(s);
    CHECK(c.regular);
  }
  CHECK(stratum_string(stratum_of_k_cover(10)) == "H(8^20)");
  CHECK(stratum_of_k_cover(10).genus == 81);
  CHECK(stratum_of_k_cover(4).genus == 9);
  CHECK(stratum_of_k_cover(2).genus == 1);
  CHECK(covering_to_pi_n(Solid::dodecahedron).degree == 60);
  CHECK(covering_to_pi_n(Solid::cube).degree == 24);
}

TEST_CASE("monodromy cover equals the net") {
  auto net = build_unfolding(Solid::dodecahedron);
  auto cover = double_pentagon_cover(monodromy_generators(Solid::dodecahedron));
  CHECK(canonicalize(net) == canonicalize(cover));
}

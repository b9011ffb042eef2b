#pragma once

#include <string>
#include <vector>

#include "veech/origami.hpp"
#include "veech/permutation.hpp"
#include "veech/surface.hpp"

namespace veech {

enum class Solid { tetrahedron, octahedron, cube, icosahedron, dodecahedron };

const std::vector<Solid>& all_solids();
std::string solid_name(Solid s);
Solid parse_solid(const std::string& name);  // throws std::invalid_argument

int deck_order(Solid s);   // k: the flat metric is a k-differential
int face_count(Solid s);
int face_sides(Solid s);

// Copy `poly` of the net on sheet `sheet`.
struct FaceCoord {
  int sheet = 0;
  int poly = 0;
  friend bool operator==(const FaceCoord& a, const FaceCoord& b) { return a.sheet == b.sheet && a.poly == b.poly; }
  friend bool operator<(const FaceCoord& a, const FaceCoord& b) {
    return a.sheet != b.sheet ? a.sheet < b.sheet : a.poly < b.poly;
  }
};

// Neighbours across edges 0..p-1, edge 0 being the (lower) horizontal one.
// Only the cube, icosahedron and dodecahedron have nets here.
std::vector<FaceCoord> build_adj(Solid s, FaceCoord c);

// Covering sheets, in order: all squares for the cube; for the odd solids the
// polygons with a horizontal bottom edge.
std::vector<FaceCoord> sheet_labels(Solid s);
// The other polygon of each sheet (across edge 0 for the icosahedron, edge 4
// for the dodecahedron).
std::vector<FaceCoord> sheet_partners(Solid s);

// Sheet permutation from crossing edge `edge` of each sheet's top polygon.
Permutation monodromy_perm(Solid s, int edge);
// Generators of the monodromy group: (h, v) origami pairs for the four
// arithmetic solids, x0..x3 for the dodecahedron.
std::vector<Permutation> monodromy_generators(Solid s);
long monodromy_group_order(Solid s);

// Square-tiled model of an arithmetic solid's unfolding.
Origami platonic_origami(Solid s);

// Dodecahedron: 120 pentagons, label sheet * 12 + pent, base (0, 0).
// Cube: 24 unit squares, label sheet * 6 + square.
// Icosahedron: 120 triangles in the sheared (rational) picture, label
// sheet * 20 + triangle.
// Octahedron and tetrahedron: the squares of their origamis.
TranslationSurface build_unfolding(Solid s);

// The double-pentagon cover with monodromy x0..x3: polygon i is the top
// pentagon of sheet i, polygon m + i its bottom pentagon (m sheets).
TranslationSurface double_pentagon_cover(const std::vector<Permutation>& x);

struct Covering {
  int degree = 0;
  std::vector<int> sheet_of_face;  // per unfolding label
  std::vector<int> cell_of_face;   // 0 = top / square, 1 = bottom cell
  bool regular = false;            // deck group acts simply transitively on fibers
};
Covering covering_to_pi_n(Solid s);

struct StratumData {
  int k = 0;
  int zero_order = 0, zero_count = 0;
  int genus = 0;
};
// Canonical k-cover of a k-differential with 2k simple poles on the sphere.
StratumData stratum_of_k_cover(int k);
std::string stratum_string(const StratumData& d);  // "H(8^20)"

// Measured on a built surface: vertex classes and cone angles.
struct SingularityData {
  int genus = 0;
  std::vector<int> cone_turns;  // cone angle / 2pi per vertex class, sorted
};
SingularityData singularity_data(const TranslationSurface& s);

}  // namespace veech

#pragma once

#include <array>
#include <string>
#include <vector>

#include "veech/orbit.hpp"
#include "veech/permutation.hpp"
#include "veech/surface.hpp"

namespace veech {

// Monodromy x0..x3 of a degree-m cover of the double pentagon: x_e(i) is the
// sheet whose bottom pentagon lies across edge e of sheet i's top pentagon.
using Quadruple = std::array<Permutation, 4>;

Quadruple dodecahedron_quadruple();
TranslationSurface quadruple_surface(const Quadruple& x);
// The double pentagon itself (top pentagon label 0, bottom label 1).
TranslationSurface double_pentagon();

// Read the quadruple off a surface tiled by side-2 regular pentagons, upright
// ones being the tops. Sheets are numbered by label order of the tops.
// Throws std::invalid_argument for any other tiling.
Quadruple pentagon_quadruple(const TranslationSurface& s);

// Up to relabeling sheets, gam_r(x) and gam_t(x) are the quadruples of
// R^-1 S and T^-1 S when x is that of S. In functional notation
// gam_r(x) = (x3^-1 x2, x2, x0^-1 x2, x1^-1 x2),
// gam_t(x) = (x1^-1 x0, x1, x2 x3^-1 x2 x1, x2 x1).
Quadruple gam_r(const Quadruple& x);
Quadruple gam_t(const Quadruple& x);
// Their inverses: the quadruples of R S and T S.
Quadruple gam_r_inv(const Quadruple& y);
Quadruple gam_t_inv(const Quadruple& y);
// Quadruple of w(base) for a word over {R, T, r, t} (lower case = inverse),
// rightmost letter acting first, as in word_matrix.
Quadruple quadruple_of_word(const std::string& word, const Quadruple& base = dodecahedron_quadruple());

// Sheets met while turning counter-clockwise about the lift of the left end
// of the horizontal edge on sheet n; 24 entries for the dodecahedron.
std::vector<int> vert_cycle(int n, const Quadruple& x);

enum class SaddleKind { long_diagonal, short_edge };
// Positions i with vert[i] == vert[0] and i = 2 (long) or 3 (short) mod 8.
std::vector<std::pair<int, int>> vert_to_self(SaddleKind kind, const std::vector<int>& vert);
// Direct check on the glued surface: do the endpoints of the horizontal
// diagonal (long) or the horizontal edge (short) of sheet n's top pentagon
// coincide?
bool horizontal_saddle_closed(SaddleKind kind, const Quadruple& x, int n = 1);

// Exact tracing.
struct TraceSegment {
  int label = 0;
  Vec2 from, to;  // polygon-local coordinates
};
struct TraceResult {
  std::vector<TraceSegment> segments;
  Corner start, end;       // end valid when hit_singularity
  bool hit_singularity = false;
  bool closed = false;     // start and end in the same vertex class
  Vec2 holonomy;           // exact displacement when hit_singularity
  int polygons = 0;        // polygon interiors entered, with multiplicity
};
// Leave corner `start` in direction `dir`, which must lie in the corner's
// half-open wedge. Stops at the first polygon vertex hit or after
// max_polygons polygons.
TraceResult trace_separatrix(const TranslationSurface& s, Corner start, const Vec2& dir, int max_polygons = 100000);

// The cylinder on the left of a traced saddle connection has the saddle
// connection as its whole boundary component.
bool bounds_cylinder_on_left(const TranslationSurface& s, const TraceResult& tr, const Vec2& dir);

// Sector index k with arg(v) in [k pi/5, (k+1) pi/5).
int pi5_sector(const Vec2& v);

struct RosenResult {
  std::string steps;  // letters in application order: 'T' for T^-1, 'R' for R^-1
  Vec2 terminal;
  bool is_long = false;
  // Word for replay_word: the inverse letters, rightmost applied first.
  std::string replay() const;
};
// Throws std::invalid_argument if arg(v) is outside [0, 4pi/5) or no terminal
// vector is reached within max_steps.
RosenResult rosen_reduce(const Vec2& v, int max_steps = 100000);

// Case formula for long saddle connections with a cylinder on the left,
// v = (a + b s^2, c s + d s^3), theta in [0, 3pi/5).
int combinatorial_length(const Vec2& v);

struct SaddleHit {
  Vec2 holonomy;
  Corner arrival;  // corner at which the separatrix ends
};
// All saddle connections on the double pentagon leaving the left end of the
// top pentagon's horizontal edge with |v| < length_bound, i.e. one per
// direction in [0, 3pi/5).
std::vector<SaddleHit> enumerate_saddle_connections(double length_bound);

struct SaddleClassRecord {
  int id = 0;               // 1-based, by increasing length
  int orbit_class = 0;      // index into the <t, j> classes
  std::string word;         // class word (Table-3 style) or Rosen steps
  int k = 0;
  Vec2 holonomy;
  double length = 0, x = 0, y = 0;
};

struct ClosedSaddleSearch {
  Classes classes;
  std::vector<int> long_closed;   // class indices, ascending
  std::vector<int> short_closed;
  std::vector<SaddleClassRecord> records;  // sorted by length
};
// Requires j in the table.
ClosedSaddleSearch classify_closed_saddles(const OrbitTable& table);

// Shortest left-cylinder representative per closed class among saddle
// connections shorter than `length_bound`. `word` is the Rosen step word X
// after its leading R steps, whose count is `k`: v = R^k X (2 phi, 0), so the
// coset representative is X^-1.
// Indexed like `search.records`; classes without a hit get id 0.
std::vector<SaddleClassRecord> shortest_representatives(const OrbitTable& table, const ClosedSaddleSearch& search,
                                                        double length_bound);

// Holonomy R^k w^-1 (2 phi, 0).
Vec2 class_holonomy(const std::string& word, int k);

}  // namespace veech

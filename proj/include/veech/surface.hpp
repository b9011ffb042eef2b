#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "veech/planar.hpp"

namespace veech {

struct EdgeRef {
  int label = 0;
  int edge = 0;

  friend bool operator==(const EdgeRef& a, const EdgeRef& b) { return a.label == b.label && a.edge == b.edge; }
  friend bool operator!=(const EdgeRef& a, const EdgeRef& b) { return !(a == b); }
  friend bool operator<(const EdgeRef& a, const EdgeRef& b) {
    return a.label != b.label ? a.label < b.label : a.edge < b.edge;
  }
};

// A polygon corner: the vertex `vertex` of polygon `label`.
using Corner = EdgeRef;

// Convex polygons with labels 0..n-1 and an edge-gluing involution. Glued
// edges are parallel with opposite orientation, so the gluing maps are
// translations. Polygons are shared between surfaces when they coincide, which
// keeps large orbit tables small.
class TranslationSurface {
public:
  TranslationSurface() = default;

  int add_polygon(ConvexPolygon p);
  int add_polygon(std::shared_ptr<const ConvexPolygon> p);
  void glue(EdgeRef a, EdgeRef b);
  void set_base_label(int label) { base_ = label; }

  int num_polygons() const { return static_cast<int>(polys_.size()); }
  const ConvexPolygon& polygon(int label) const { return *polys_[static_cast<std::size_t>(label)]; }
  const std::shared_ptr<const ConvexPolygon>& polygon_ptr(int label) const {
    return polys_[static_cast<std::size_t>(label)];
  }
  EdgeRef opposite(EdgeRef e) const {
    return glue_[static_cast<std::size_t>(e.label)][static_cast<std::size_t>(e.edge)];
  }
  bool is_glued(EdgeRef e) const { return opposite(e).label >= 0; }
  int base_label() const { return base_; }
  int num_edges() const;  // glued pairs

  // Throws std::logic_error describing the first violated invariant.
  void validate() const;
  Nf area() const;

  // Corner reached by rotating counter-clockwise (resp. clockwise) about the
  // same point of the surface past one edge.
  Corner ccw_corner(Corner c) const;
  Corner cw_corner(Corner c) const;

private:
  std::vector<std::shared_ptr<const ConvexPolygon>> polys_;
  std::vector<std::vector<EdgeRef>> glue_;
  int base_ = 0;
};

// Singular points: classes of polygon corners identified by the gluing.
struct VertexClasses {
  std::vector<std::vector<int>> of_corner;  // [label][vertex] -> class id
  std::vector<int> cone_turns;              // class id -> cone angle / 2pi
  int count() const { return static_cast<int>(cone_turns.size()); }
  int at(Corner c) const {
    return of_corner[static_cast<std::size_t>(c.label)][static_cast<std::size_t>(c.edge)];
  }
};
VertexClasses vertex_classes(const TranslationSurface& s);
int genus(const TranslationSurface& s);

// Rejects det <= 0.
TranslationSurface apply_matrix(const Mat2& m, const TranslationSurface& s);

struct Standardized {
  ConvexPolygon polygon;
  int offset = 0;  // new vertex i is old vertex i + offset
};
Standardized standardize(const ConvexPolygon& p);
bool polygon_less(const ConvexPolygon& p, const ConvexPolygon& q);

// Delaunay decomposition: fan-triangulate, flip to Delaunay, merge
// cocircular triangles into maximal convex cells.
TranslationSurface delaunay(const TranslationSurface& s);
// Each cell's circumdisk, developed across every edge, contains no vertex
// of the neighbouring cell (vertices of the shared edge excepted); cells are
// maximal, so the check is strict.
bool has_empty_circumdisks(const TranslationSurface& s);

// Algorithm 2: labels assigned in queue-pop order scanning edges 0..n-1.
// Returns new_label_of[old_label].
std::vector<int> breadth_first_order(const TranslationSurface& s, int base);
TranslationSurface relabel(const TranslationSurface& s, const std::vector<int>& new_label_of, int new_base);
TranslationSurface breadth_first_index(const TranslationSurface& s, int base);

struct CanonicalForm {
  TranslationSurface surface;  // labels 0..n-1, base 0, standard polygons
  std::size_t digest = 0;
  // Each entry maps canonical label -> canonical label; one per minimizing
  // base cell, the first being the identity.
  std::vector<std::vector<int>> automorphisms;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b);
  friend bool operator!=(const CanonicalForm& a, const CanonicalForm& b) { return !(a == b); }
};

CanonicalForm canonicalize(const TranslationSurface& s);
std::vector<std::vector<int>> translation_automorphisms(const TranslationSurface& s);
// Structural equality of already-canonical surfaces.
bool same_surface_data(const TranslationSurface& a, const TranslationSurface& b);

// Exact incircle sign for the triangle 0, b, c (counter-clockwise) and point
// d: +1 inside, 0 on, -1 outside the circumcircle.
int incircle_sign(const Vec2& b, const Vec2& c, const Vec2& d);

}  // namespace veech

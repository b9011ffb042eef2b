#pragma once

#include <string>
#include <vector>

#include "veech/numfield.hpp"

namespace veech {

struct Vec2 {
  Nf x, y;

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  friend Vec2 operator*(const Nf& c, const Vec2& v) { return {c * v.x, c * v.y}; }
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }
};

inline Nf cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Nf dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Nf norm2(const Vec2& a) { return dot(a, a); }
// Lexicographic (y, x) order: the "lowest" point of a set.
bool lower_point(const Vec2& a, const Vec2& b);

// Row-major [[a, b], [c, d]].
struct Mat2 {
  Nf a, b, c, d;

  static Mat2 identity() { return {Nf(1), Nf(0), Nf(0), Nf(1)}; }
  Nf det() const { return a * d - b * c; }
  Mat2 inverse() const;

  friend bool operator==(const Mat2& m, const Mat2& n) {
    return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
  }
  friend bool operator!=(const Mat2& m, const Mat2& n) { return !(m == n); }
  Mat2 operator-() const { return {-a, -b, -c, -d}; }
};

Mat2 mat_mul(const Mat2& m, const Mat2& n);
Vec2 mat_act(const Mat2& m, const Vec2& v);
inline Mat2 operator*(const Mat2& m, const Mat2& n) { return mat_mul(m, n); }
inline Vec2 operator*(const Mat2& m, const Vec2& v) { return mat_act(m, v); }
Mat2 mat_pow(const Mat2& m, int k);  // k may be negative

Mat2 generator_R();  // rotation by pi/5
Mat2 generator_T();  // horizontal shear by 2 cot(pi/5)
Mat2 generator_J();  // diag(1, -1)

// Product of a word over {R, T} read as a matrix product left to right,
// so "RT" is R * T (T acts first). Lower-case letters denote inverses.
Mat2 word_matrix(const std::string& word);

struct ConvexPolygon {
  std::vector<Vec2> vertices;  // counter-clockwise

  int size() const { return static_cast<int>(vertices.size()); }
  const Vec2& vertex(int i) const { return vertices[static_cast<std::size_t>(((i % size()) + size()) % size())]; }
  Vec2 edge(int i) const { return vertex(i + 1) - vertex(i); }
  bool is_strictly_convex() const;
  Nf area() const;  // shoelace
  ConvexPolygon translated(const Vec2& t) const;
  ConvexPolygon transformed(const Mat2& m) const;

  friend bool operator==(const ConvexPolygon& p, const ConvexPolygon& q) { return p.vertices == q.vertices; }
  friend bool operator!=(const ConvexPolygon& p, const ConvexPolygon& q) { return !(p == q); }
};

// Regular pentagon with v0 = (0,0), v1 = (side, 0), counter-clockwise.
ConvexPolygon regular_pentagon(long side = 2);
// Unit square [0,1]^2 scaled by `side`.
ConvexPolygon axis_square(long side = 1);

// Direction test for a ray d inside the wedge swept counter-clockwise from a
// to b (angle(a, b) < pi). Boundaries included when `closed` is set.
bool in_wedge(const Vec2& a, const Vec2& b, const Vec2& d, bool closed);

}  // namespace veech

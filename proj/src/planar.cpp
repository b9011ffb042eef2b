#include "veech/planar.hpp"

#include <stdexcept>

namespace veech {

bool lower_point(const Vec2& a, const Vec2& b) {
  int c = cmp(a.y, b.y);
  if (c != 0) return c < 0;
  return a.x < b.x;
}

Mat2 Mat2::inverse() const {
  Nf dt = det();
  if (dt.is_zero()) throw std::domain_error("singular matrix");
  Nf k = dt.inv();
  return {k * d, -(k * b), -(k * c), k * a};
}

Mat2 mat_mul(const Mat2& m, const Mat2& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

Vec2 mat_act(const Mat2& m, const Vec2& v) { return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y}; }

Mat2 mat_pow(const Mat2& m, int k) {
  Mat2 base = k < 0 ? m.inverse() : m;
  Mat2 out = Mat2::identity();
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out = out * base;
  return out;
}

Mat2 generator_R() {
  Nf c = cos_pi5(), s = sin_pi5();
  return {c, -s, s, c};
}

Mat2 generator_T() { return {Nf(1), two_cot_pi5(), Nf(0), Nf(1)}; }

Mat2 generator_J() { return {Nf(1), Nf(0), Nf(0), Nf(-1)}; }

Mat2 word_matrix(const std::string& word) {
  static const Mat2 R = generator_R(), T = generator_T();
  static const Mat2 Ri = R.inverse(), Ti = T.inverse();
  Mat2 out = Mat2::identity();
  for (char ch : word) {
    switch (ch) {
      case 'R': out = out * R; break;
      case 'T': out = out * T; break;
      case 'r': out = out * Ri; break;
      case 't': out = out * Ti; break;
      default: throw std::invalid_argument(std::string("bad letter in word: ") + ch);
    }
  }
  return out;
}

bool ConvexPolygon::is_strictly_convex() const {
  if (size() < 3) return false;
  for (int i = 0; i < size(); ++i)
    if (cross(edge(i), edge(i + 1)).sign() <= 0) return false;
  return true;
}

Nf ConvexPolygon::area() const {
  Nf twice;
  for (int i = 0; i < size(); ++i) twice += cross(vertex(i), vertex(i + 1));
  return Nf::from_ints(1, 0, 0, 0, 2) * twice;
}

ConvexPolygon ConvexPolygon::translated(const Vec2& t) const {
  ConvexPolygon out;
  out.vertices.reserve(vertices.size());
  for (auto& v : vertices) out.vertices.push_back(v + t);
  return out;
}

ConvexPolygon ConvexPolygon::transformed(const Mat2& m) const {
  ConvexPolygon out;
  out.vertices.reserve(vertices.size());
  for (auto& v : vertices) out.vertices.push_back(m * v);
  return out;
}

ConvexPolygon regular_pentagon(long side) {
  // Edge vectors of the side-2 pentagon are 2(cos 2pi k/5, sin 2pi k/5):
  // 2cos(2pi/5) = 2 - s^2, 2sin(2pi/5) = 3s - s^3, 2cos(4pi/5) = s^2 - 3,
  // 2sin(4pi/5) = s.
  Nf k = Nf::from_ints(side, 0, 0, 0, 2);
  std::vector<Vec2> v = {
      {Nf(0), Nf(0)},
      {Nf(2), Nf(0)},
      {Nf::from_ints(4, 0, -1, 0), Nf::from_ints(0, 3, 0, -1)},
      {Nf(1), Nf::from_ints(0, 4, 0, -1)},
      {Nf::from_ints(-2, 0, 1, 0), Nf::from_ints(0, 3, 0, -1)},
  };
  ConvexPolygon p;
  for (auto& x : v) p.vertices.push_back(k * x);
  return p;
}

ConvexPolygon axis_square(long side) {
  Nf a(side), z(0);
  return ConvexPolygon{{{z, z}, {a, z}, {a, a}, {z, a}}};
}

bool in_wedge(const Vec2& a, const Vec2& b, const Vec2& d, bool closed) {
  int s1 = cross(a, d).sign(), s2 = cross(d, b).sign();
  if (closed) {
    if (s1 == 0 && dot(a, d).sign() > 0) return true;
    if (s2 == 0 && dot(b, d).sign() > 0) return true;
  }
  return s1 > 0 && s2 > 0;
}

}  // namespace veech

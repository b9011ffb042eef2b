#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "veech/surface.hpp"

namespace veech {

namespace {

struct FVec {
  double x = 0, y = 0, err = 0;
};

FVec approx(const Vec2& v) {
  auto ex = v.x.enclosure(), ey = v.y.enclosure();
  return {ex.mid, ey.mid, std::max(ex.rad, ey.rad)};
}

// Returns +1 / -1 when the floating evaluation is conclusive, 0 otherwise.
int incircle_filter(const FVec& b, const FVec& c, const FVec& d) {
  double bb = b.x * b.x + b.y * b.y, cc = c.x * c.x + c.y * c.y, dd = d.x * d.x + d.y * d.y;
  double cd = c.x * d.y - c.y * d.x, bd = b.x * d.y - b.y * d.x, bc = b.x * c.y - b.y * c.x;
  double det = -(bb * cd - cc * bd + dd * bc);
  double perm = bb * (std::fabs(c.x * d.y) + std::fabs(c.y * d.x)) + cc * (std::fabs(b.x * d.y) + std::fabs(b.y * d.x)) +
                dd * (std::fabs(b.x * c.y) + std::fabs(b.y * c.x));
  double m = std::max({std::fabs(b.x), std::fabs(b.y), std::fabs(c.x), std::fabs(c.y), std::fabs(d.x), std::fabs(d.y)});
  double delta = std::max({b.err, c.err, d.err});
  m += delta;
  double bound = 32 * m * m * m * delta + 1e-13 * perm;
  if (det > bound) return 1;
  if (det < -bound) return -1;
  return 0;
}

int incircle_exact(const Vec2& b, const Vec2& c, const Vec2& d) {
  Nf det = norm2(b) * cross(c, d) - norm2(c) * cross(b, d) + norm2(d) * cross(b, c);
  return -det.sign();
}

struct HalfEdge {
  int t = -1, k = 0;
  friend bool operator==(const HalfEdge& a, const HalfEdge& b) { return a.t == b.t && a.k == b.k; }
};

struct Tri {
  std::array<Vec2, 3> e;
  std::array<FVec, 3> f;
  void refresh() {
    for (int i = 0; i < 3; ++i) f[static_cast<std::size_t>(i)] = approx(e[static_cast<std::size_t>(i)]);
  }
};

class Triangulation {
public:
  explicit Triangulation(const TranslationSurface& s) {
    std::vector<int> first(static_cast<std::size_t>(s.num_polygons()));
    for (int l = 0; l < s.num_polygons(); ++l) {
      const auto& p = s.polygon(l);
      int n = p.size();
      first[static_cast<std::size_t>(l)] = static_cast<int>(tri_.size());
      for (int i = 1; i + 1 < n; ++i) {
        Tri t;
        t.e = {p.vertex(i) - p.vertex(0), p.vertex(i + 1) - p.vertex(i), p.vertex(0) - p.vertex(i + 1)};
        t.refresh();
        tri_.push_back(std::move(t));
        adj_.push_back({});
      }
      int b = first[static_cast<std::size_t>(l)];
      for (int i = 1; i + 2 < n; ++i) link({b + i - 1, 2}, {b + i, 0});
    }
    auto half = [&](EdgeRef r) {
      int n = s.polygon(r.label).size();
      int b = first[static_cast<std::size_t>(r.label)];
      if (r.edge == 0) return HalfEdge{b, 0};
      if (r.edge == n - 1) return HalfEdge{b + n - 3, 2};
      return HalfEdge{b + r.edge - 1, 1};
    };
    for (int l = 0; l < s.num_polygons(); ++l)
      for (int e = 0; e < s.polygon(l).size(); ++e) link(half({l, e}), half(s.opposite({l, e})));
  }

  int size() const { return static_cast<int>(tri_.size()); }
  HalfEdge partner(HalfEdge h) const { return adj_[static_cast<std::size_t>(h.t)][static_cast<std::size_t>(h.k)]; }
  const Vec2& vec(HalfEdge h) const { return tri_[static_cast<std::size_t>(h.t)].e[static_cast<std::size_t>(h.k)]; }

  // +1 when the far vertex across h lies strictly inside the circumcircle of
  // h's triangle.
  int incircle(HalfEdge h) const {
    HalfEdge o = partner(h);
    const Tri& t = tri_[static_cast<std::size_t>(h.t)];
    const Tri& u = tri_[static_cast<std::size_t>(o.t)];
    std::size_t k = static_cast<std::size_t>(h.k), m = static_cast<std::size_t>(o.k);
    const FVec& fb = t.f[k];
    FVec fc = t.f[(k + 2) % 3];
    fc.x = -fc.x;
    fc.y = -fc.y;
    const FVec& fd = u.f[(m + 1) % 3];
    int r = incircle_filter(fb, fc, fd);
    if (r != 0) return r;
    return incircle_exact(t.e[k], -t.e[(k + 2) % 3], u.e[(m + 1) % 3]);
  }

  void make_delaunay() {
    std::vector<HalfEdge> stack;
    std::vector<std::array<char, 3>> queued(tri_.size(), {0, 0, 0});
    for (int t = 0; t < size(); ++t)
      for (int k = 0; k < 3; ++k) {
        stack.push_back({t, k});
        queued[static_cast<std::size_t>(t)][static_cast<std::size_t>(k)] = 1;
      }
    long flips = 0;
    const long limit = 200000L + 1000L * size();
    while (!stack.empty()) {
      HalfEdge h = stack.back();
      stack.pop_back();
      queued[static_cast<std::size_t>(h.t)][static_cast<std::size_t>(h.k)] = 0;
      if (incircle(h) <= 0) continue;
      if (++flips > limit) throw std::runtime_error("Delaunay flipping did not terminate");
      for (HalfEdge o : flip(h)) {
        auto& q = queued[static_cast<std::size_t>(o.t)][static_cast<std::size_t>(o.k)];
        if (!q) {
          q = 1;
          stack.push_back(o);
        }
      }
    }
  }

  TranslationSurface cells() const {
    // Union triangles across cocircular edges.
    std::vector<int> parent(tri_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    std::vector<std::array<char, 3>> internal(tri_.size(), {0, 0, 0});
    for (int t = 0; t < size(); ++t)
      for (int k = 0; k < 3; ++k) {
        HalfEdge h{t, k}, o = partner(h);
        if (o.t < t || (o.t == t && o.k < k)) continue;
        if (incircle(h) == 0) {
          internal[static_cast<std::size_t>(t)][static_cast<std::size_t>(k)] = 1;
          internal[static_cast<std::size_t>(o.t)][static_cast<std::size_t>(o.k)] = 1;
          parent[static_cast<std::size_t>(find(t))] = find(o.t);
        }
      }
    auto is_internal = [&](HalfEdge h) {
      return internal[static_cast<std::size_t>(h.t)][static_cast<std::size_t>(h.k)] != 0;
    };

    TranslationSurface out;
    std::vector<std::array<EdgeRef, 3>> where(tri_.size());
    std::vector<char> done(tri_.size(), 0);
    for (int t = 0; t < size(); ++t) {
      int root = find(t);
      if (done[static_cast<std::size_t>(root)]) continue;
      done[static_cast<std::size_t>(root)] = 1;
      // Boundary half-edge of this cell in its first triangle.
      HalfEdge start{-1, 0};
      for (int k = 0; k < 3 && start.t < 0; ++k)
        if (!is_internal({t, k})) start = {t, k};
      if (start.t < 0) throw std::logic_error("Delaunay cell without boundary");
      int label = out.num_polygons();
      ConvexPolygon poly;
      Vec2 pos{Nf(0), Nf(0)};
      HalfEdge h = start;
      int idx = 0;
      do {
        poly.vertices.push_back(pos);
        pos = pos + vec(h);
        where[static_cast<std::size_t>(h.t)][static_cast<std::size_t>(h.k)] = {label, idx++};
        // Rotate about the head of h through the cell to the next boundary edge.
        HalfEdge nx{h.t, (h.k + 1) % 3};
        while (is_internal(nx)) {
          HalfEdge o = partner(nx);
          nx = {o.t, (o.k + 1) % 3};
        }
        h = nx;
        if (idx > 3 * size()) throw std::logic_error("Delaunay cell boundary does not close");
      } while (!(h == start));
      out.add_polygon(std::move(poly));
    }
    for (int t = 0; t < size(); ++t)
      for (int k = 0; k < 3; ++k) {
        HalfEdge h{t, k};
        if (is_internal(h)) continue;
        HalfEdge o = partner(h);
        out.glue(where[static_cast<std::size_t>(t)][static_cast<std::size_t>(k)],
                 where[static_cast<std::size_t>(o.t)][static_cast<std::size_t>(o.k)]);
      }
    return out;
  }

private:
  void link(HalfEdge a, HalfEdge b) {
    adj_[static_cast<std::size_t>(a.t)][static_cast<std::size_t>(a.k)] = b;
    adj_[static_cast<std::size_t>(b.t)][static_cast<std::size_t>(b.k)] = a;
  }

  // Flip the diagonal h of the quadrilateral A B C (triangle t, h = AB) and
  // B A D (triangle u). Returns the four outer half-edges.
  std::array<HalfEdge, 4> flip(HalfEdge h) {
    HalfEdge o = partner(h);
    int t = h.t, u = o.t, k = h.k, m = o.k;
    auto at = [](int tri, int i) { return HalfEdge{tri, i % 3}; };
    HalfEdge old_ad = at(u, m + 1), old_ca = at(t, k + 2), old_db = at(u, m + 2), old_bc = at(t, k + 1);
    HalfEdge p_ad = partner(old_ad), p_ca = partner(old_ca), p_db = partner(old_db), p_bc = partner(old_bc);

    Vec2 ad = vec(old_ad), ca = vec(old_ca), db = vec(old_db), bc = vec(old_bc);
    Vec2 dc = -ca - ad;
    Tri& tt = tri_[static_cast<std::size_t>(t)];
    Tri& uu = tri_[static_cast<std::size_t>(u)];
    tt.e = {ad, dc, ca};
    uu.e = {db, bc, -dc};
    tt.refresh();
    uu.refresh();

    const HalfEdge new_ad{t, 0}, new_ca{t, 2}, new_db{u, 0}, new_bc{u, 1};
    auto remap = [&](HalfEdge p) {
      if (p == old_ad) return new_ad;
      if (p == old_ca) return new_ca;
      if (p == old_db) return new_db;
      if (p == old_bc) return new_bc;
      return p;
    };
    link({t, 1}, {u, 2});
    link(new_ad, remap(p_ad));
    link(new_ca, remap(p_ca));
    link(new_db, remap(p_db));
    link(new_bc, remap(p_bc));
    return {new_ad, new_ca, new_db, new_bc};
  }

  std::vector<Tri> tri_;
  std::vector<std::array<HalfEdge, 3>> adj_;
};

}  // namespace

int incircle_sign(const Vec2& b, const Vec2& c, const Vec2& d) {
  int r = incircle_filter(approx(b), approx(c), approx(d));
  return r != 0 ? r : incircle_exact(b, c, d);
}

TranslationSurface delaunay(const TranslationSurface& s) {
  Triangulation tr(s);
  tr.make_delaunay();
  return tr.cells();
}

bool has_empty_circumdisks(const TranslationSurface& s) {
  for (int l = 0; l < s.num_polygons(); ++l) {
    const auto& p = s.polygon(l);
    Vec2 b = p.vertex(1) - p.vertex(0), c = p.vertex(2) - p.vertex(0);
    for (int i = 3; i < p.size(); ++i)
      if (incircle_sign(b, c, p.vertex(i) - p.vertex(0)) != 0) return false;
    for (int e = 0; e < p.size(); ++e) {
      EdgeRef o = s.opposite({l, e});
      const auto& q = s.polygon(o.label);
      Vec2 shift = p.vertex(e + 1) - q.vertex(o.edge);
      for (int j = 0; j < q.size(); ++j) {
        if (j == o.edge || j == (o.edge + 1) % q.size()) continue;
        if (incircle_sign(b, c, q.vertex(j) + shift - p.vertex(0)) >= 0) return false;
      }
    }
  }
  return true;
}

}  // namespace veech

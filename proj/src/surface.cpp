#include "veech/surface.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace veech {

int TranslationSurface::add_polygon(ConvexPolygon p) {
  return add_polygon(std::make_shared<const ConvexPolygon>(std::move(p)));
}

int TranslationSurface::add_polygon(std::shared_ptr<const ConvexPolygon> p) {
  glue_.emplace_back(static_cast<std::size_t>(p->size()), EdgeRef{-1, -1});
  polys_.push_back(std::move(p));
  return num_polygons() - 1;
}

void TranslationSurface::glue(EdgeRef a, EdgeRef b) {
  glue_.at(static_cast<std::size_t>(a.label)).at(static_cast<std::size_t>(a.edge)) = b;
  glue_.at(static_cast<std::size_t>(b.label)).at(static_cast<std::size_t>(b.edge)) = a;
}

int TranslationSurface::num_edges() const {
  int total = 0;
  for (auto& p : polys_) total += p->size();
  return total / 2;
}

void TranslationSurface::validate() const {
  if (polys_.empty()) throw std::logic_error("surface has no polygons");
  if (base_ < 0 || base_ >= num_polygons()) throw std::logic_error("base label out of range");
  for (int l = 0; l < num_polygons(); ++l) {
    const auto& p = polygon(l);
    if (!p.is_strictly_convex()) throw std::logic_error("polygon " + std::to_string(l) + " is not strictly convex");
    for (int e = 0; e < p.size(); ++e) {
      EdgeRef a{l, e};
      EdgeRef b = opposite(a);
      if (b.label < 0 || b.label >= num_polygons() || b.edge < 0 || b.edge >= polygon(b.label).size())
        throw std::logic_error("edge " + std::to_string(l) + ":" + std::to_string(e) + " is unglued");
      if (b == a) throw std::logic_error("edge glued to itself");
      if (opposite(b) != a) throw std::logic_error("gluing is not an involution");
      if (p.edge(e) != -polygon(b.label).edge(b.edge))
        throw std::logic_error("glued edges " + std::to_string(l) + ":" + std::to_string(e) +
                               " are not opposite translates");
    }
  }
  std::vector<char> seen(polys_.size(), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int l = stack.back();
    stack.pop_back();
    for (int e = 0; e < polygon(l).size(); ++e) {
      int m = opposite({l, e}).label;
      if (!seen[static_cast<std::size_t>(m)]) {
        seen[static_cast<std::size_t>(m)] = 1;
        ++reached;
        stack.push_back(m);
      }
    }
  }
  if (reached != polys_.size()) throw std::logic_error("surface is not connected");
}

Nf TranslationSurface::area() const {
  Nf a;
  for (auto& p : polys_) a += p->area();
  return a;
}

Corner TranslationSurface::ccw_corner(Corner c) const {
  int n = polygon(c.label).size();
  return opposite({c.label, (c.edge + n - 1) % n});
}

Corner TranslationSurface::cw_corner(Corner c) const {
  EdgeRef o = opposite(c);
  return {o.label, (o.edge + 1) % polygon(o.label).size()};
}

VertexClasses vertex_classes(const TranslationSurface& s) {
  VertexClasses vc;
  vc.of_corner.resize(static_cast<std::size_t>(s.num_polygons()));
  for (int l = 0; l < s.num_polygons(); ++l) vc.of_corner[static_cast<std::size_t>(l)].assign(static_cast<std::size_t>(s.polygon(l).size()), -1);
  for (int l = 0; l < s.num_polygons(); ++l) {
    for (int v = 0; v < s.polygon(l).size(); ++v) {
      if (vc.of_corner[static_cast<std::size_t>(l)][static_cast<std::size_t>(v)] >= 0) continue;
      int id = vc.count();
      int turns = 0;
      Corner c{l, v};
      do {
        vc.of_corner[static_cast<std::size_t>(c.label)][static_cast<std::size_t>(c.edge)] = id;
        // Count corners whose half-open wedge [out-edge, in-edge reversed)
        // contains the direction (1, 0); their number is the cone angle / 2pi.
        const auto& p = s.polygon(c.label);
        Vec2 a = p.edge(c.edge);
        Vec2 b = p.vertex(c.edge - 1) - p.vertex(c.edge);
        int ay = a.y.sign();
        bool starts = ay < 0 || (ay == 0 && a.x.sign() > 0);
        if (starts && b.y.sign() > 0) ++turns;
        c = s.ccw_corner(c);
      } while (c != Corner{l, v});
      vc.cone_turns.push_back(turns);
    }
  }
  return vc;
}

int genus(const TranslationSurface& s) {
  int chi = vertex_classes(s).count() - s.num_edges() + s.num_polygons();
  if (chi % 2 != 0) throw std::logic_error("odd Euler characteristic");
  return (2 - chi) / 2;
}

TranslationSurface apply_matrix(const Mat2& m, const TranslationSurface& s) {
  if (m.det().sign() <= 0) throw std::invalid_argument("apply_matrix requires det > 0");
  TranslationSurface out;
  std::unordered_map<const ConvexPolygon*, std::shared_ptr<const ConvexPolygon>> done;
  for (int l = 0; l < s.num_polygons(); ++l) {
    auto& ptr = s.polygon_ptr(l);
    auto it = done.find(ptr.get());
    if (it == done.end())
      it = done.emplace(ptr.get(), std::make_shared<const ConvexPolygon>(ptr->transformed(m))).first;
    out.add_polygon(it->second);
  }
  for (int l = 0; l < s.num_polygons(); ++l)
    for (int e = 0; e < s.polygon(l).size(); ++e) out.glue({l, e}, s.opposite({l, e}));
  out.set_base_label(s.base_label());
  return out;
}

Standardized standardize(const ConvexPolygon& p) {
  int o = 0;
  for (int i = 1; i < p.size(); ++i)
    if (lower_point(p.vertex(i), p.vertex(o))) o = i;
  Standardized st;
  st.offset = o;
  Vec2 origin = p.vertex(o);
  st.polygon.vertices.reserve(p.vertices.size());
  for (int i = 0; i < p.size(); ++i) st.polygon.vertices.push_back(p.vertex(i + o) - origin);
  return st;
}

bool polygon_less(const ConvexPolygon& p, const ConvexPolygon& q) {
  if (p.size() != q.size()) return p.size() < q.size();
  for (int i = 0; i < p.size(); ++i) {
    int c = cmp(p.vertex(i).x, q.vertex(i).x);
    if (c != 0) return c < 0;
    c = cmp(p.vertex(i).y, q.vertex(i).y);
    if (c != 0) return c < 0;
  }
  return false;
}

std::vector<int> breadth_first_order(const TranslationSurface& s, int base) {
  std::vector<int> label(static_cast<std::size_t>(s.num_polygons()), -1);
  std::deque<int> queue = {base};
  label[static_cast<std::size_t>(base)] = 0;
  int next = 1;
  while (!queue.empty()) {
    int p = queue.front();
    queue.pop_front();
    for (int j = 0; j < s.polygon(p).size(); ++j) {
      int q = s.opposite({p, j}).label;
      if (label[static_cast<std::size_t>(q)] < 0) {
        label[static_cast<std::size_t>(q)] = next++;
        queue.push_back(q);
      }
    }
  }
  if (next != s.num_polygons()) throw std::invalid_argument("surface is not connected");
  return label;
}

TranslationSurface relabel(const TranslationSurface& s, const std::vector<int>& new_label_of, int new_base) {
  std::vector<int> old_of(new_label_of.size());
  for (std::size_t l = 0; l < new_label_of.size(); ++l) old_of[static_cast<std::size_t>(new_label_of[l])] = static_cast<int>(l);
  TranslationSurface out;
  for (int old : old_of) out.add_polygon(s.polygon_ptr(old));
  for (int nl = 0; nl < out.num_polygons(); ++nl) {
    int old = old_of[static_cast<std::size_t>(nl)];
    for (int e = 0; e < s.polygon(old).size(); ++e) {
      EdgeRef o = s.opposite({old, e});
      out.glue({nl, e}, {new_label_of[static_cast<std::size_t>(o.label)], o.edge});
    }
  }
  out.set_base_label(new_base);
  return out;
}

TranslationSurface breadth_first_index(const TranslationSurface& s, int base) {
  return relabel(s, breadth_first_order(s, base), 0);
}

namespace {

std::size_t polygon_hash(const ConvexPolygon& p) {
  std::size_t h = static_cast<std::size_t>(p.size());
  for (auto& v : p.vertices) {
    h = h * 1000003u ^ v.x.hash();
    h = h * 1000003u ^ v.y.hash();
  }
  return h;
}

// Cells standardized, equal shapes shared, and each cell given the rank of its
// shape in the order polygon_less.
struct RankedSurface {
  TranslationSurface surface;
  std::vector<int> rank;
};

RankedSurface standardize_cells(const TranslationSurface& d) {
  int n = d.num_polygons();
  std::vector<int> offset(static_cast<std::size_t>(n));
  std::vector<std::shared_ptr<const ConvexPolygon>> shapes;
  std::vector<int> shape_of(static_cast<std::size_t>(n));
  std::unordered_multimap<std::size_t, int> index;
  for (int l = 0; l < n; ++l) {
    auto st = standardize(d.polygon(l));
    offset[static_cast<std::size_t>(l)] = st.offset;
    std::size_t h = polygon_hash(st.polygon);
    int found = -1;
    auto range = index.equal_range(h);
    for (auto it = range.first; it != range.second; ++it)
      if (*shapes[static_cast<std::size_t>(it->second)] == st.polygon) {
        found = it->second;
        break;
      }
    if (found < 0) {
      found = static_cast<int>(shapes.size());
      shapes.push_back(std::make_shared<const ConvexPolygon>(std::move(st.polygon)));
      index.emplace(h, found);
    }
    shape_of[static_cast<std::size_t>(l)] = found;
  }
  std::vector<int> order(shapes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return polygon_less(*shapes[static_cast<std::size_t>(a)], *shapes[static_cast<std::size_t>(b)]);
  });
  std::vector<int> rank_of_shape(shapes.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank_of_shape[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

  RankedSurface out;
  for (int l = 0; l < n; ++l) {
    out.surface.add_polygon(shapes[static_cast<std::size_t>(shape_of[static_cast<std::size_t>(l)])]);
    out.rank.push_back(rank_of_shape[static_cast<std::size_t>(shape_of[static_cast<std::size_t>(l)])]);
  }
  for (int l = 0; l < n; ++l) {
    int m = d.polygon(l).size();
    for (int e = 0; e < m; ++e) {
      EdgeRef o = d.opposite({l, (e + offset[static_cast<std::size_t>(l)]) % m});
      int mo = d.polygon(o.label).size();
      int oe = ((o.edge - offset[static_cast<std::size_t>(o.label)]) % mo + mo) % mo;
      out.surface.glue({l, e}, {o.label, oe});
    }
  }
  out.surface.set_base_label(d.base_label());
  return out;
}

// Key of S_P for ordering: polygon ranks in breadth-first order, then the
// gluing table in the same order.
std::vector<int> bfs_key(const RankedSurface& rs, int base, std::vector<int>& order_out) {
  const auto& s = rs.surface;
  order_out = breadth_first_order(s, base);
  std::vector<int> old_of(order_out.size());
  for (std::size_t l = 0; l < order_out.size(); ++l) old_of[static_cast<std::size_t>(order_out[l])] = static_cast<int>(l);
  std::vector<int> key;
  key.reserve(old_of.size() * 7);
  for (int old : old_of) key.push_back(rs.rank[static_cast<std::size_t>(old)]);
  for (int old : old_of)
    for (int e = 0; e < s.polygon(old).size(); ++e) {
      EdgeRef o = s.opposite({old, e});
      key.push_back(order_out[static_cast<std::size_t>(o.label)]);
      key.push_back(o.edge);
    }
  return key;
}

std::size_t surface_digest(const TranslationSurface& s) {
  std::size_t h = static_cast<std::size_t>(s.num_polygons());
  for (int l = 0; l < s.num_polygons(); ++l) {
    h = h * 31 + polygon_hash(s.polygon(l));
    for (int e = 0; e < s.polygon(l).size(); ++e) {
      EdgeRef o = s.opposite({l, e});
      h = h * 1000003u + static_cast<std::size_t>(o.label) * 16 + static_cast<std::size_t>(o.edge);
    }
  }
  return h;
}

}  // namespace

CanonicalForm canonicalize(const TranslationSurface& s) {
  RankedSurface rs = standardize_cells(delaunay(s));
  int n = rs.surface.num_polygons();
  int min_rank = *std::min_element(rs.rank.begin(), rs.rank.end());

  std::vector<int> best_key, best_order;
  std::vector<std::vector<int>> minimizer_orders;
  for (int p = 0; p < n; ++p) {
    if (rs.rank[static_cast<std::size_t>(p)] != min_rank) continue;
    std::vector<int> order;
    auto key = bfs_key(rs, p, order);
    if (best_key.empty() || key < best_key) {
      best_key = std::move(key);
      minimizer_orders.clear();
      minimizer_orders.push_back(std::move(order));
    } else if (key == best_key) {
      minimizer_orders.push_back(std::move(order));
    }
  }
  // Ties are structurally identical; the first (smallest original label)
  // fixes the labeling.
  const auto& first = minimizer_orders.front();
  CanonicalForm cf;
  cf.surface = relabel(rs.surface, first, 0);
  cf.digest = surface_digest(cf.surface);
  std::vector<int> old_of_first(first.size());
  for (std::size_t l = 0; l < first.size(); ++l) old_of_first[static_cast<std::size_t>(first[l])] = static_cast<int>(l);
  for (const auto& ord : minimizer_orders) {
    // canonical label i (cell old_of_first[i]) -> label the same cell gets
    // when indexing from this minimizer; applying that relabeling is an
    // automorphism of the canonical surface.
    std::vector<int> a(first.size());
    for (std::size_t i = 0; i < first.size(); ++i) a[i] = ord[static_cast<std::size_t>(old_of_first[i])];
    cf.automorphisms.push_back(std::move(a));
  }
  return cf;
}

std::vector<std::vector<int>> translation_automorphisms(const TranslationSurface& s) {
  return canonicalize(s).automorphisms;
}

bool same_surface_data(const TranslationSurface& a, const TranslationSurface& b) {
  if (a.num_polygons() != b.num_polygons() || a.base_label() != b.base_label()) return false;
  for (int l = 0; l < a.num_polygons(); ++l) {
    if (a.polygon_ptr(l) != b.polygon_ptr(l) && a.polygon(l) != b.polygon(l)) return false;
    for (int e = 0; e < a.polygon(l).size(); ++e)
      if (a.opposite({l, e}) != b.opposite({l, e})) return false;
  }
  return true;
}

bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
  return a.digest == b.digest && same_surface_data(a.surface, b.surface);
}

}  // namespace veech

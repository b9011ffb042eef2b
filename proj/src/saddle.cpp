#include "veech/saddle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "veech/platonic.hpp"

namespace veech {

Quadruple dodecahedron_quadruple() {
  auto g = monodromy_generators(Solid::dodecahedron);
  return {g[0], g[1], g[2], g[3]};
}

TranslationSurface quadruple_surface(const Quadruple& x) { return double_pentagon_cover({x[0], x[1], x[2], x[3]}); }

TranslationSurface double_pentagon() {
  auto id = Permutation::identity(1);
  return quadruple_surface({id, id, id, id});
}

Quadruple pentagon_quadruple(const TranslationSurface& s) {
  const Vec2 right{Nf(2), Nf(0)}, left{Nf(-2), Nf(0)};
  auto up = regular_pentagon(2);
  int n = s.num_polygons();
  std::vector<int> upright(static_cast<std::size_t>(n)), shift(static_cast<std::size_t>(n), -1);
  for (int l = 0; l < n; ++l) {
    const auto& p = s.polygon(l);
    if (p.size() != 5) throw std::invalid_argument("not a pentagon tiling");
    for (int k = 0; k < 5; ++k) {
      if (p.edge(k) != right && p.edge(k) != left) continue;
      shift[static_cast<std::size_t>(l)] = k;
      upright[static_cast<std::size_t>(l)] = p.edge(k) == right;
      for (int e = 0; e < 5; ++e) {
        Vec2 want = up.edge(e);
        if (p.edge(k + e) != (upright[static_cast<std::size_t>(l)] ? want : -want))
          throw std::invalid_argument("polygon is not a standard regular pentagon");
      }
    }
    if (shift[static_cast<std::size_t>(l)] < 0) throw std::invalid_argument("pentagon without a horizontal edge");
  }
  auto edge_of = [&](int l, int e) { return EdgeRef{l, (e + shift[static_cast<std::size_t>(l)]) % 5}; };
  auto index_of = [&](EdgeRef r) { return (r.edge - shift[static_cast<std::size_t>(r.label)] + 5) % 5; };

  std::vector<int> tops, sheet(static_cast<std::size_t>(n), -1);
  for (int l = 0; l < n; ++l)
    if (upright[static_cast<std::size_t>(l)]) {
      sheet[static_cast<std::size_t>(l)] = static_cast<int>(tops.size());
      tops.push_back(l);
    }
  int m = static_cast<int>(tops.size());
  if (2 * m != n) throw std::invalid_argument("tops and bottoms do not pair up");
  for (int i = 0; i < m; ++i) {
    EdgeRef o = s.opposite(edge_of(tops[static_cast<std::size_t>(i)], 4));
    sheet[static_cast<std::size_t>(o.label)] = i;
  }
  Quadruple x;
  for (int e = 0; e < 4; ++e) {
    std::vector<int> img(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      EdgeRef o = s.opposite(edge_of(tops[static_cast<std::size_t>(i)], e));
      if (upright[static_cast<std::size_t>(o.label)] || index_of(o) != e)
        throw std::invalid_argument("gluing is not top-to-bottom by edge index");
      img[static_cast<std::size_t>(i)] = sheet[static_cast<std::size_t>(o.label)];
    }
    x[static_cast<std::size_t>(e)] = Permutation(std::move(img));
  }
  return x;
}

// a, then b.
static Permutation then(const Permutation& a, const Permutation& b) { return b * a; }

Quadruple gam_r(const Quadruple& x) {
  return {then(x[2], x[3].inverse()), x[2], then(x[2], x[0].inverse()), then(x[2], x[1].inverse())};
}

Quadruple gam_t(const Quadruple& x) {
  return {then(x[0], x[1].inverse()), x[1], then(then(then(x[1], x[2]), x[3].inverse()), x[2]), then(x[1], x[2])};
}

Quadruple gam_r_inv(const Quadruple& y) {
  // x2 = y1, x3 = y1 y0^-1, x0 = y1 y2^-1, x1 = y1 y3^-1 (functional).
  return {y[1] * y[2].inverse(), y[1] * y[3].inverse(), y[1], y[1] * y[0].inverse()};
}

Quadruple gam_t_inv(const Quadruple& y) {
  return {y[1] * y[0], y[1], y[3] * y[1].inverse(), y[3] * y[2].inverse() * y[3] * y[1].inverse()};
}

Quadruple quadruple_of_word(const std::string& word, const Quadruple& base) {
  Quadruple x = base;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    switch (*it) {
      case 'R': x = gam_r_inv(x); break;
      case 'T': x = gam_t_inv(x); break;
      case 'r': x = gam_r(x); break;
      case 't': x = gam_t(x); break;
      default: throw std::invalid_argument(std::string("bad word letter '") + *it + "'");
    }
  }
  return x;
}

std::vector<int> vert_cycle(int n, const Quadruple& x) {
  const int m = x[0].size();
  if (n < 0 || n >= m) throw std::out_of_range("sheet out of range");
  Quadruple inv = {x[0].inverse(), x[1].inverse(), x[2].inverse(), x[3].inverse()};
  std::vector<int> out = {n};
  int cur = n;
  for (int round = 0; round <= m; ++round) {
    int n1 = inv[3](cur), n2 = x[2](n1), n3 = inv[1](n2), n4 = x[0](n3);
    int n5 = x[3](n4), n6 = inv[2](n5), n7 = x[1](n6), n8 = inv[0](n7);
    for (int v : {n1, n2, n3, n4, n5, n6, n7}) out.push_back(v);
    if (n8 == n) return out;
    out.push_back(n8);
    cur = n8;
  }
  throw std::logic_error("vertex cycle does not close");
}

std::vector<std::pair<int, int>> vert_to_self(SaddleKind kind, const std::vector<int>& vert) {
  const std::size_t residue = kind == SaddleKind::long_diagonal ? 2 : 3;
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = residue; i < vert.size(); i += 8)
    if (vert[i] == vert[0]) out.emplace_back(0, static_cast<int>(i));
  return out;
}

bool horizontal_saddle_closed(SaddleKind kind, const Quadruple& x, int n) {
  auto s = quadruple_surface(x);
  auto vc = vertex_classes(s);
  const int m = x[0].size();
  // Position 2 of the cycle is corner 2 of the bottom pentagon; position 3
  // is corner 1 of the top one.
  Corner other = kind == SaddleKind::long_diagonal ? Corner{m + n, 2} : Corner{n, 1};
  return vc.at({n, 0}) == vc.at(other);
}

// ---- tracing

namespace {

bool in_corner(const TranslationSurface& s, Corner c, const Vec2& d) {
  const auto& p = s.polygon(c.label);
  Vec2 a = p.edge(c.edge), b = p.vertex(c.edge - 1) - p.vertex(c.edge);
  int s1 = cross(a, d).sign();
  if (s1 == 0) return dot(a, d).sign() > 0;
  return s1 > 0 && cross(d, b).sign() > 0;
}

Vec2 local(const Vec2& developed, const Vec2& off) { return developed - off; }

}  // namespace

TraceResult trace_separatrix(const TranslationSurface& s, Corner start, const Vec2& dir, int max_polygons) {
  if (!in_corner(s, start, dir)) throw std::invalid_argument("direction is not in the starting corner");
  TraceResult tr;
  tr.start = start;
  int label = start.label, entry = -1;
  Vec2 off = -s.polygon(label).vertex(start.edge);
  Vec2 from{Nf(0), Nf(0)};  // developed entry point
  while (tr.polygons < max_polygons) {
    ++tr.polygons;
    const auto& p = s.polygon(label);
    const int n = p.size();
    auto V = [&](int k) { return p.vertex(k) + off; };
    for (int k = 0; k < n; ++k) {
      if (tr.polygons == 1 && k == start.edge) continue;
      Vec2 w = V(k);
      if (cross(dir, w).is_zero() && dot(dir, w).sign() > 0) {
        tr.segments.push_back({label, local(from, off), p.vertex(k)});
        tr.hit_singularity = true;
        tr.holonomy = w;
        tr.end = {label, k};
        if (!in_corner(s, tr.end, -dir)) tr.end = s.ccw_corner(tr.end);
        auto vc = vertex_classes(s);
        tr.closed = vc.at(tr.start) == vc.at(tr.end);
        return tr;
      }
    }
    int exit = -1;
    for (int j = 0; j < n && exit < 0; ++j)
      if (j != entry && cross(dir, V(j)).sign() < 0 && cross(dir, V(j + 1)).sign() > 0) exit = j;
    if (exit < 0) throw std::logic_error("ray leaves no edge");
    Vec2 a = V(exit), e = V(exit + 1) - a;
    Vec2 to = (cross(a, e) / cross(dir, e)) * dir;
    tr.segments.push_back({label, local(from, off), local(to, off)});
    EdgeRef o = s.opposite({label, exit});
    const auto& q = s.polygon(o.label);
    off = V(exit + 1) - q.vertex(o.edge);
    label = o.label;
    entry = o.edge;
    from = to;
  }
  return tr;
}

bool bounds_cylinder_on_left(const TranslationSurface& s, const TraceResult& tr, const Vec2& dir) {
  if (!tr.hit_singularity) return false;
  int corners = 0;
  for (int l = 0; l < s.num_polygons(); ++l) corners += s.polygon(l).size();
  Corner c = tr.end;
  for (int i = 0; i < corners; ++i) {
    c = s.cw_corner(c);
    if (in_corner(s, c, dir)) return c == tr.start;
  }
  return false;
}

// ---- Rosen reduction and lengths

namespace {

bool in_first_sector(const Vec2& v, const Vec2& u1) {
  int sy = v.y.sign();
  return sy >= 0 && cross(v, u1).sign() > 0;
}

}  // namespace

int pi5_sector(const Vec2& v) {
  if (v.x.is_zero() && v.y.is_zero()) throw std::invalid_argument("zero vector has no direction");
  const Vec2 u1{cos_pi5(), sin_pi5()};
  const Mat2 rinv = generator_R().inverse();
  Vec2 w = v;
  for (int k = 0; k < 10; ++k) {
    if (in_first_sector(w, u1)) return k;
    w = rinv * w;
  }
  throw std::logic_error("no sector found");
}

std::string RosenResult::replay() const {
  std::string w(steps.rbegin(), steps.rend());
  for (char& c : w) c = static_cast<char>(c == 'R' ? 'r' : 't');
  return w;
}

RosenResult rosen_reduce(const Vec2& v, int max_steps) {
  const Mat2 rinv = generator_R().inverse(), tinv = generator_T().inverse();
  RosenResult res;
  Vec2 w = v;
  for (int i = 0; i <= max_steps; ++i) {
    if (w.y.is_zero() && w.x.sign() > 0) {
      res.terminal = w;
      if (w.x == Nf(2)) return res;
      if (w.x == 2 * phi()) {
        res.is_long = true;
        return res;
      }
      throw std::invalid_argument("reduction ends at a horizontal vector that is not a saddle connection: " +
                                  w.x.str());
    }
    int k = pi5_sector(w);
    if (k == 0) {
      w = tinv * w;
      res.steps += 'T';
    } else if (k <= 3) {
      w = rinv * w;
      res.steps += 'R';
    } else {
      throw std::invalid_argument("argument outside [0, 4pi/5)");
    }
  }
  throw std::invalid_argument("reduction did not terminate");
}

int combinatorial_length(const Vec2& v) {
  auto integral = [](const Rational& q) {
    if (q.den() != 1 || !q.num().fits_slong_p())
      throw std::invalid_argument("coordinates are not integral in 1, s^2 / s, s^3");
    return q.num().get_si();
  };
  if (v.x.coeff(1).sign() || v.x.coeff(3).sign() || v.y.coeff(0).sign() || v.y.coeff(2).sign())
    throw std::invalid_argument("vector not of the form (a + b s^2, c s + d s^3)");
  long a = integral(v.x.coeff(0)), b = integral(v.x.coeff(2));
  long c = integral(v.y.coeff(1)), d = integral(v.y.coeff(3));
  switch (pi5_sector(v)) {
    case 0: return static_cast<int>(-b - c - 4 * d);
    case 1: return static_cast<int>(a + 3 * b - d - 1);
    case 2: return static_cast<int>(2 * c + 6 * d - 1);
    default: throw std::invalid_argument("argument outside [0, 3pi/5)");
  }
}

Vec2 class_holonomy(const std::string& word, int k) {
  return mat_pow(generator_R(), k) * (word_matrix(word).inverse() * Vec2{2 * phi(), Nf(0)});
}

// ---- enumeration

namespace {

double segment_distance(const Vec2& a, const Vec2& b) {
  double ax = a.x.to_double(), ay = a.y.to_double(), bx = b.x.to_double(), by = b.y.to_double();
  double dx = bx - ax, dy = by - ay, len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? std::clamp(-(ax * dx + ay * dy) / len2, 0.0, 1.0) : 0.0;
  return std::hypot(ax + t * dx, ay + t * dy);
}

struct WedgeItem {
  int label;
  Vec2 off;  // developed position of the polygon's vertex 0 is its vertex 0 + off
  Vec2 a, b;
  int entry;
};

}  // namespace

std::vector<SaddleHit> enumerate_saddle_connections(double length_bound) {
  const auto s = double_pentagon();
  const Nf bound2(Rational(mpq_class(length_bound)) * Rational(mpq_class(length_bound)));
  const double slack = 1e-9 * std::max(1.0, length_bound);
  std::vector<SaddleHit> hits;

  const auto& top = s.polygon(0);
  if (Nf(4) < bound2) hits.push_back({top.vertex(1), s.ccw_corner({0, 1})});
  std::vector<WedgeItem> stack = {{0, Vec2{Nf(0), Nf(0)}, top.vertex(1), top.vertex(4), -1}};
  while (!stack.empty()) {
    WedgeItem it = std::move(stack.back());
    stack.pop_back();
    const auto& p = s.polygon(it.label);
    const int n = p.size();
    std::vector<Vec2> V(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) V[static_cast<std::size_t>(k)] = p.vertex(k) + it.off;

    std::vector<int> inside;
    for (int k = 0; k < n; ++k) {
      const Vec2& w = V[static_cast<std::size_t>(k)];
      if (cross(it.a, w).sign() > 0 && cross(w, it.b).sign() > 0) inside.push_back(k);
    }
    std::sort(inside.begin(), inside.end(), [&](int i, int j) {
      return cross(V[static_cast<std::size_t>(i)], V[static_cast<std::size_t>(j)]).sign() > 0;
    });
    std::vector<Vec2> rays = {it.a};
    for (int k : inside) {
      const Vec2& w = V[static_cast<std::size_t>(k)];
      if (norm2(w) < bound2) hits.push_back({w, {it.label, k}});
      rays.push_back(w);
    }
    rays.push_back(it.b);

    for (std::size_t r = 0; r + 1 < rays.size(); ++r) {
      Vec2 d = rays[r] + rays[r + 1];
      int exit = -1;
      for (int j = 0; j < n && exit < 0; ++j)
        if (j != it.entry && cross(d, V[static_cast<std::size_t>(j)]).sign() < 0 &&
            cross(d, V[static_cast<std::size_t>((j + 1) % n)]).sign() > 0)
          exit = j;
      if (exit < 0) throw std::logic_error("sub-wedge has no exit edge");
      const Vec2& ea = V[static_cast<std::size_t>(exit)];
      const Vec2& eb = V[static_cast<std::size_t>((exit + 1) % n)];
      if (segment_distance(ea, eb) >= length_bound + slack) continue;
      EdgeRef o = s.opposite({it.label, exit});
      stack.push_back({o.label, eb - s.polygon(o.label).vertex(o.edge), rays[r], rays[r + 1], o.edge});
    }
  }
  std::sort(hits.begin(), hits.end(), [](const SaddleHit& u, const SaddleHit& v) {
    int c = cmp(norm2(u.holonomy), norm2(v.holonomy));
    return c != 0 ? c < 0 : cross(u.holonomy, v.holonomy).sign() > 0;
  });
  return hits;
}

// ---- classification

namespace {

SaddleClassRecord make_record(int cls, std::string word, int k, Vec2 v) {
  SaddleClassRecord r;
  r.orbit_class = cls;
  r.word = std::move(word);
  r.k = k;
  r.x = v.x.to_double();
  r.y = v.y.to_double();
  r.length = std::hypot(r.x, r.y);
  r.holonomy = std::move(v);
  return r;
}

}  // namespace

ClosedSaddleSearch classify_closed_saddles(const OrbitTable& table) {
  ClosedSaddleSearch out;
  out.classes = equivalence_classes(table);
  const auto base = dodecahedron_quadruple();
  const auto pi5 = double_pentagon();
  for (int c = 0; c < out.classes.count(); ++c) {
    const std::string& w = out.classes.words[static_cast<std::size_t>(c)];
    auto vert = vert_cycle(0, quadruple_of_word(w, base));
    if (!vert_to_self(SaddleKind::long_diagonal, vert).empty()) out.long_closed.push_back(c);
    if (!vert_to_self(SaddleKind::short_edge, vert).empty()) out.short_closed.push_back(c);
  }
  for (int c : out.long_closed) {
    const std::string& w = out.classes.words[static_cast<std::size_t>(c)];
    int chosen = -1;
    for (int k = 0; k < 10 && chosen < 0; ++k) {
      Vec2 v = class_holonomy(w, k);
      if (pi5_sector(v) > 2) continue;
      auto tr = trace_separatrix(pi5, {0, 0}, v);
      if (tr.hit_singularity && tr.holonomy == v && bounds_cylinder_on_left(pi5, tr, v)) chosen = k;
    }
    if (chosen < 0) throw std::logic_error("no left-cylinder rotation for class word " + w);
    out.records.push_back(make_record(c, w, chosen, class_holonomy(w, chosen)));
  }
  std::stable_sort(out.records.begin(), out.records.end(),
                   [](const SaddleClassRecord& a, const SaddleClassRecord& b) { return a.length < b.length; });
  for (std::size_t i = 0; i < out.records.size(); ++i) out.records[i].id = static_cast<int>(i) + 1;
  return out;
}

std::vector<SaddleClassRecord> shortest_representatives(const OrbitTable& table, const ClosedSaddleSearch& search,
                                                        double length_bound) {
  const auto pi5 = double_pentagon();
  std::vector<int> slot(static_cast<std::size_t>(search.classes.count()), -1);
  for (std::size_t i = 0; i < search.records.size(); ++i)
    slot[static_cast<std::size_t>(search.records[i].orbit_class)] = static_cast<int>(i);
  std::vector<SaddleClassRecord> best(search.records.size());
  std::size_t found = 0;
  for (const auto& h : enumerate_saddle_connections(length_bound)) {
    if (found == best.size()) break;
    auto red = rosen_reduce(h.holonomy);
    if (!red.is_long) continue;
    int cls = search.classes.class_of[static_cast<std::size_t>(replay_word(table, red.replay()))];
    int at = slot[static_cast<std::size_t>(cls)];
    if (at < 0 || best[static_cast<std::size_t>(at)].id != 0) continue;
    TraceResult tr;
    tr.hit_singularity = true;
    tr.start = {0, 0};
    tr.end = h.arrival;
    if (!bounds_cylinder_on_left(pi5, tr, h.holonomy)) continue;
    // v = R^k X (2 phi, 0) with X the steps after the leading rotations.
    std::size_t k = red.steps.find_first_not_of('R');
    if (k == std::string::npos) k = red.steps.size();
    auto rec = make_record(cls, red.steps.substr(k), static_cast<int>(k), h.holonomy);
    rec.id = search.records[static_cast<std::size_t>(at)].id;
    best[static_cast<std::size_t>(at)] = std::move(rec);
    ++found;
  }
  return best;
}

}  // namespace veech

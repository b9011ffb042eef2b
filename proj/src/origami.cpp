#include "veech/origami.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace veech {

namespace {

// Relabel so that `start` becomes 0 and labels follow BFS through h, v.
std::vector<int> bfs_labels(const Origami& o, int start) {
  std::vector<int> lab(static_cast<std::size_t>(o.size()), -1);
  std::vector<int> queue{start};
  lab[static_cast<std::size_t>(start)] = 0;
  int next = 1;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    int x = queue[q];
    for (int y : {o.h(x), o.v(x)})
      if (lab[static_cast<std::size_t>(y)] < 0) {
        lab[static_cast<std::size_t>(y)] = next++;
        queue.push_back(y);
      }
  }
  if (next != o.size()) throw std::invalid_argument("origami is not connected");
  return lab;
}

Permutation conjugate(const Permutation& p, const std::vector<int>& lab) {
  std::vector<int> img(lab.size());
  for (int x = 0; x < p.size(); ++x) img[static_cast<std::size_t>(lab[static_cast<std::size_t>(x)])] = lab[static_cast<std::size_t>(p(x))];
  return Permutation(std::move(img));
}

int find(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

}  // namespace

Origami origami_normal_form(const Origami& o) {
  if (o.h.size() != o.v.size()) throw std::invalid_argument("h and v act on different sets");
  Origami best;
  bool have = false;
  for (int start = 0; start < o.size(); ++start) {
    auto lab = bfs_labels(o, start);
    Origami c{conjugate(o.h, lab), conjugate(o.v, lab)};
    if (!have || c < best) {
      best = std::move(c);
      have = true;
    }
  }
  return best;
}

Origami act_S(const Origami& o, ActionConvention) { return {o.v.inverse(), o.h}; }

Origami act_T(const Origami& o, ActionConvention c) {
  if (c == ActionConvention::geometric) return {o.h, o.v * o.h.inverse()};
  return {o.h, o.h.inverse() * o.v};
}

Origami act_word(const Origami& o, const std::string& word, ActionConvention c) {
  Origami r = o;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it == 'S') r = act_S(r, c);
    else if (*it == 'T') r = act_T(r, c);
    else throw std::invalid_argument("word letters must be S or T");
  }
  return r;
}

ActionConvention default_convention() {
  static const ActionConvention chosen = [] {
    // A 3-square L-shape: small enough to be quick, asymmetric enough that
    // the two conventions give different surfaces.
    Origami l{Permutation::from_cycles(3, {{0, 1}}), Permutation::from_cycles(3, {{0, 2}})};
    Mat2 t{Nf(1), Nf(1), Nf(0), Nf(1)};
    auto target = canonicalize(apply_matrix(t, origami_surface(l)));
    for (auto c : {ActionConvention::geometric, ActionConvention::reversed})
      if (canonicalize(origami_surface(act_T(l, c))) == target) return c;
    throw std::logic_error("neither origami action convention matches the shear");
  }();
  return chosen;
}

Sl2zOrbit sl2z_orbit(const Origami& o, ActionConvention c) {
  std::map<Origami, int> index;
  std::vector<Origami> elems{origami_normal_form(o)};
  index.emplace(elems[0], 0);
  std::vector<int> s_img, t_img;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (int g = 0; g < 2; ++g) {
      Origami n = origami_normal_form(g == 0 ? act_S(elems[i], c) : act_T(elems[i], c));
      auto [it, fresh] = index.emplace(n, static_cast<int>(elems.size()));
      if (fresh) elems.push_back(n);
      (g == 0 ? s_img : t_img).push_back(it->second);
    }
  }
  return {std::move(elems), Permutation(std::move(s_img)), Permutation(std::move(t_img))};
}

VeechData veech_data(const Sl2zOrbit& orbit) {
  VeechData d;
  d.index = static_cast<int>(orbit.elements.size());
  for (auto& cyc : orbit.T.cycles()) d.cusp_widths.push_back(static_cast<int>(cyc.size()));
  std::sort(d.cusp_widths.begin(), d.cusp_widths.end());
  Permutation st = orbit.S * orbit.T;
  for (int i = 0; i < d.index; ++i) {
    d.nu2 += orbit.S(i) == i;
    d.nu3 += st(i) == i;
  }
  // 12 g = 12 + index - 3 nu2 - 4 nu3 - 6 cusps
  int twelve_g = 12 + d.index - 3 * d.nu2 - 4 * d.nu3 - 6 * static_cast<int>(d.cusp_widths.size());
  if (twelve_g % 12 != 0 || twelve_g < 0) throw std::logic_error("non-integral Veech group genus");
  d.genus = twelve_g / 12;
  return d;
}

std::vector<int> corner_classes(const Origami& o) {
  std::vector<int> parent(static_cast<std::size_t>(o.size()));
  std::iota(parent.begin(), parent.end(), 0);
  for (int i = 0; i < o.size(); ++i) {
    int a = find(parent, o.h(o.v(i))), b = find(parent, o.v(o.h(i)));
    parent[static_cast<std::size_t>(a)] = b;
  }
  std::map<int, int> dense;
  std::vector<int> out(static_cast<std::size_t>(o.size()));
  for (int i = 0; i < o.size(); ++i) {
    int r = find(parent, i);
    auto it = dense.emplace(r, static_cast<int>(dense.size())).first;
    out[static_cast<std::size_t>(i)] = it->second;
  }
  return out;
}

std::vector<Cylinder> horizontal_cylinders(const Origami& o) {
  auto cls = corner_classes(o);
  std::vector<Cylinder> out;
  for (auto& cyc : o.h.cycles()) {
    Cylinder c;
    c.squares = cyc;
    c.circumference = static_cast<int>(cyc.size());
    for (int x : cyc) {
      c.bottom.push_back(cls[static_cast<std::size_t>(x)]);
      c.top.push_back(cls[static_cast<std::size_t>(o.v(x))]);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Cylinder> cylinder_diagram(const Origami& o, const std::string& direction_word) {
  return horizontal_cylinders(act_word(o, direction_word, default_convention()));
}

BlockingReport blocking_report(const Origami& o) {
  BlockingReport rep;
  auto orbit = sl2z_orbit(o);
  for (auto& cusp : orbit.T.cycles()) {
    const Origami& e = orbit.elements[static_cast<std::size_t>(cusp.front())];
    ++rep.cusps_checked;
    for (auto& c : horizontal_cylinders(e)) {
      std::set<int> bottom(c.bottom.begin(), c.bottom.end());
      for (int t : c.top)
        if (bottom.count(t)) rep.colors_disjoint = false;
      for (std::size_t i = 0; i < c.bottom.size(); ++i)
        if (c.bottom[i] == c.bottom[(i + 1) % c.bottom.size()]) rep.boundary_ok = false;
    }
  }
  rep.blocked = rep.boundary_ok && rep.colors_disjoint;
  return rep;
}

bool blocking_check(const Origami& o) { return blocking_report(o).blocked; }

TranslationSurface origami_surface(const Origami& o) {
  TranslationSurface s;
  auto sq = std::make_shared<const ConvexPolygon>(axis_square(1));
  for (int i = 0; i < o.size(); ++i) s.add_polygon(sq);
  for (int i = 0; i < o.size(); ++i) {
    s.glue({i, 1}, {o.h(i), 3});
    s.glue({i, 2}, {o.v(i), 0});
  }
  return s;
}

}  // namespace veech

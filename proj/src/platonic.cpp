#include "veech/platonic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace veech {

namespace {

struct Rel {
  int di, poly;  // (sheet + di, poly)
};

// Nets: neighbours of each face on sheet i, before the per-sheet rotation of
// edge indices.
const std::vector<std::vector<Rel>> kCubeBase = {
    {{-1, 4}, {0, 1}, {1, 5}, {0, 3}},
    {{0, 4}, {0, 2}, {0, 5}, {0, 0}},
    {{1, 4}, {0, 3}, {-1, 5}, {0, 1}},
    {{2, 4}, {0, 0}, {2, 5}, {0, 2}},
    {{2, 3}, {-1, 2}, {0, 1}, {1, 0}},
    {{0, 1}, {1, 2}, {2, 3}, {3, 0}},
};

const std::vector<std::vector<Rel>> kIcosaBase = {
    {{0, 19}, {0, 3}, {0, 1}},   {{0, 18}, {0, 8}, {0, 0}},   {{0, 17}, {0, 5}, {0, 3}},
    {{0, 16}, {0, 0}, {0, 2}},   {{0, 15}, {0, 7}, {0, 5}},   {{0, 14}, {0, 2}, {0, 4}},
    {{0, 13}, {0, 9}, {0, 7}},   {{0, 12}, {0, 4}, {0, 6}},   {{0, 11}, {0, 1}, {0, 9}},
    {{0, 10}, {0, 6}, {0, 8}},   {{0, 9}, {-1, 18}, {1, 12}}, {{0, 8}, {-1, 13}, {1, 19}},
    {{0, 7}, {-1, 10}, {1, 14}}, {{0, 6}, {-1, 15}, {1, 11}}, {{0, 5}, {-1, 12}, {1, 16}},
    {{0, 4}, {-1, 17}, {1, 13}}, {{0, 3}, {-1, 14}, {1, 18}}, {{0, 2}, {-1, 19}, {1, 15}},
    {{0, 1}, {-1, 16}, {1, 10}}, {{0, 0}, {-1, 11}, {1, 17}},
};

const std::vector<std::vector<Rel>> kDodecaBase = {
    {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}},
    {{0, 0}, {1, 5}, {4, 10}, {-4, 9}, {-1, 2}},
    {{-1, 3}, {0, 0}, {1, 1}, {-2, 9}, {0, 8}},
    {{4, 7}, {-1, 4}, {0, 0}, {1, 2}, {2, 8}},
    {{-4, 7}, {-2, 11}, {-1, 5}, {0, 0}, {1, 3}},
    {{1, 4}, {0, 11}, {2, 10}, {-1, 1}, {0, 0}},
    {{0, 7}, {0, 8}, {0, 9}, {0, 10}, {0, 11}},
    {{0, 6}, {1, 11}, {4, 4}, {-4, 3}, {-1, 8}},
    {{-1, 9}, {0, 6}, {1, 7}, {-2, 3}, {0, 2}},
    {{4, 1}, {-1, 10}, {0, 6}, {1, 8}, {2, 2}},
    {{-4, 1}, {-2, 5}, {-1, 11}, {0, 6}, {1, 9}},
    {{1, 10}, {0, 5}, {2, 4}, {-1, 7}, {0, 6}},
};

int mod(int a, int m) { return ((a % m) + m) % m; }

int index_of(const std::vector<FaceCoord>& list, FaceCoord c) {
  auto it = std::find(list.begin(), list.end(), c);
  if (it == list.end()) throw std::logic_error("face not among the sheet labels");
  return static_cast<int>(it - list.begin());
}

std::vector<int> sheet_face_lookup(Solid s, const std::vector<FaceCoord>& list) {
  std::vector<int> at(static_cast<std::size_t>(deck_order(s) * face_count(s)), -1);
  for (std::size_t i = 0; i < list.size(); ++i)
    at[static_cast<std::size_t>(list[i].sheet * face_count(s) + list[i].poly)] = static_cast<int>(i);
  return at;
}

// Upright triangle in the sheared picture, where the equilateral triangle of
// side 1 becomes (0,0), (1,0), (0,1).
ConvexPolygon sheared_triangle() { return {{{Nf(0), Nf(0)}, {Nf(1), Nf(0)}, {Nf(0), Nf(1)}}}; }

ConvexPolygon negated(const ConvexPolygon& p) {
  ConvexPolygon q = p;
  for (auto& v : q.vertices) v = -v;
  return q;
}

}  // namespace

const std::vector<Solid>& all_solids() {
  static const std::vector<Solid> v = {Solid::tetrahedron, Solid::octahedron, Solid::cube, Solid::icosahedron,
                                       Solid::dodecahedron};
  return v;
}

std::string solid_name(Solid s) {
  switch (s) {
    case Solid::tetrahedron: return "tetrahedron";
    case Solid::octahedron: return "octahedron";
    case Solid::cube: return "cube";
    case Solid::icosahedron: return "icosahedron";
    case Solid::dodecahedron: return "dodecahedron";
  }
  return "?";
}

Solid parse_solid(const std::string& name) {
  for (Solid s : all_solids())
    if (solid_name(s) == name) return s;
  throw std::invalid_argument("unknown solid '" + name + "'");
}

int deck_order(Solid s) {
  switch (s) {
    case Solid::tetrahedron: return 2;
    case Solid::octahedron: return 3;
    case Solid::cube: return 4;
    case Solid::icosahedron: return 6;
    case Solid::dodecahedron: return 10;
  }
  return 0;
}

int face_count(Solid s) {
  switch (s) {
    case Solid::tetrahedron: return 4;
    case Solid::octahedron: return 8;
    case Solid::cube: return 6;
    case Solid::icosahedron: return 20;
    case Solid::dodecahedron: return 12;
  }
  return 0;
}

int face_sides(Solid s) {
  switch (s) {
    case Solid::cube: return 4;
    case Solid::dodecahedron: return 5;
    default: return 3;
  }
}

std::vector<FaceCoord> build_adj(Solid s, FaceCoord c) {
  const std::vector<std::vector<Rel>>* base = nullptr;
  switch (s) {
    case Solid::cube: base = &kCubeBase; break;
    case Solid::icosahedron: base = &kIcosaBase; break;
    case Solid::dodecahedron: base = &kDodecaBase; break;
    default: throw std::invalid_argument("no adjacency net for the " + solid_name(s));
  }
  int k = deck_order(s), p = face_sides(s);
  if (c.sheet < 0 || c.sheet >= k || c.poly < 0 || c.poly >= face_count(s))
    throw std::invalid_argument("face coordinate out of range");
  const auto& row = (*base)[static_cast<std::size_t>(c.poly)];
  std::vector<FaceCoord> out;
  for (int e = 0; e < p; ++e) {
    // Rotating the net by one sheet moves a different edge into the
    // horizontal: -1 per sheet for the even case and icosahedron, +2 for the
    // dodecahedron.
    int shifted = s == Solid::dodecahedron ? mod(e + 2 * c.sheet, p) : mod(e - c.sheet, p);
    const Rel& r = row[static_cast<std::size_t>(shifted)];
    out.push_back({mod(c.sheet + r.di, k), r.poly});
  }
  return out;
}

std::vector<FaceCoord> sheet_labels(Solid s) {
  std::vector<FaceCoord> out;
  switch (s) {
    case Solid::cube:
      for (int i = 0; i < 4; ++i)
        for (int q = 0; q < 6; ++q) out.push_back({i, q});
      break;
    case Solid::icosahedron:
      for (int i = 1; i < 6; i += 2)
        for (int t = 1; t < 20; t += 2) out.push_back({i, t});
      for (int i = 0; i < 6; i += 2)
        for (int t = 0; t < 20; t += 2) out.push_back({i, t});
      break;
    case Solid::dodecahedron: {
      const int odd_pents[] = {7, 8, 9, 10, 11, 0};
      for (int i = 1; i < 10; i += 2)
        for (int p : odd_pents) out.push_back({i, p});
      for (int i = 0; i < 9; i += 2)
        for (int p = 1; p < 7; ++p) out.push_back({i, p});
      break;
    }
    default: throw std::invalid_argument("no sheet labels for the " + solid_name(s));
  }
  return out;
}

std::vector<FaceCoord> sheet_partners(Solid s) {
  if (s == Solid::cube) return sheet_labels(s);
  int edge = s == Solid::icosahedron ? 0 : 4;
  std::vector<FaceCoord> out;
  for (auto c : sheet_labels(s)) out.push_back(build_adj(s, c)[static_cast<std::size_t>(edge)]);
  return out;
}

Permutation monodromy_perm(Solid s, int edge) {
  if (edge < 0 || edge >= face_sides(s)) throw std::invalid_argument("edge index out of range");
  auto tops = sheet_labels(s);
  auto bots = sheet_partners(s);
  std::vector<int> img;
  for (auto c : tops) img.push_back(index_of(bots, build_adj(s, c)[static_cast<std::size_t>(edge)]));
  return Permutation(std::move(img));
}

Origami platonic_origami(Solid s) {
  switch (s) {
    case Solid::tetrahedron:
      // 2 x 2 square torus; its four corners are the lifts of the vertices.
      return {Permutation::from_cycles(4, {{0, 1}, {2, 3}}), Permutation::from_cycles(4, {{0, 2}, {1, 3}})};
    case Solid::octahedron:
      return {Permutation::from_cycles(12, {{0, 7, 6}, {1, 3, 4}, {2, 11, 5}, {8, 10, 9}}),
              Permutation::from_cycles(12, {{0, 11, 9}, {1, 7, 10}, {2, 3, 8}, {4, 5, 6}})};
    case Solid::cube: return {monodromy_perm(s, 0), monodromy_perm(s, 1)};
    case Solid::icosahedron: return {monodromy_perm(s, 1), monodromy_perm(s, 2)};
    case Solid::dodecahedron: break;
  }
  throw std::invalid_argument("the dodecahedron is not square-tiled");
}

std::vector<Permutation> monodromy_generators(Solid s) {
  if (s == Solid::dodecahedron) {
    std::vector<Permutation> x;
    for (int e = 0; e < 4; ++e) x.push_back(monodromy_perm(s, e));
    return x;
  }
  auto o = platonic_origami(s);
  return {o.h, o.v};
}

long monodromy_group_order(Solid s) { return group_order(monodromy_generators(s)); }

TranslationSurface build_unfolding(Solid s) {
  if (s == Solid::tetrahedron || s == Solid::octahedron) return origami_surface(platonic_origami(s));
  int k = deck_order(s), f = face_count(s), p = face_sides(s);
  TranslationSurface out;
  std::shared_ptr<const ConvexPolygon> up, down;
  std::vector<char> is_top(static_cast<std::size_t>(k * f), 1);
  if (s == Solid::cube) {
    up = down = std::make_shared<const ConvexPolygon>(axis_square(1));
  } else {
    ConvexPolygon base = s == Solid::dodecahedron ? regular_pentagon(2) : sheared_triangle();
    up = std::make_shared<const ConvexPolygon>(base);
    down = std::make_shared<const ConvexPolygon>(negated(base));
    std::fill(is_top.begin(), is_top.end(), 0);
    for (auto c : sheet_labels(s)) is_top[static_cast<std::size_t>(c.sheet * f + c.poly)] = 1;
  }
  for (int l = 0; l < k * f; ++l) out.add_polygon(is_top[static_cast<std::size_t>(l)] ? up : down);
  for (int l = 0; l < k * f; ++l) {
    auto adj = build_adj(s, {l / f, l % f});
    for (int e = 0; e < p; ++e) {
      auto n = adj[static_cast<std::size_t>(e)];
      int partner_edge = s == Solid::cube ? (e + 2) % 4 : e;
      out.glue({l, e}, {n.sheet * f + n.poly, partner_edge});
    }
  }
  out.validate();
  return out;
}

TranslationSurface double_pentagon_cover(const std::vector<Permutation>& x) {
  if (x.size() != 4) throw std::invalid_argument("need four monodromy permutations");
  int m = x[0].size();
  TranslationSurface out;
  auto up = std::make_shared<const ConvexPolygon>(regular_pentagon(2));
  auto down = std::make_shared<const ConvexPolygon>(negated(*up));
  for (int i = 0; i < m; ++i) out.add_polygon(up);
  for (int i = 0; i < m; ++i) out.add_polygon(down);
  for (int i = 0; i < m; ++i) {
    for (int e = 0; e < 4; ++e) out.glue({i, e}, {m + x[static_cast<std::size_t>(e)](i), e});
    out.glue({i, 4}, {m + i, 4});
  }
  out.validate();
  return out;
}

Covering covering_to_pi_n(Solid s) {
  Covering c;
  if (s == Solid::tetrahedron || s == Solid::octahedron) {
    auto o = platonic_origami(s);
    c.degree = o.size();
    for (int i = 0; i < o.size(); ++i) {
      c.sheet_of_face.push_back(i);
      c.cell_of_face.push_back(0);
    }
  } else {
    int f = face_count(s);
    auto tops = sheet_labels(s);
    auto bots = sheet_partners(s);
    c.degree = static_cast<int>(tops.size());
    auto top_at = sheet_face_lookup(s, tops);
    auto bot_at = s == Solid::cube ? top_at : sheet_face_lookup(s, bots);
    for (int l = 0; l < deck_order(s) * f; ++l) {
      int t = top_at[static_cast<std::size_t>(l)], b = bot_at[static_cast<std::size_t>(l)];
      if (t < 0 && b < 0) throw std::logic_error("face outside every sheet");
      c.sheet_of_face.push_back(t >= 0 ? t : b);
      c.cell_of_face.push_back(t >= 0 ? 0 : 1);
    }
  }
  auto gens = monodromy_generators(s);
  c.regular = is_transitive(gens) && group_order(gens) == c.degree;
  return c;
}

StratumData stratum_of_k_cover(int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  return {k, k - 2, 2 * k, (k - 1) * (k - 1)};
}

std::string stratum_string(const StratumData& d) {
  return "H(" + std::to_string(d.zero_order) + "^" + std::to_string(d.zero_count) + ")";
}

SingularityData singularity_data(const TranslationSurface& s) {
  SingularityData d;
  d.genus = genus(s);
  d.cone_turns = vertex_classes(s).cone_turns;
  std::sort(d.cone_turns.begin(), d.cone_turns.end());
  return d;
}

}  // namespace veech

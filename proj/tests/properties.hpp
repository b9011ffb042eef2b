#pragma once

// Randomized property checks shared by the unit tests and the acceptance run.

#include <algorithm>
#include <numeric>
#include <random>

#include "veech/io.hpp"
#include "veech/origami.hpp"
#include "veech/platonic.hpp"
#include "veech/saddle.hpp"
#include "veech/surface.hpp"

namespace props {

using namespace veech;

inline Permutation random_perm(std::mt19937& g, int m) {
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 0);
  std::shuffle(v.begin(), v.end(), g);
  return Permutation(v);
}

// Small covers of the double pentagon or the square torus, pushed off their
// Delaunay shape by a random short word.
inline TranslationSurface random_small_surface(std::mt19937& g) {
  std::uniform_int_distribution<int> coin(0, 1), letters(0, 3);
  if (coin(g)) {
    int m = std::uniform_int_distribution<int>(1, 3)(g);
    Quadruple x;
    do {
      for (auto& p : x) p = random_perm(g, m);
    } while (!is_transitive({x[0], x[1], x[2], x[3]}));
    std::string w;
    for (int i = letters(g); i > 0; --i) w += coin(g) ? 'R' : 'T';
    return apply_matrix(word_matrix(w), quadruple_surface(x));
  }
  int m = std::uniform_int_distribution<int>(2, 5)(g);
  Origami o;
  do {
    o.h = random_perm(g, m);
    o.v = random_perm(g, m);
  } while (!is_transitive({o.h, o.v}));
  Mat2 m1{Nf(1), Nf(letters(g)), Nf(0), Nf(1)}, m2{Nf(1), Nf(0), Nf(letters(g)), Nf(1)};
  return apply_matrix(m1 * m2, origami_surface(o));
}

struct Report {
  int surfaces = 0;
  int idempotence_failures = 0;
  int relabel_failures = 0;
  int circumdisk_failures = 0;
  int json_failures = 0;
  int total_failures() const { return idempotence_failures + relabel_failures + circumdisk_failures + json_failures; }
};

inline Report surface_properties(int count, unsigned seed) {
  std::mt19937 g(seed);
  Report r;
  for (int i = 0; i < count; ++i) {
    auto s = random_small_surface(g);
    ++r.surfaces;
    auto c = canonicalize(s);
    if (!(canonicalize(c.surface) == c)) ++r.idempotence_failures;
    int n = s.num_polygons();
    auto p = random_perm(g, n);
    int base = std::uniform_int_distribution<int>(0, n - 1)(g);
    if (!(canonicalize(relabel(s, p.images(), base)) == c)) ++r.relabel_failures;
    if (!has_empty_circumdisks(delaunay(s)) || !has_empty_circumdisks(c.surface)) ++r.circumdisk_failures;
    auto text = surface_to_json(s);
    auto back = surface_from_json(text);
    if (surface_to_json(back) != text || !(canonicalize(back) == c)) ++r.json_failures;
  }
  return r;
}

}  // namespace props

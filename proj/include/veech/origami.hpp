#pragma once

#include <string>
#include <vector>

#include "veech/permutation.hpp"
#include "veech/surface.hpp"

namespace veech {

// Square-tiled surface: h(i) is the right neighbour of square i, v(i) the
// upper neighbour.
struct Origami {
  Permutation h, v;

  int size() const { return h.size(); }
  friend bool operator==(const Origami& a, const Origami& b) { return a.h == b.h && a.v == b.v; }
  friend bool operator<(const Origami& a, const Origami& b) {
    return a.h != b.h ? a.h < b.h : a.v < b.v;
  }
};

// Throws std::invalid_argument for a non-transitive pair.
Origami origami_normal_form(const Origami& o);

// Two ways of writing the SL(2,Z) action on (h, v). `geometric` is
// T(h, v) = (h, v h^-1), S(h, v) = (v^-1, h) with functional composition;
// `reversed` composes the other way round.
enum class ActionConvention { geometric, reversed };
Origami act_S(const Origami& o, ActionConvention c);
Origami act_T(const Origami& o, ActionConvention c);
// Apply a word over {S, T}; the rightmost letter acts first.
Origami act_word(const Origami& o, const std::string& word, ActionConvention c);

// The convention under which act_T agrees with shearing the glued squares,
// decided once by comparing canonical forms.
ActionConvention default_convention();

struct Sl2zOrbit {
  std::vector<Origami> elements;  // normal forms, element 0 is the input
  Permutation S, T;               // action on element indices
};
Sl2zOrbit sl2z_orbit(const Origami& o, ActionConvention c);
inline Sl2zOrbit sl2z_orbit(const Origami& o) { return sl2z_orbit(o, default_convention()); }

struct VeechData {
  int index = 0;
  std::vector<int> cusp_widths;  // sorted ascending
  int nu2 = 0, nu3 = 0;
  int genus = 0;
};
VeechData veech_data(const Sl2zOrbit& orbit);
inline VeechData veech_data(const Origami& o) { return veech_data(sl2z_orbit(o)); }

// Every square corner is treated as a singularity (marked or not); for the
// Platonic unfoldings this is exactly the zero set.
std::vector<int> corner_classes(const Origami& o);  // class of lower-left corner of each square

struct Cylinder {
  std::vector<int> squares;  // one horizontal h-cycle
  int circumference = 0, height = 1;
  std::vector<int> bottom, top;  // singularity ids, left to right
};
std::vector<Cylinder> horizontal_cylinders(const Origami& o);
// Cylinders in the direction that `direction_word` (over S, T) maps to the
// horizontal.
std::vector<Cylinder> cylinder_diagram(const Origami& o, const std::string& direction_word);

struct BlockingReport {
  bool blocked = true;             // no closed saddle connection
  bool boundary_ok = true;         // no boundary segment joins a singularity to itself
  bool colors_disjoint = true;     // no singularity on both sides of a cylinder
  int cusps_checked = 0;
};
// One horizontal check per T-cycle of the orbit.
BlockingReport blocking_report(const Origami& o);
bool blocking_check(const Origami& o);

// Unit squares glued per (h, v); labels are square indices.
TranslationSurface origami_surface(const Origami& o);

}  // namespace veech

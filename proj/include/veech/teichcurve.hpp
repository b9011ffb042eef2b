#pragma once

#include "veech/permutation.hpp"

namespace veech {

// Topology of H^2 / PV(S) for a finite cover of the (2, 5, inf) orbifold of
// the double pentagon.
struct CurveTopology {
  int index = 0;             // N
  int genus = 0;
  int cusps = 0;
  int cone_pi = 0;           // order-2 points, cone angle pi
  int cone_two_pi_fifths = 0;  // order-5 points, cone angle 2pi/5
};

// Throws std::invalid_argument when r has cycles other than 1 and 5, r t^-1
// cycles other than 1 and 2, or the genus comes out non-integral.
CurveTopology topology_over_pi5(const Permutation& r, const Permutation& t);

// Genus from the branched-cover count 2 - 2g = c(r) + c(r t^-1) + c(t) - N.
int riemann_hurwitz_genus(const Permutation& r, const Permutation& t);

}  // namespace veech

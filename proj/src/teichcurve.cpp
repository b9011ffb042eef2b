#include "veech/teichcurve.hpp"

#include <stdexcept>
#include <string>

namespace veech {

namespace {

int fixed_points_only(const Permutation& p, int other_length, const char* what) {
  int fixed = 0;
  for (auto& [len, count] : p.cycle_type()) {
    if (len == 1) fixed = count;
    else if (len != other_length)
      throw std::invalid_argument(std::string(what) + " has a cycle of length " + std::to_string(len) +
                                  ", so r and t do not define a cover of the (2, 5, inf) orbifold");
  }
  return fixed;
}

}  // namespace

CurveTopology topology_over_pi5(const Permutation& r, const Permutation& t) {
  if (r.size() != t.size() || r.size() == 0) throw std::invalid_argument("r and t must act on the same nonempty set");
  CurveTopology c;
  c.index = r.size();
  c.cusps = t.num_cycles();
  c.cone_two_pi_fifths = fixed_points_only(r, 5, "r");
  c.cone_pi = fixed_points_only(r * t.inverse(), 2, "r t^-1");
  // Area N * 3pi/5 = -2pi chi_orb with
  // chi_orb = 2 - 2g - cusps - (1/2) cone_pi - (4/5) cone_two_pi_fifths.
  int twenty_g = 20 + 3 * c.index - 10 * c.cusps - 5 * c.cone_pi - 8 * c.cone_two_pi_fifths;
  if (twenty_g % 20 != 0 || twenty_g < 0)
    throw std::invalid_argument("Gauss-Bonnet genus is not a non-negative integer (20g = " + std::to_string(twenty_g) + ")");
  c.genus = twenty_g / 20;
  return c;
}

int riemann_hurwitz_genus(const Permutation& r, const Permutation& t) {
  int chi = r.num_cycles() + (r * t.inverse()).num_cycles() + t.num_cycles() - r.size();
  if (chi % 2 != 0) throw std::invalid_argument("odd Euler characteristic");
  return (2 - chi) / 2;
}

}  // namespace veech

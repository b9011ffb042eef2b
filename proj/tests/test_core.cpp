#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "veech/numfield.hpp"
#include "veech/planar.hpp"
#include "veech/surface.hpp"

using namespace veech;

namespace {

Nf random_nf(std::mt19937_64& rng, int span = 40) {
  std::uniform_int_distribution<long> c(-span, span), d(1, 12);
  return Nf::from_ints(c(rng), c(rng), c(rng), c(rng), d(rng));
}

// Independent float model of s = 2 sin(pi/5).
double s_value() { return 2.0 * std::sin(M_PI / 5.0); }

double eval(const Nf& a) {
  double s = s_value(), v = 0, p = 1;
  for (int i = 0; i < 4; ++i, p *= s) v += a.coeff(i).to_double() * p;
  return v;
}

TranslationSurface single_pentagon_pair() {
  TranslationSurface s;
  auto top = regular_pentagon();
  ConvexPolygon bot = top.transformed({Nf(-1), Nf(0), Nf(0), Nf(-1)});
  std::rotate(bot.vertices.begin(), bot.vertices.begin() + 3, bot.vertices.end());
  s.add_polygon(top);
  s.add_polygon(bot);
  for (int e = 0; e < 5; ++e) s.glue({0, e}, {1, (e + 2) % 5});
  return s;
}

}  // namespace

TEST_CASE("field identities") {
  Nf s = Nf::gen();
  CHECK(s * s * s * s == 5 * s * s - 5);
  CHECK((3 - s * s) * (3 - s * s) == 4 - s * s);
  CHECK(s * Nf::from_ints(0, 5, 0, -1, 5) == Nf(1));
  CHECK(phi() * phi() == phi() + 1);
  CHECK(cos_pi5() * cos_pi5() + sin_pi5() * sin_pi5() == Nf(1));
  CHECK(std::abs(s.to_double() - s_value()) < 1e-15);
  CHECK(std::abs(two_cot_pi5().to_double() - 2.0 / std::tan(M_PI / 5)) < 1e-14);
  CHECK(Nf::parse("1/2,0,-3/4,1") == Nf::from_ints(2, 0, -3, 4, 4));
  CHECK(Nf::parse(Nf::from_ints(7, -3, 2, 9, 11).str()) == Nf::from_ints(7, -3, 2, 9, 11));
  CHECK_THROWS(Nf(0).inv());
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    Nf a = random_nf(rng), b = random_nf(rng), c = random_nf(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inv() == Nf(1));
    double fa = eval(a), fb = eval(b);
    if (std::abs(fa - fb) > 1e-9) CHECK((a < b) == (fa < fb));
    if (std::abs(fa) > 1e-9) CHECK(a.sign() == (fa > 0 ? 1 : -1));
  }
}

TEST_CASE("sign near zero and with big coefficients") {
  // phi^k - F_k phi - F_{k-1} = 0, and tiny conjugate-cancelling values.
  Nf s = Nf::gen(), p = phi(), x = Nf(1);
  long f0 = 0, f1 = 1;
  for (int k = 1; k < 80; ++k) {
    x = x * p;
    long f2 = f0 + f1;
    CHECK(x == Nf(f1) * p + Nf(f0));
    f0 = f1;
    f1 = f2;
    if (f2 > (1L << 60)) break;
  }
  // (phi - 1)^40 is positive and about 4e-9.
  Nf small = Nf(1);
  for (int i = 0; i < 40; ++i) small = small * (p - 1);
  CHECK(small.sign() == 1);
  CHECK((-small).sign() == -1);
  Nf big = Nf(1);
  for (int i = 0; i < 60; ++i) big = big * (s + 7);
  CHECK(big.is_big());
  CHECK((big * big.inv()) == Nf(1));
  auto e = nf_to_float(small, 90);
  CHECK(e.rad < 1e-24);
  CHECK(std::abs(e.mid - std::pow((std::sqrt(5.0) - 1) / 2, 40)) < 1e-22);
  auto es = nf_to_float(s, 17);
  CHECK(std::abs(es.mid - 1.17557) < 1e-5);
  CHECK(es.rad < 1e-5);
}

TEST_CASE("generator relations") {
  Mat2 R = generator_R(), T = generator_T(), J = generator_J(), I = Mat2::identity();
  CHECK(mat_pow(R, 5) == -I);
  CHECK(mat_pow(R, 10) == I);
  CHECK(mat_pow(R * mat_pow(T, -1), 2) == -I);
  CHECK(T * mat_pow(R, 9) * T * mat_pow(R, 9) == -I);
  CHECK(J * J == I);
  CHECK(J * R * J == R.inverse());
  CHECK(J * T * J == T.inverse());
  CHECK(word_matrix("RT") == R * T);
  CHECK(word_matrix("rTt") == R.inverse());
  CHECK(R.det() == Nf(1));
}

TEST_CASE("pentagon geometry") {
  auto p = regular_pentagon();
  Nf s = Nf::gen();
  CHECK(p.vertex(2) == Vec2{4 - s * s, 3 * s - s * s * s});
  CHECK(p.vertex(3) == Vec2{Nf(1), 4 * s - s * s * s});
  CHECK(p.is_strictly_convex());
  for (int i = 0; i < 5; ++i) CHECK(norm2(p.edge(i)) == Nf(4));
  CHECK(p.transformed(generator_R()).vertex(1) == generator_R() * p.vertex(1));
  double a = p.area().to_double();
  CHECK(std::abs(a - 0.25 * std::sqrt(5 * (5 + 2 * std::sqrt(5.0))) * 4) < 1e-12);
}

TEST_CASE("incircle orientation") {
  Vec2 b{Nf(1), Nf(0)}, c{Nf(0), Nf(1)};
  CHECK(incircle_sign(b, c, {Nf::from_ints(1, 0, 0, 0, 2), Nf::from_ints(1, 0, 0, 0, 2)}) == 1);
  CHECK(incircle_sign(b, c, {Nf(1), Nf(1)}) == 0);
  CHECK(incircle_sign(b, c, {Nf(2), Nf(2)}) == -1);
}

TEST_CASE("double pentagon") {
  auto s = single_pentagon_pair();
  s.validate();
  CHECK(genus(s) == 2);
  auto vc = vertex_classes(s);
  CHECK(vc.count() == 1);
  CHECK(vc.cone_turns[0] == 3);
  auto d = delaunay(s);
  CHECK(d.num_polygons() == 2);
  CHECK(has_empty_circumdisks(d));
  CHECK(d.polygon(0) == s.polygon(0));
  auto c0 = canonicalize(s);
  CHECK(c0 == canonicalize(apply_matrix(generator_R(), s)));
  CHECK(c0 == canonicalize(apply_matrix(mat_pow(generator_R(), 3), s)));
  CHECK(c0 == canonicalize(apply_matrix(generator_T(), s)));
  auto sheared = apply_matrix(mat_pow(generator_T(), 3), s);
  auto ds = delaunay(sheared);
  ds.validate();
  CHECK(has_empty_circumdisks(ds));
  CHECK(ds.area() == s.area());
  CHECK(genus(ds) == 2);
}

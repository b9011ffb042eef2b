#include "veech/numfield.hpp"

#include <algorithm>
#include <cmath>

#include <mpfr.h>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace veech {

struct BigCoeffs {
  std::array<mpz_class, 4> c;
  mpz_class den;
};

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

// s, s^2, s^3 rounded to double.
constexpr double kS1 = 1.1755705045849463;
constexpr double kS2 = 1.3819660112501051;
constexpr double kS3 = 1.6245984811645316;

template <class I>
struct Co {
  std::array<I, 4> c;
  I den;
};

u128 uabs(i128 x) { return x < 0 ? u128(0) - u128(x) : u128(x); }

u128 gcd_u(u128 a, u128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) return std::gcd(uint64_t(a), uint64_t(b));
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 x) {
  return x >= i128(std::numeric_limits<int64_t>::min()) && x <= i128(std::numeric_limits<int64_t>::max());
}

mpz_class to_mpz(i128 x) {
  u128 m = uabs(x);
  mpz_class hi(static_cast<unsigned long>(uint64_t(m >> 64)));
  mpz_class lo(static_cast<unsigned long>(uint64_t(m)));
  mpz_class r = (hi << 64) + lo;
  return x < 0 ? mpz_class(-r) : r;
}

bool mpz_fits64(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()); }

void normalize(Co<i128>& a) {
  if (a.c[0] == 0 && a.c[1] == 0 && a.c[2] == 0 && a.c[3] == 0) {
    a.den = 1;
    return;
  }
  if (a.den == 1) return;
  u128 g = uabs(a.den);
  for (int i = 0; i < 4 && g != 1; ++i)
    if (a.c[i] != 0) g = gcd_u(g, uabs(a.c[i]));
  if (g != 1) {
    for (auto& x : a.c) x /= i128(g);
    a.den /= i128(g);
  }
}

void normalize(Co<mpz_class>& a) {
  if (a.c[0] == 0 && a.c[1] == 0 && a.c[2] == 0 && a.c[3] == 0) {
    a.den = 1;
    return;
  }
  if (a.den == 1) return;
  mpz_class g = abs(a.den);
  for (int i = 0; i < 4 && g != 1; ++i)
    if (a.c[i] != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.c[i].get_mpz_t());
  if (g != 1) {
    for (auto& x : a.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(a.den.get_mpz_t(), a.den.get_mpz_t(), g.get_mpz_t());
  }
}

template <class I>
Co<I> add_kernel(const Co<I>& a, const Co<I>& b, bool negate_b) {
  Co<I> r;
  if (a.den == b.den) {
    for (int i = 0; i < 4; ++i) r.c[i] = negate_b ? I(a.c[i] - b.c[i]) : I(a.c[i] + b.c[i]);
    r.den = a.den;
  } else {
    for (int i = 0; i < 4; ++i)
      r.c[i] = negate_b ? I(a.c[i] * b.den - b.c[i] * a.den) : I(a.c[i] * b.den + b.c[i] * a.den);
    r.den = a.den * b.den;
  }
  return r;
}

// Product reduced with s^4 = 5s^2 - 5, s^5 = 5s^3 - 5s, s^6 = 20s^2 - 25.
template <class I>
Co<I> mul_kernel(const Co<I>& a, const Co<I>& b) {
  I p[7];
  for (auto& x : p) x = 0;
  for (int i = 0; i < 4; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < 4; ++j)
      if (b.c[j] != 0) p[i + j] += a.c[i] * b.c[j];
  }
  Co<I> r;
  r.c[0] = p[0] - 5 * p[4] - 25 * p[6];
  r.c[1] = p[1] - 5 * p[5];
  r.c[2] = p[2] + 5 * p[4] + 20 * p[6];
  r.c[3] = p[3] + 5 * p[5];
  r.den = a.den * b.den;
  return r;
}

}  // namespace

struct NfAccess {
  static Co<i128> small(const Nf& a) {
    return {{a.c_[0], a.c_[1], a.c_[2], a.c_[3]}, a.den_};
  }
  static Co<mpz_class> big(const Nf& a) {
    if (a.big_) return {a.big_->c, a.big_->den};
    Co<mpz_class> r;
    for (int i = 0; i < 4; ++i) r.c[i] = mpz_class(static_cast<long>(a.c_[i]));
    r.den = mpz_class(static_cast<long>(a.den_));
    return r;
  }
  static Nf make(const Co<i128>& a) {
    bool fits = fits64(a.den);
    for (int i = 0; i < 4 && fits; ++i) fits = fits64(a.c[i]);
    Nf r;
    if (fits) {
      for (int i = 0; i < 4; ++i) r.c_[i] = int64_t(a.c[i]);
      r.den_ = int64_t(a.den);
    } else {
      auto b = std::make_shared<BigCoeffs>();
      for (int i = 0; i < 4; ++i) b->c[i] = to_mpz(a.c[i]);
      b->den = to_mpz(a.den);
      r.big_ = std::move(b);
    }
    return r;
  }
  static Nf make(const Co<mpz_class>& a) {
    bool fits = mpz_fits64(a.den);
    for (int i = 0; i < 4 && fits; ++i) fits = mpz_fits64(a.c[i]);
    Nf r;
    if (fits) {
      for (int i = 0; i < 4; ++i) r.c_[i] = a.c[i].get_si();
      r.den_ = a.den.get_si();
    } else {
      r.big_ = std::make_shared<BigCoeffs>(BigCoeffs{a.c, a.den});
    }
    return r;
  }
  // Magnitude bound so that the int128 kernels cannot overflow.
  static bool tame(const Nf& a, int bits) {
    if (a.big_) return false;
    const int64_t lim = int64_t(1) << bits;
    for (auto x : a.c_)
      if (x >= lim || x <= -lim) return false;
    return a.den_ < lim;
  }
};

namespace {

int sign_sqrt5(const mpz_class& x, const mpz_class& y) {
  // sign of x + y sqrt(5)
  int sx = sgn(x), sy = sgn(y);
  if (sy == 0) return sx;
  if (sx == 0) return sy;
  if (sx == sy) return sx;
  mpz_class d = x * x - 5 * y * y;
  return sx * sgn(d);
}

// Exact sign of c0 + c1 s + c2 s^2 + c3 s^3 using s^2 = (5 - sqrt 5)/2.
int exact_sign(const std::array<mpz_class, 4>& c) {
  // 2u = A + B sqrt5, 2v = C + D sqrt5, 2 * value = 2u + s * 2v.
  mpz_class A = 2 * c[0] + 5 * c[2], B = -c[2];
  mpz_class C = 2 * c[1] + 5 * c[3], D = -c[3];
  int su = sign_sqrt5(A, B), sv = sign_sqrt5(C, D);
  if (sv == 0) return su;
  if (su == 0) return sv;
  if (su == sv) return su;
  // compare U^2 against s^2 V^2
  mpz_class X = 2 * A * A + 10 * B * B - 5 * C * C - 25 * D * D + 10 * C * D;
  mpz_class Y = 4 * A * B - 10 * C * D + C * C + 5 * D * D;
  return su * sign_sqrt5(X, Y);
}

struct FloatEval {
  double val;
  double err;
};

FloatEval eval_small(const std::array<int64_t, 4>& c) {
  double c0 = double(c[0]), c1 = double(c[1]), c2 = double(c[2]), c3 = double(c[3]);
  double val = c0 + c1 * kS1 + c2 * kS2 + c3 * kS3;
  double mag = std::fabs(c0) + std::fabs(c1) * kS1 + std::fabs(c2) * kS2 + std::fabs(c3) * kS3;
  return {val, mag * 1e-14};
}

FloatEval eval_big(const std::array<mpz_class, 4>& c) {
  double d[4];
  for (int i = 0; i < 4; ++i) d[i] = c[i].get_d();
  double val = d[0] + d[1] * kS1 + d[2] * kS2 + d[3] * kS3;
  double mag = std::fabs(d[0]) + std::fabs(d[1]) * kS1 + std::fabs(d[2]) * kS2 + std::fabs(d[3]) * kS3;
  return {val, mag * 1e-14};
}

}  // namespace

Nf::Nf(const Rational& q) {
  Co<mpz_class> a;
  a.c = {q.num(), mpz_class(0), mpz_class(0), mpz_class(0)};
  a.den = q.den();
  *this = NfAccess::make(a);
}

Nf::Nf(const std::array<Rational, 4>& c) {
  mpz_class l = 1;
  for (auto& q : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.den().get_mpz_t());
  Co<mpz_class> a;
  for (int i = 0; i < 4; ++i) a.c[i] = c[i].num() * (l / c[i].den());
  a.den = l;
  normalize(a);
  *this = NfAccess::make(a);
}

Nf Nf::gen() { return from_ints(0, 1, 0, 0); }

Nf Nf::from_ints(long c0, long c1, long c2, long c3, long den) {
  if (den == 0) throw std::domain_error("number field element with zero denominator");
  Co<i128> a{{c0, c1, c2, c3}, den};
  if (den < 0) {
    for (auto& x : a.c) x = -x;
    a.den = -a.den;
  }
  normalize(a);
  return NfAccess::make(a);
}

Nf Nf::parse(std::string_view text) {
  std::array<Rational, 4> c;
  std::size_t start = 0;
  for (int i = 0; i < 4; ++i) {
    auto comma = text.find(',', start);
    if ((i < 3) != (comma != std::string_view::npos))
      throw std::invalid_argument("expected four comma-separated rationals, got '" + std::string(text) + "'");
    c[i] = Rational::parse(text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start));
    start = comma + 1;
  }
  return Nf(c);
}

Rational Nf::coeff(int i) const {
  if (big_) return Rational(mpq_class(big_->c[i], big_->den));
  return Rational(c_[i], den_);
}

int Nf::sign() const {
  if (!big_) {
    if (is_zero()) return 0;
    auto e = eval_small(c_);
    if (e.val > e.err) return 1;
    if (e.val < -e.err) return -1;
    return exact_sign(NfAccess::big(*this).c);
  }
  auto e = eval_big(big_->c);
  if (e.val > e.err) return 1;
  if (e.val < -e.err) return -1;
  return exact_sign(big_->c);
}

double Nf::to_double() const {
  if (!big_) return eval_small(c_).val / double(den_);
  auto e = eval_big(big_->c);
  return e.val / big_->den.get_d();
}

FloatEnclosure Nf::enclosure() const {
  FloatEval e;
  double d;
  if (!big_) {
    if (is_zero()) return {0.0, 0.0};
    e = eval_small(c_);
    d = double(den_);
  } else {
    e = eval_big(big_->c);
    d = big_->den.get_d();
  }
  double mid = e.val / d;
  return {mid, e.err / d + std::fabs(mid) * 4 * std::numeric_limits<double>::epsilon()};
}

// Evaluates in MPFR at increasing working precision until the rounding
// bound meets 2^-precision_bits. Each term c_i s^i / den passes through at
// most eight roundings, so 16 ulps per term is a safe bound.
FloatEnclosure nf_to_float(const Nf& a, int precision_bits) {
  if (a.is_zero()) return {0.0, 0.0};
  auto co = a.coeffs();
  double target = std::ldexp(1.0, -std::max(precision_bits, 1));
  for (mpfr_prec_t w = std::max(precision_bits, 53) + 32;; w *= 2) {
    mpfr_t s, t, p, acc, bound, tmp;
    for (auto* x : {&s, &t, &p, &acc, &bound, &tmp}) mpfr_init2(*x, w);
    mpfr_sqrt_ui(t, 5, MPFR_RNDN);
    mpfr_ui_sub(t, 5, t, MPFR_RNDN);
    mpfr_div_2ui(t, t, 1, MPFR_RNDN);
    mpfr_sqrt(s, t, MPFR_RNDN);
    mpfr_set_ui(p, 1, MPFR_RNDN);
    mpfr_set_ui(acc, 0, MPFR_RNDN);
    mpfr_set_ui(bound, 0, MPFR_RNDN);
    for (int i = 0; i < 4; ++i) {
      const mpq_class& q = co[static_cast<std::size_t>(i)].get();
      mpfr_mul_q(t, p, q.get_mpq_t(), MPFR_RNDN);
      mpfr_add(acc, acc, t, MPFR_RNDN);
      mpfr_abs(tmp, t, MPFR_RNDN);
      mpfr_add(bound, bound, tmp, MPFR_RNDU);
      mpfr_mul(p, p, s, MPFR_RNDN);
    }
    mpfr_mul_2si(bound, bound, 4 - static_cast<long>(w), MPFR_RNDU);
    double mid = mpfr_get_d(acc, MPFR_RNDN);
    mpfr_sub_d(tmp, acc, mid, MPFR_RNDN);
    double rad = mpfr_get_d(bound, MPFR_RNDU) + std::fabs(mpfr_get_d(tmp, MPFR_RNDU)) * (1 + 1e-10);
    for (auto* x : {&s, &t, &p, &acc, &bound, &tmp}) mpfr_clear(*x);
    // Doubles cannot certify widths below the spacing at mid; stop there.
    if (rad <= target || rad <= 4 * std::numeric_limits<double>::epsilon() * std::fabs(mid) || w > 1 << 16)
      return {mid, rad};
  }
}

Nf operator+(const Nf& a, const Nf& b) {
  if (NfAccess::tame(a, 62) && NfAccess::tame(b, 62)) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    auto r = add_kernel(NfAccess::small(a), NfAccess::small(b), false);
    normalize(r);
    return NfAccess::make(r);
  }
  auto r = add_kernel(NfAccess::big(a), NfAccess::big(b), false);
  normalize(r);
  return NfAccess::make(r);
}

Nf operator-(const Nf& a, const Nf& b) {
  if (NfAccess::tame(a, 62) && NfAccess::tame(b, 62)) {
    if (b.is_zero()) return a;
    auto r = add_kernel(NfAccess::small(a), NfAccess::small(b), true);
    normalize(r);
    return NfAccess::make(r);
  }
  auto r = add_kernel(NfAccess::big(a), NfAccess::big(b), true);
  normalize(r);
  return NfAccess::make(r);
}

Nf operator*(const Nf& a, const Nf& b) {
  if (NfAccess::tame(a, 56) && NfAccess::tame(b, 56)) {
    if (a.is_zero() || b.is_zero()) return Nf();
    auto r = mul_kernel(NfAccess::small(a), NfAccess::small(b));
    normalize(r);
    return NfAccess::make(r);
  }
  auto r = mul_kernel(NfAccess::big(a), NfAccess::big(b));
  normalize(r);
  return NfAccess::make(r);
}

Nf Nf::operator-() const {
  if (NfAccess::tame(*this, 62)) {
    Nf r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  auto a = NfAccess::big(*this);
  for (auto& x : a.c) x = -x;
  return NfAccess::make(a);
}

bool operator==(const Nf& a, const Nf& b) {
  if (!a.big_ && !b.big_) return a.c_ == b.c_ && a.den_ == b.den_;
  if (!a.big_ || !b.big_) return false;
  return a.big_->c == b.big_->c && a.big_->den == b.big_->den;
}

int cmp(const Nf& a, const Nf& b) {
  if (a == b) return 0;
  return (a - b).sign();
}

namespace {

using Poly = std::vector<mpq_class>;  // low degree first

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// p - q * c * x^k
void sub_scaled(Poly& p, const Poly& q, const mpq_class& c, std::size_t k) {
  if (p.size() < q.size() + k) p.resize(q.size() + k);
  for (std::size_t i = 0; i < q.size(); ++i) p[i + k] -= q[i] * c;
  trim(p);
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t k = r.size() - b.size();
    mpq_class c = r.back() / b.back();
    q[k] = c;
    sub_scaled(r, b, c, k);
  }
  trim(q);
}

}  // namespace

Nf Nf::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(s)");
  Poly m = {5, 0, -5, 0, 1};
  Poly a;
  for (int i = 0; i < 4; ++i) a.push_back(coeff(i).get());
  trim(a);
  Poly r0 = m, r1 = a, t0 = {}, t1 = {1};
  while (r1.size() > 1) {
    Poly q, r;
    divmod(r0, r1, q, r);
    Poly t2 = t0;
    Poly qt = mul(q, t1);
    for (std::size_t i = 0; i < qt.size(); ++i) {
      if (t2.size() <= i) t2.resize(i + 1);
      t2[i] -= qt[i];
    }
    trim(t2);
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r1 is a nonzero constant because the minimal polynomial is irreducible.
  mpq_class c = r1.at(0);
  Poly q, rem;
  divmod(t1, m, q, rem);
  std::array<Rational, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = Rational(i < int(rem.size()) ? mpq_class(rem[i] / c) : mpq_class(0));
  return Nf(out);
}

std::string Nf::str() const {
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (i) out += ',';
    out += coeff(i).str();
  }
  return out;
}

std::size_t Nf::hash() const {
  auto mix = [](uint64_t h, uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    return h ^ x;
  };
  uint64_t h = 0;
  if (!big_) {
    for (auto x : c_) h = mix(h, uint64_t(x));
    return mix(h, uint64_t(den_));
  }
  auto limbs = [&](const mpz_class& z) {
    h = mix(h, uint64_t(sgn(z)));
    for (std::size_t i = 0; i < mpz_size(z.get_mpz_t()); ++i) h = mix(h, mpz_getlimbn(z.get_mpz_t(), i));
  };
  for (auto& x : big_->c) limbs(x);
  limbs(big_->den);
  return h;
}

Nf phi() { return Nf::from_ints(3, 0, -1, 0); }
Nf cos_pi5() { return Nf::from_ints(3, 0, -1, 0, 2); }
Nf sin_pi5() { return Nf::from_ints(0, 1, 0, 0, 2); }
Nf two_cot_pi5() { return Nf::from_ints(0, 20, 0, -6, 5); }

}  // namespace veech

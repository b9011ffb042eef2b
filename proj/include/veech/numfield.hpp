#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "veech/rational.hpp"

namespace veech {

struct BigCoeffs;

// Enclosure of a real number: |value - mid| <= rad.
struct FloatEnclosure {
  double mid = 0;
  double rad = 0;
};

// Element of F = Q(s), s = 2 sin(pi/5) ~ 1.17557, minimal polynomial
// s^4 - 5 s^2 + 5.
//
// Stored as (c0 + c1 s + c2 s^2 + c3 s^3) / den with den > 0 and
// gcd(c0, c1, c2, c3, den) = 1.  Values that fit in 64-bit words stay there;
// anything larger spills into GMP integers.  The representation is unique in
// both regimes (a value is never big if it fits), so equality and hashing are
// structural.
class Nf {
public:
  Nf() = default;
  Nf(long v) : c_{v, 0, 0, 0} {}
  explicit Nf(const Rational& q);
  explicit Nf(const std::array<Rational, 4>& c);

  static Nf gen();  // s
  static Nf from_ints(long c0, long c1, long c2, long c3, long den = 1);
  // "p/q,p/q,p/q,p/q"; integers without "/q" are accepted too.
  static Nf parse(std::string_view text);

  Rational coeff(int i) const;
  std::array<Rational, 4> coeffs() const { return {coeff(0), coeff(1), coeff(2), coeff(3)}; }

  bool is_zero() const { return !big_ && c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  bool is_big() const { return static_cast<bool>(big_); }
  int sign() const;
  double to_double() const;
  FloatEnclosure enclosure() const;  // cheap double enclosure
  Nf inv() const;  // throws std::domain_error on zero

  std::string str() const;
  std::size_t hash() const;

  friend Nf operator+(const Nf& a, const Nf& b);
  friend Nf operator-(const Nf& a, const Nf& b);
  friend Nf operator*(const Nf& a, const Nf& b);
  friend Nf operator/(const Nf& a, const Nf& b) { return a * b.inv(); }
  Nf operator-() const;
  Nf& operator+=(const Nf& b) { return *this = *this + b; }
  Nf& operator-=(const Nf& b) { return *this = *this - b; }
  Nf& operator*=(const Nf& b) { return *this = *this * b; }

  friend bool operator==(const Nf& a, const Nf& b);
  friend bool operator!=(const Nf& a, const Nf& b) { return !(a == b); }
  friend bool operator<(const Nf& a, const Nf& b) { return cmp(a, b) < 0; }
  friend bool operator>(const Nf& a, const Nf& b) { return cmp(a, b) > 0; }
  friend bool operator<=(const Nf& a, const Nf& b) { return cmp(a, b) <= 0; }
  friend bool operator>=(const Nf& a, const Nf& b) { return cmp(a, b) >= 0; }
  friend int cmp(const Nf& a, const Nf& b);

private:
  friend struct NfAccess;
  std::array<int64_t, 4> c_{0, 0, 0, 0};
  int64_t den_ = 1;
  std::shared_ptr<const BigCoeffs> big_;
};

inline Nf nf_add(const Nf& a, const Nf& b) { return a + b; }
inline Nf nf_mul(const Nf& a, const Nf& b) { return a * b; }
inline Nf nf_inv(const Nf& a) { return a.inv(); }
inline int nf_sign(const Nf& a) { return a.sign(); }
// Double precision caps the attainable width at roughly 2^-50 relative; a
// request for more bits returns the tightest enclosure doubles can hold.
FloatEnclosure nf_to_float(const Nf& a, int precision_bits = 53);

// Frequently used constants.
Nf phi();           // golden ratio, 3 - s^2
Nf cos_pi5();       // (3 - s^2) / 2
Nf sin_pi5();       // s / 2
Nf two_cot_pi5();   // (20 s - 6 s^3) / 5

struct NfHash {
  std::size_t operator()(const Nf& a) const { return a.hash(); }
};

}  // namespace veech

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace lcs {

// Exact integer used for every coefficient and matrix entry. Expression
// templates are off so BigInt behaves like a plain value type.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

inline BigInt abs_val(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline BigInt gcd_val(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

inline BigInt lcm_val(const BigInt& a, const BigInt& b) {
  if (a.is_zero() || b.is_zero()) return BigInt(0);
  return abs_val(a / gcd_val(a, b) * b);
}

// g = s*a + t*b with g = gcd(a, b) >= 0.
struct ExtGcd {
  BigInt g, s, t;
};

inline ExtGcd ext_gcd(BigInt a, BigInt b) {
  BigInt s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (!b.is_zero()) {
    BigInt q = a / b;
    BigInt r = a - q * b;
    a = b;
    b = r;
    BigInt s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    BigInt t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  return {a, s0, t0};
}

// Floor quotient; requires b > 0.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (a % b < 0) --q;
  return q;
}

}  // namespace lcs

#ifndef QLOMMEL_RATIONAL_HPP
#define QLOMMEL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qlommel {

// Exact rational arithmetic. boost::multiprecision keeps the canonical form
// (gcd(|num|, den) = 1, den > 0) on every operation.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return numerator(r); }
inline BigInt rat_den(const Rational& r) { return denominator(r); }

inline Rational rational(long long n, long long d = 1) {
  // The two-argument cpp_rational constructor rejects negative denominators.
  return Rational(BigInt(n)) / Rational(BigInt(d));
}

inline bool is_integer(const Rational& r) { return rat_den(r) == 1; }

inline int sign(const Rational& r) { return r == 0 ? 0 : (r < 0 ? -1 : 1); }

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline Rational pow_rational(const Rational& r, long long e) {
  Rational acc(1), base = r;
  long long n = e < 0 ? -e : e;
  for (; n > 0; n >>= 1) {
    if (n & 1) acc *= base;
    base *= base;
  }
  if (e < 0) return Rational(1) / acc;
  return acc;
}

inline std::string to_string(const Rational& r) { return r.str(); }

// gcd over Q used for polynomial content: gcd of numerators / lcm of denominators,
// always returned positive.
inline Rational rational_content_acc(const Rational& acc, const Rational& v) {
  if (v == 0) return acc;
  if (acc == 0) return abs(v);
  BigInt gn = gcd(rat_num(acc), rat_num(abs(v)));
  BigInt ld = lcm(rat_den(acc), rat_den(v));
  return Rational(gn) / Rational(ld);
}

}  // namespace qlommel

#endif

#ifndef QLOMMEL_QSERIES_HPP
#define QLOMMEL_QSERIES_HPP

#include <initializer_list>
#include <optional>
#include <vector>

#include "series.hpp"

namespace qlommel {

// q-Pochhammer (arg; q^qdir)_n = prod_{i=0..n-1} (1 - arg * q^{i*qdir}).
// qdir = +1 is base q, -1 is base 1/q.
inline Poly qpochhammer(const Poly& arg, int qdir, int n) {
  if (n < 0) throw QlError("negative-pochhammer-length");
  Poly p = Poly::one();
  for (int i = 0; i < n; ++i) p *= Poly::one() - arg * q_power(i, qdir);
  return p;
}

inline Poly qpochhammer_multi(std::initializer_list<Poly> args, int qdir, int n) {
  Poly p = Poly::one();
  for (const Poly& a : args) p *= qpochhammer(a, qdir, n);
  return p;
}

// Pochhammer over RatFunc arguments, needed once parameters are themselves
// rational functions (associated Askey-Wilson data, psi solutions).
inline RatFunc rf_qpochhammer(const RatFunc& arg, int qdir, int n) {
  RatFunc p = RatFunc::one();
  for (int i = 0; i < n; ++i) p *= RatFunc::one() - arg * RatFunc(q_power(i, qdir));
  return p;
}

// Ordinary rising factorial (p)_n = p (p+1) ... (p+n-1).
inline Poly rising_factorial(const Poly& p, int n) {
  Poly r = Poly::one();
  for (int i = 0; i < n; ++i) r *= p + Poly::constant(Rational(i));
  return r;
}

// Gaussian binomial [n k] in base q^qdir, by exact Pochhammer division.
// Out-of-range k vanishes by contract.
inline Poly gauss_binomial(long long n, long long k, int qdir = 1) {
  if (k < 0 || k > n) return Poly::zero();
  Poly num = qpochhammer(q_power(1, qdir), qdir, static_cast<int>(n));
  Poly den = qpochhammer(q_power(1, qdir), qdir, static_cast<int>(k)) *
             qpochhammer(q_power(1, qdir), qdir, static_cast<int>(n - k));
  auto q = num.divide_exact(den);
  if (!q) throw QlError("gauss-binomial-division");
  return *q;
}

struct QPochSpec {
  Poly base_arg;
  int qdir = 1;                  // q or q^{-1}
  std::optional<int> length;     // nullopt marks a symbolic-n family
  Poly instantiate(int n) const { return qpochhammer(base_arg, qdir, length.value_or(n)); }
};

// Truncated basic hypergeometric series r_phi_s(upper; lower; q^qdir, arg),
// where arg = coeff * v^power is a monomial in the series variable. The
// standard [(-1)^n q^C(n,2)]^{1+s-r} factor is included. Coefficients are
// produced by the term-ratio recursion.
inline Series basic_hypergeometric(const std::vector<Poly>& upper, const std::vector<Poly>& lower,
                                   int qdir, const RatFunc& arg_coeff, Var v, int arg_power, int order) {
  if (arg_power <= 0) throw QlError("hypergeometric-argument-power");
  int nterms = order / arg_power + 1;
  for (const Poly& l : lower)
    for (int i = 0; i < nterms - 1; ++i)
      if ((Poly::one() - l * q_power(i, qdir)).is_zero())
        throw err_singular_parameter("lower parameter " + l.str_compact());

  int extra = 1 + static_cast<int>(lower.size()) - static_cast<int>(upper.size());
  std::vector<RatFunc> hyper(nterms);
  hyper[0] = RatFunc::one();
  for (int n = 0; n + 1 < nterms; ++n) {
    RatFunc ratio = RatFunc::one();
    for (const Poly& u : upper) ratio *= RatFunc(Poly::one() - u * q_power(n, qdir));
    RatFunc den = RatFunc(Poly::one() - q_power(n + 1, qdir));
    for (const Poly& l : lower) den *= RatFunc(Poly::one() - l * q_power(n, qdir));
    ratio /= den;
    for (int e = 0; e < extra; ++e) ratio *= RatFunc(-q_power(n, qdir));
    hyper[n + 1] = hyper[n] * ratio;
  }

  Series s(v, order);
  RatFunc ck = RatFunc::one();
  for (int n = 0; n < nterms; ++n) {
    if (n * arg_power <= order) s.set(n * arg_power, hyper[n] * ck);
    ck = ck * arg_coeff;
  }
  return s;
}

// Spec-facing wrapper taking the argument as a monomial Poly in the series
// variable (e.g. -t^2, q*t^2, -q*x).
inline Series basic_hypergeometric_arg(const std::vector<Poly>& upper, const std::vector<Poly>& lower,
                                       int qdir, const Poly& argument, Var v, int order) {
  if (argument.is_zero()) return Series::one(v, order);
  if (!argument.is_monomial()) throw QlError("hypergeometric-argument-not-monomial");
  auto [e, c] = *argument.terms().begin();
  int iv = static_cast<int>(v);
  std::int64_t d = e[iv];
  if (d <= 0) throw QlError("hypergeometric-argument-power");
  Exponents rest = e;
  rest[iv] = 0;
  return basic_hypergeometric(upper, lower, qdir, RatFunc(Poly::monomial(c, rest)), v,
                              static_cast<int>(d), order);
}

enum class BesselKind { classical, first_q, third_q };

// Normalized Bessel-type series: the hypergeometric factor only, in the
// squared variable (one slot of `v` per power of z^2). Prefactors like
// (z/2)^nu and Pochhammer infinite products are omitted; identity verifiers
// supply the explicit monomial ratios they induce.
//   classical J_{nu+shift}:  sum (-1/4)^n / (n! (nu+shift+1)_n) v^n
//   first_q   J^{(1)}_{nu+shift}: sum (-1/4)^n / ((q;q)_n (c q^{shift+1};q)_n) v^n
//   third_q   J^{(3)}_{nu+shift}: sum (-1)^n q^{C(n,2)+n} / ((q;q)_n (c q^{shift+1};q)_n) v^n
inline Series bessel_like_series(BesselKind which, int shift, Var v, int order, int qdir = 1) {
  Series s(v, order);
  for (int n = 0; n <= order; ++n) {
    if (which == BesselKind::classical) {
      Rational fact(1);
      for (int i = 1; i <= n; ++i) fact *= i;
      RatFunc::FactorMap den;
      for (int i = 0; i < n; ++i) den[var_poly(Var::nu) + Poly::constant(Rational(shift + 1 + i))] += 1;
      Rational c = pow_rational(rational(-1, 4), n) / fact;
      s.set(n, RatFunc(Poly::constant(c), std::move(den)));
    } else {
      Poly den = qpochhammer(q_power(1, qdir), qdir, n) *
                 qpochhammer(var_poly(Var::c) * q_power(shift + 1, qdir), qdir, n);
      Poly num;
      if (which == BesselKind::first_q)
        num = Poly::constant(pow_rational(rational(-1, 4), n));
      else
        num = Poly::constant(pow_rational(rational(-1), n)) * q_power(binom2(n) + n, qdir);
      s.set(n, RatFunc(num, {{den, 1}}));
    }
  }
  return s;
}

// Very-well-poised 10W9 as its defining finite sum, truncated at smax
// (callers pass the termination index forced by a q^{-N} parameter).
inline RatFunc very_well_poised_10W9(const RatFunc& a, const std::array<RatFunc, 7>& b, int qdir,
                                     const RatFunc& z, int smax) {
  RatFunc total = RatFunc::zero();
  RatFunc qa = RatFunc(q_power(1, qdir));
  for (int s = 0; s <= smax; ++s) {
    RatFunc term = (RatFunc::one() - a * RatFunc(q_power(2 * s, qdir))) / (RatFunc::one() - a);
    term *= rf_qpochhammer(a, qdir, s);
    for (const RatFunc& bj : b) term *= rf_qpochhammer(bj, qdir, s);
    RatFunc den = rf_qpochhammer(qa, qdir, s);
    for (const RatFunc& bj : b) den *= rf_qpochhammer(a * qa / bj, qdir, s);
    term /= den;
    term *= z.pow(s);
    total += term;
  }
  return total;
}

}  // namespace qlommel

#endif

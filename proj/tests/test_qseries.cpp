#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qlommel/qseries.hpp>

using namespace qlommel;

namespace {
Poly Q() { return var_poly(Var::q); }
Poly C() { return var_poly(Var::c); }
Poly one() { return Poly::one(); }

// Direct Pochhammer-quotient evaluation of a hypergeometric coefficient,
// independent of the term-ratio recursion in the implementation.
RatFunc phi_coeff_direct(const std::vector<Poly>& upper, const std::vector<Poly>& lower, int qdir, int n) {
  RatFunc num = RatFunc::one();
  for (const Poly& u : upper) num *= RatFunc(qpochhammer(u, qdir, n));
  RatFunc den = RatFunc(qpochhammer(q_power(1, qdir), qdir, n));
  for (const Poly& l : lower) den *= RatFunc(qpochhammer(l, qdir, n));
  int extra = 1 + static_cast<int>(lower.size()) - static_cast<int>(upper.size());
  RatFunc fac = RatFunc::one();
  for (int e = 0; e < extra; ++e)
    fac *= RatFunc(Poly::constant(pow_rational(Rational(-1), n)) * q_power(binom2(n), qdir));
  return num * fac / den;
}
}  // namespace

TEST_CASE("qpochhammer basics") {
  CHECK(qpochhammer(C(), 1, 0) == one());
  // (c;q)_2 = 1 - c - cq + c^2 q
  CHECK(qpochhammer(C(), 1, 2) == one() - C() - C() * Q() + C().pow(2) * Q());
  // (q^{-1}; q^{-1})_1 = 1 - q^{-1}
  CHECK(qpochhammer(q_power(1, -1), -1, 1) == one() - Poly::variable(Var::q, -1));
}

TEST_CASE("qpochhammer splitting identity") {
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n + m <= 6; ++n) {
      Poly lhs = qpochhammer(C(), 1, m + n);
      Poly rhs = qpochhammer(C(), 1, m) * qpochhammer(C() * q_power(m), 1, n);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("gauss binomial values and contracts") {
  CHECK(gauss_binomial(5, 0) == one());
  CHECK(gauss_binomial(2, 1) == one() + Q());
  CHECK(gauss_binomial(4, 2) == one() + Q() + Poly::constant(Rational(2)) * Q().pow(2) + Q().pow(3) + Q().pow(4));
  CHECK(gauss_binomial(3, -1).is_zero());
  CHECK(gauss_binomial(3, 4).is_zero());
}

TEST_CASE("gauss binomial symmetry and Pascal recurrence") {
  for (int n = 1; n <= 10; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(gauss_binomial(n, k) == gauss_binomial(n, n - k));
      Poly pascal = gauss_binomial(n - 1, k - 1) + q_power(k) * gauss_binomial(n - 1, k);
      CHECK(gauss_binomial(n, k) == pascal);
    }
}

TEST_CASE("base q^{-1} binomial relation") {
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      Poly lhs = gauss_binomial(n, k, -1);
      Poly rhs = Poly::variable(Var::q, -k * (n - k)) * gauss_binomial(n, k, 1);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("basic hypergeometric: term values and cross-check") {
  // 2phi1(0,0;c;q,z): coefficient of z^1 is 1/((1-q)(1-c))
  Series s = basic_hypergeometric({Poly::zero(), Poly::zero()}, {C()}, 1, RatFunc::one(), Var::t, 1, 3);
  CHECK(s[1] == RatFunc::fraction(one(), (one() - Q()) * (one() - C())));
  CHECK(s[0] == RatFunc::one());

  // zero argument -> constant series 1
  Series z = basic_hypergeometric_arg({Poly::zero(), Poly::zero()}, {C()}, 1, Poly::zero(), Var::t, 4);
  CHECK(z[0] == RatFunc::one());
  for (int k = 1; k <= 4; ++k) CHECK(z[k].is_zero());

  // term-ratio recursion vs direct Pochhammer quotients, n <= 6
  std::vector<Poly> up = {var_poly(Var::a), var_poly(Var::b)}, lo = {C()};
  Series f = basic_hypergeometric(up, lo, 1, RatFunc::one(), Var::t, 1, 6);
  for (int n = 0; n <= 6; ++n) CHECK(f[n] == phi_coeff_direct(up, lo, 1, n));

  std::vector<Poly> up1 = {Poly::zero()}, lo1 = {C()};
  Series g = basic_hypergeometric(up1, lo1, 1, RatFunc::one(), Var::t, 1, 6);
  for (int n = 0; n <= 6; ++n) CHECK(g[n] == phi_coeff_direct(up1, lo1, 1, n));

  // singular lower parameter: (q^{-2};q)_n hits zero within range
  CHECK_THROWS_WITH_AS(basic_hypergeometric({Poly::zero()}, {Poly::variable(Var::q, -2)}, 1,
                                            RatFunc::one(), Var::t, 1, 5),
                       doctest::Contains("singular-parameter"), QlError);
}

TEST_CASE("argument monomials scale and reindex") {
  // 1phi1(0;c;q,q t^2): coefficient of t^2 is -q/((1-q)(1-c))
  Series s = basic_hypergeometric_arg({Poly::zero()}, {C()}, 1, Q() * Poly::variable(Var::t, 2), Var::t, 4);
  CHECK(s[1].is_zero());
  CHECK(s[2] == -RatFunc(Q()) / RatFunc((one() - Q()) * (one() - C())));
}

TEST_CASE("bessel-like series") {
  // classical, N=1: 1 - (z^2/4)/(nu+1)
  Series cl = bessel_like_series(BesselKind::classical, 0, Var::t, 1);
  CHECK(cl[0] == RatFunc::one());
  CHECK(cl[1] == -RatFunc(rational(1, 4)) / RatFunc(var_poly(Var::nu) + one()));

  // third_q factor at order 0 is 1
  Series tq = bessel_like_series(BesselKind::third_q, 0, Var::t, 0);
  CHECK(tq[0] == RatFunc::one());

  // first_q matches its defining 2phi1(0,0;cq;q,-z^2/4)
  Series fq = bessel_like_series(BesselKind::first_q, 0, Var::t, 5);
  Series def = basic_hypergeometric({Poly::zero(), Poly::zero()}, {C() * Q()}, 1,
                                    RatFunc(rational(-1, 4)), Var::t, 1, 5);
  CHECK(fq.first_difference(def) == -1);

  // third_q matches 1phi1(0;cq;q,q z^2)
  Series tq5 = bessel_like_series(BesselKind::third_q, 0, Var::t, 5);
  Series def3 = basic_hypergeometric({Poly::zero()}, {C() * Q()}, 1, RatFunc(Q()), Var::t, 1, 5);
  CHECK(tq5.first_difference(def3) == -1);

  // classical ratio reproduces 1/(1+nu) at first order with the omitted
  // prefactor ratio (z/2)/(nu+1) applied: [(z/2) F_{nu+1}/F_nu / (nu+1)]
  Series num = bessel_like_series(BesselKind::classical, 1, Var::t, 2);
  Series den = bessel_like_series(BesselKind::classical, 0, Var::t, 2);
  Series ratio = num / den;
  RatFunc coeff0 = ratio[0] / RatFunc(var_poly(Var::nu) + one());
  CHECK(coeff0 == RatFunc::fraction(one(), var_poly(Var::nu) + one()));
}

TEST_CASE("QPochSpec instantiation") {
  QPochSpec spec{C(), 1, std::nullopt};
  CHECK(spec.instantiate(2) == qpochhammer(C(), 1, 2));
  QPochSpec fixed{C(), 1, 3};
  CHECK(fixed.instantiate(7) == qpochhammer(C(), 1, 3));
}

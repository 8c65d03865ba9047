#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qlommel/lommel.hpp>

#include <iostream>

using namespace qlommel;

namespace {
Poly Q() { return var_poly(Var::q); }
Poly C() { return var_poly(Var::c); }
Poly one() { return Poly::one(); }
RatFunc X() { return RatFunc::variable(Var::x); }
}  // namespace

TEST_CASE("family polynomial base cases") {
  for (FamilyId f : {FamilyId::lommel_monic, FamilyId::q_lommel_classical, FamilyId::q_lommel_evenodd,
                     FamilyId::q_lommel_R1, FamilyId::r3_rescaled, FamilyId::rr_hat,
                     FamilyId::lommel_classical_R, FamilyId::R1_first_qBessel, FamilyId::R3_laurent})
    CHECK(family_polynomial(f, 0) == RatFunc::one());

  // r_1 = x - 1/(1-c)
  RatFunc r1 = family_polynomial(FamilyId::q_lommel_R1, 1);
  CHECK(r1 == X() - RatFunc::fraction(one(), one() - C()));

  // p_2 = x^2 - lambda_1, lambda_1 = 1/((1-c)(1-cq))
  RatFunc p2 = family_polynomial(FamilyId::q_lommel_evenodd, 2);
  CHECK(p2 == X() * X() - RatFunc::fraction(one(), (one() - C()) * (one() - C() * Q())));
}

TEST_CASE("degree, monic-ness and parity for all x-families") {
  for (FamilyId f : {FamilyId::lommel_monic, FamilyId::q_lommel_classical, FamilyId::q_lommel_evenodd}) {
    auto seq = family_sequence(f, 8);
    for (int n = 1; n <= 8; ++n) {
      CHECK(seq[n].num().degree_in(Var::x) == n);
      CHECK(coefficient_in_x(seq[n], n) == RatFunc::one());
      // parity: only exponents congruent to n mod 2 appear
      for (const auto& [e, coef] : seq[n].num().terms())
        CHECK((e[static_cast<int>(Var::x)] - n) % 2 == 0);
    }
  }
  for (FamilyId f : {FamilyId::q_lommel_R1, FamilyId::r3_rescaled, FamilyId::rr_hat}) {
    auto seq = family_sequence(f, 8);
    for (int n = 1; n <= 8; ++n) {
      CHECK(seq[n].num().degree_in(Var::x) == n);
      CHECK(coefficient_in_x(seq[n], n) == RatFunc::one());
    }
  }
}

TEST_CASE("explicit formula: classical q-Lommel (n <= 10)") {
  auto seq = family_sequence(FamilyId::q_lommel_classical, 10);
  for (int n = 0; n <= 10; ++n) CHECK(explicit_classical(n) == seq[n]);
}

TEST_CASE("explicit formula: type R_I (n <= 8)") {
  auto seq = family_sequence(FamilyId::q_lommel_R1, 8);
  for (int n = 0; n <= 8; ++n) CHECK(explicit_R1(n) == seq[n]);
}

TEST_CASE("explicit formula: even even-odd (n <= 6)") {
  auto seq = family_sequence(FamilyId::q_lommel_evenodd, 12);
  for (int n = 0; n <= 6; ++n) CHECK(explicit_evenodd_even(n) == seq[2 * n]);
}

TEST_CASE("explicit formula: odd even-odd, printed vs matching variant (n <= 5)") {
  auto seq = family_sequence(FamilyId::q_lommel_evenodd, 11);
  // the printed form fails already at n = 1
  CHECK(!(explicit_evenodd_odd(1, Explicit2Variant::printed()) == seq[3]));
  // the c^{-s} variant (printed denominators, printed q-exponent) matches
  for (int n = 0; n <= 5; ++n) CHECK(explicit_evenodd_odd(n, Explicit2Variant::matching()) == seq[2 * n + 1]);
  // no other variant in the candidate set matches through n = 2
  for (bool dcq : {false, true})
    for (int cp : {+1, -1})
      for (int s2 : {-1, +1}) {
        Explicit2Variant v{dcq, cp, s2};
        if (v.name() == Explicit2Variant::matching().name()) continue;
        bool all = true;
        for (int n = 0; n <= 2 && all; ++n) all = explicit_evenodd_odd(n, v) == seq[2 * n + 1];
        CHECK(!all);
      }
}

TEST_CASE("explicit formula: even-odd pair (n <= 6)") {
  auto seq = family_sequence(FamilyId::q_lommel_evenodd, 13);
  for (int n = 0; n <= 6; ++n) {
    CHECK(explicit_evenodd_pair(n, false) == seq[2 * n]);
    CHECK(explicit_evenodd_pair(n, true) == seq[2 * n + 1]);
  }
}

TEST_CASE("generating function coefficients (n <= 8)") {
  auto g = generating_function_coeffs(8);
  auto r = family_sequence(FamilyId::q_lommel_R1, 8);
  CHECK(g[0] == RatFunc::one());
  for (int n = 0; n <= 8; ++n) {
    RatFunc expected = RatFunc(qpochhammer(Poly::variable(Var::c, -1), -1, n)) * r[n];
    CHECK(g[n] == expected);
  }
}

TEST_CASE("r_n(x;c,q) = r3_n(cx;c,q)/c^n") {
  auto r = family_sequence(FamilyId::q_lommel_R1, 6);
  auto r3 = family_sequence(FamilyId::r3_rescaled, 6);
  std::map<Var, Poly> cx{{Var::x, C() * var_poly(Var::x)}};
  for (int n = 0; n <= 6; ++n) {
    RatFunc rhs = r3[n].substituted(cx) / RatFunc(var_poly(Var::c, n));
    CHECK(r[n] == rhs);
  }
}

TEST_CASE("h_n vs R^(1): recurrence-level identity after clearing denominators") {
  int N = 8;
  auto h = family_sequence(FamilyId::q_lommel_classical, N + 1);
  auto R = R1_first_qBessel_seq(N + 1);
  // R_n(2/x) = (c;q)_n h_n(x), checked directly ...
  std::map<Var, Poly> twoOverX{{Var::x, Poly::monomial(Rational(2), [] {
                                  Exponents e = exp_zero();
                                  e[static_cast<int>(Var::x)] = -1;
                                  return e;
                                }())}};
  for (int n = 0; n <= N; ++n) {
    RatFunc lhs = R[n].substituted(twoOverX);
    RatFunc rhs = RatFunc(qpochhammer(C(), 1, n)) * h[n];
    CHECK(lhs == rhs);
  }
  // ... and as the cleared recurrence x(1-cq^n) S_n = S_{n+1} + c q^{n-1} S_{n-1}
  // with S_n := (c;q)_n h_n.
  for (int n = 1; n <= N; ++n) {
    RatFunc Sm = RatFunc(qpochhammer(C(), 1, n - 1)) * h[n - 1];
    RatFunc Sn = RatFunc(qpochhammer(C(), 1, n)) * h[n];
    RatFunc Sp = RatFunc(qpochhammer(C(), 1, n + 1)) * h[n + 1];
    RatFunc lhs = X() * (RatFunc::one() - RatFunc(cq_pow(n))) * Sn;
    RatFunc rhs = Sp + RatFunc(cq_pow(n - 1)) * Sm;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("eq r=R in the variable s: s^n R3(1/s; base 1/q) = (c^{-1};q^{-1})_n r3_n(s^2)") {
  auto r3 = family_sequence(FamilyId::r3_rescaled, 5);
  auto R3inv = R3_laurent_seq(5, -1);
  std::map<Var, Poly> sinv{{Var::s, Poly::variable(Var::s, -1)}};
  std::map<Var, Poly> xs2{{Var::x, Poly::variable(Var::s, 2)}};
  for (int n = 0; n <= 5; ++n) {
    RatFunc lhs = RatFunc(Poly::variable(Var::s, n)) * R3inv[n].substituted(sinv);
    RatFunc rhs = RatFunc(qpochhammer(Poly::variable(Var::c, -1), -1, n)) * r3[n].substituted(xs2);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("connection coefficient relations and round trip") {
  Report rep = connection_expand(ConnectionDirection::r_in_p, 4);
  for (const auto& c : rep.cases) CHECK_MESSAGE(c.status == "pass", c.label, " ", c.note);
  Report rep2 = connection_expand(ConnectionDirection::p_in_r, 4);
  for (const auto& c : rep2.cases) CHECK_MESSAGE(c.status == "pass", c.label, " ", c.note);

  // n=1 spot value: r_1(x^2) = p_2(x) + coeff * p_0 with coeff = cq/((1-c)(1-cq))
  RatFunc coeff = connection_coeff_r_in_p(1, 1);
  CHECK(coeff == RatFunc(C() * Q()) / RatFunc((one() - C()) * (one() - C() * Q())));
}

TEST_CASE("associated Askey-Wilson basics") {
  AWBindings w{RatFunc::variable(Var::a), RatFunc::variable(Var::b), RatFunc::variable(Var::c),
               RatFunc(rational(1, 3)), RatFunc::variable(Var::alpha), 1};
  auto p = assoc_aw_polys(w, 4);
  CHECK(p[0] == RatFunc::one());
  CHECK(p[1] == X() - aw_b(w, 0));
  for (int n = 1; n <= 4; ++n) CHECK(coefficient_in_x(p[n], n) == RatFunc::one());
}

TEST_CASE("psi solutions satisfy the recurrence at random rational bindings") {
  // 5 random rational bindings per epsilon; residual of the three-term
  // relation at n = 1, 2 is exactly zero.
  std::vector<std::array<Rational, 6>> bindings = {
      {rational(2, 3), rational(3, 5), rational(5, 7), rational(7, 11), rational(9, 2), rational(4, 9)},
      {rational(1, 2), rational(2, 7), rational(3, 11), rational(5, 13), rational(11, 3), rational(5, 8)},
      {rational(3, 4), rational(4, 7), rational(2, 9), rational(6, 5), rational(13, 2), rational(3, 7)},
      {rational(2, 5), rational(5, 9), rational(7, 12), rational(3, 8), rational(15, 4), rational(7, 10)},
      {rational(5, 6), rational(3, 13), rational(4, 11), rational(2, 11), rational(17, 3), rational(8, 13)},
  };
  for (int eps : {1, 2}) {
    for (const auto& bv : bindings) {
      // bind q as well (exact rational), z free parameter
      std::array<Rational, 6> v = bv;
      AWBindings w{RatFunc(v[0]), RatFunc(v[1]), RatFunc(v[2]), RatFunc(v[3]), RatFunc(v[4]), 1};
      RatFunc z(v[5]);
      // replace symbolic q by a rational via substitution s rules: bind q = 3/5
      std::map<Var, Poly> qbind{{Var::q, Poly::constant(rational(3, 5))}};
      RatFunc x = (z + z.inverse()) * RatFunc(rational(1, 2));
      std::vector<RatFunc> psi(4);
      for (int n = 0; n <= 3; ++n) psi[n] = psi_solution(w, z, n, eps).substituted(qbind);
      CHECK(psi[0] == RatFunc::one());
      for (int n = 1; n <= 2; ++n) {
        RatFunc bn = aw_b(w, n).substituted(qbind);
        RatFunc ln = aw_lambda(w, n).substituted(qbind);
        RatFunc residual = psi[n + 1] - (x - bn) * psi[n] + ln * psi[n - 1];
        CHECK(residual.is_zero());
      }
    }
  }
}

TEST_CASE("psi^{(alpha,2)} limit at n=1 reproduces t_1") {
  // Section-4 bindings (a,b,c,d) = (alpha/cq, 1/alpha, 1/alpha, 1/alpha) with
  // base 1/q. Writing psi_1 = kappa * x - gamma in x = (z+1/z)/2:
  //   lim kappa = 1 and lim (2q/alpha^2) gamma = lambda_1,
  // which is the statement that the rescaled limit is x - 1/((1-c)(1-cq)).
  RatFunc al = RatFunc::variable(Var::alpha);
  RatFunc alinv = RatFunc(Poly::variable(Var::alpha, -1));
  AWBindings w{RatFunc(var_poly(Var::alpha) * Poly::variable(Var::c, -1) * q_power(-1)),
               alinv, alinv, alinv, al, -1};
  RatFunc z = RatFunc::variable(Var::s);  // s stands in for the AW z-coordinate
  RatFunc psi1 = psi_solution(w, z, 1, 2);
  // psi1 is Laurent of degree 1 in s: kappa/2 * (s + 1/s) - gamma
  RatFunc kappa = coefficient_in_x(psi1, 1, Var::s) * RatFunc(Rational(2));
  RatFunc kappa2 = coefficient_in_x(psi1, -1, Var::s) * RatFunc(Rational(2));
  CHECK(kappa == kappa2);
  RatFunc gamma = -coefficient_in_x(psi1, 0, Var::s);
  CHECK(limit_at_alpha_infinity(kappa) == RatFunc::one());
  RatFunc scaled_gamma = RatFunc(Rational(2)) * RatFunc(q_power(1)) * alinv * alinv * gamma;
  CHECK(limit_at_alpha_infinity(scaled_gamma) ==
        RatFunc::fraction(one(), (one() - C()) * (one() - C() * Q())));
}

TEST_CASE("aw_limit_check: all four variants at n <= 3") {
  for (AWLimitWhich which : {AWLimitWhich::evenodd_even, AWLimitWhich::evenodd_odd,
                             AWLimitWhich::classical_even, AWLimitWhich::classical_odd}) {
    Report rep = aw_limit_check(which, 3);
    CHECK_MESSAGE(rep.status() != "fail", aw_limit_name(which), " ", rep.witness);
    for (const auto& c : rep.cases)
      CHECK_MESSAGE(c.status != "fail", aw_limit_name(which), " ", c.label, " ", c.note);
  }
  // the even even-odd variant matches the paper exactly (no flag)
  CHECK(aw_limit_check(AWLimitWhich::evenodd_even, 2).status() == "pass");
}

TEST_CASE("paper values for A_n(alpha, 1/q) under the section-4 binding") {
  RatFunc al = RatFunc::variable(Var::alpha);
  RatFunc alinv = RatFunc(Poly::variable(Var::alpha, -1));
  AWBindings w{RatFunc(var_poly(Var::alpha) * Poly::variable(Var::c, -1) * q_power(-1)),
               alinv, alinv, alinv, al, -1};
  // A_n = alpha (1 - c q^{n+1}/alpha)^3 (1 - alpha c q^n) / (c q (1-cq^{2n})(1-cq^{2n+1}))
  for (int n = 0; n <= 2; ++n) {
    RatFunc expect =
        al * (RatFunc::one() - RatFunc(C() * q_power(n + 1)) * alinv).pow(3) *
        (RatFunc::one() - al * RatFunc(C() * q_power(n))) /
        (RatFunc(C() * Q()) * (RatFunc::one() - RatFunc(cq_pow(2 * n))) *
         (RatFunc::one() - RatFunc(cq_pow(2 * n + 1))));
    CHECK(aw_A(w, n) == expect);
  }
}

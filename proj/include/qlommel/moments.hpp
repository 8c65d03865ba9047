#ifndef QLOMMEL_MOMENTS_HPP
#define QLOMMEL_MOMENTS_HPP

#include <random>

#include "lommel.hpp"

namespace qlommel {

// ---------------------------------------------------------------------------
// Continued fractions. One bottom-up evaluation path serves the Jacobi,
// type-R_I, and general-K shapes; the depth-stability invariant guards
// truncation sufficiency.
// ---------------------------------------------------------------------------

// Entry of a general K-fraction: a polynomial of degree <= 2 in the series
// variable with RatFunc coefficients.
struct CFEntry {
  RatFunc c0, c1, c2;
  RatFunc value_poly(Var v) const {
    return c0 + c1 * RatFunc::variable(v) + c2 * RatFunc(Poly::variable(v, 2));
  }
  Series to_series(Var v, int order) const {
    Series s(v, order);
    s.set(0, c0);
    if (order >= 1) s.set(1, c1);
    if (order >= 2) s.set(2, c2);
    return s;
  }
  static CFEntry constant(const RatFunc& r) { return {r, RatFunc::zero(), RatFunc::zero()}; }
  static CFEntry linear(const RatFunc& a0, const RatFunc& a1) { return {a0, a1, RatFunc::zero()}; }
};

struct CFSpec {
  enum class Kind { jacobi, type_r1, general_K } kind;
  // jacobi: 1/(1 - b0 t - lam1 t^2/(1 - b1 t - ...));  type_r1 replaces
  // lam_k t^2 by a_k t + lam_k t^2.  Tables are indexed as in the recurrences
  // (lam[0], a[0] are placeholders).
  std::vector<RatFunc> b, a, lam;
  // general_K: K_{i=0}^{depth-1} (num[i]/den[i]).
  std::vector<CFEntry> Knum, Kden;
  int depth = 0;

  static CFSpec jacobi(std::vector<RatFunc> bs, std::vector<RatFunc> lams, int depth) {
    CFSpec s;
    s.kind = Kind::jacobi;
    s.b = std::move(bs);
    s.lam = std::move(lams);
    s.depth = depth;
    return s;
  }
  static CFSpec type_r1(std::vector<RatFunc> bs, std::vector<RatFunc> as, std::vector<RatFunc> lams,
                        int depth) {
    CFSpec s;
    s.kind = Kind::type_r1;
    s.b = std::move(bs);
    s.a = std::move(as);
    s.lam = std::move(lams);
    s.depth = depth;
    return s;
  }
  static CFSpec general_K(std::vector<CFEntry> num, std::vector<CFEntry> den) {
    CFSpec s;
    s.kind = Kind::general_K;
    s.depth = static_cast<int>(num.size());
    s.Knum = std::move(num);
    s.Kden = std::move(den);
    return s;
  }

  RatFunc tb(int k) const { return k < static_cast<int>(b.size()) ? b[k] : RatFunc::zero(); }
  RatFunc ta(int k) const { return k < static_cast<int>(a.size()) ? a[k] : RatFunc::zero(); }
  RatFunc tlam(int k) const { return k < static_cast<int>(lam.size()) ? lam[k] : RatFunc::zero(); }
};

struct MomentTable {
  std::vector<RatFunc> values;  // index 0..N
  std::string source;
  const RatFunc& operator[](int k) const { return values.at(k); }
  int max_index() const { return static_cast<int>(values.size()) - 1; }
};

// Truncated moment generating function of a Jacobi / type-R_I fraction, as a
// Series in `v`; coefficients are the moments.
inline Series cf_series(const CFSpec& spec, Var v, int order) {
  if (spec.kind == CFSpec::Kind::general_K) throw QlError("cf-series-kind");
  if (spec.depth < order + 1) throw err_depth_too_small();
  Series tail = Series::one(v, order);  // value of the fraction below the last level
  for (int k = spec.depth - 1; k >= 0; --k) {
    Series den = Series::one(v, order);
    Series bt(v, order);
    if (order >= 1) bt.set(1, spec.tb(k));
    den = den - bt;
    if (k + 1 < spec.depth) {
      Series num(v, order);
      if (order >= 1) num.set(1, spec.ta(k + 1));
      if (order >= 2) num.set(2, spec.tlam(k + 1));
      den = den - num * tail;
    }
    tail = Series::one(v, order) / den;
  }
  return tail;
}

inline MomentTable moments_from_cf(const CFSpec& spec, Var v, int order) {
  Series s = cf_series(spec, v, order);
  MomentTable t;
  t.values = s.coeffs();
  t.source = spec.kind == CFSpec::Kind::jacobi ? "jacobi" : "type_r1";
  return t;
}

// Stieltjes shape 1/(1 - lam_1 v/(1 - lam_2 v/(...))), entries linear in v
// (the z-form both sides of the fraction equalities are stated in).
inline Series s_fraction_series(const std::vector<RatFunc>& lams, Var v, int order) {
  int depth = static_cast<int>(lams.size()) - 1;
  if (depth < order + 1) throw err_depth_too_small();
  Series tail = Series::one(v, order);
  for (int k = depth; k >= 1; --k) {
    Series lz(v, order);
    if (order >= 1) lz.set(1, lams[k]);
    tail = Series::one(v, order) / (Series::one(v, order) - lz * tail);
  }
  return tail;
}

// Finite K-fraction K_{i=0}^m (num_i/den_i), exact bottom-up evaluation.
inline RatFunc finite_K(const CFSpec& spec, int m, Var v = Var::t) {
  if (spec.kind != CFSpec::Kind::general_K) throw QlError("finite-K-kind");
  if (m < 0 || m >= spec.depth) throw QlError("finite-K-depth");
  RatFunc value = RatFunc::zero();
  for (int i = m; i >= 0; --i) {
    RatFunc den = spec.Kden[i].value_poly(v) + value;
    if (den.is_zero()) throw err_singular_fraction_level(i);
    value = spec.Knum[i].value_poly(v) / den;
  }
  return value;
}

// The equivalence transform: K(a_i/b_i) = (1/c_{-1}) K(a_i c_{i-1} c_i / b_i c_i).
// `c` is indexed from -1, i.e. c[0] is c_{-1}.
struct KKTransformed {
  CFSpec spec;
  RatFunc prefactor;  // 1/c_{-1}
};

inline KKTransformed kk_transform(const CFSpec& gk, const std::vector<RatFunc>& c) {
  if (gk.kind != CFSpec::Kind::general_K) throw QlError("kk-transform-kind");
  if (static_cast<int>(c.size()) < gk.depth + 1) throw QlError("kk-transform-table");
  std::vector<CFEntry> num, den;
  for (int i = 0; i < gk.depth; ++i) {
    RatFunc f = c[i] * c[i + 1];  // c_{i-1} c_i
    num.push_back({gk.Knum[i].c0 * f, gk.Knum[i].c1 * f, gk.Knum[i].c2 * f});
    RatFunc g = c[i + 1];
    den.push_back({gk.Kden[i].c0 * g, gk.Kden[i].c1 * g, gk.Kden[i].c2 * g});
  }
  return {CFSpec::general_K(std::move(num), std::move(den)), c[0].inverse()};
}

// Series expansion of a general K-fraction (for comparing against moment
// series); requires each level's denominator to have invertible constant term.
inline Series finite_K_series(const CFSpec& spec, Var v, int order) {
  if (spec.kind != CFSpec::Kind::general_K) throw QlError("finite-K-kind");
  Series value = Series::zero(v, order);
  for (int i = spec.depth - 1; i >= 0; --i) {
    Series den = spec.Kden[i].to_series(v, order) + value;
    if (den[0].is_zero()) throw err_singular_fraction_level(i);
    value = spec.Knum[i].to_series(v, order) / den;
  }
  return value;
}

// ---------------------------------------------------------------------------
// Hankel determinants by exact Gaussian elimination over the rational
// function field.
// ---------------------------------------------------------------------------

inline RatFunc determinant(std::vector<std::vector<RatFunc>> m) {
  int n = static_cast<int>(m.size());
  RatFunc det = RatFunc::one();
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return RatFunc::zero();
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    RatFunc inv = m[col][col].inverse();
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      RatFunc f = m[r][col] * inv;
      for (int cc = col; cc < n; ++cc) m[r][cc] -= f * m[col][cc];
    }
  }
  return det;
}

inline RatFunc hankel_determinant(const MomentTable& mu, int n, int shift) {
  if (mu.max_index() < 2 * n + shift) throw QlError("hankel-needs-more-moments");
  std::vector<std::vector<RatFunc>> m(n + 1, std::vector<RatFunc>(n + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) m[i][j] = mu[i + j + shift];
  return determinant(std::move(m));
}

// ---------------------------------------------------------------------------
// Moment functionals of the three q-Lommel families.
// ---------------------------------------------------------------------------

enum class Functional { L_h, L_p, L_r };

inline CFSpec functional_cf(Functional f, int depth) {
  std::vector<RatFunc> bs, as, lams(depth + 1, RatFunc::zero());
  switch (f) {
    case Functional::L_h:
      for (int k = 1; k <= depth; ++k) lams[k] = lambda_classical(k);
      return CFSpec::jacobi({}, std::move(lams), depth);
    case Functional::L_p:
      for (int k = 1; k <= depth; ++k) lams[k] = lambda_evenodd(k);
      return CFSpec::jacobi({}, std::move(lams), depth);
    case Functional::L_r:
      bs.assign(depth + 1, RatFunc::zero());
      as.assign(depth + 1, RatFunc::zero());
      for (int k = 0; k <= depth; ++k) bs[k] = b_R1(k);
      for (int k = 1; k <= depth; ++k) as[k] = a_R1(k);
      return CFSpec::type_r1(std::move(bs), std::move(as), {}, depth);
  }
  throw QlError("functional");
}

inline MomentTable functional_moments(Functional f, int order) {
  return moments_from_cf(functional_cf(f, order + 1), Var::t, order);
}

// Linear extension of the moments to a polynomial in x (denominator free of x).
inline RatFunc functional_apply(Functional f, const RatFunc& poly) {
  std::int64_t deg = poly.num().degree_in(Var::x);
  MomentTable mu = functional_moments(f, static_cast<int>(deg));
  RatFunc acc = RatFunc::zero();
  for (std::int64_t k = 0; k <= deg; ++k) {
    RatFunc ck = coefficient_in_x(poly, k);
    if (!ck.is_zero()) acc += ck * mu[static_cast<int>(k)];
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Identity verifiers (section-5 catalog). Each builds both sides with generic
// symbolic parameters and compares coefficient-wise; failures carry the first
// failing order and a witness.
// ---------------------------------------------------------------------------

inline void compare_series(Report& rep, const Series& lhs, const Series& rhs, const std::string& label) {
  int d = lhs.first_difference(rhs);
  if (d < 0) {
    rep.add_pass(label);
  } else {
    rep.add_fail(label + " order " + std::to_string(d),
                 lhs[d].str() + " != " + rhs[d].str(), d);
  }
}

// thm:firstmom -- 2phi1(0,0;cq;q,-t^2)/2phi1(0,0;c;q,-t^2) vs the classical
// q-Lommel Jacobi fraction.
inline Report verify_firstmom(int order) {
  Report rep;
  rep.id = "thm:firstmom";
  Poly c = var_poly(Var::c);
  Poly arg = -Poly::variable(Var::t, 2);
  Series num = basic_hypergeometric_arg({Poly::zero(), Poly::zero()}, {c * q_power(1)}, 1, arg, Var::t, order);
  Series den = basic_hypergeometric_arg({Poly::zero(), Poly::zero()}, {c}, 1, arg, Var::t, order);
  Series lhs = num / den;
  Series rhs = cf_series(functional_cf(Functional::L_h, order + 1), Var::t, order);
  compare_series(rep, lhs, rhs, "order<=" + std::to_string(order));
  return rep;
}

// thm:secondmom -- 1phi1(0;cq;q,qt^2)/1phi1(0;c;q,t^2) vs the even-odd Jacobi
// fraction. The printed arguments (qt^2 against t^2) are used verbatim; a
// failure would be reported with the first failing order, not corrected.
inline Report verify_secondmom(int order) {
  Report rep;
  rep.id = "thm:secondmom";
  Poly c = var_poly(Var::c);
  Series num = basic_hypergeometric_arg({Poly::zero()}, {c * q_power(1)}, 1,
                                        q_power(1) * Poly::variable(Var::t, 2), Var::t, order);
  Series den = basic_hypergeometric_arg({Poly::zero()}, {c}, 1, Poly::variable(Var::t, 2), Var::t, order);
  Series lhs = num / den;
  Series rhs = cf_series(functional_cf(Functional::L_p, order + 1), Var::t, order);
  compare_series(rep, lhs, rhs, "order<=" + std::to_string(order));
  return rep;
}

// thm:thirdmom -- 1phi1(0;cq;q,qz)/1phi1(0;c;q,z) vs the type-R_I fraction.
inline Report verify_thirdmom(int order) {
  Report rep;
  rep.id = "thm:thirdmom";
  Poly c = var_poly(Var::c);
  Series num = basic_hypergeometric_arg({Poly::zero()}, {c * q_power(1)}, 1,
                                        q_power(1) * var_poly(Var::t), Var::t, order);
  Series den = basic_hypergeometric_arg({Poly::zero()}, {c}, 1, var_poly(Var::t), Var::t, order);
  Series lhs = num / den;
  Series rhs = cf_series(functional_cf(Functional::L_r, order + 1), Var::t, order);
  compare_series(rep, lhs, rhs, "order<=" + std::to_string(order));
  return rep;
}

// cor:bigcor -- the R_I fraction of the type R_I q-Lommel data equals the
// Stieltjes fraction of the even-odd lambda data, both in z.
inline Report verify_bigcor(int order) {
  Report rep;
  rep.id = "cor:bigcor";
  Series lhs = cf_series(functional_cf(Functional::L_r, order + 1), Var::t, order);
  std::vector<RatFunc> lams(order + 2, RatFunc::zero());
  for (int k = 1; k <= order + 1; ++k) lams[k] = lambda_evenodd(k);
  Series rhs = s_fraction_series(lams, Var::t, order);
  compare_series(rep, lhs, rhs, "order<=" + std::to_string(order));
  return rep;
}

// thm:equalmom -- L_r(x^m) = L_p(x^{2m}); reported per m.
inline Report verify_equalmom(int max_m) {
  Report rep;
  rep.id = "thm:equalmom";
  MomentTable mr = functional_moments(Functional::L_r, max_m);
  MomentTable mp = functional_moments(Functional::L_p, 2 * max_m);
  for (int m = 0; m <= max_m; ++m)
    rep.check(mr[m] == mp[2 * m], "m=" + std::to_string(m),
              mr[m].str() + " != " + mp[2 * m].str(), m);
  return rep;
}

// prop:momentsmatch -- L_p(r_n(x^2)) = c^n q^{n^2} / ((c;q)_n (cq;q)_n), and
// the equivalent L_r(r_n(x)) = a_1...a_n.
inline Report verify_momentsmatch(int max_n) {
  Report rep;
  rep.id = "prop:momentsmatch";
  auto r = family_sequence(FamilyId::q_lommel_R1, max_n);
  std::map<Var, Poly> xsq{{Var::x, Poly::variable(Var::x, 2)}};
  Poly c = var_poly(Var::c);
  for (int n = 0; n <= max_n; ++n) {
    RatFunc expected = RatFunc(var_poly(Var::c, n) * q_power(std::int64_t(n) * n),
                               {{qpochhammer(c, 1, n) * qpochhammer(c * q_power(1), 1, n), 1}});
    RatFunc viaLp = functional_apply(Functional::L_p, r[n].substituted(xsq));
    rep.check(viaLp == expected, "L_p n=" + std::to_string(n), "", n);
    RatFunc viaLr = functional_apply(Functional::L_r, r[n]);
    rep.check(viaLr == expected, "L_r n=" + std::to_string(n), "", n);
  }
  return rep;
}

// lem:heine -- Heine's fraction with fully symbolic a, b, c.
inline Report verify_heine(int order) {
  Report rep;
  rep.id = "lem:heine";
  Poly a = var_poly(Var::a), b = var_poly(Var::b), c = var_poly(Var::c);
  Series num = basic_hypergeometric_arg({a * q_power(1), b}, {c * q_power(1)}, 1, var_poly(Var::t),
                                        Var::t, order);
  Series den = basic_hypergeometric_arg({a, b}, {c}, 1, var_poly(Var::t), Var::t, order);
  Series lhs = num / den;
  // beta_{2n+1} = (1-bq^n)(a-cq^n) q^n / ((1-cq^{2n})(1-cq^{2n+1}))
  // beta_{2n}   = (1-aq^n)(b-cq^n) q^{n-1} / ((1-cq^{2n-1})(1-cq^{2n}))
  std::vector<RatFunc> lams(order + 2, RatFunc::zero());
  for (int k = 1; k <= order + 1; ++k) {
    if (k % 2 == 1) {
      int n = (k - 1) / 2;
      lams[k] = RatFunc((Poly::one() - b * q_power(n)) * (a - c * q_power(n)) * q_power(n),
                        {{(Poly::one() - cq_pow(2 * n)) * (Poly::one() - cq_pow(2 * n + 1)), 1}});
    } else {
      int n = k / 2;
      lams[k] = RatFunc((Poly::one() - a * q_power(n)) * (b - c * q_power(n)) * q_power(n - 1),
                        {{(Poly::one() - cq_pow(2 * n - 1)) * (Poly::one() - cq_pow(2 * n)), 1}});
    }
  }
  compare_series(rep, lhs, s_fraction_series(lams, Var::t, order), "order<=" + std::to_string(order));
  return rep;
}

// lem:norlund -- the q-Norlund fraction, symbolic a, b, c.
inline Report verify_norlund(int order) {
  Report rep;
  rep.id = "lem:norlund";
  Poly a = var_poly(Var::a), b = var_poly(Var::b), c = var_poly(Var::c);
  Series num = basic_hypergeometric_arg({a, b}, {c}, 1, var_poly(Var::t), Var::t, order);
  Series den = basic_hypergeometric_arg({a * q_power(1), b * q_power(1)}, {c * q_power(1)}, 1,
                                        var_poly(Var::t), Var::t, order);
  Series lhs = num / den;

  auto cm = [&](int m) {
    return RatFunc((Poly::one() - a * q_power(m)) * (Poly::one() - b * q_power(m)) * q_power(m - 1));
  };
  // c_m(z) = cm * (c z - a b q^m z^2); e_m + d_m z with
  // e_m = 1 - c q^m, d_m = -(a + b - a b q^m - a b q^{m+1}) q^m.
  int depth = order + 1;
  Series tail = Series::zero(Var::t, order);
  for (int m = depth; m >= 1; --m) {
    Series numS(Var::t, order);
    if (order >= 1) numS.set(1, cm(m) * RatFunc(c));
    if (order >= 2) numS.set(2, cm(m) * RatFunc(-(a * b) * q_power(m)));
    Series denS(Var::t, order);
    denS.set(0, RatFunc(Poly::one() - cq_pow(m)));
    if (order >= 1) denS.set(1, RatFunc(-(a + b) * q_power(m) + a * b * q_power(2 * m) + a * b * q_power(2 * m + 1)));
    tail = numS / (denS + tail);
  }
  Series first(Var::t, order);
  first.set(0, RatFunc::one());
  if (order >= 1)
    first.set(1, RatFunc::fraction(-(a + b - a * b - a * b * q_power(1)), Poly::one() - c));
  Series rhs = first + tail.scaled(RatFunc::fraction(Poly::one(), Poly::one() - c));
  compare_series(rep, lhs, rhs, "order<=" + std::to_string(order));
  return rep;
}

// Coefficient tables of the restated q-Norlund fraction.
inline RatFunc norlund_b(int m) {
  Poly a = var_poly(Var::a), b = var_poly(Var::b);
  return RatFunc(((a + b) * q_power(m) - a * b * q_power(2 * m) - a * b * q_power(2 * m + 1)),
                 {{Poly::one() - cq_pow(m), 1}});
}
inline RatFunc norlund_a(int m) {
  Poly a = var_poly(Var::a), b = var_poly(Var::b);
  return RatFunc(-(Poly::one() - a * q_power(m)) * (Poly::one() - b * q_power(m)) * cq_pow(m - 1),
                 {{(Poly::one() - cq_pow(m - 1)) * (Poly::one() - cq_pow(m)), 1}});
}
inline RatFunc norlund_lam(int m) {
  Poly a = var_poly(Var::a), b = var_poly(Var::b);
  return RatFunc((Poly::one() - a * q_power(m)) * (Poly::one() - b * q_power(m)) * a * b * q_power(2 * m - 1),
                 {{(Poly::one() - cq_pow(m - 1)) * (Poly::one() - cq_pow(m)), 1}});
}

// prop:norlund-restated -- 2phi1(aq,bq;cq)/2phi1(a,b;c) as a type-R_I fraction.
inline Report verify_norlund_restated(int order) {
  Report rep;
  rep.id = "prop:norlund-restated";
  Poly a = var_poly(Var::a), b = var_poly(Var::b), c = var_poly(Var::c);
  Series num = basic_hypergeometric_arg({a * q_power(1), b * q_power(1)}, {c * q_power(1)}, 1,
                                        var_poly(Var::t), Var::t, order);
  Series den = basic_hypergeometric_arg({a, b}, {c}, 1, var_poly(Var::t), Var::t, order);
  Series lhs = num / den;
  int depth = order + 1;
  std::vector<RatFunc> bs(depth + 1), as(depth + 1, RatFunc::zero()), lams(depth + 1, RatFunc::zero());
  for (int m = 0; m <= depth; ++m) bs[m] = norlund_b(m);
  for (int m = 1; m <= depth; ++m) {
    as[m] = norlund_a(m);
    lams[m] = norlund_lam(m);
  }
  Series rhs = cf_series(CFSpec::type_r1(bs, as, lams, depth), Var::t, order);
  compare_series(rep, lhs, rhs, "order<=" + std::to_string(order));

  // Mechanical re-derivation from lem:norlund: invert, then apply the K=K
  // transform with c_i = 1/(1-cq^i); the result must agree with the restated
  // fraction (checked at depth 4 as a series identity).
  {
    int ord2 = std::min(order, 6);
    int d = 5;
    auto cmf = [&](int m) {
      return RatFunc((Poly::one() - a * q_power(m)) * (Poly::one() - b * q_power(m)) * q_power(m - 1));
    };
    std::vector<CFEntry> knum, kden;
    for (int m = 0; m <= d; ++m) {
      knum.push_back({RatFunc::zero(), cmf(m) * RatFunc(c), cmf(m) * RatFunc(-(a * b) * q_power(m))});
      kden.push_back({RatFunc(Poly::one() - cq_pow(m)),
                      RatFunc(-(a + b) * q_power(m) + a * b * q_power(2 * m) + a * b * q_power(2 * m + 1)),
                      RatFunc::zero()});
    }
    CFSpec gk = CFSpec::general_K(knum, kden);
    std::vector<RatFunc> ctab;
    for (int i = -1; i <= d; ++i) ctab.push_back(RatFunc::fraction(Poly::one(), Poly::one() - cq_pow(i)));
    KKTransformed tr = kk_transform(gk, ctab);
    // (1-c)/c_0(z) * K ... = lhs^{-1} inverted relation; equivalently
    // lhs = (1-cq^{-1})(1-c)/c_0(z) * K(transformed)  (prefactor 1/c_{-1}).
    Series K = finite_K_series(tr.spec, Var::t, ord2);
    Series c0z(Var::t, ord2);
    if (ord2 >= 1) c0z.set(1, cmf(0) * RatFunc(c));
    if (ord2 >= 2) c0z.set(2, cmf(0) * RatFunc(-(a * b)));
    // K and c_0(z) both vanish at z = 0; strip one power of z before dividing.
    Series derived = K.scaled(tr.prefactor * RatFunc(Poly::one() - c)).shifted_down(1) / c0z.shifted_down(1);
    compare_series(rep, lhs.truncated(ord2 - 1), derived, "kk-derivation");
  }
  return rep;
}

// thm:genequalmom -- equality of the generalized R_I and Jacobi fractions,
// symbolic a and c.
inline Report verify_genequalmom(int order) {
  Report rep;
  rep.id = "thm:genequalmom";
  Poly a = var_poly(Var::a), c = var_poly(Var::c);
  int depth = order + 1;
  std::vector<RatFunc> bs(depth + 1), as(depth + 1, RatFunc::zero());
  for (int n = 0; n <= depth; ++n)
    bs[n] = RatFunc(a * q_power(n), {{Poly::one() - cq_pow(n), 1}});
  for (int n = 1; n <= depth; ++n)
    as[n] = RatFunc((a * q_power(n) - Poly::one()) * cq_pow(n - 1),
                    {{(Poly::one() - cq_pow(n - 1)) * (Poly::one() - cq_pow(n)), 1}});
  Series lhs = cf_series(CFSpec::type_r1(bs, as, {}, depth), Var::t, order);

  std::vector<RatFunc> lams(order + 2, RatFunc::zero());
  for (int k = 1; k < static_cast<int>(lams.size()); ++k) {
    if (k % 2 == 0) {
      int n = k / 2;
      lams[k] = RatFunc(-cq_pow(2 * n - 1) * (Poly::one() - a * q_power(n)),
                        {{(Poly::one() - cq_pow(2 * n - 1)) * (Poly::one() - cq_pow(2 * n)), 1}});
    } else {
      int n = (k - 1) / 2;
      lams[k] = RatFunc((a - c * q_power(n)) * q_power(n),
                        {{(Poly::one() - cq_pow(2 * n)) * (Poly::one() - cq_pow(2 * n + 1)), 1}});
    }
  }
  Series rhs = s_fraction_series(lams, Var::t, order);
  compare_series(rep, lhs, rhs, "order<=" + std::to_string(order));
  return rep;
}

// cor:2n-moment -- mu_{2n} of the lambda data equals mu_n of the (b, a) data
// from thm:genequalmom, reported per n.
inline Report verify_2n_moment(int max_n) {
  Report rep;
  rep.id = "cor:2n-moment";
  Poly a = var_poly(Var::a), c = var_poly(Var::c);
  int depth = 2 * max_n + 1;
  std::vector<RatFunc> lams(depth + 1, RatFunc::zero());
  for (int k = 1; k <= depth; ++k) {
    if (k % 2 == 0) {
      int n = k / 2;
      lams[k] = RatFunc(-cq_pow(2 * n - 1) * (Poly::one() - a * q_power(n)),
                        {{(Poly::one() - cq_pow(2 * n - 1)) * (Poly::one() - cq_pow(2 * n)), 1}});
    } else {
      int n = (k - 1) / 2;
      lams[k] = RatFunc((a - c * q_power(n)) * q_power(n),
                        {{(Poly::one() - cq_pow(2 * n)) * (Poly::one() - cq_pow(2 * n + 1)), 1}});
    }
  }
  MomentTable orth = moments_from_cf(CFSpec::jacobi({}, lams, depth), Var::t, 2 * max_n);
  std::vector<RatFunc> bs(max_n + 2), as(max_n + 2, RatFunc::zero());
  for (int n = 0; n <= max_n + 1; ++n)
    bs[n] = RatFunc(a * q_power(n), {{Poly::one() - cq_pow(n), 1}});
  for (int n = 1; n <= max_n + 1; ++n)
    as[n] = RatFunc((a * q_power(n) - Poly::one()) * cq_pow(n - 1),
                    {{(Poly::one() - cq_pow(n - 1)) * (Poly::one() - cq_pow(n)), 1}});
  MomentTable r1 = moments_from_cf(CFSpec::type_r1(bs, as, {}, max_n + 1), Var::t, max_n);
  for (int n = 0; n <= max_n; ++n)
    rep.check(orth[2 * n] == r1[n], "n=" + std::to_string(n), "", n);
  return rep;
}

// eq:P-over-P -- x^m P_m(x^{-1}; shifted data)/x^{m+1} P_{m+1}(x^{-1}; data)
// equals the finite K-fraction, verified at random rational coefficient
// tables (Schwartz-Zippel; the fixed variable universe cannot host 16 free
// table symbols) with x symbolic.
inline Report verify_P_over_P(int max_m) {
  Report rep;
  rep.id = "eq:P-over-P";
  std::mt19937 rng(412984);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  auto rnd = [&]() {
    Rational r;
    do {
      r = rational(num(rng), den(rng));
    } while (r == 0);
    return RatFunc(r);
  };
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<RatFunc> bt, at, lt;
    for (int i = 0; i <= max_m + 2; ++i) {
      bt.push_back(rnd());
      at.push_back(rnd());
      lt.push_back(rnd());
    }
    for (int m = 0; m <= max_m; ++m) {
      RecurrenceCoeffs full{bt, at, lt};
      RecurrenceCoeffs shifted{{bt.begin() + 1, bt.end()}, {at.begin() + 1, at.end()}, {lt.begin() + 1, lt.end()}};
      std::vector<RatFunc> P = run_recurrence(full, m + 1);
      std::vector<RatFunc> Pd = run_recurrence(shifted, m);
      std::map<Var, Poly> xinv{{Var::x, Poly::variable(Var::x, -1)}};
      RatFunc x = RatFunc::variable(Var::x);
      RatFunc lhs = RatFunc(Poly::variable(Var::x, m)) * Pd[m].substituted(xinv) /
                    (RatFunc(Poly::variable(Var::x, m + 1)) * P[m + 1].substituted(xinv));
      std::vector<CFEntry> knum, kden;
      for (int i = 0; i <= m; ++i) {
        knum.push_back({RatFunc::zero(), -at[i], -lt[i]});
        kden.push_back({RatFunc::one(), -bt[i], RatFunc::zero()});
      }
      RatFunc K = finite_K(CFSpec::general_K(knum, kden), m, Var::x);
      RatFunc rhs = K / (-at[0] * x - lt[0] * x * x);
      rep.check(lhs == rhs, "trial=" + std::to_string(trial) + " m=" + std::to_string(m), "", m);
    }
  }
  return rep;
}

// eq:1 -- mu_{2n}({0},{a_k}) = mu_n({0},{a_k},{0}), symbolic digit-encoded a.
inline Report verify_eq1(int max_n) {
  Report rep;
  rep.id = "eq:1";
  int depth = 2 * max_n + 1;
  std::vector<RatFunc> lams(depth + 1, RatFunc::zero());
  for (int k = 1; k <= depth; ++k) lams[k] = RatFunc(seq_symbol(Var::a, k));
  MomentTable jac = moments_from_cf(CFSpec::jacobi({}, lams, depth), Var::t, 2 * max_n);
  std::vector<RatFunc> as(max_n + 2, RatFunc::zero());
  for (int k = 1; k <= max_n + 1; ++k) as[k] = RatFunc(seq_symbol(Var::a, k));
  std::vector<RatFunc> bs(max_n + 2, RatFunc::zero());
  MomentTable r1 = moments_from_cf(CFSpec::type_r1(bs, as, {}, max_n + 1), Var::t, max_n);
  for (int n = 0; n <= max_n; ++n)
    rep.check(jac[2 * n] == r1[n], "n=" + std::to_string(n), "", n);
  return rep;
}

}  // namespace qlommel

#endif

#ifndef QLOMMEL_LOMMEL_HPP
#define QLOMMEL_LOMMEL_HPP

#include <array>
#include <functional>
#include <vector>

#include "qseries.hpp"
#include "report.hpp"

namespace qlommel {

// ---------------------------------------------------------------------------
// Recurrence data for the polynomial families. Every family starts from
// P_{-1} = 0, P_0 = 1. Index-0 entries of lambda tables multiply P_{-1} and
// are stored as unused placeholders.
// ---------------------------------------------------------------------------

enum class FamilyId {
  lommel_monic,        // h_n(x;c), Definition of the monic Lommel polynomials
  lommel_classical_R,  // R_{n,nu}(z), polynomials in 1/z
  q_lommel_classical,  // h_n(x;c,q)
  q_lommel_evenodd,    // p_n(x;c,q)
  q_lommel_R1,         // r_n(x;c,q)
  R1_first_qBessel,    // R^{(1)}_{n,nu}(x;q) with c in place of q^nu
  R3_laurent,          // R^{(3)}_{m,nu}(z;q) Laurent polynomials, variable s
  r3_rescaled,         // r^{(3)}_n(x;c,q)
  assoc_AW,            // associated Askey-Wilson (see assoc_aw_polys)
  rr_hat,              // \hat r_n(x;c): type R_I limit family
};

inline const char* family_name(FamilyId f) {
  switch (f) {
    case FamilyId::lommel_monic: return "lommel_monic";
    case FamilyId::lommel_classical_R: return "lommel_classical_R";
    case FamilyId::q_lommel_classical: return "q_lommel_classical";
    case FamilyId::q_lommel_evenodd: return "q_lommel_evenodd";
    case FamilyId::q_lommel_R1: return "q_lommel_R1";
    case FamilyId::R1_first_qBessel: return "R1_first_qBessel";
    case FamilyId::R3_laurent: return "R3_laurent";
    case FamilyId::assoc_AW: return "assoc_AW";
    case FamilyId::r3_rescaled: return "r3_rescaled";
    case FamilyId::rr_hat: return "rr_hat";
  }
  return "?";
}

inline std::optional<FamilyId> family_from_name(const std::string& s) {
  for (FamilyId f : {FamilyId::lommel_monic, FamilyId::lommel_classical_R, FamilyId::q_lommel_classical,
                     FamilyId::q_lommel_evenodd, FamilyId::q_lommel_R1, FamilyId::R1_first_qBessel,
                     FamilyId::R3_laurent, FamilyId::r3_rescaled, FamilyId::assoc_AW, FamilyId::rr_hat})
    if (s == family_name(f)) return f;
  return std::nullopt;
}

inline RatFunc one_minus(const Poly& p) { return RatFunc(Poly::one() - p); }

inline Poly cq_pow(std::int64_t k) { return var_poly(Var::c) * q_power(k); }

// lambda_n of the classical q-Lommel polynomials.
inline RatFunc lambda_classical(int n) {
  return RatFunc(cq_pow(n - 1), {{(Poly::one() - cq_pow(n - 1)) * (Poly::one() - cq_pow(n)), 1}});
}

// lambda_n of the even-odd q-Lommel polynomials (split by parity of n).
inline RatFunc lambda_evenodd(int n) {
  Poly den = (Poly::one() - cq_pow(n - 1)) * (Poly::one() - cq_pow(n));
  if (n % 2 == 0) return RatFunc(cq_pow(3 * (n / 2) - 1), {{den, 1}});
  return RatFunc(q_power((n - 1) / 2), {{den, 1}});
}

// b_n and a_n of the type R_I q-Lommel polynomials.
inline RatFunc b_R1(int n) { return RatFunc(q_power(n), {{Poly::one() - cq_pow(n), 1}}); }
inline RatFunc a_R1(int n) {
  return RatFunc(cq_pow(2 * n - 1), {{(Poly::one() - cq_pow(n - 1)) * (Poly::one() - cq_pow(n)), 1}});
}

// \hat b_n, \hat a_n of the rescaled third-q-Bessel family r^{(3)}.
inline RatFunc b_r3(int n) { return RatFunc(cq_pow(n), {{Poly::one() - cq_pow(n), 1}}); }
inline RatFunc a_r3(int n) {
  return RatFunc(var_poly(Var::c, 2) * q_power(2 * n - 1),
                 {{(Poly::one() - cq_pow(n - 1)) * (Poly::one() - cq_pow(n)), 1}});
}

// lambda_n = 1/((c+n-1)(c+n)) of the monic Lommel polynomials.
inline RatFunc lambda_monic(int n) {
  Poly c = var_poly(Var::c);
  return RatFunc(Poly::one(),
                 {{c + Poly::constant(Rational(n - 1)), 1}, {c + Poly::constant(Rational(n)), 1}});
}

// General three-term machinery: P_{n+1} = (x - b_n) P_n - (a_n x + lam_n) P_{n-1}.
struct RecurrenceCoeffs {
  std::vector<RatFunc> b, a, lam;  // any may be empty meaning identically 0
  RatFunc get(const std::vector<RatFunc>& v, int n) const {
    return n < static_cast<int>(v.size()) ? v[n] : RatFunc::zero();
  }
  RatFunc bn(int n) const { return get(b, n); }
  RatFunc an(int n) const { return get(a, n); }
  RatFunc lamn(int n) const { return get(lam, n); }
};

inline std::vector<RatFunc> run_recurrence(const RecurrenceCoeffs& rc, int nmax, Var xv = Var::x) {
  std::vector<RatFunc> p(nmax + 1);
  RatFunc x = RatFunc::variable(xv);
  RatFunc prev = RatFunc::zero(), cur = RatFunc::one();
  p[0] = cur;
  for (int n = 0; n < nmax; ++n) {
    RatFunc nxt = (x - rc.bn(n)) * cur - (rc.an(n) * x + rc.lamn(n)) * prev;
    prev = cur;
    cur = nxt;
    p[n + 1] = cur;
  }
  return p;
}

inline RecurrenceCoeffs family_coeffs(FamilyId f, int depth) {
  RecurrenceCoeffs rc;
  switch (f) {
    case FamilyId::lommel_monic:
      rc.lam.assign(depth + 1, RatFunc::zero());
      for (int n = 1; n <= depth; ++n) rc.lam[n] = lambda_monic(n);
      break;
    case FamilyId::q_lommel_classical:
      rc.lam.assign(depth + 1, RatFunc::zero());
      for (int n = 1; n <= depth; ++n) rc.lam[n] = lambda_classical(n);
      break;
    case FamilyId::q_lommel_evenodd:
      rc.lam.assign(depth + 1, RatFunc::zero());
      for (int n = 1; n <= depth; ++n) rc.lam[n] = lambda_evenodd(n);
      break;
    case FamilyId::q_lommel_R1:
      rc.b.assign(depth + 1, RatFunc::zero());
      rc.a.assign(depth + 1, RatFunc::zero());
      for (int n = 0; n <= depth; ++n) rc.b[n] = b_R1(n);
      for (int n = 1; n <= depth; ++n) rc.a[n] = a_R1(n);
      break;
    case FamilyId::r3_rescaled:
      rc.b.assign(depth + 1, RatFunc::zero());
      rc.a.assign(depth + 1, RatFunc::zero());
      for (int n = 0; n <= depth; ++n) rc.b[n] = b_r3(n);
      for (int n = 1; n <= depth; ++n) rc.a[n] = a_r3(n);
      break;
    case FamilyId::rr_hat:
      rc.a.assign(depth + 1, RatFunc::zero());
      for (int n = 1; n <= depth; ++n) rc.a[n] = lambda_monic(n);
      break;
    default:
      throw QlError("family-not-coefficient-based", family_name(f));
  }
  return rc;
}

// The Laurent families, built directly from their recurrences.
inline std::vector<RatFunc> lommel_classical_R_seq(int nmax) {
  std::vector<RatFunc> r(nmax + 1);
  RatFunc xinv = RatFunc(Poly::variable(Var::x, -1));
  RatFunc nu = RatFunc::variable(Var::nu);
  r[0] = RatFunc::one();
  if (nmax >= 1) r[1] = RatFunc(Rational(2)) * nu * xinv;
  for (int n = 1; n < nmax; ++n)
    r[n + 1] = RatFunc(Rational(2)) * (nu + RatFunc(Rational(n))) * xinv * r[n] - r[n - 1];
  return r;
}

// R^{(1)}_{n,nu}(x;q) with c in place of q^nu.
inline std::vector<RatFunc> R1_first_qBessel_seq(int nmax) {
  std::vector<RatFunc> r(nmax + 1);
  RatFunc xinv = RatFunc(Poly::variable(Var::x, -1));
  RatFunc c = RatFunc::variable(Var::c);
  r[0] = RatFunc::one();
  if (nmax >= 1) r[1] = RatFunc(Rational(2)) * (RatFunc::one() - c) * xinv;
  for (int n = 1; n < nmax; ++n)
    r[n + 1] = RatFunc(Rational(2)) * (RatFunc::one() - RatFunc(cq_pow(n))) * xinv * r[n] -
               RatFunc(cq_pow(n - 1)) * r[n - 1];
  return r;
}

// R^{(3)}_{m,nu}(s; q^qdir) in the Laurent variable s, with c = q^nu
// (so the base-inverted family reads q^{+-(nu+m)} as c^{+-1} q^{+-m}).
inline std::vector<RatFunc> R3_laurent_seq(int nmax, int qdir = 1) {
  std::vector<RatFunc> r(nmax + 1);
  RatFunc s = RatFunc::variable(Var::s), sinv = RatFunc(Poly::variable(Var::s, -1));
  r[0] = RatFunc::one();
  RatFunc prev = RatFunc::zero(), cur = r[0];
  for (int m = 0; m < nmax; ++m) {
    RatFunc coeff = RatFunc::one() - RatFunc(Poly::variable(Var::c, qdir)) * RatFunc(q_power(m, qdir));
    RatFunc nxt = (s + sinv * coeff) * cur - prev;
    prev = cur;
    cur = nxt;
    r[m + 1] = cur;
  }
  return r;
}

inline std::vector<RatFunc> family_sequence(FamilyId f, int nmax) {
  switch (f) {
    case FamilyId::lommel_classical_R: return lommel_classical_R_seq(nmax);
    case FamilyId::R1_first_qBessel: return R1_first_qBessel_seq(nmax);
    case FamilyId::R3_laurent: return R3_laurent_seq(nmax);
    case FamilyId::assoc_AW: throw QlError("family-needs-bindings", "assoc_AW");
    default: return run_recurrence(family_coeffs(f, nmax), nmax);
  }
}

inline RatFunc family_polynomial(FamilyId f, int n) { return family_sequence(f, n)[n]; }

// ---------------------------------------------------------------------------
// Explicit formulas (always verified against the recurrences, which are the
// ground truth).
// ---------------------------------------------------------------------------

// Classical q-Lommel single sum.
inline RatFunc explicit_classical(int n) {
  Poly c = var_poly(Var::c);
  RatFunc sum = RatFunc::zero();
  for (int k = 0; 2 * k <= n; ++k) {
    Poly num = gauss_binomial(n - k, k) * Poly::constant(pow_rational(Rational(-1), k)) *
               var_poly(Var::c, k) * q_power(std::int64_t(k) * k - k) * var_poly(Var::x, n - 2 * k);
    Poly den = qpochhammer(c, 1, k) * qpochhammer(c * q_power(n - 1), -1, k);
    sum += RatFunc(num, {{den, 1}});
  }
  return sum;
}

// Type R_I double sum.
inline RatFunc explicit_R1(int n) {
  RatFunc sum = RatFunc::zero();
  for (int k = 0; k <= n; ++k)
    for (int a = 0; a + k <= n; ++a) {
      Poly term = Poly::constant(pow_rational(Rational(-1), k)) * Poly::variable(Var::c, -k - a) *
                  q_power(-binom2(k)) * gauss_binomial(k + a, a, -1) * gauss_binomial(n - a, k, -1) *
                  Poly::variable(Var::x, n - a);
      sum += RatFunc(term);
    }
  Poly pref = qpochhammer(Poly::variable(Var::c, -1), -1, n);
  return sum / RatFunc(pref);
}

// Even even-odd double sum.
inline RatFunc explicit_evenodd_even(int n) {
  Poly c = var_poly(Var::c);
  RatFunc total = RatFunc::zero();
  for (int k = 0; k <= n; ++k) {
    Poly outer_num = qpochhammer_multi({q_power(-n), c * q_power(n), c}, 1, k) * q_power(k) *
                     Poly::variable(Var::x, 2 * k);
    RatFunc outer = RatFunc(outer_num, {{qpochhammer(q_power(1), 1, k), 1}});
    RatFunc inner = RatFunc::zero();
    for (int s = 0; s + k <= n; ++s) {
      Poly num = qpochhammer(c * q_power(k - 1), 1, s) *
                 (Poly::one() - c * q_power(k - 1 + 2 * s)) *
                 qpochhammer_multi({c * q_power(n + k), q_power(k - n), q_power(k)}, 1, s) *
                 var_poly(Var::c, s) * q_power(-std::int64_t(s) * k + std::int64_t(s) * (s - 1));
      Poly den = qpochhammer(q_power(1), 1, s) * (Poly::one() - c * q_power(k - 1)) *
                 qpochhammer_multi({q_power(-n), c * q_power(n), c}, 1, s);
      inner += RatFunc(num, {{den, 1}});
    }
    total += outer * inner;
  }
  Poly prefnum = Poly::constant(pow_rational(Rational(-1), n)) * q_power(binom2(n));
  return RatFunc(prefnum, {{qpochhammer(c, 1, 2 * n), 1}}) * total;
}

// Odd even-odd double sum. The printed inner-sum parameters are suspect
// (see the flagged variants); the verifier reports which variant matches the
// recurrence.
struct Explicit2Variant {
  bool denom_cq = false;  // third lower Pochhammer parameter: c (printed) or cq
  int c_power_sign = +1;  // c^{+s} (printed) or c^{-s}
  int s2_sign = -1;       // q^{-(3k+2)s + s2_sign * s(s-1)}
  std::string name() const {
    std::string s = denom_cq ? "denom=cq" : "denom=c";
    s += c_power_sign > 0 ? ",c^{+s}" : ",c^{-s}";
    s += s2_sign < 0 ? ",q^{-s(s-1)}" : ",q^{+s(s-1)}";
    return s;
  }
  static Explicit2Variant printed() { return {}; }
  // Settled empirically against the recurrence: c^{-s} with the printed
  // denominators and q-exponent is the unique matching candidate.
  static Explicit2Variant matching() { return {false, -1, -1}; }
};

inline RatFunc explicit_evenodd_odd(int n, const Explicit2Variant& v = Explicit2Variant::printed()) {
  Poly c = var_poly(Var::c);
  RatFunc total = RatFunc::zero();
  for (int k = 0; k <= n; ++k) {
    Poly outer_num = qpochhammer_multi({q_power(-n), c * q_power(n + 1), c * q_power(1)}, 1, k) *
                     Poly::variable(Var::c, -k) * q_power(-std::int64_t(k) * k) *
                     Poly::variable(Var::x, 2 * k + 1);
    RatFunc outer = RatFunc(outer_num, {{qpochhammer(q_power(1), 1, k), 1}});
    RatFunc inner = RatFunc::zero();
    for (int s = 0; s + k <= n; ++s) {
      Poly third = v.denom_cq ? c * q_power(1) : c;
      Poly num = qpochhammer(c * q_power(k), 1, s) * (Poly::one() - c * q_power(k + 2 * s)) *
                 qpochhammer_multi({c * q_power(n + k + 1), q_power(k - n), q_power(k + 1)}, 1, s) *
                 Poly::variable(Var::c, v.c_power_sign * s) *
                 q_power(-std::int64_t(3 * k + 2) * s + v.s2_sign * std::int64_t(s) * (s - 1));
      Poly den = qpochhammer(q_power(1), 1, s) * (Poly::one() - c * q_power(k)) *
                 qpochhammer_multi({q_power(-n), c * q_power(n + 1), third}, 1, s);
      inner += RatFunc(num, {{den, 1}});
    }
    total += outer * inner;
  }
  Poly prefnum = Poly::constant(pow_rational(Rational(-1), n)) * var_poly(Var::c, n) *
                 q_power(std::int64_t(n) * n + binom2(n + 1));
  return RatFunc(prefnum, {{qpochhammer(c * q_power(1), 1, 2 * n), 1}}) * total;
}

// Single-sum pair with inner j-sums (the explicit expressions for p_{2n} and
// p_{2n+1}). Binomials here follow the empty-product convention [m 0] = 1 for
// every m, including negative.
inline Poly qbinom_conv(long long n, long long k) {
  if (k == 0) return Poly::one();
  return gauss_binomial(n, k);
}

inline RatFunc explicit_evenodd_pair(int n, bool odd) {
  Poly c = var_poly(Var::c);
  RatFunc sum = RatFunc::zero();
  int deg = 2 * n + (odd ? 1 : 0);
  for (int k = 0; k <= n; ++k) {
    Poly inner = Poly::zero();
    for (int j = 0; j <= k; ++j) {
      Poly t = qbinom_conv(n - j, k - j) * qbinom_conv(n - k + j - (odd ? 0 : 1), j) *
               var_poly(Var::c, j) * q_power(std::int64_t(j) * n + binom2(k));
      inner += t;
    }
    Poly t = Poly::constant(pow_rational(Rational(-1), k)) * Poly::variable(Var::x, deg - 2 * k) *
             qpochhammer(c * q_power(k), 1, deg - 2 * k) * inner;
    sum += RatFunc(t);
  }
  return sum / RatFunc(qpochhammer(c, 1, deg));
}

// ---------------------------------------------------------------------------
// Generating function for the type R_I family: coefficients of t^n of
// sum_k (-xt/c)^k q^{-C(k,2)} / (t/c, tx; q^{-1})_{k+1}, which must equal
// (c^{-1};q^{-1})_n r_n(x;c,q).
// ---------------------------------------------------------------------------

inline std::vector<RatFunc> generating_function_coeffs(int order) {
  Series total = Series::zero(Var::t, order);
  for (int k = 0; k <= order; ++k) {
    Series term(Var::t, order);
    RatFunc pref = RatFunc(Poly::constant(pow_rational(Rational(-1), k)) * Poly::variable(Var::c, -k) *
                           q_power(-binom2(k)));
    term.set(k, pref * RatFunc(var_poly(Var::x, k)));
    for (int i = 0; i <= k; ++i) {
      // 1/(1 - m t) expanded directly
      for (const RatFunc m : {RatFunc(Poly::variable(Var::c, -1) * q_power(-i)),
                              RatFunc(var_poly(Var::x) * q_power(-i))}) {
        Series geo(Var::t, order);
        RatFunc mk = RatFunc::one();
        for (int j = 0; j <= order; ++j) {
          geo.set(j, mk);
          mk = mk * m;
        }
        term = term * geo;
      }
    }
    total = total + term;
  }
  return total.coeffs();
}

// ---------------------------------------------------------------------------
// Connection coefficients between r_n(x^2) and p_{2n}.
// ---------------------------------------------------------------------------

inline RatFunc connection_coeff_r_in_p(int n, int k) {
  Poly c = var_poly(Var::c);
  Poly num = gauss_binomial(n, k) * var_poly(Var::c, k) *
             q_power(std::int64_t(n) * n - std::int64_t(n - k) * (n - k));
  Poly den = qpochhammer(c * q_power(n - 1), -1, k) * qpochhammer(c * q_power(2 * n - k), -1, k);
  return RatFunc(num, {{den, 1}});
}

inline RatFunc connection_coeff_p_in_r(int n, int k) {
  Poly c = var_poly(Var::c);
  Poly num = gauss_binomial(n, k) * Poly::constant(pow_rational(Rational(-1), k)) * var_poly(Var::c, k) *
             q_power(2 * std::int64_t(n) * k - binom2(k + 1));
  Poly den = qpochhammer(c * q_power(n - 1), -1, k) * qpochhammer(c * q_power(2 * n - 1), -1, k);
  return RatFunc(num, {{den, 1}});
}

enum class ConnectionDirection { r_in_p, p_in_r };

// Coefficient of x^k of a rational function whose denominator is free of x.
inline RatFunc coefficient_in_x(const RatFunc& r, std::int64_t k, Var v = Var::x) {
  for (const auto& [f, m] : r.den_factors())
    if (f.depends_on(v)) throw QlError("denominator-depends-on-x");
  RatFunc::FactorMap den = r.den_factors();
  return RatFunc(r.num().coeff_of(v, k), std::move(den), r.den_scalar());
}

// ---------------------------------------------------------------------------
// Associated Askey-Wilson polynomials.
// ---------------------------------------------------------------------------

struct AWBindings {
  RatFunc a, b, c, d, alpha;
  int qdir = 1;
  RatFunc qp(std::int64_t k) const { return RatFunc(q_power(k, qdir)); }
};

inline RatFunc aw_A(const AWBindings& w, int n) {
  RatFunc abcd = w.a * w.b * w.c * w.d;
  RatFunc num = (RatFunc::one() - w.a * w.b * w.alpha * w.qp(n)) *
                (RatFunc::one() - w.a * w.c * w.alpha * w.qp(n)) *
                (RatFunc::one() - w.a * w.d * w.alpha * w.qp(n)) *
                (RatFunc::one() - abcd * w.alpha * w.qp(n - 1));
  RatFunc den = w.a * (RatFunc::one() - abcd * w.alpha * w.alpha * w.qp(2 * n - 1)) *
                (RatFunc::one() - abcd * w.alpha * w.alpha * w.qp(2 * n));
  return num / den;
}

inline RatFunc aw_C(const AWBindings& w, int n) {
  RatFunc abcd = w.a * w.b * w.c * w.d;
  RatFunc num = w.a * (RatFunc::one() - w.alpha * w.qp(n)) *
                (RatFunc::one() - w.b * w.c * w.alpha * w.qp(n - 1)) *
                (RatFunc::one() - w.b * w.d * w.alpha * w.qp(n - 1)) *
                (RatFunc::one() - w.c * w.d * w.alpha * w.qp(n - 1));
  RatFunc den = (RatFunc::one() - abcd * w.alpha * w.alpha * w.qp(2 * n - 2)) *
                (RatFunc::one() - abcd * w.alpha * w.alpha * w.qp(2 * n - 1));
  return num / den;
}

inline RatFunc aw_b(const AWBindings& w, int n) {
  return (w.a + w.a.inverse() - aw_A(w, n) - aw_C(w, n)) * RatFunc(rational(1, 2));
}

inline RatFunc aw_lambda(const AWBindings& w, int n) {
  return aw_A(w, n - 1) * aw_C(w, n) * RatFunc(rational(1, 4));
}

// Monic p^{(alpha)}_0..p^{(alpha)}_nmax in x.
inline std::vector<RatFunc> assoc_aw_polys(const AWBindings& w, int nmax) {
  try {
    RecurrenceCoeffs rc;
    rc.b.assign(nmax + 1, RatFunc::zero());
    rc.lam.assign(nmax + 1, RatFunc::zero());
    for (int n = 0; n < nmax; ++n) rc.b[n] = aw_b(w, n);
    for (int n = 1; n < nmax; ++n) rc.lam[n] = aw_lambda(w, n);
    return run_recurrence(rc, nmax);
  } catch (const QlError& e) {
    if (e.code() == "zero-divisor") throw err_singular_parameter("associated Askey-Wilson binding");
    throw;
  }
}

inline RatFunc assoc_aw_polynomial(const AWBindings& w, int n) { return assoc_aw_polys(w, n)[n]; }

// ---------------------------------------------------------------------------
// Ismail-Rahman solutions psi_n^{(alpha,eps)} as finite double sums, the inner
// sum a terminating very-well-poised 10W9.
// ---------------------------------------------------------------------------

inline RatFunc psi_solution(const AWBindings& w, const RatFunc& z, int n, int eps) {
  try {
    RatFunc abcd = w.a * w.b * w.c * w.d;
    RatFunc al2 = w.alpha * w.alpha;
    RatFunc K = (w.a * RatFunc(Rational(2))).pow(-static_cast<long long>(n)) *
                rf_qpochhammer(w.a * w.b * w.alpha, w.qdir, n) *
                rf_qpochhammer(w.a * w.c * w.alpha, w.qdir, n) *
                rf_qpochhammer(w.a * w.d * w.alpha, w.qdir, n) *
                rf_qpochhammer(abcd * w.alpha * w.qp(-1), w.qdir, n) /
                (rf_qpochhammer(abcd * al2 * w.qp(n - 1), w.qdir, n) *
                 rf_qpochhammer(abcd * al2 * w.qp(-1), w.qdir, n));
    RatFunc sum = RatFunc::zero();
    for (int k = 0; k <= n; ++k) {
      RatFunc num = rf_qpochhammer(w.qp(-n), w.qdir, k) *
                    rf_qpochhammer(abcd * al2 * w.qp(n - 1), w.qdir, k) *
                    rf_qpochhammer(abcd * al2 * w.qp(-1), w.qdir, k) *
                    rf_qpochhammer(w.a * z, w.qdir, k) * rf_qpochhammer(w.a / z, w.qdir, k);
      RatFunc den = rf_qpochhammer(w.qp(1), w.qdir, k) * rf_qpochhammer(w.a * w.b * w.alpha, w.qdir, k) *
                    rf_qpochhammer(w.a * w.c * w.alpha, w.qdir, k) *
                    rf_qpochhammer(w.a * w.d * w.alpha, w.qdir, k) *
                    rf_qpochhammer(abcd * w.alpha * w.qp(-1), w.qdir, k);
      RatFunc S = eps == 1 ? w.qp(k + 1) : w.qp(k);
      RatFunc T = eps == 1 ? w.a * w.a : w.a * w.a * w.qp(1);
      std::array<RatFunc, 7> bs = {w.alpha,
                                   w.b * w.c * w.alpha * w.qp(-1),
                                   w.b * w.d * w.alpha * w.qp(-1),
                                   w.c * w.d * w.alpha * w.qp(-1),
                                   S,
                                   abcd * al2 * w.qp(n + k - 1),
                                   w.qp(k - n)};
      RatFunc W = very_well_poised_10W9(abcd * al2 * w.qp(k - 2), bs, w.qdir, T, n - k);
      sum += num / den * w.qp(k) * W;
    }
    return K * sum;
  } catch (const QlError& e) {
    if (e.code() == "zero-divisor") throw err_singular_parameter("psi binding");
    throw;
  }
}

// psi_n as a polynomial in x: the z-dependence enters only through
// (az;q)_k (a/z;q)_k = prod_j (1 - 2 a q^j x + a^2 q^{2j}), x = (z+1/z)/2.
// K_n is folded into the sum so that the shared Pochhammers appear as ratios
// (u;q)_n/(u;q)_k = (u q^k;q)_{n-k}; this keeps the specializations with
// a*d*alpha = 1 (the classical q-Lommel bindings) finite.
// Individual (k,s)-terms of psi_n in the x-form; their sum is psi_n. Exposed
// so the alpha -> infinity checks can take limits term by term (the summed
// form over a common denominator is exact but far more expensive).
inline std::vector<RatFunc> psi_solution_x_terms(const AWBindings& w, int n, int eps) {
  try {
    RatFunc x = RatFunc::variable(Var::x);
    RatFunc abcd = w.a * w.b * w.c * w.d;
    RatFunc al2 = w.alpha * w.alpha;
    RatFunc pref = (w.a * RatFunc(Rational(2))).pow(-static_cast<long long>(n)) /
                   (rf_qpochhammer(abcd * al2 * w.qp(n - 1), w.qdir, n) *
                    rf_qpochhammer(abcd * al2 * w.qp(-1), w.qdir, n));
    std::vector<RatFunc> terms;
    for (int k = 0; k <= n; ++k) {
      RatFunc zpoch = RatFunc::one();
      for (int j = 0; j < k; ++j)
        zpoch *= RatFunc::one() - RatFunc(Rational(2)) * w.a * w.qp(j) * x + w.a * w.a * w.qp(2 * j);
      RatFunc num = rf_qpochhammer(w.qp(-n), w.qdir, k) *
                    rf_qpochhammer(abcd * al2 * w.qp(n - 1), w.qdir, k) *
                    rf_qpochhammer(abcd * al2 * w.qp(-1), w.qdir, k) * zpoch;
      RatFunc shared = rf_qpochhammer(w.a * w.b * w.alpha * w.qp(k), w.qdir, n - k) *
                       rf_qpochhammer(w.a * w.c * w.alpha * w.qp(k), w.qdir, n - k) *
                       rf_qpochhammer(w.a * w.d * w.alpha * w.qp(k), w.qdir, n - k) *
                       rf_qpochhammer(abcd * w.alpha * w.qp(k - 1), w.qdir, n - k);
      RatFunc den = rf_qpochhammer(w.qp(1), w.qdir, k);
      RatFunc S = eps == 1 ? w.qp(k + 1) : w.qp(k);
      RatFunc T = eps == 1 ? w.a * w.a : w.a * w.a * w.qp(1);
      std::array<RatFunc, 7> bs = {w.alpha,
                                   w.b * w.c * w.alpha * w.qp(-1),
                                   w.b * w.d * w.alpha * w.qp(-1),
                                   w.c * w.d * w.alpha * w.qp(-1),
                                   S,
                                   abcd * al2 * w.qp(n + k - 1),
                                   w.qp(k - n)};
      RatFunc A = abcd * al2 * w.qp(k - 2);
      RatFunc outer = pref * num * shared / den * w.qp(k);
      // W's s-terms, kept separate.
      RatFunc qa = RatFunc(q_power(1, w.qdir));
      for (int s = 0; s <= n - k; ++s) {
        RatFunc wterm = (RatFunc::one() - A * RatFunc(q_power(2 * s, w.qdir))) / (RatFunc::one() - A);
        wterm *= rf_qpochhammer(A, w.qdir, s);
        for (const RatFunc& bj : bs) wterm *= rf_qpochhammer(bj, w.qdir, s);
        RatFunc wden = rf_qpochhammer(qa, w.qdir, s);
        for (const RatFunc& bj : bs) wden *= rf_qpochhammer(A * qa / bj, w.qdir, s);
        wterm /= wden;
        wterm *= T.pow(s);
        terms.push_back(outer * wterm);
      }
    }
    return terms;
  } catch (const QlError& e) {
    if (e.code() == "zero-divisor") throw err_singular_parameter("psi binding");
    throw;
  }
}

inline RatFunc psi_solution_x(const AWBindings& w, int n, int eps) {
  RatFunc sum = RatFunc::zero();
  for (const RatFunc& t : psi_solution_x_terms(w, n, eps)) sum += t;
  return sum;
}

// ---------------------------------------------------------------------------
// Odd-even folds of a lambda table (Propositions relating p_{2n}, p_{2n+1} to
// orthogonal polynomials in x^2). Index-0 lambda is treated as 0, which is
// what multiplying P_{-1} = 0 forces.
// ---------------------------------------------------------------------------

struct FoldedRecurrence {
  std::vector<RatFunc> b, lam;  // lam[0] unused placeholder
  RatFunc prefactor;            // 1 for the first trick, lambda_1 for the second
};

inline FoldedRecurrence odd_even_transform(const std::vector<RatFunc>& lambda, bool second) {
  FoldedRecurrence out;
  out.prefactor = RatFunc::one();
  int n = static_cast<int>(lambda.size());
  auto lam = [&](int k) { return k <= 0 || k >= n ? RatFunc::zero() : lambda[k]; };
  if (!second) {
    for (int k = 0; 2 * k + 1 < n; ++k) out.b.push_back(lam(2 * k) + lam(2 * k + 1));
    out.lam.push_back(RatFunc::zero());
    for (int k = 1; 2 * k < n; ++k) out.lam.push_back(lam(2 * k - 1) * lam(2 * k));
  } else {
    out.prefactor = lam(1);
    for (int k = 0; 2 * k + 2 < n; ++k) out.b.push_back(lam(2 * k + 2) + lam(2 * k + 1));
    out.lam.push_back(RatFunc::zero());
    for (int k = 1; 2 * k + 1 < n; ++k) out.lam.push_back(lam(2 * k) * lam(2 * k + 1));
  }
  return out;
}

// t_n / s_n targets of the alpha -> infinity limits.
inline std::vector<RatFunc> folded_family(FamilyId base, bool second, int nmax) {
  std::vector<RatFunc> lambda(2 * nmax + 3, RatFunc::zero());
  for (int k = 1; k < static_cast<int>(lambda.size()); ++k)
    lambda[k] = base == FamilyId::q_lommel_evenodd ? lambda_evenodd(k) : lambda_classical(k);
  FoldedRecurrence fr = odd_even_transform(lambda, second);
  RecurrenceCoeffs rc;
  rc.b = fr.b;
  rc.lam = fr.lam;
  return run_recurrence(rc, nmax);
}

// ---------------------------------------------------------------------------
// alpha -> infinity limit checks for the four q-Lommel targets.
// ---------------------------------------------------------------------------

enum class AWLimitWhich { evenodd_even, evenodd_odd, classical_even, classical_odd };

inline const char* aw_limit_name(AWLimitWhich w) {
  switch (w) {
    case AWLimitWhich::evenodd_even: return "evenodd_even";
    case AWLimitWhich::evenodd_odd: return "evenodd_odd";
    case AWLimitWhich::classical_even: return "classical_even";
    case AWLimitWhich::classical_odd: return "classical_odd";
  }
  return "?";
}

// The limit theorems are statements about the psi solutions: the rescaled
// psi_n^{(alpha,eps)} converge coefficient-wise to the folded q-Lommel
// families t_n / s_n. (The monic recurrence solutions do not converge to the
// same targets: the limit of b-hat_0 picks up the spurious lambda_0.)
//
// Two printed parameter choices fail empirically and are pinned to the
// matching variant, flagged in the report:
//   * evenodd_odd: B = -cq^2 forces b-hat_n -> -(lambda_{2n+2}+lambda_{2n+1});
//     B = +cq^2 reproduces s_n and the stated data limits.
//   * classical_even/odd: d = 1/alpha makes A_n, C_n grow like alpha so all
//     rescaled data vanish; d = 1 gives abcd alpha^2 = cq (resp. cq^2) and
//     the stated limits.
inline Report aw_limit_check(AWLimitWhich which, int nmax) {
  Report rep;
  rep.id = std::string("thm:limit:") + aw_limit_name(which);
  RatFunc al = RatFunc::variable(Var::alpha);
  RatFunc alinv = RatFunc(Poly::variable(Var::alpha, -1));
  RatFunc c = RatFunc::variable(Var::c);

  AWBindings w;
  int eps = 2;
  RatFunc B;  // rescaling x -> B alpha^2 x / 2
  std::vector<RatFunc> target;
  bool check_data = false;
  switch (which) {
    case AWLimitWhich::evenodd_even:
      w = {RatFunc(var_poly(Var::alpha) * Poly::variable(Var::c, -1) * q_power(-1)), alinv, alinv, alinv, al, -1};
      eps = 2;
      B = RatFunc(q_power(-1));
      target = folded_family(FamilyId::q_lommel_evenodd, false, nmax);
      check_data = true;
      break;
    case AWLimitWhich::evenodd_odd:
      w = {c * RatFunc(q_power(2)) * al, alinv, alinv, alinv, al, 1};
      eps = 1;
      B = c * RatFunc(q_power(2));  // printed sign is -cq^2; see note above
      target = folded_family(FamilyId::q_lommel_evenodd, true, nmax);
      check_data = true;
      rep.add_flagged("rescale-sign", "printed B=-cq^2 fails; B=+cq^2 matches Prop 4.6 data");
      break;
    case AWLimitWhich::classical_even:
      // Printed binding has d = 1/alpha, under which A_n, C_n grow like alpha
      // and every rescaled limit vanishes; d = 1 gives abcd alpha^2 = cq and
      // the stated lambda limits.
      w = {RatFunc::one(), RatFunc(q_power(1) * Poly::variable(Var::alpha, -2)), c, RatFunc::one(), al, 1};
      eps = 2;
      B = RatFunc(Rational(-1));
      target = folded_family(FamilyId::q_lommel_classical, false, nmax);
      check_data = true;
      rep.add_flagged("binding", "printed d=1/alpha degenerates the limit; d=1 matches");
      break;
    case AWLimitWhich::classical_odd:
      w = {RatFunc::one(), RatFunc(q_power(2) * Poly::variable(Var::alpha, -2)), c, RatFunc::one(), al, 1};
      eps = 1;
      B = RatFunc(q_power(-1)) * RatFunc(Rational(-1));
      target = folded_family(FamilyId::q_lommel_classical, true, nmax);
      check_data = true;
      rep.add_flagged("binding", "printed d=1/alpha degenerates the limit; d=1 matches");
      break;
  }

  for (int n = 0; n <= nmax; ++n) {
    // p_hat_n(x) = 2^n alpha^{-2n} B^{-n} psi_n(B alpha^2 x / 2)
    RatFunc scale = RatFunc(Rational(2)).pow(n) * alinv.pow(2 * n) * B.pow(-n);
    RatFunc arg = B * al * al * RatFunc(rational(1, 2));
    Poly argnum = arg.num();
    if (!arg.den_factors().empty() || !argnum.is_monomial()) throw QlError("aw-limit-nonmonomial-arg");
    auto [e, coef] = *argnum.terms().begin();
    Exponents ex = e;
    ex[static_cast<int>(Var::x)] += 1;
    std::map<Var, Poly> rule{{Var::x, Poly::monomial(coef / arg.den_scalar(), ex)}};

    // Limits are taken per psi term and per x-coefficient; a finite sum of
    // convergent terms commutes with the limit. If any single term diverges
    // the exact summed form decides.
    std::vector<RatFunc> terms = psi_solution_x_terms(w, n, eps);
    std::vector<RatFunc> limits(n + 1, RatFunc::zero());
    bool termwise_ok = true;
    for (const RatFunc& t : terms) {
      RatFunc scaled = t.substituted(rule) * scale;
      for (int k = 0; k <= n && termwise_ok; ++k) {
        try {
          limits[k] += limit_at_alpha_infinity(coefficient_in_x(scaled, k));
        } catch (const QlError&) {
          termwise_ok = false;
        }
      }
      if (!termwise_ok) break;
    }
    if (!termwise_ok) {
      RatFunc sum = RatFunc::zero();
      for (const RatFunc& t : terms) sum += t.substituted(rule) * scale;
      for (int k = 0; k <= n; ++k) limits[k] = limit_at_alpha_infinity(coefficient_in_x(sum, k));
    }
    bool ok = true;
    std::string note;
    for (int k = 0; k <= n; ++k) {
      RatFunc tk = coefficient_in_x(target[n], k);
      if (!(limits[k] == tk)) {
        ok = false;
        note = "x^" + std::to_string(k) + " limit " + limits[k].str() + " != " + tk.str();
        break;
      }
    }
    rep.check(ok, "n=" + std::to_string(n), note, n);
  }

  if (check_data) {
    // Recurrence-data limits lim -A_n/(B alpha^2), lim -C_n/(B alpha^2); the
    // even variants give (lambda_{2n+1}, lambda_{2n}) and the odd variants
    // (lambda_{2n+2}, lambda_{2n+1}) of the matching family.
    bool even = which == AWLimitWhich::evenodd_even || which == AWLimitWhich::classical_even;
    auto lam = [&](int k) {
      return which == AWLimitWhich::evenodd_even || which == AWLimitWhich::evenodd_odd
                 ? lambda_evenodd(k)
                 : lambda_classical(k);
    };
    for (int n = 0; n + 1 <= nmax; ++n) {
      RatFunc f = -RatFunc::one() / (B * al * al);
      RatFunc limA = limit_at_alpha_infinity(f * aw_A(w, n));
      RatFunc limC = limit_at_alpha_infinity(f * aw_C(w, n));
      RatFunc lamA = even ? lam(2 * n + 1) : lam(2 * n + 2);
      RatFunc lamC = even ? lam(2 * n) : lam(2 * n + 1);
      rep.check(limA == lamA && limC == lamC, "recurrence-data n=" + std::to_string(n));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Verifier for the connection-coefficient relations.
// ---------------------------------------------------------------------------

inline Report connection_expand(ConnectionDirection dir, int nmax) {
  Report rep;
  rep.id = dir == ConnectionDirection::r_in_p ? "prop:weirdconncoef" : "prop:invweirdconncoef";
  std::map<Var, Poly> xsq{{Var::x, Poly::variable(Var::x, 2)}};
  std::vector<RatFunc> r = family_sequence(FamilyId::q_lommel_R1, nmax);
  std::vector<RatFunc> p = family_sequence(FamilyId::q_lommel_evenodd, 2 * nmax);
  for (int n = 0; n <= nmax; ++n) {
    RatFunc lhs, rhs;
    if (dir == ConnectionDirection::r_in_p) {
      lhs = r[n].substituted(xsq);
      rhs = RatFunc::zero();
      for (int k = 0; k <= n; ++k) rhs += connection_coeff_r_in_p(n, k) * p[2 * n - 2 * k];
    } else {
      lhs = p[2 * n];
      rhs = RatFunc::zero();
      for (int k = 0; k <= n; ++k) rhs += connection_coeff_p_in_r(n, k) * r[n - k].substituted(xsq);
    }
    rep.check(lhs == rhs, "n=" + std::to_string(n),
              lhs == rhs ? "" : lhs.str() + " != " + rhs.str(), n);
  }
  // Round trip: composing the two triangular connection matrices yields the
  // identity on (r_0..r_nmax).
  for (int n = 0; n <= std::min(nmax, 3); ++n) {
    std::vector<RatFunc> comp(n + 1, RatFunc::zero());
    for (int k = 0; k <= n; ++k) {
      RatFunc ck = connection_coeff_r_in_p(n, k);
      int m = n - k;
      for (int j = 0; j <= m; ++j) comp[m - j] += ck * connection_coeff_p_in_r(m, j);
    }
    bool ok = comp[n] == RatFunc::one();
    for (int i = 0; i < n; ++i) ok = ok && comp[i].is_zero();
    rep.check(ok, "roundtrip n=" + std::to_string(n));
  }
  return rep;
}

}  // namespace qlommel

#endif

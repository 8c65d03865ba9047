#ifndef QLOMMEL_POLY_HPP
#define QLOMMEL_POLY_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace qlommel {

// Fixed variable universe. The order q < c < a < b < x < y < t < s < nu < alpha
// is the canonical (graded-lex) tie-break order; adding a variable is a code
// change by design.
enum class Var : int { q = 0, c, a, b, x, y, t, s, nu, alpha };
inline constexpr int kNumVars = 10;

inline const char* var_name(Var v) {
  static const char* names[kNumVars] = {"q", "c", "a", "b", "x", "y", "t", "s", "nu", "alpha"};
  return names[static_cast<int>(v)];
}

inline std::optional<Var> var_from_name(const std::string& s) {
  for (int i = 0; i < kNumVars; ++i)
    if (s == var_name(static_cast<Var>(i))) return static_cast<Var>(i);
  return std::nullopt;
}

// Laurent exponent vector. Exponents are signed and bounds-checked on
// arithmetic; desk-scale magnitudes stay far below the limits.
using Exponents = std::array<std::int64_t, kNumVars>;

inline Exponents exp_zero() {
  Exponents e{};
  e.fill(0);
  return e;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw QlError("exponent-overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw QlError("exponent-overflow");
  return r;
}

inline Exponents exp_add(const Exponents& a, const Exponents& b) {
  Exponents r;
  for (int i = 0; i < kNumVars; ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

inline Exponents exp_sub(const Exponents& a, const Exponents& b) {
  Exponents r;
  for (int i = 0; i < kNumVars; ++i) r[i] = checked_add(a[i], -b[i]);
  return r;
}

inline std::int64_t exp_total_degree(const Exponents& e) {
  std::int64_t d = 0;
  for (int i = 0; i < kNumVars; ++i) d = checked_add(d, e[i]);
  return d;
}

// Graded lexicographic order: total degree first, ties broken by exponent of
// q, then c, a, b, x, y, t, s, nu, alpha. Multiplicative, so leading terms of
// products are products of leading terms (the fact exact division relies on).
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    std::int64_t da = exp_total_degree(a), db = exp_total_degree(b);
    if (da != db) return da < db;
    for (int i = 0; i < kNumVars; ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

// Sparse multivariate Laurent polynomial over Q in the fixed universe.
// Invariant: no stored zero coefficient; the term map itself is the canonical
// form (equal values have identical maps).
class Poly {
public:
  using TermMap = std::map<Exponents, Rational, GradedLexLess>;

  Poly() = default;

  static Poly zero() { return Poly(); }

  static Poly constant(const Rational& r) {
    Poly p;
    if (r != 0) p.terms_[exp_zero()] = r;
    return p;
  }

  static Poly one() { return constant(Rational(1)); }

  static Poly monomial(const Rational& coeff, const Exponents& e) {
    Poly p;
    if (coeff != 0) p.terms_[e] = coeff;
    return p;
  }

  static Poly variable(Var v, std::int64_t e = 1) {
    Exponents ex = exp_zero();
    ex[static_cast<int>(v)] = e;
    return monomial(Rational(1), ex);
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == exp_zero());
  }
  bool is_one() const { return is_constant() && constant_value() == 1; }
  bool is_monomial() const { return terms_.size() == 1; }

  Rational constant_value() const {
    auto it = terms_.find(exp_zero());
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // Leading term w.r.t. the canonical order.
  std::pair<Exponents, Rational> leading() const {
    if (is_zero()) throw QlError("leading-of-zero");
    auto it = terms_.rbegin();
    return {it->first, it->second};
  }

  Poly operator-() const {
    Poly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(exp_add(ea, eb), ca * cb);
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const Rational& r) const {
    Poly out;
    if (r == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_[e] = c * r;
    return out;
  }

  Poly shifted(const Exponents& by) const {
    Poly out;
    for (const auto& [e, c] : terms_) out.terms_[exp_add(e, by)] = c;
    return out;
  }

  Poly pow(long long n) const {
    if (n < 0) {
      if (!is_monomial()) throw QlError("nonmonomial-negative-power");
      auto [e, c] = *terms_.begin();
      Exponents inv = exp_zero();
      for (int i = 0; i < kNumVars; ++i) inv[i] = checked_mul(e[i], n);
      return monomial(pow_rational(c, n), inv);
    }
    Poly acc = one(), base = *this;
    for (; n > 0; n >>= 1) {
      if (n & 1) acc *= base;
      if (n > 1) base *= base;
    }
    return acc;
  }

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Deterministic total order so Poly can key maps (factor multisets).
  bool operator<(const Poly& o) const {
    auto it = terms_.begin(), jt = o.terms_.begin();
    GradedLexLess less;
    for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
      if (less(it->first, jt->first)) return true;
      if (less(jt->first, it->first)) return false;
      if (it->second != jt->second) return it->second < jt->second;
    }
    return it == terms_.end() && jt != o.terms_.end();
  }

  std::int64_t degree_in(Var v) const {
    std::int64_t d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      std::int64_t x = e[static_cast<int>(v)];
      if (first || x > d) d = x;
      first = false;
    }
    return is_zero() ? 0 : d;
  }

  std::int64_t low_degree_in(Var v) const {
    std::int64_t d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      std::int64_t x = e[static_cast<int>(v)];
      if (first || x < d) d = x;
      first = false;
    }
    return is_zero() ? 0 : d;
  }

  bool depends_on(Var v) const {
    for (const auto& [e, c] : terms_)
      if (e[static_cast<int>(v)] != 0) return true;
    return false;
  }

  // Coefficient of v^k, as a polynomial free of v.
  Poly coeff_of(Var v, std::int64_t k) const {
    Poly r;
    int iv = static_cast<int>(v);
    for (const auto& [e, c] : terms_) {
      if (e[iv] != k) continue;
      Exponents e2 = e;
      e2[iv] = 0;
      r.terms_[e2] = c;
    }
    return r;
  }

  // Per-variable minimum exponent over the support (0 for the zero poly).
  Exponents min_exponents() const {
    Exponents m = exp_zero();
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first) {
        m = e;
        first = false;
      } else {
        for (int i = 0; i < kNumVars; ++i) m[i] = std::min(m[i], e[i]);
      }
    }
    return m;
  }

  // Positive rational c with (*this)/c having coprime integer coefficients.
  Rational content() const {
    Rational c(0);
    for (const auto& [e, v] : terms_) c = rational_content_acc(c, v);
    return c == 0 ? Rational(1) : c;
  }

  bool has_integer_coeffs() const {
    for (const auto& [e, v] : terms_)
      if (!is_integer(v)) return false;
    return true;
  }

  // Exact division over the Laurent ring; nullopt when not divisible.
  // Cheap filters (per-variable degree windows, leading and trailing term
  // divisibility) reject most non-divisors before the reduction loop runs.
  std::optional<Poly> divide_exact(const Poly& d) const {
    if (d.is_zero()) throw err_zero_divisor();
    if (is_zero()) return zero();
    Exponents mn = min_exponents(), md = d.min_exponents();
    Poly a = shifted(exp_sub(exp_zero(), mn));
    Poly b = d.shifted(exp_sub(exp_zero(), md));
    for (int i = 0; i < kNumVars; ++i) {
      Var v = static_cast<Var>(i);
      if (a.degree_in(v) < b.degree_in(v)) return std::nullopt;
    }
    {
      const Exponents& ta = a.terms_.begin()->first;
      const Exponents& tb = b.terms_.begin()->first;
      for (int i = 0; i < kNumVars; ++i)
        if (ta[i] < tb[i]) return std::nullopt;
    }
    Poly q, r = a;
    auto [eb, cb] = b.leading();
    while (!r.is_zero()) {
      auto [er, cr] = r.leading();
      Exponents de = exp_zero();
      for (int i = 0; i < kNumVars; ++i) {
        de[i] = er[i] - eb[i];
        if (de[i] < 0) return std::nullopt;
      }
      Poly t = monomial(cr / cb, de);
      q += t;
      r -= t * b;
    }
    return q.shifted(exp_sub(mn, md));
  }

  bool divisible_by(const Poly& d) const { return divide_exact(d).has_value(); }

  // Exact substitution var -> poly. Negative Laurent exponents require the
  // replacement to be a (single-term) monomial.
  Poly substituted(const std::map<Var, Poly>& rules) const {
    Poly out;
    for (const auto& [e, c] : terms_) {
      Poly term = constant(c);
      Exponents rest = e;
      for (const auto& [v, rep] : rules) {
        int iv = static_cast<int>(v);
        std::int64_t k = rest[iv];
        rest[iv] = 0;
        if (k == 0) continue;
        if (k < 0 && !rep.is_monomial()) {
          if (rep.is_zero()) throw err_singular_substitution(std::string(var_name(v)) + "^negative with zero");
          throw err_unsupported_substitution(std::string(var_name(v)) + "^negative needs a monomial image");
        }
        term *= rep.pow(k);
      }
      out += term.shifted(rest);  // rest carries the exponents of unsubstituted variables
    }
    return out;
  }

  // Evaluate with every variable bound to a rational.
  Rational evaluate(const std::array<Rational, kNumVars>& vals) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (int i = 0; i < kNumVars; ++i)
        if (e[i] != 0) {
          if (vals[i] == 0 && e[i] < 0) throw err_singular_substitution("0^negative");
          t *= pow_rational(vals[i], e[i]);
        }
      acc += t;
    }
    return acc;
  }

  std::size_t term_count() const { return terms_.size(); }

  // Canonical text form (golden-file format): terms in descending canonical
  // order, each `coeff*q^e1*c^e2*...` with variables in universe order.
  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!first) os << " + ";
      first = false;
      os << to_string(it->second);
      for (int i = 0; i < kNumVars; ++i)
        if (it->first[i] != 0) os << "*" << var_name(static_cast<Var>(i)) << "^" << it->first[i];
    }
    return os.str();
  }

  // Compact display form used inside denominator brackets: ascending order,
  // juxtaposed variables with q printed last, e.g. "1-cq^2".
  std::string str_compact() const {
    if (is_zero()) return "0";
    static const Var display_order[kNumVars] = {Var::c, Var::a, Var::b, Var::x,  Var::y,
                                                Var::t, Var::s, Var::nu, Var::alpha, Var::q};
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Rational coeff = c;
      bool neg = coeff < 0;
      if (neg) coeff = -coeff;
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? "-" : "+");
      first = false;
      bool has_var = e != exp_zero();
      if (!has_var || coeff != 1) os << to_string(coeff);
      for (Var v : display_order) {
        std::int64_t k = e[static_cast<int>(v)];
        if (k == 0) continue;
        os << var_name(v);
        if (k != 1) os << "^" << k;
      }
    }
    return os.str();
  }

private:
  void add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TermMap terms_;
};

inline Poly operator*(const Poly& p, const Rational& r) { return p.scaled(r); }
inline Poly operator*(const Rational& r, const Poly& p) { return p.scaled(r); }

inline Poly var_poly(Var v, std::int64_t e = 1) { return Poly::variable(v, e); }

// q^k as a monomial, with a base direction (+1 for base q, -1 for base 1/q).
inline Poly q_power(std::int64_t k, int qdir = 1) { return Poly::variable(Var::q, checked_mul(k, qdir)); }

// binom(n,2) = n(n-1)/2, used in q-exponents.
inline std::int64_t binom2(std::int64_t n) { return n * (n - 1) / 2; }

// Sequence-symbol encoding: the i-th entry of a symbolic coefficient table is
// var^(32^i). Injective for products whose per-entry multiplicity stays
// below 32 and index below 12, which covers every desk-scale check.
inline Poly seq_symbol(Var v, int index) {
  if (index < 0 || index > 12) throw QlError("seq-symbol-index");
  return Poly::variable(v, std::int64_t(1) << (5 * index));
}

}  // namespace qlommel

#endif

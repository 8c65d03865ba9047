#ifndef QLOMMEL_RATFUNC_HPP
#define QLOMMEL_RATFUNC_HPP

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "poly.hpp"

namespace qlommel {

// Quotient of polynomials with the denominator kept as a multiset of factors.
// The factors arising from the recurrences all lie in the family
// {1 - u*q^k} (plus linear factors like (nu+k) for the Bessel ratios), so
// trial division is the only simplification run; definitive equality is by
// cross-multiplication. Canonical form:
//   * each factor is monomial-free, content-free, lowest-term-positive;
//   * numerator has coprime integer coefficients and carries the sign;
//   * den_scalar > 0.
class RatFunc {
public:
  using FactorMap = std::map<Poly, int>;

  RatFunc() : num_(Poly::zero()), den_scalar_(1) {}
  /*implicit*/ RatFunc(const Poly& p) : num_(p), den_scalar_(1) { normalize(); }
  /*implicit*/ RatFunc(const Rational& r) : RatFunc(Poly::constant(r)) {}
  RatFunc(int n) : RatFunc(Rational(n)) {}

  RatFunc(Poly num, FactorMap den, Rational den_scalar = Rational(1))
      : num_(std::move(num)), den_(std::move(den)), den_scalar_(std::move(den_scalar)) {
    normalize();
  }

  static RatFunc zero() { return RatFunc(); }
  static RatFunc one() { return RatFunc(Poly::one()); }
  static RatFunc variable(Var v, std::int64_t e = 1) { return RatFunc(Poly::variable(v, e)); }

  // num / [f] convenience.
  static RatFunc fraction(const Poly& num, const Poly& den_factor) {
    FactorMap m;
    m[den_factor] = 1;
    return RatFunc(num, std::move(m));
  }

  const Poly& num() const { return num_; }
  const FactorMap& den_factors() const { return den_; }
  const Rational& den_scalar() const { return den_scalar_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.empty() && den_scalar_ == 1 && num_.is_one(); }
  bool is_poly() const { return den_.empty(); }

  // The value as a polynomial; throws unless the denominator is trivial up to
  // the scalar.
  Poly as_poly() const {
    if (!den_.empty()) throw QlError("not-a-polynomial");
    return num_.scaled(Rational(1) / den_scalar_);
  }

  Poly den_expanded() const {
    Poly d = Poly::one();
    for (const auto& [f, m] : den_)
      for (int i = 0; i < m; ++i) d *= f;
    return d;
  }

  bool is_rational_constant() const { return den_.empty() && num_.is_constant(); }
  Rational to_rational() const {
    if (!is_rational_constant()) throw QlError("not-a-constant");
    return num_.constant_value() / den_scalar_;
  }

  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    FactorMap lcm = a.den_;
    for (const auto& [f, m] : b.den_) {
      auto it = lcm.find(f);
      if (it == lcm.end())
        lcm[f] = m;
      else
        it->second = std::max(it->second, m);
    }
    Poly cofa = Poly::one(), cofb = Poly::one();
    for (const auto& [f, m] : lcm) {
      int ma = map_get(a.den_, f), mb = map_get(b.den_, f);
      for (int i = ma; i < m; ++i) cofa *= f;
      for (int i = mb; i < m; ++i) cofb *= f;
    }
    Poly num = a.num_ * cofa * Poly::constant(b.den_scalar_) + b.num_ * cofb * Poly::constant(a.den_scalar_);
    return RatFunc(std::move(num), std::move(lcm), a.den_scalar_ * b.den_scalar_);
  }

  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    FactorMap den = a.den_;
    for (const auto& [f, m] : b.den_) den[f] += m;
    return RatFunc(a.num_ * b.num_, std::move(den), a.den_scalar_ * b.den_scalar_);
  }

  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw err_zero_divisor();
    if (a.is_zero()) return zero();
    // a / b = a.num * Db / (sa * Da * sb^{-1} * b.num); push b's denominator
    // into the numerator and b's numerator into the factor multiset.
    FactorMap den = a.den_;
    den[b.num_] += 1;
    Poly num = a.num_ * b.den_expanded();
    return RatFunc(std::move(num), std::move(den), a.den_scalar_ / b.den_scalar_);
  }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc inverse() const { return one() / *this; }

  RatFunc pow(long long n) const {
    if (n < 0) return inverse().pow(-n);
    RatFunc acc = one(), base = *this;
    for (; n > 0; n >>= 1) {
      if (n & 1) acc *= base;
      if (n > 1) base *= base;
    }
    return acc;
  }

  // Equality by cross-multiplication (the denominators need not match as
  // multisets for two representations of the same value).
  bool equals(const RatFunc& o) const {
    if (num_ == o.num_ && den_ == o.den_ && den_scalar_ == o.den_scalar_) return true;
    Poly lhs = num_ * o.den_expanded() * Poly::constant(o.den_scalar_);
    Poly rhs = o.num_ * den_expanded() * Poly::constant(den_scalar_);
    return lhs == rhs;
  }
  bool operator==(const RatFunc& o) const { return equals(o); }
  bool operator!=(const RatFunc& o) const { return !equals(o); }

  bool depends_on(Var v) const {
    if (num_.depends_on(v)) return true;
    for (const auto& [f, m] : den_)
      if (f.depends_on(v)) return true;
    return false;
  }

  RatFunc substituted(const std::map<Var, Poly>& rules) const {
    Poly n = num_.substituted(rules);
    FactorMap den;
    Rational sc = den_scalar_;
    for (const auto& [f, m] : den_) {
      Poly g = f.substituted(rules);
      if (g.is_zero()) throw err_singular_substitution(f.str_compact());
      den[g] += m;
    }
    return RatFunc(std::move(n), std::move(den), sc);
  }

  Rational evaluate(const std::array<Rational, kNumVars>& vals) const {
    Rational n = num_.evaluate(vals);
    Rational d = den_scalar_;
    for (const auto& [f, m] : den_) {
      Rational fv = f.evaluate(vals);
      if (fv == 0) throw err_singular_substitution("denominator factor vanishes");
      d *= pow_rational(fv, m);
    }
    return n / d;
  }

  // Serialization: `num / [f1][f2]... * 1/scalar`, factor brackets in compact
  // display form, parts omitted when trivial.
  std::string str() const {
    std::ostringstream os;
    os << num_.str();
    if (!den_.empty()) {
      os << " / ";
      for (const auto& [f, m] : den_)
        for (int i = 0; i < m; ++i) os << "[" << f.str_compact() << "]";
    }
    if (den_scalar_ != 1) os << " * 1/" << to_string(den_scalar_);
    return os.str();
  }

private:
  static int map_get(const FactorMap& m, const Poly& k) {
    auto it = m.find(k);
    return it == m.end() ? 0 : it->second;
  }

  void normalize() {
    // Canonicalize factors: pull out monomial and content, fix sign by the
    // lowest term, fold units into numerator / scalar.
    FactorMap canon;
    for (auto& [f, m] : den_) {
      if (m == 0) continue;
      if (f.is_zero()) throw err_zero_divisor();
      Poly g = f;
      Exponents mono = g.min_exponents();
      if (mono != exp_zero()) {
        g = g.shifted(exp_sub(exp_zero(), mono));
        // 1/(q^mono * g)^m: numerator picks up q^{-mono*m}
        Exponents back = exp_zero();
        for (int i = 0; i < kNumVars; ++i) back[i] = checked_mul(mono[i], -std::int64_t(m));
        num_ = num_.shifted(back);
      }
      Rational c = g.content();
      if (g.terms().begin()->second < 0) c = -c;
      if (c != 1) {
        g = g.scaled(Rational(1) / c);
        den_scalar_ *= pow_rational(c, m);
      }
      if (g.is_constant()) {
        den_scalar_ *= pow_rational(g.constant_value(), m);
        if (den_scalar_ == 0) throw err_zero_divisor();
        continue;
      }
      canon[g] += m;
    }
    den_ = std::move(canon);

    if (num_.is_zero()) {
      den_.clear();
      den_scalar_ = 1;
      return;
    }

    // Trial division: cancel every factor that divides the numerator exactly.
    for (auto it = den_.begin(); it != den_.end();) {
      while (it->second > 0) {
        auto q = num_.divide_exact(it->first);
        if (!q) break;
        num_ = *q;
        --it->second;
      }
      it = it->second == 0 ? den_.erase(it) : std::next(it);
    }

    // Fold numerator content into the scalar; sign lives in the numerator.
    Rational c = num_.content();
    num_ = num_.scaled(Rational(1) / c);
    den_scalar_ /= c;
    if (den_scalar_ < 0) {
      den_scalar_ = -den_scalar_;
      num_ = -num_;
    }
  }

  Poly num_;
  FactorMap den_;
  Rational den_scalar_;
};

inline RatFunc operator+(const Poly& p, const RatFunc& r) { return RatFunc(p) + r; }
inline RatFunc operator*(const Poly& p, const RatFunc& r) { return RatFunc(p) * r; }

// The alpha -> infinity limit of a rational function whose numerator degree
// (in `v`) does not exceed its denominator degree: the ratio of leading
// coefficients, or 0 on strict degree deficit.
inline RatFunc limit_at_infinity(const RatFunc& r, Var v) {
  if (r.is_zero()) return RatFunc::zero();
  std::int64_t dn = r.num().degree_in(v);
  std::int64_t dd = 0;
  for (const auto& [f, m] : r.den_factors()) dd += checked_mul(f.degree_in(v), m);
  if (dn > dd) throw err_divergent_limit();
  if (dn < dd) return RatFunc::zero();
  Poly lead_num = r.num().coeff_of(v, dn);
  RatFunc::FactorMap lead_den;
  for (const auto& [f, m] : r.den_factors()) lead_den[f.coeff_of(v, f.degree_in(v))] += m;
  return RatFunc(std::move(lead_num), std::move(lead_den), r.den_scalar());
}

inline RatFunc limit_at_alpha_infinity(const RatFunc& r) { return limit_at_infinity(r, Var::alpha); }

// ratfunc_normalize entry point mirroring the spec operation: build from a
// numerator and a factor multiset (given as a list, possibly with repeats).
inline RatFunc ratfunc_normalize(const Poly& num, const std::vector<Poly>& den_factors) {
  RatFunc::FactorMap m;
  for (const Poly& f : den_factors) m[f] += 1;
  return RatFunc(num, std::move(m));
}

}  // namespace qlommel

#endif

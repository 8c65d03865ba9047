#ifndef QLOMMEL_SERIES_HPP
#define QLOMMEL_SERIES_HPP

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "ratfunc.hpp"

namespace qlommel {

// Truncated formal power series in one distinguished variable with RatFunc
// coefficients (free of that variable). Arithmetic on mixed orders truncates
// to the smaller order and records it; nothing ever extrapolates.
class Series {
public:
  Series(Var v, int order) : var_(v), coeff_(order + 1, RatFunc::zero()) {
    if (order < 0) throw QlError("negative-series-order");
  }

  static Series zero(Var v, int order) { return Series(v, order); }

  static Series one(Var v, int order) {
    Series s(v, order);
    s.coeff_[0] = RatFunc::one();
    return s;
  }

  static Series from_coeffs(Var v, std::vector<RatFunc> coeffs) {
    Series s(v, static_cast<int>(coeffs.size()) - 1);
    s.coeff_ = std::move(coeffs);
    s.check_coeffs();
    return s;
  }

  // Truncation of a polynomial; requires nonnegative exponents in `v`.
  static Series from_poly(const Poly& p, Var v, int order) {
    if (p.low_degree_in(v) < 0) throw QlError("negative-valuation");
    Series s(v, order);
    for (int k = 0; k <= order; ++k) s.coeff_[k] = RatFunc(p.coeff_of(v, k));
    return s;
  }

  // Taylor expansion of a rational function in `v` about 0. The denominator
  // (after clearing monomial content) must have invertible constant term.
  static Series from_ratfunc(const RatFunc& r, Var v, int order) {
    if (r.is_zero()) return zero(v, order);
    Poly num = r.num();
    Poly den = r.den_expanded().scaled(r.den_scalar());
    std::int64_t ln = num.low_degree_in(v), ld = den.low_degree_in(v);
    std::int64_t val = ln - ld;
    if (val < 0) throw QlError("negative-valuation");
    Exponents sh = exp_zero();
    sh[static_cast<int>(v)] = -ln;
    num = num.shifted(sh);
    sh[static_cast<int>(v)] = -ld;
    den = den.shifted(sh);
    Series q = from_poly(num, v, order) / from_poly(den, v, order);
    return val == 0 ? q : q.shifted_up(static_cast<int>(val));
  }

  Var var() const { return var_; }
  int order() const { return static_cast<int>(coeff_.size()) - 1; }

  const RatFunc& operator[](int k) const {
    if (k < 0 || k > order()) throw QlError("series-index");
    return coeff_[k];
  }
  void set(int k, RatFunc value) {
    if (value.depends_on(var_)) throw QlError("series-coefficient-depends-on-variable");
    coeff_.at(k) = std::move(value);
  }

  const std::vector<RatFunc>& coeffs() const { return coeff_; }

  Series truncated(int new_order) const {
    Series s(var_, std::min(new_order, order()));
    for (int k = 0; k <= s.order(); ++k) s.coeff_[k] = coeff_[k];
    return s;
  }

  Series operator-() const {
    Series s = *this;
    for (auto& c : s.coeff_) c = -c;
    return s;
  }

  friend Series operator+(const Series& a, const Series& b) {
    a.require_same_var(b);
    Series s(a.var_, std::min(a.order(), b.order()));
    for (int k = 0; k <= s.order(); ++k) s.coeff_[k] = a.coeff_[k] + b.coeff_[k];
    return s;
  }

  friend Series operator-(const Series& a, const Series& b) { return a + (-b); }

  friend Series operator*(const Series& a, const Series& b) {
    a.require_same_var(b);
    Series s(a.var_, std::min(a.order(), b.order()));
    for (int i = 0; i <= s.order(); ++i) {
      if (a.coeff_[i].is_zero()) continue;
      for (int j = 0; i + j <= s.order(); ++j) {
        if (b.coeff_[j].is_zero()) continue;
        s.coeff_[i + j] += a.coeff_[i] * b.coeff_[j];
      }
    }
    return s;
  }

  // f/g with invertible constant term of g.
  friend Series operator/(const Series& f, const Series& g) {
    f.require_same_var(g);
    if (g.coeff_.empty() || g.coeff_[0].is_zero()) throw err_non_invertible_series();
    Series h(f.var_, std::min(f.order(), g.order()));
    for (int n = 0; n <= h.order(); ++n) {
      RatFunc acc = f.coeff_[n];
      for (int k = 1; k <= n; ++k) {
        if (g.coeff_[k].is_zero() || h.coeff_[n - k].is_zero()) continue;
        acc -= g.coeff_[k] * h.coeff_[n - k];
      }
      h.coeff_[n] = acc / g.coeff_[0];
    }
    return h;
  }

  Series inverse() const { return one(var_, order()) / *this; }

  Series scaled(const RatFunc& r) const {
    Series s = *this;
    for (auto& c : s.coeff_) c = c * r;
    return s;
  }

  // Multiply by var^k (k >= 0); top coefficients fall off the truncation.
  Series shifted_up(int k) const {
    Series s(var_, order());
    for (int i = 0; i + k <= order(); ++i) s.coeff_[i + k] = coeff_[i];
    return s;
  }

  // Divide by var^k; the dropped low-order coefficients must vanish.
  Series shifted_down(int k) const {
    if (k > order()) throw QlError("series-shift");
    for (int i = 0; i < k; ++i)
      if (!coeff_[i].is_zero()) throw QlError("negative-valuation");
    Series s(var_, order() - k);
    for (int i = k; i <= order(); ++i) s.coeff_[i - k] = coeff_[i];
    return s;
  }

  // Substitute the series variable: sum c_n z^n -> sum c_n m^n v^{dn},
  // exact through the returned order d*(N+1)-1.
  Series composed_monomial(const RatFunc& m, int d) const {
    if (d <= 0) throw QlError("compose-power");
    Series s(var_, d * (order() + 1) - 1);
    RatFunc mk = RatFunc::one();
    for (int n = 0; n <= order(); ++n) {
      s.coeff_[d * n] = coeff_[n] * mk;
      mk = mk * m;
    }
    return s;
  }

  Series substituted(const std::map<Var, Poly>& rules) const {
    for (const auto& [v, p] : rules)
      if (v == var_ || p.depends_on(var_)) throw err_unsupported_substitution("series variable in rules");
    Series s = *this;
    for (auto& c : s.coeff_) c = c.substituted(rules);
    return s;
  }

  bool operator==(const Series& o) const {
    if (var_ != o.var_ || order() != o.order()) return false;
    for (int k = 0; k <= order(); ++k)
      if (!(coeff_[k] == o.coeff_[k])) return false;
    return true;
  }

  // Agreement of coefficients through min(order) as values; -1 when all agree,
  // otherwise the first disagreeing exponent.
  int first_difference(const Series& o) const {
    int n = std::min(order(), o.order());
    for (int k = 0; k <= n; ++k)
      if (!(coeff_[k] == o.coeff_[k])) return k;
    return -1;
  }

  std::string str() const {
    std::ostringstream os;
    os << "O(" << var_name(var_) << "^" << (order() + 1) << ")";
    for (int k = order(); k >= 0; --k) {
      if (coeff_[k].is_zero()) continue;
      os << (k == order() ? " " : " + ") << "(" << coeff_[k].str() << ")*" << var_name(var_) << "^" << k;
    }
    return os.str();
  }

private:
  void require_same_var(const Series& o) const {
    if (var_ != o.var_) throw QlError("series-variable-mismatch");
  }
  void check_coeffs() const {
    for (const auto& c : coeff_)
      if (c.depends_on(var_)) throw QlError("series-coefficient-depends-on-variable");
  }

  Var var_;
  std::vector<RatFunc> coeff_;
};

inline Series series_mul(const Series& a, const Series& b) { return a * b; }
inline Series series_div(const Series& f, const Series& g) { return f / g; }

}  // namespace qlommel

#endif

#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "dicrit/series.hpp"

namespace dicrit {

/// Element of K{x}[y]: a polynomial in y whose coefficients are truncated
/// series in x sharing one truncation bound.
template <Field K>
class WPoly {
 public:
  struct Monomial {
    long x_exp;
    long y_exp;
    K coeff;
  };

  WPoly() = default;
  explicit WPoly(std::map<long, TruncSeries<K>> y_coeffs, long x_valid_below = kUnbounded);
  static WPoly from_monomials(const std::vector<Monomial>& terms, long x_valid_below = kUnbounded);
  static WPoly x() { return from_monomials({{1, 0, K(1)}}); }
  static WPoly y() { return from_monomials({{0, 1, K(1)}}); }
  static WPoly constant(const K& c) { return from_monomials({{0, 0, c}}); }
  static WPoly monomial(const K& c, long x_exp, long y_exp) { return from_monomials({{x_exp, y_exp, c}}); }

  long x_valid_below() const { return x_valid_below_; }
  bool is_exact() const { return x_valid_below_ >= kUnbounded; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long y_degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
  /// Coefficient of y^d is the constant series 1.
  bool is_monic() const;
  TruncSeries<K> coeff(long j) const;
  const std::map<long, TruncSeries<K>>& y_coeffs() const { return coeffs_; }
  std::vector<Monomial> monomials() const;
  /// Least x-order over all coefficients (x_valid_below when zero).
  long x_order() const;
  /// Constant term (zero when H(0,0) = 0).
  K constant_term() const;

  WPoly x_truncated(long m) const;
  WPoly derive_x() const;
  WPoly derive_y() const;
  WPoly scaled(const K& c) const;

  template <class F>
  auto map_coeffs(F&& f) const -> WPoly<std::decay_t<decltype(f(std::declval<const K&>()))>> {
    using L = std::decay_t<decltype(f(std::declval<const K&>()))>;
    std::map<long, TruncSeries<L>> out;
    for (const auto& [j, s] : coeffs_) out.emplace(j, s.map_coeffs(f));
    return WPoly<L>(std::move(out), x_valid_below_);
  }

  WPoly operator-() const;
  WPoly& operator+=(const WPoly& o);
  WPoly& operator-=(const WPoly& o);
  friend WPoly operator+(WPoly a, const WPoly& b) { return a += b; }
  friend WPoly operator-(WPoly a, const WPoly& b) { return a -= b; }
  friend WPoly operator*(const WPoly& a, const WPoly& b) { return wpoly_mul(a, b); }
  friend bool operator==(const WPoly& a, const WPoly& b) {
    return a.x_valid_below_ == b.x_valid_below_ && a.coeffs_ == b.coeffs_;
  }

  std::string str() const;

 private:
  void normalize();

  std::map<long, TruncSeries<K>> coeffs_;
  long x_valid_below_ = kUnbounded;
};

template <Field K>
WPoly<K> wpoly_mul(const WPoly<K>& a, const WPoly<K>& b);

template <Field K>
WPoly<K> pow(const WPoly<K>& a, unsigned exponent);

WPoly<RatFunc> embed(const WPoly<Rational>& p);

extern template class WPoly<Rational>;
extern template class WPoly<RatFunc>;

}  // namespace dicrit

#pragma once

#include <limits>
#include <map>
#include <string>
#include <utility>

#include "dicrit/rational.hpp"

namespace dicrit {

/// Univariate polynomial over Q in the family parameter u. Sparse, with no
/// stored zero coefficients.
class UPoly {
 public:
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  UPoly() = default;
  UPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::map<int, Rational> coeffs);

  static UPoly monomial(const Rational& c, int degree);
  static UPoly variable() { return monomial(Rational(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0); }
  bool is_monomial() const { return coeffs_.size() == 1; }
  int degree() const { return coeffs_.empty() ? kZeroDegree : coeffs_.rbegin()->first; }
  /// Lowest exponent with a nonzero coefficient; kZeroDegree for zero.
  int low_degree() const { return coeffs_.empty() ? kZeroDegree : coeffs_.begin()->first; }
  Rational leading() const;
  Rational coeff(int degree) const;
  const std::map<int, Rational>& terms() const { return coeffs_; }

  Rational eval(const Rational& u) const;
  /// p(c*u)
  UPoly scale_variable(const Rational& c) const;
  UPoly monic() const;
  /// Divides by u^k; requires every exponent >= k.
  UPoly shift_down(int k) const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& c);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string str(const std::string& var = "u") const;

 private:
  std::map<int, Rational> coeffs_;
};

/// Euclidean division a = q*b + r with deg r < deg b.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

}  // namespace dicrit

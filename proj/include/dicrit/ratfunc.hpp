#pragma once

#include <string>

#include "dicrit/rational.hpp"
#include "dicrit/upoly.hpp"

namespace dicrit {

/// Element of Q(u), kept reduced: gcd(num, den) = 1 and den monic.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(long c) : RatFunc(Rational(c)) {}         // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RatFunc(const UPoly& p) : num_(p), den_(Rational(1)) {}     // NOLINT
  RatFunc(const UPoly& num, const UPoly& den);

  static RatFunc variable() { return RatFunc(UPoly::variable()); }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }
  bool has_monomial_denominator() const { return den_.is_monomial(); }

  /// Throws PoleAtPoint when den(u0) = 0.
  Rational eval(const Rational& u0) const;
  /// f(c*u)
  RatFunc scale_variable(const Rational& c) const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str() const;

 private:
  void normalize();

  UPoly num_;
  UPoly den_;
};

}  // namespace dicrit

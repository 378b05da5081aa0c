#include "dicrit/ratfunc.hpp"

#include "dicrit/errors.hpp"

namespace dicrit {

RatFunc::RatFunc(const UPoly& num, const UPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw PreconditionFailed("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = UPoly(Rational(1));
    return;
  }
  if (den_.degree() > 0) {
    UPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  const Rational lc = den_.leading();
  if (!lc.is_one()) {
    const Rational inv = Rational(1) / lc;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

Rational RatFunc::eval(const Rational& u0) const {
  const Rational d = den_.eval(u0);
  if (d.is_zero()) throw PoleAtPoint("denominator " + den_.str() + " vanishes at u=" + u0.str());
  return num_.eval(u0) / d;
}

RatFunc RatFunc::scale_variable(const Rational& c) const {
  return RatFunc(num_.scale_variable(c), den_.scale_variable(c));
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
    // Shared denominator may now cancel against the sum.
    if (den_.degree() > 0) normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) {
    *this = RatFunc();
    return *this;
  }
  if (is_polynomial() && o.is_polynomial()) {
    num_ = num_ * o.num_;
    return *this;
  }
  // Cross-cancel before multiplying so intermediate degrees stay small.
  const UPoly g1 = gcd(num_, o.den_);
  const UPoly g2 = gcd(o.num_, den_);
  UPoly n1 = g1.degree() > 0 ? divmod(num_, g1).first : num_;
  UPoly d2 = g1.degree() > 0 ? divmod(o.den_, g1).first : o.den_;
  UPoly n2 = g2.degree() > 0 ? divmod(o.num_, g2).first : o.num_;
  UPoly d1 = g2.degree() > 0 ? divmod(den_, g2).first : den_;
  num_ = n1 * n2;
  den_ = d1 * d2;
  const Rational lc = den_.leading();
  if (!lc.is_one()) {
    const Rational inv = Rational(1) / lc;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw PreconditionFailed("division by zero rational function");
  RatFunc inv;
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  inv.normalize();
  return *this *= inv;
}

std::string RatFunc::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace dicrit

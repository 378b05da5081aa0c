#include "dicrit/upoly.hpp"

#include <algorithm>
#include <sstream>

#include "dicrit/errors.hpp"

namespace dicrit {

UPoly::UPoly(const Rational& c) {
  if (!c.is_zero()) coeffs_.emplace(0, c);
}

UPoly::UPoly(std::map<int, Rational> coeffs) : coeffs_(std::move(coeffs)) {
  std::erase_if(coeffs_, [](const auto& kv) { return kv.second.is_zero(); });
}

UPoly UPoly::monomial(const Rational& c, int degree) {
  UPoly p;
  if (!c.is_zero()) p.coeffs_.emplace(degree, c);
  return p;
}

Rational UPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.rbegin()->second; }

Rational UPoly::coeff(int degree) const {
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational UPoly::eval(const Rational& u) const {
  // Horner over the sparse exponent gaps.
  Rational acc(0);
  int prev = degree();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= pow(u, static_cast<unsigned>(prev - it->first));
    acc += it->second;
    prev = it->first;
  }
  if (!coeffs_.empty()) acc *= pow(u, static_cast<unsigned>(prev));
  return acc;
}

UPoly UPoly::scale_variable(const Rational& c) const {
  std::map<int, Rational> out;
  for (const auto& [d, a] : coeffs_) out.emplace(d, a * pow(c, static_cast<unsigned>(d)));
  return UPoly(std::move(out));
}

UPoly UPoly::monic() const {
  if (coeffs_.empty()) return {};
  const Rational lc = leading();
  if (lc.is_one()) return *this;
  UPoly out;
  for (const auto& [d, a] : coeffs_) out.coeffs_.emplace(d, a / lc);
  return out;
}

UPoly UPoly::shift_down(int k) const {
  UPoly out;
  for (const auto& [d, a] : coeffs_) {
    if (d < k) throw PreconditionFailed("shift_down below zero exponent");
    out.coeffs_.emplace(d - k, a);
  }
  return out;
}

UPoly UPoly::operator-() const {
  UPoly out = *this;
  for (auto& kv : out.coeffs_) kv.second = -kv.second;
  return out;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  for (const auto& [d, a] : o.coeffs_) {
    auto [it, inserted] = coeffs_.try_emplace(d, a);
    if (!inserted) {
      it->second += a;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) { return *this += -o; }

UPoly operator*(const UPoly& a, const UPoly& b) {
  UPoly out;
  for (const auto& [da, ca] : a.coeffs_) {
    for (const auto& [db, cb] : b.coeffs_) {
      auto [it, inserted] = out.coeffs_.try_emplace(da + db, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::erase_if(out.coeffs_, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

UPoly operator*(UPoly a, const Rational& c) {
  if (c.is_zero()) return {};
  for (auto& kv : a.coeffs_) kv.second *= c;
  return a;
}

std::string UPoly::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [d, c] = *it;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 0) {
      os << mag.str();
      continue;
    }
    if (!mag.is_one()) os << mag.str() << "*";
    os << var;
    if (d != 1) os << "^" << d;
  }
  return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw PreconditionFailed("polynomial division by zero");
  UPoly q;
  UPoly r = a;
  const int db = b.degree();
  const Rational lb = b.leading();
  while (!r.is_zero() && r.degree() >= db) {
    UPoly t = UPoly::monomial(r.leading() / lb, r.degree() - db);
    q += t;
    r -= t * b;
  }
  return {q, r};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  // Monomial shortcut: gcd(u^k, p) is a power of u.
  auto monomial_gcd = [](const UPoly& mono, const UPoly& other) {
    return UPoly::monomial(Rational(1), std::min(mono.degree(), other.low_degree()));
  };
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_monomial()) return monomial_gcd(a, b);
  if (b.is_monomial()) return monomial_gcd(b, a);
  UPoly x = a.monic();
  UPoly y = b.monic();
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

}  // namespace dicrit

#include "dicrit/wpoly.hpp"

#include <sstream>

#include "dicrit/errors.hpp"

namespace dicrit {

template <Field K>
WPoly<K>::WPoly(std::map<long, TruncSeries<K>> y_coeffs, long x_valid_below)
    : coeffs_(std::move(y_coeffs)), x_valid_below_(x_valid_below) {
  for (const auto& kv : coeffs_) {
    if (kv.first < 0) throw PreconditionFailed("negative y exponent");
    x_valid_below_ = std::min(x_valid_below_, kv.second.valid_below());
  }
  normalize();
}

template <Field K>
void WPoly<K>::normalize() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second.valid_below() != x_valid_below_) it->second = it->second.truncated(x_valid_below_);
    if (it->second.is_zero()) {
      it = coeffs_.erase(it);
    } else {
      ++it;
    }
  }
}

template <Field K>
WPoly<K> WPoly<K>::from_monomials(const std::vector<Monomial>& terms, long x_valid_below) {
  std::map<long, typename TruncSeries<K>::Coeffs> acc;
  for (const auto& m : terms) {
    if (m.x_exp < 0 || m.y_exp < 0) throw PreconditionFailed("negative monomial exponent");
    auto& row = acc[m.y_exp];
    auto [it, inserted] = row.try_emplace(m.x_exp, m.coeff);
    if (!inserted) it->second += m.coeff;
  }
  std::map<long, TruncSeries<K>> out;
  for (auto& [j, row] : acc) out.emplace(j, TruncSeries<K>(std::move(row), x_valid_below));
  return WPoly(std::move(out), x_valid_below);
}

template <Field K>
bool WPoly<K>::is_monic() const {
  if (coeffs_.empty()) return false;
  const auto& lead = coeffs_.rbegin()->second;
  return lead.terms().size() == 1 && lead.terms().begin()->first == 0 &&
         lead.terms().begin()->second == K(1);
}

template <Field K>
TruncSeries<K> WPoly<K>::coeff(long j) const {
  auto it = coeffs_.find(j);
  if (it == coeffs_.end()) return TruncSeries<K>({}, x_valid_below_);
  return it->second;
}

template <Field K>
std::vector<typename WPoly<K>::Monomial> WPoly<K>::monomials() const {
  std::vector<Monomial> out;
  for (const auto& [j, s] : coeffs_) {
    for (const auto& [i, c] : s.terms()) out.push_back({i, j, c});
  }
  return out;
}

template <Field K>
long WPoly<K>::x_order() const {
  long best = x_valid_below_;
  for (const auto& kv : coeffs_) best = std::min(best, kv.second.ord_or_bound());
  return best;
}

template <Field K>
K WPoly<K>::constant_term() const {
  auto it = coeffs_.find(0);
  if (it == coeffs_.end() || x_valid_below_ == 0) return K(0);
  return it->second.coeff(0);
}

template <Field K>
WPoly<K> WPoly<K>::x_truncated(long m) const {
  WPoly out = *this;
  out.x_valid_below_ = std::min(m, x_valid_below_);
  out.normalize();
  return out;
}

template <Field K>
WPoly<K> WPoly<K>::derive_x() const {
  std::map<long, TruncSeries<K>> out;
  for (const auto& [j, s] : coeffs_) out.emplace(j, s.derive());
  const long bound = is_exact() ? kUnbounded : std::max(0L, x_valid_below_ - 1);
  return WPoly(std::move(out), bound);
}

template <Field K>
WPoly<K> WPoly<K>::derive_y() const {
  std::map<long, TruncSeries<K>> out;
  for (const auto& [j, s] : coeffs_) {
    if (j > 0) out.emplace(j - 1, s.scaled(K(j)));
  }
  return WPoly(std::move(out), x_valid_below_);
}

template <Field K>
WPoly<K> WPoly<K>::scaled(const K& c) const {
  std::map<long, TruncSeries<K>> out;
  for (const auto& [j, s] : coeffs_) out.emplace(j, s.scaled(c));
  return WPoly(std::move(out), x_valid_below_);
}

template <Field K>
WPoly<K> WPoly<K>::operator-() const {
  return scaled(K(-1));
}

template <Field K>
WPoly<K>& WPoly<K>::operator+=(const WPoly& o) {
  x_valid_below_ = std::min(x_valid_below_, o.x_valid_below_);
  for (const auto& [j, s] : o.coeffs_) {
    auto [it, inserted] = coeffs_.try_emplace(j, s);
    if (!inserted) it->second += s;
  }
  normalize();
  return *this;
}

template <Field K>
WPoly<K>& WPoly<K>::operator-=(const WPoly& o) {
  return *this += -o;
}

template <Field K>
WPoly<K> wpoly_mul(const WPoly<K>& a, const WPoly<K>& b) {
  const long bound = std::min(bound_add(a.x_valid_below(), b.x_order()),
                              bound_add(b.x_valid_below(), a.x_order()));
  std::map<long, TruncSeries<K>> out;
  for (const auto& [ja, sa] : a.y_coeffs()) {
    for (const auto& [jb, sb] : b.y_coeffs()) {
      TruncSeries<K> prod = (sa * sb).truncated(bound);
      auto [it, inserted] = out.try_emplace(ja + jb, prod);
      if (!inserted) it->second += prod;
    }
  }
  // Products of exact pieces carry an unbounded validity; clamp to the common bound.
  for (auto& kv : out) kv.second = TruncSeries<K>(kv.second.terms(), bound);
  return WPoly<K>(std::move(out), bound);
}

template <Field K>
WPoly<K> pow(const WPoly<K>& a, unsigned exponent) {
  WPoly<K> result = WPoly<K>::constant(K(1));
  WPoly<K> base = a;
  while (exponent != 0) {
    if (exponent & 1U) result = wpoly_mul(result, base);
    exponent >>= 1U;
    if (exponent != 0) base = wpoly_mul(base, base);
  }
  return result;
}

WPoly<RatFunc> embed(const WPoly<Rational>& p) {
  return p.map_coeffs([](const Rational& c) { return RatFunc(c); });
}

template <Field K>
std::string WPoly<K>::str() const {
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    for (const auto& [i, c] : it->second.terms()) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.str() << ")";
      if (i != 0) os << "*x^" << i;
      if (it->first != 0) os << "*y^" << it->first;
    }
  }
  if (first) os << "0";
  if (!is_exact()) os << " + O(x^" << x_valid_below_ << ")";
  return os.str();
}

template class WPoly<Rational>;
template class WPoly<RatFunc>;
template WPoly<Rational> wpoly_mul(const WPoly<Rational>&, const WPoly<Rational>&);
template WPoly<RatFunc> wpoly_mul(const WPoly<RatFunc>&, const WPoly<RatFunc>&);
template WPoly<Rational> pow(const WPoly<Rational>&, unsigned);
template WPoly<RatFunc> pow(const WPoly<RatFunc>&, unsigned);

}  // namespace dicrit

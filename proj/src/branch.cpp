#include "dicrit/branch.hpp"

#include <numeric>

#include "dicrit/errors.hpp"

namespace dicrit {

template <Field K>
void PuiseuxParam<K>::validate() const {
  if (n < 1) throw PreconditionFailed("ramification index must be positive");
  if (n == 1) return;
  if (!y.is_zero() && y.terms().begin()->first <= n) {
    throw PreconditionFailed("y-series exponent " + std::to_string(y.terms().begin()->first) +
                             " not above n = " + std::to_string(n) + " (tangent cone must be y = 0)");
  }
}

template <Field K>
CharLadder char_ladder(const PuiseuxParam<K>& p) {
  p.validate();
  CharLadder l;
  l.beta.push_back(p.n);
  l.e.push_back(p.n);
  l.nseq.push_back(1);
  for (const auto& [k, c] : p.y.terms()) {
    if (l.e.back() == 1) break;
    if (k % l.e.back() == 0) continue;
    const long e = std::gcd(l.e.back(), k);
    l.nseq.push_back(l.e.back() / e);
    l.beta.push_back(k);
    l.e.push_back(e);
  }
  if (l.e.back() != 1) {
    throw InsufficientTruncation("gcd chain stops at e = " + std::to_string(l.e.back()) +
                                 " with the stored exponents (non-primitive or too short)");
  }
  l.g = static_cast<long>(l.beta.size()) - 1;
  return l;
}

std::vector<long> semigroup_generators_closed_form(const CharLadder& l) {
  std::vector<long> v;
  if (l.beta.empty()) return v;
  v.push_back(l.beta[0]);
  if (l.g >= 1) v.push_back(l.beta[1]);
  for (long i = 2; i <= l.g; ++i) {
    long acc = l.beta[i];
    for (long j = 0; j <= i - 2; ++j) {
      const long num = (l.e[j] - l.e[j + 1]) * l.beta[j + 1];
      acc += num / l.e[i - 1];
    }
    v.push_back(acc);
  }
  return v;
}

Semigroup semigroup(const CharLadder& l) {
  Semigroup s;
  s.v.push_back(l.beta[0]);
  if (l.g >= 1) s.v.push_back(l.beta[1]);
  for (long i = 2; i <= l.g; ++i) {
    s.v.push_back(l.nseq[i - 1] * s.v[i - 1] + l.beta[i] - l.beta[i - 1]);
  }
  if (s.v != semigroup_generators_closed_form(l)) {
    throw PreconditionFailed("semigroup generator formulas disagree; ladder is inconsistent");
  }
  long mu = 1 - s.v[0];
  for (long i = 1; i <= l.g; ++i) mu += (l.nseq[i] - 1) * s.v[i];
  s.mu = mu;
  return s;
}

GammaTable::GammaTable(const Semigroup& s, long up_to) : mu_(s.mu) {
  const long top = std::max(up_to, s.mu);
  member_.assign(static_cast<std::size_t>(top + 1), false);
  member_[0] = true;
  for (long m = 1; m <= top; ++m) {
    for (long g : s.v) {
      if (g <= m && member_[static_cast<std::size_t>(m - g)]) {
        member_[static_cast<std::size_t>(m)] = true;
        break;
      }
    }
  }
}

bool GammaTable::contains(long m) const {
  if (m < 0) return false;
  if (m >= mu_) return true;
  return member_[static_cast<std::size_t>(m)];
}

bool gamma_contains(const Semigroup& s, long m) {
  if (m < 0) throw PreconditionFailed("semigroup membership queried for a negative integer");
  return GammaTable(s, m).contains(m);
}

template <Field K>
PuiseuxParam<K> tschirnhausen_normalize(const PuiseuxParam<K>& p) {
  typename TruncSeries<K>::Coeffs kept;
  for (const auto& [k, c] : p.y.terms()) {
    if (k % p.n != 0) kept.emplace(k, c);
  }
  return {p.n, TruncSeries<K>(std::move(kept), p.y.valid_below())};
}

template <Field K>
bool is_tschirnhausen_normal(const PuiseuxParam<K>& p) {
  for (const auto& kv : p.y.terms()) {
    if (kv.first % p.n == 0) return false;
  }
  return true;
}

ZariskiResult zariski_invariant(const PuiseuxParam<Rational>& p) {
  if (!is_tschirnhausen_normal(p)) {
    throw PreconditionFailed("zariski_invariant needs a Tschirnhausen-normal parameterization");
  }
  const CharLadder l = char_ladder(p);
  const Semigroup s = semigroup(l);
  const long v0 = s.v[0];
  const GammaTable gamma(s, s.mu);
  ZariskiResult r;
  // i + v0 outside Gamma forces i < mu - v0, so the search is finite.
  for (const auto& [i, c] : p.y.terms()) {
    if (i >= s.mu - v0) break;
    if (!gamma.contains(i + v0)) {
      r.lambda = i;
      return r;
    }
    const bool characteristic = std::find(l.beta.begin(), l.beta.end(), i) != l.beta.end();
    if (l.g >= 1 && i > l.beta[1] && !characteristic) r.flagged.push_back(i);
  }
  if (p.y.valid_below() < s.mu - v0) {
    throw InsufficientTruncation("Zariski invariant needs coefficients below " +
                                 std::to_string(s.mu - v0) + ", have " + bound_str(p.y.valid_below()));
  }
  return r;
}

std::vector<PuiseuxParam<Rational>> semiroot_params(const PuiseuxParam<Rational>& p, const CharLadder& l) {
  std::vector<PuiseuxParam<Rational>> out;
  for (long i = 1; i <= l.g + 1; ++i) {
    const long e = l.e[i - 1];
    if (i == l.g + 1) {
      out.push_back(p);
      break;
    }
    TruncSeries<Rational>::Coeffs eta;
    for (const auto& [k, c] : p.y.terms()) {
      if (k >= l.beta[i]) break;
      eta.emplace(k / e, c);
    }
    out.push_back({p.n / e, TruncSeries<Rational>(std::move(eta), kUnbounded)});
  }
  return out;
}

PuiseuxParam<Rational> primitive_reduce(const PuiseuxParam<Rational>& p) {
  long d = p.n;
  for (const auto& kv : p.y.terms()) d = std::gcd(d, kv.first);
  if (d <= 1) return p;
  TruncSeries<Rational>::Coeffs out;
  for (const auto& [k, c] : p.y.terms()) out.emplace(k / d, c);
  const long bound = p.y.is_exact() ? kUnbounded : (p.y.valid_below() + d - 1) / d;
  return {p.n / d, TruncSeries<Rational>(std::move(out), bound)};
}

template struct PuiseuxParam<Rational>;
template struct PuiseuxParam<RatFunc>;
template CharLadder char_ladder(const PuiseuxParam<Rational>&);
template CharLadder char_ladder(const PuiseuxParam<RatFunc>&);
template PuiseuxParam<Rational> tschirnhausen_normalize(const PuiseuxParam<Rational>&);
template PuiseuxParam<RatFunc> tschirnhausen_normalize(const PuiseuxParam<RatFunc>&);
template bool is_tschirnhausen_normal(const PuiseuxParam<Rational>&);
template bool is_tschirnhausen_normal(const PuiseuxParam<RatFunc>&);

}  // namespace dicrit

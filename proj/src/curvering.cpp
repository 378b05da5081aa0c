#include "dicrit/curvering.hpp"

#include "dicrit/errors.hpp"

namespace dicrit {

template <Field K>
TruncSeries<K> pullback(const WPoly<K>& h, const PuiseuxParam<K>& p) {
  const long x_bound = h.is_exact() ? kUnbounded : h.x_valid_below() * p.n;
  auto lift = [&](long j) { return h.coeff(j).substitute_power(p.n).truncated(x_bound); };
  if (h.is_zero()) return TruncSeries<K>({}, x_bound);
  long j = h.y_degree();
  TruncSeries<K> acc = lift(j);
  for (--j; j >= 0; --j) acc = acc * p.y + lift(j);
  return acc;
}

template <Field K>
long intersection_multiplicity(const PuiseuxParam<K>& p, const WPoly<K>& h) {
  return pullback(h, p).ord().require("intersection multiplicity");
}

template <Field K>
std::pair<WPoly<K>, WPoly<K>> ydiv(const WPoly<K>& a, const WPoly<K>& b) {
  if (!b.is_monic()) throw PreconditionFailed("ydiv divisor must be monic in y");
  const long db = b.y_degree();
  WPoly<K> q({}, std::min(a.x_valid_below(), b.x_valid_below()));
  WPoly<K> r = a;
  while (!r.is_zero() && r.y_degree() >= db) {
    const long shift = r.y_degree() - db;
    std::map<long, TruncSeries<K>> lead;
    lead.emplace(shift, r.coeff(r.y_degree()));
    WPoly<K> t(std::move(lead), r.x_valid_below());
    q += t;
    WPoly<K> next = r - t * b;
    // The leading term cancels exactly because b is monic.
    if (!next.is_zero() && next.y_degree() >= r.y_degree()) {
      throw PreconditionFailed("ydiv failed to reduce the y-degree");
    }
    r = std::move(next);
  }
  return {q, r};
}

template TruncSeries<Rational> pullback(const WPoly<Rational>&, const PuiseuxParam<Rational>&);
template TruncSeries<RatFunc> pullback(const WPoly<RatFunc>&, const PuiseuxParam<RatFunc>&);
template long intersection_multiplicity(const PuiseuxParam<Rational>&, const WPoly<Rational>&);
template long intersection_multiplicity(const PuiseuxParam<RatFunc>&, const WPoly<RatFunc>&);
template std::pair<WPoly<Rational>, WPoly<Rational>> ydiv(const WPoly<Rational>&, const WPoly<Rational>&);
template std::pair<WPoly<RatFunc>, WPoly<RatFunc>> ydiv(const WPoly<RatFunc>&, const WPoly<RatFunc>&);

}  // namespace dicrit

#pragma once

#include <utility>

#include "dicrit/branch.hpp"
#include "dicrit/wpoly.hpp"

namespace dicrit {

/// H(t^n, y(t)), by Horner in y. Unknown x-coefficients at exponents >= M
/// only reach t-exponents >= M*n; the bound is tracked through the products.
template <Field K>
TruncSeries<K> pullback(const WPoly<K>& h, const PuiseuxParam<K>& p);

/// ord_t of the pullback; InsufficientTruncation when only a ">= N" marker results.
template <Field K>
long intersection_multiplicity(const PuiseuxParam<K>& p, const WPoly<K>& h);

/// A = Q*B + R with deg_y R < deg_y B, for B monic in y.
template <Field K>
std::pair<WPoly<K>, WPoly<K>> ydiv(const WPoly<K>& a, const WPoly<K>& b);

template <Field K>
std::pair<WPoly<K>, WPoly<K>> partials(const WPoly<K>& f) {
  return {f.derive_x(), f.derive_y()};
}

}  // namespace dicrit

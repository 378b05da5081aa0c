#pragma once

#include <doctest.h>

#include <set>

#include "dicrit/golden.hpp"

namespace dicrit::testing {

using W = WPoly<Rational>;

inline W poly(std::initializer_list<W::Monomial> terms, long x_valid_below = kUnbounded) {
  return W::from_monomials(std::vector<W::Monomial>(terms), x_valid_below);
}

inline TruncSeries<Rational> series(std::initializer_list<std::pair<const long, Rational>> terms,
                                    long valid_below = kUnbounded) {
  return TruncSeries<Rational>(std::map<long, Rational>(terms), valid_below);
}

inline PuiseuxParam<Rational> param(long n, std::initializer_list<std::pair<const long, Rational>> terms,
                                    long valid_below = kUnbounded) {
  return {n, series(terms, valid_below)};
}

/// Semigroup elements below `bound`, by brute-force sums of generators.
inline std::set<long> enumerate_semigroup(const std::vector<long>& gens, long bound) {
  std::set<long> out{0};
  std::vector<long> frontier{0};
  while (!frontier.empty()) {
    const long m = frontier.back();
    frontier.pop_back();
    for (long g : gens) {
      if (m + g < bound && out.insert(m + g).second) frontier.push_back(m + g);
    }
  }
  return out;
}

inline RatFunc u_pow(int k) { return RatFunc(UPoly::monomial(Rational(1), k)); }

}  // namespace dicrit::testing

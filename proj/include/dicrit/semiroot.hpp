#pragma once

#include <map>
#include <vector>

#include "dicrit/branch.hpp"
#include "dicrit/curvering.hpp"

namespace dicrit {

/// Extended canonical system F_0 = x, F_1, ..., F_{g+1} of a branch, with its
/// numerical ladder and semigroup.
struct SemirootSystem {
  std::vector<WPoly<Rational>> F;
  CharLadder ladder;
  Semigroup sg;
  PuiseuxParam<Rational> source;

  long g() const { return ladder.g; }
  const WPoly<Rational>& curve() const { return F.back(); }
};

/// Res_z(z^m - x, y - eta(z)) as a polynomial in (x, y): the determinant of
/// multiplication by y - eta(z) on Q[[x]][y][z]/(z^m - x). When eta is
/// truncated below N the result is valid below x^ceil(N/m).
WPoly<Rational> minimal_polynomial(const TruncSeries<Rational>& eta, long m);

/// Determinant of a square matrix of polynomials in (x, y) by Bareiss
/// elimination; entries are given as WPoly and must be exact.
WPoly<Rational> bareiss_determinant(std::vector<std::vector<WPoly<Rational>>> m);

SemirootSystem canonical_semiroots(const PuiseuxParam<Rational>& p);

/// Sparse digits u_delta of H = sum u_delta F_0^d0 ... F_{g+1}^d{g+1}.
struct SemirootExpansion {
  std::map<std::vector<long>, Rational> terms;
  /// Digits with d0 >= x_valid_below are unknown (H was x-truncated).
  long x_valid_below = kUnbounded;
};

SemirootExpansion semiroot_expand(const SemirootSystem& s, const WPoly<Rational>& h);

/// Sum of u_delta * prod F_i^delta_i.
WPoly<Rational> resubstitute(const SemirootSystem& s, const SemirootExpansion& e);

/// min sum_{i<=g} delta_i v_i over the terms with delta_{g+1} = 0.
/// NoFiniteValue when H lies in <F>.
long value_from_expansion(const SemirootSystem& s, const SemirootExpansion& e);

/// The digit vector realizing value_from_expansion (unique by distinctness).
std::vector<long> leading_multi_index(const SemirootSystem& s, const SemirootExpansion& e);

}  // namespace dicrit

#pragma once

#include <optional>
#include <vector>

#include "dicrit/series.hpp"

namespace dicrit {

/// Branch parameterization (t^n, y(t)).
template <Field K>
struct PuiseuxParam {
  long n = 1;
  TruncSeries<K> y;

  long valid_below() const { return y.valid_below(); }
  /// Throws PreconditionFailed unless n >= 1 and (n = 1 or every stored exponent exceeds n).
  void validate() const;
  friend bool operator==(const PuiseuxParam&, const PuiseuxParam&) = default;
};

/// Characteristic exponents beta_0..beta_g with the gcd chain e and the
/// ratios n_i = e_{i-1} / e_i (n_0 = 1).
struct CharLadder {
  std::vector<long> beta;
  std::vector<long> e;
  std::vector<long> nseq;
  long g = 0;

  friend bool operator==(const CharLadder&, const CharLadder&) = default;
};

/// Minimal generators v_0..v_g and the conductor mu.
struct Semigroup {
  std::vector<long> v;
  long mu = 0;

  friend bool operator==(const Semigroup&, const Semigroup&) = default;
};

/// Throws InsufficientTruncation when the stored exponents never bring the
/// gcd chain down to 1.
template <Field K>
CharLadder char_ladder(const PuiseuxParam<K>& p);

/// Generators by the recursive rule, cross-checked against the closed sum;
/// conductor from the Milnor formula.
Semigroup semigroup(const CharLadder& l);

/// Closed-form generators (sum over the gcd chain) used as the cross-check.
std::vector<long> semigroup_generators_closed_form(const CharLadder& l);

/// Membership table for one semigroup, built up to a fixed bound.
class GammaTable {
 public:
  GammaTable(const Semigroup& s, long up_to);
  bool contains(long m) const;
  long bound() const { return static_cast<long>(member_.size()) - 1; }

 private:
  std::vector<bool> member_;
  long mu_;
};

bool gamma_contains(const Semigroup& s, long m);

template <Field K>
PuiseuxParam<K> tschirnhausen_normalize(const PuiseuxParam<K>& p);

template <Field K>
bool is_tschirnhausen_normal(const PuiseuxParam<K>& p);

struct ZariskiResult {
  /// nullopt means infinite (no exponent qualifies).
  std::optional<long> lambda;
  /// Exponents i > beta_1 with c_i != 0 and i + v_0 in Gamma that precede
  /// lambda; on such inputs the normal form beyond Tschirnhausen is not reached.
  std::vector<long> flagged;
};

/// Requires a Tschirnhausen-normal parameterization (PreconditionFailed otherwise).
ZariskiResult zariski_invariant(const PuiseuxParam<Rational>& p);

/// phi_1..phi_{g+1}: phi_i = (t^{beta_0/e_{i-1}}, sum_{k<beta_i} c_k t^{k/e_{i-1}}).
std::vector<PuiseuxParam<Rational>> semiroot_params(const PuiseuxParam<Rational>& p, const CharLadder& l);

/// Removes a common factor d from n and every stored exponent (t^d -> t).
/// The validity bound becomes ceil(N/d).
PuiseuxParam<Rational> primitive_reduce(const PuiseuxParam<Rational>& p);

}  // namespace dicrit

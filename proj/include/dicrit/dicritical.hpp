#pragma once

#include <functional>
#include <optional>
#include <string>

#include "dicrit/oneform.hpp"

namespace dicrit {

/// omega = H1 * omega_ij + dH2 over the semiroot system S.
struct DicriticalProblem {
  SemirootSystem S;
  long i = 0;
  long j = 1;
  WPoly<Rational> H1;
  WPoly<Rational> H2;

  /// Index bounds, degree bounds deg_y H < v0/e_j, H1 != 0, H2(0,0) = 0.
  void validate() const;
  OneForm<Rational> form() const;
  /// beta_0 / e_j
  long family_x_exp() const;
  /// beta_j / e_j, where the family parameter u sits.
  long family_u_exp() const;
  /// c_{beta_j} of the source parameterization.
  Rational source_u() const;
};

struct DicriticalVerdict {
  long i_h1 = 0;
  long v_sum = 0;
  /// nullopt when H2 = 0.
  std::optional<long> i_h2;
  bool dicritical = false;

  long lhs() const { return i_h1 + v_sum; }
};

/// I(F,H1) + v_i + v_j < I(F,H2).
DicriticalVerdict dicritical_test(const DicriticalProblem& p);

/// Exponent of F_j in the leading semiroot monomial of H1.
long gamma1j(const DicriticalProblem& p);

/// Distance between the pullback order k and the exponent k_ij of the
/// coefficient it determines: I(F_{j+1},H1) + (v_i + v_j - beta_j)/e_j - 1.
long solver_offset(const DicriticalProblem& p);

struct SeparatrixFamily {
  long x_exp = 1;
  long u_exp = 1;
  std::map<long, RatFunc> y_terms;
  /// Coefficients at exponents >= valid_below are not determined.
  long valid_below = 0;
  long gamma1j = 0;

  /// "constant", "polynomial", "monomial" (den = u^k) or "general".
  std::string denominator_shape() const;
  PuiseuxParam<RatFunc> param() const;
};

struct SolverOptions {
  /// Called once per determined coefficient with (pullback order k, exponent k_ij).
  std::function<void(long, long)> progress;
};

/// Order-by-order construction of psi_u over Q(u). The pullback of omega
/// along the result vanishes below K + solver_offset, so every coefficient
/// at an exponent below K is determined.
SeparatrixFamily solve_separatrix_family(const DicriticalProblem& p, long K, const SolverOptions& opts = {});

/// The same recurrence with u fixed to u0 (exact over Q); used to reach
/// orders the family over Q(u) would make expensive.
PuiseuxParam<Rational> solve_separatrix_at(const DicriticalProblem& p, const Rational& u0, long K,
                                           const SolverOptions& opts = {});

/// PoleAtPoint when some coefficient has a pole at u0, or u0 = 0 with gamma1j != 0.
PuiseuxParam<Rational> specialize_family(const SeparatrixFamily& f, const Rational& u0);

/// specialize_family at u = c_{beta_j}.
PuiseuxParam<Rational> special_separatrix(const DicriticalProblem& p, const SeparatrixFamily& f);

struct ContactValue {
  Rational value;
  /// False when the two series agreed up to their common validity; value is then a lower bound.
  bool exact = true;

  Rational require(const std::string& what) const;
};

/// ord_t(y_p(t^{n_q}) - y_q(t^{n_p})) / (n_p n_q), for aligned representatives.
ContactValue contact(const PuiseuxParam<Rational>& p, const PuiseuxParam<Rational>& q);

/// (nu - I(F,H1) - v_i - v_j + beta_j) / v0.
Rational contact_value_formula(const DicriticalProblem& p, long nu_omega);

/// I(F,G) from the contact and the multiplicity n_other of G. NonIntegralResult
/// when the pair is inconsistent.
long merle_intersection(const CharLadder& l, const Semigroup& s, const Rational& c, long n_other);

/// nu - I(F,H1) + (n_j - 1) v_j - v_i.
long special_intersection(const DicriticalProblem& p, long nu_omega);

struct LambdaIdentity {
  long nu = 0;
  long mu = 0;
  long i_h1_fstar = 0;
  long i_wedge = 0;
  bool holds = false;
};

/// For g = 1: nu(omega) + mu - 1 = I(F, H1 F*) = I(F, A F_y - B F_x), with
/// F* the resultant of the specialized (truncated) psi*.
LambdaIdentity lambda_g1_identity_check(const DicriticalProblem& p, const SeparatrixFamily& f);

/// omega - omega_01 = Q1 dx + Q2 dy with Q1 in <x,y>^2, Q2 in <x^2,y>,
/// mult_x Q1(x,0) > v1/v0, deg_y Q1 < v0/e1, deg_y Q2 < v0/e1 - 1.
bool d1_membership(const SemirootSystem& s, const OneForm<Rational>& w);

struct D1Bound {
  long nu = 0;
  long v0 = 0;
  /// nullopt when lambda is infinite.
  std::optional<long> lambda;
  bool holds = false;
  bool equality = false;
};

/// nu(omega) - v0 <= lambda for a D1 member (one side of the max formula).
D1Bound d1_zariski_bound_check(const SemirootSystem& s, const OneForm<Rational>& w);

}  // namespace dicrit

#pragma once

#include "dicrit/semiroot.hpp"

namespace dicrit {

/// omega = A dx + B dy.
template <Field K>
struct OneForm {
  WPoly<K> A;
  WPoly<K> B;

  bool is_zero() const { return A.is_zero() && B.is_zero(); }
  friend OneForm operator+(const OneForm& a, const OneForm& b) { return {a.A + b.A, a.B + b.B}; }
  friend OneForm operator-(const OneForm& a, const OneForm& b) { return {a.A - b.A, a.B - b.B}; }
  friend OneForm operator*(const WPoly<K>& h, const OneForm& w) { return {h * w.A, h * w.B}; }
  friend bool operator==(const OneForm&, const OneForm&) = default;
};

template <Field K>
OneForm<K> exterior_derivative(const WPoly<K>& h) {
  return {h.derive_x(), h.derive_y()};
}

OneForm<RatFunc> embed(const OneForm<Rational>& w);

/// phi*(A) x'(t) + phi*(B) y'(t).
template <Field K>
TruncSeries<K> pullback_form(const OneForm<K>& w, const PuiseuxParam<K>& p);

/// nu(omega) = ord_t(phi*(omega)) + 1, or a ">= N" marker.
template <Field K>
Order value(const OneForm<K>& w, const PuiseuxParam<K>& p);

/// v_i F_i dF_j - v_j F_j dF_i.
OneForm<Rational> omega_ij(const SemirootSystem& s, long i, long j);

/// a F_j^alpha_i - b F_i^alpha_j with alpha = v / gcd(v_i, v_j).
WPoly<Rational> omega_ij_base_separatrices(const SemirootSystem& s, long i, long j, const Rational& a,
                                           const Rational& b);

/// omega = H1 (n x dy - m y dx) + dH2 with H2(0,0) = 0.
struct AzevedoPair {
  WPoly<Rational> H1;
  WPoly<Rational> H2;
  long n = 0;
  long m = 0;
};

/// Bidegree-paired solution: for x^p y^q with p, q >= 1 the coefficients of
/// x^{p-1} y^{q-1} in H1 and x^p y^q in H2 solve a 2x2 system with
/// determinant np + mq; pure powers come from one equation each.
AzevedoPair azevedo_decompose(const OneForm<Rational>& w, long n, long m);
OneForm<Rational> reconstruct(const AzevedoPair& p);

struct JacobianCheck {
  Order lhs;      // nu(A F_y + B F_x), as a function value
  Order form;     // nu(A dx - B dy)
  long mu = 0;
  bool holds = false;
};

/// Checks I(F, A F_y + B F_x) = mu - 1 + nu(A dx - B dy).
JacobianCheck jacobian_value_check(const SemirootSystem& s, const WPoly<Rational>& a, const WPoly<Rational>& b);

/// Representative modulo forms vanishing on F with deg_y A < v0 and
/// deg_y B < v0 - 1; values along F are preserved.
OneForm<Rational> economy_reduce(const SemirootSystem& s, const OneForm<Rational>& w);

/// c^{a+1} for the separatrix (t^{a+1}, c t^{b-1}) of
/// y^a (n x dy - m y dx) + d(e x^b). Requires n(b-1) != m(a+1).
Rational monomial_separatrix_power(long a, long b, const Rational& e, long n, long m);

extern template struct OneForm<Rational>;
extern template struct OneForm<RatFunc>;

}  // namespace dicrit

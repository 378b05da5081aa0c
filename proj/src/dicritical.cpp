#include "dicrit/dicritical.hpp"

#include "dicrit/errors.hpp"

namespace dicrit {

namespace {

long at(const std::vector<long>& v, long i) { return v[static_cast<std::size_t>(i)]; }

bool is_zero_at_origin(const WPoly<Rational>& h) { return h.constant_term().is_zero(); }

// psi*(omega) for omega = H1 (v_i F_i dF_j - v_j F_j dF_i) + dH2, without
// forming the 1-form: the semiroots are pulled back once per evaluation.
template <Field K>
struct OmegaPullback {
  WPoly<K> fi, fj, h1, h2;
  K vi, vj;

  TruncSeries<K> operator()(const PuiseuxParam<K>& psi) const {
    const auto pi = pullback(fi, psi);
    const auto pj = pullback(fj, psi);
    const auto inner = pi.scaled(vi) * pj.derive() - pj.scaled(vj) * pi.derive();
    return pullback(h1, psi) * inner + pullback(h2, psi).derive();
  }
};

template <Field K>
OmegaPullback<K> make_pullback(const DicriticalProblem& p, WPoly<K> (*lift)(const WPoly<Rational>&)) {
  return {lift(p.S.F[static_cast<std::size_t>(p.i)]), lift(p.S.F[static_cast<std::size_t>(p.j)]),
          lift(p.H1), lift(p.H2), K(Rational(at(p.S.sg.v, p.i))), K(Rational(at(p.S.sg.v, p.j)))};
}

WPoly<Rational> keep(const WPoly<Rational>& h) { return h; }
WPoly<RatFunc> lift_ratfunc(const WPoly<Rational>& h) { return embed(h); }

// Prefix c_l t^{l/e_j} for l < beta_j.
template <Field K>
std::map<long, K> family_prefix(const DicriticalProblem& p) {
  const long ej = at(p.S.ladder.e, p.j);
  const long bj = at(p.S.ladder.beta, p.j);
  std::map<long, K> out;
  for (const auto& [l, c] : p.S.source.y.terms()) {
    if (l >= bj) break;
    if (l % ej != 0) throw PreconditionFailed("source exponent below beta_j not divisible by e_j");
    out.emplace(l / ej, K(c));
  }
  return out;
}

template <Field K>
std::map<long, K> solve_core(const DicriticalProblem& p, std::map<long, K> y, long order, const OmegaPullback<K>& om,
                             const SolverOptions& opts) {
  const long offset = solver_offset(p);
  const long target = bound_add(order, offset);
  const long n = p.family_x_exp();
  const long u_exp = p.family_u_exp();

  // The working y-series is the known terms with a zero tail; its validity is
  // raised until the pullback is certified below the target order.
  auto evaluate = [&](const std::map<long, K>& terms) {
    long v = target + 1;
    for (int attempt = 0; attempt < 4; ++attempt) {
      const TruncSeries<K> s = om(PuiseuxParam<K>{n, TruncSeries<K>(terms, v)});
      if (s.valid_below() >= target) return s.truncated(target);
      v += target - s.valid_below();
    }
    throw InsufficientTruncation("pullback of omega not certified below order " + std::to_string(target) +
                                 "; supply H1, H2 with a larger x-truncation");
  };

  long last_k = -1;
  while (true) {
    const TruncSeries<K> s = evaluate(y);
    if (s.is_zero()) break;
    const auto [k, p0] = *s.terms().begin();
    if (k <= last_k) {
      throw SolverStall("coefficient at t^" + std::to_string(k) + " survived its correction; dependence not affine");
    }
    const long kij = k - offset;
    if (kij <= u_exp || y.contains(kij)) {
      throw SolverStall("pullback order " + std::to_string(k) + " points at exponent " + std::to_string(kij) +
                        ", which is already fixed");
    }
    auto y1 = y;
    y1.emplace(kij, K(1));
    const TruncSeries<K> s1 = evaluate(y1);
    if (!s1.is_zero() && s1.terms().begin()->first < k) {
      throw SolverStall("coefficient at t^" + std::to_string(kij) + " perturbs pullback order " +
                        std::to_string(s1.terms().begin()->first) + " < " + std::to_string(k));
    }
    const K r = s1.coeff(k) - p0;
    if (r.is_zero()) {
      throw SolverStall("zero slope for the coefficient at t^" + std::to_string(kij) + " (pullback order " +
                        std::to_string(k) + ")");
    }
    y.emplace(kij, -p0 / r);
    if (opts.progress) opts.progress(k, kij);
    last_k = k;
  }
  return y;
}

void require_dicritical(const DicriticalProblem& p, long order) {
  p.validate();
  const auto verdict = dicritical_test(p);
  if (!verdict.dicritical) {
    throw PreconditionFailed("not dicritical: I(F,H1) + v_i + v_j = " + std::to_string(verdict.lhs()) +
                             " is not below I(F,H2)");
  }
  if (order <= p.family_u_exp()) {
    throw PreconditionFailed("order must exceed the parameter exponent " + std::to_string(p.family_u_exp()));
  }
}

}  // namespace

void DicriticalProblem::validate() const {
  if (i < 0 || i >= j || j > S.g()) throw PreconditionFailed("need 0 <= i < j <= g");
  const long bound = at(S.ladder.beta, 0) / at(S.ladder.e, j);
  if (H1.is_zero()) throw PreconditionFailed("H1 must be nonzero");
  if (H1.y_degree() >= bound || H2.y_degree() >= bound) {
    throw PreconditionFailed("deg_y H1 and deg_y H2 must be below " + std::to_string(bound));
  }
  if (!is_zero_at_origin(H2)) throw PreconditionFailed("H2 must vanish at the origin");
}

OneForm<Rational> DicriticalProblem::form() const { return (H1 * omega_ij(S, i, j)) + exterior_derivative(H2); }

long DicriticalProblem::family_x_exp() const { return at(S.ladder.beta, 0) / at(S.ladder.e, j); }
long DicriticalProblem::family_u_exp() const { return at(S.ladder.beta, j) / at(S.ladder.e, j); }
Rational DicriticalProblem::source_u() const { return S.source.y.coeff(at(S.ladder.beta, j)); }

DicriticalVerdict dicritical_test(const DicriticalProblem& p) {
  DicriticalVerdict out;
  out.i_h1 = intersection_multiplicity(p.S.source, p.H1);
  out.v_sum = at(p.S.sg.v, p.i) + at(p.S.sg.v, p.j);
  if (!p.H2.is_zero()) out.i_h2 = intersection_multiplicity(p.S.source, p.H2);
  out.dicritical = !out.i_h2 || out.lhs() < *out.i_h2;
  return out;
}

long gamma1j(const DicriticalProblem& p) {
  const auto delta = leading_multi_index(p.S, semiroot_expand(p.S, p.H1));
  return delta[static_cast<std::size_t>(p.j)];
}

long solver_offset(const DicriticalProblem& p) {
  const long ej = at(p.S.ladder.e, p.j);
  const long ih1 = intersection_multiplicity(p.S.source, p.H1);
  const long num = ih1 + at(p.S.sg.v, p.i) + at(p.S.sg.v, p.j) - at(p.S.ladder.beta, p.j);
  if (num % ej != 0) throw PreconditionFailed("I(F,H1) + v_i + v_j - beta_j not divisible by e_j");
  return num / ej - 1;
}

std::string SeparatrixFamily::denominator_shape() const {
  bool constant = true, polynomial = true, monomial = true;
  for (const auto& [e, c] : y_terms) {
    if (e == u_exp) continue;
    constant = constant && c.is_constant();
    polynomial = polynomial && c.is_polynomial();
    monomial = monomial && c.has_monomial_denominator();
  }
  if (constant) return "constant";
  if (polynomial) return "polynomial";
  if (monomial) return "monomial";
  return "general";
}

PuiseuxParam<RatFunc> SeparatrixFamily::param() const {
  return {x_exp, TruncSeries<RatFunc>(std::map<long, RatFunc>(y_terms.begin(), y_terms.end()), valid_below)};
}

SeparatrixFamily solve_separatrix_family(const DicriticalProblem& p, long K, const SolverOptions& opts) {
  require_dicritical(p, K);
  auto y = family_prefix<RatFunc>(p);
  y.emplace(p.family_u_exp(), RatFunc::variable());
  const auto om = make_pullback<RatFunc>(p, &lift_ratfunc);
  SeparatrixFamily f;
  f.x_exp = p.family_x_exp();
  f.u_exp = p.family_u_exp();
  f.valid_below = K;
  f.gamma1j = gamma1j(p);
  f.y_terms = solve_core(p, std::move(y), K, om, opts);
  return f;
}

PuiseuxParam<Rational> solve_separatrix_at(const DicriticalProblem& p, const Rational& u0, long K,
                                           const SolverOptions& opts) {
  require_dicritical(p, K);
  if (u0.is_zero() && gamma1j(p) != 0) throw PoleAtPoint("u = 0 with gamma_1j != 0");
  auto y = family_prefix<Rational>(p);
  if (!u0.is_zero()) y.emplace(p.family_u_exp(), u0);
  const auto om = make_pullback<Rational>(p, &keep);
  auto terms = solve_core(p, std::move(y), K, om, opts);
  return {p.family_x_exp(), TruncSeries<Rational>(std::move(terms), K)};
}

PuiseuxParam<Rational> specialize_family(const SeparatrixFamily& f, const Rational& u0) {
  if (u0.is_zero() && f.gamma1j != 0) throw PoleAtPoint("u = 0 is excluded when gamma_1j != 0");
  std::map<long, Rational> out;
  for (const auto& [e, c] : f.y_terms) {
    Rational v = c.eval(u0);
    if (!v.is_zero()) out.emplace(e, std::move(v));
  }
  return {f.x_exp, TruncSeries<Rational>(std::move(out), f.valid_below)};
}

PuiseuxParam<Rational> special_separatrix(const DicriticalProblem& p, const SeparatrixFamily& f) {
  return specialize_family(f, p.source_u());
}

Rational ContactValue::require(const std::string& what) const {
  if (!exact) throw InsufficientTruncation(what + ": series agree up to their validity (contact >= " + value.str() + ")");
  return value;
}

ContactValue contact(const PuiseuxParam<Rational>& p, const PuiseuxParam<Rational>& q) {
  const auto diff = p.y.substitute_power(q.n) - q.y.substitute_power(p.n);
  const Order o = diff.ord();
  return {Rational(o.value, p.n * q.n), o.exact};
}

Rational contact_value_formula(const DicriticalProblem& p, long nu_omega) {
  const long ih1 = intersection_multiplicity(p.S.source, p.H1);
  const long num = nu_omega - ih1 - at(p.S.sg.v, p.i) - at(p.S.sg.v, p.j) + at(p.S.ladder.beta, p.j);
  return Rational(num, at(p.S.ladder.beta, 0));
}

long merle_intersection(const CharLadder& l, const Semigroup& s, const Rational& c, long n_other) {
  const Rational v0(l.beta[0]);
  const Rational scaled = c * v0;
  if (c.sign() <= 0) throw PreconditionFailed("contact must be positive");
  if (l.g == 0 || scaled < Rational(l.beta[1])) return (scaled * Rational(n_other)).to_long();
  long q = 1;
  while (q < l.g && Rational(at(l.beta, q + 1)) <= scaled) ++q;
  // n_0 ... n_q = e_0 / e_q
  const Rational num = Rational(at(l.nseq, q) * at(s.v, q)) + scaled - Rational(at(l.beta, q));
  const Rational value = Rational(n_other) * num * Rational(at(l.e, q)) / v0;
  if (!value.is_integer()) {
    throw NonIntegralResult("Merle's formula gives " + value.str() + " for contact " + c.str() +
                            " and multiplicity " + std::to_string(n_other));
  }
  return value.to_long();
}

long special_intersection(const DicriticalProblem& p, long nu_omega) {
  const long ih1 = intersection_multiplicity(p.S.source, p.H1);
  return nu_omega - ih1 + (at(p.S.ladder.nseq, p.j) - 1) * at(p.S.sg.v, p.j) - at(p.S.sg.v, p.i);
}

LambdaIdentity lambda_g1_identity_check(const DicriticalProblem& p, const SeparatrixFamily& f) {
  if (p.S.g() != 1) throw PreconditionFailed("the identity is stated for g = 1");
  require_dicritical(p, f.valid_below);
  const auto w = p.form();
  LambdaIdentity out;
  out.mu = p.S.sg.mu;
  out.nu = value(w, p.S.source).require("nu(omega)");
  const auto star = special_separatrix(p, f);
  const auto fstar = minimal_polynomial(star.y, star.n);
  out.i_h1_fstar = intersection_multiplicity(p.S.source, p.H1 * fstar);
  const auto [fx, fy] = partials(p.S.curve());
  out.i_wedge = intersection_multiplicity(p.S.source, w.A * fy - w.B * fx);
  out.holds = out.nu + out.mu - 1 == out.i_h1_fstar && out.i_h1_fstar == out.i_wedge;
  return out;
}

bool d1_membership(const SemirootSystem& s, const OneForm<Rational>& w) {
  if (s.g() < 1) return false;
  const long v0 = at(s.sg.v, 0);
  const long v1 = at(s.sg.v, 1);
  const long deg_bound = v0 / at(s.ladder.e, 1);
  const WPoly<Rational> q1 = w.A + WPoly<Rational>::monomial(Rational(v1), 0, 1);
  const WPoly<Rational> q2 = w.B - WPoly<Rational>::monomial(Rational(v0), 1, 0);
  for (const auto& t : q1.monomials()) {
    if (t.x_exp + t.y_exp < 2) return false;
  }
  for (const auto& t : q2.monomials()) {
    if (t.y_exp == 0 && t.x_exp < 2) return false;
  }
  const auto q1_axis = q1.coeff(0);
  if (!q1_axis.is_zero() && q1_axis.terms().begin()->first * v0 <= v1) return false;
  return q1.y_degree() < deg_bound && q2.y_degree() < deg_bound - 1;
}

D1Bound d1_zariski_bound_check(const SemirootSystem& s, const OneForm<Rational>& w) {
  if (!d1_membership(s, w)) throw PreconditionFailed("form is not in D1");
  D1Bound out;
  out.v0 = at(s.sg.v, 0);
  out.nu = value(w, s.source).require("nu(omega)");
  out.lambda = zariski_invariant(s.source).lambda;
  out.holds = !out.lambda || out.nu - out.v0 <= *out.lambda;
  out.equality = out.lambda && out.nu - out.v0 == *out.lambda;
  return out;
}

}  // namespace dicrit

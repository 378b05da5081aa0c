#include "dicrit/oneform.hpp"

#include <numeric>
#include <set>

#include "dicrit/errors.hpp"

namespace dicrit {

template struct OneForm<Rational>;
template struct OneForm<RatFunc>;

OneForm<RatFunc> embed(const OneForm<Rational>& w) { return {embed(w.A), embed(w.B)}; }

template <Field K>
TruncSeries<K> pullback_form(const OneForm<K>& w, const PuiseuxParam<K>& p) {
  const auto xprime = TruncSeries<K>::monomial(K(p.n), p.n - 1);
  TruncSeries<K> out = pullback(w.A, p) * xprime;
  if (!w.B.is_zero()) out += pullback(w.B, p) * p.y.derive();
  return out;
}

template <Field K>
Order value(const OneForm<K>& w, const PuiseuxParam<K>& p) {
  const Order o = pullback_form(w, p).ord();
  return {bound_add(o.value, 1), o.exact};
}

OneForm<Rational> omega_ij(const SemirootSystem& s, long i, long j) {
  if (i < 0 || i >= j || j > s.g()) throw PreconditionFailed("omega_ij needs 0 <= i < j <= g");
  const auto& fi = s.F[static_cast<std::size_t>(i)];
  const auto& fj = s.F[static_cast<std::size_t>(j)];
  const Rational vi(s.sg.v[static_cast<std::size_t>(i)]);
  const Rational vj(s.sg.v[static_cast<std::size_t>(j)]);
  const auto dfi = exterior_derivative(fi);
  const auto dfj = exterior_derivative(fj);
  return (fi.scaled(vi) * dfj) - (fj.scaled(vj) * dfi);
}

WPoly<Rational> omega_ij_base_separatrices(const SemirootSystem& s, long i, long j, const Rational& a,
                                           const Rational& b) {
  if (i < 0 || i >= j || j > s.g()) throw PreconditionFailed("pencil needs 0 <= i < j <= g");
  if (a.is_zero() && b.is_zero()) throw PreconditionFailed("pencil point (0, 0)");
  const long vi = s.sg.v[static_cast<std::size_t>(i)];
  const long vj = s.sg.v[static_cast<std::size_t>(j)];
  const long d = std::gcd(vi, vj);
  const auto& fi = s.F[static_cast<std::size_t>(i)];
  const auto& fj = s.F[static_cast<std::size_t>(j)];
  WPoly<Rational> out;
  if (!a.is_zero()) out += pow(fj, static_cast<unsigned>(vi / d)).scaled(a);
  if (!b.is_zero()) out -= pow(fi, static_cast<unsigned>(vj / d)).scaled(b);
  return out;
}

AzevedoPair azevedo_decompose(const OneForm<Rational>& w, long n, long m) {
  if (n <= 0 || m <= 0) throw PreconditionFailed("azevedo_decompose needs n, m > 0");
  const long ma = w.A.x_valid_below();
  const long mb = w.B.x_valid_below();
  const long h1_bound = std::min(ma, mb >= kUnbounded ? kUnbounded : mb - 1);
  const long h2_bound = std::min(bound_add(ma, 1), mb);

  // Coefficients keyed by (x_exp, y_exp).
  std::map<std::pair<long, long>, Rational> a, b;
  for (const auto& t : w.A.monomials()) a.emplace(std::pair{t.x_exp, t.y_exp}, t.coeff);
  for (const auto& t : w.B.monomials()) b.emplace(std::pair{t.x_exp, t.y_exp}, t.coeff);
  auto get = [](const auto& map, long i, long j) {
    auto it = map.find({i, j});
    return it == map.end() ? Rational(0) : it->second;
  };

  // Every monomial of A is x^{p-1} y^q and every monomial of B is x^p y^{q-1}.
  std::set<std::pair<long, long>> pq;
  for (const auto& [k, c] : a) pq.insert({k.first + 1, k.second});
  for (const auto& [k, c] : b) pq.insert({k.first, k.second + 1});

  std::vector<WPoly<Rational>::Monomial> h1, h2;
  for (const auto& [p, q] : pq) {
    const Rational ac = get(a, p - 1, q);
    const Rational bc = get(b, p, q - 1);
    if (q == 0) {
      h2.push_back({p, 0, ac / Rational(p)});
    } else if (p == 0) {
      h2.push_back({0, q, bc / Rational(q)});
    } else {
      const Rational det(n * p + m * q);
      h2.push_back({p, q, (Rational(n) * ac + Rational(m) * bc) / det});
      h1.push_back({p - 1, q - 1, (Rational(p) * bc - Rational(q) * ac) / det});
    }
  }
  return {WPoly<Rational>::from_monomials(h1, h1_bound), WPoly<Rational>::from_monomials(h2, h2_bound), n, m};
}

OneForm<Rational> reconstruct(const AzevedoPair& p) {
  const OneForm<Rational> radial{WPoly<Rational>::monomial(Rational(-p.m), 0, 1),
                                 WPoly<Rational>::monomial(Rational(p.n), 1, 0)};
  return (p.H1 * radial) + exterior_derivative(p.H2);
}

JacobianCheck jacobian_value_check(const SemirootSystem& s, const WPoly<Rational>& a, const WPoly<Rational>& b) {
  const auto& f = s.curve();
  const auto [fx, fy] = partials(f);
  JacobianCheck out;
  out.mu = s.sg.mu;
  out.lhs = pullback(a * fy + b * fx, s.source).ord();
  out.form = value(OneForm<Rational>{a, -b}, s.source);
  const long lhs = out.lhs.require("nu(A F_y + B F_x)");
  const long form = out.form.require("nu(A dx - B dy)");
  out.holds = lhs == out.mu - 1 + form;
  return out;
}

OneForm<Rational> economy_reduce(const SemirootSystem& s, const OneForm<Rational>& w) {
  const auto& f = s.curve();
  const long n = f.y_degree();
  // B mod F (F dy vanishes on the curve), then strip y^{n-1} with a multiple of dF.
  WPoly<Rational> b = ydiv(w.B, f).second;
  WPoly<Rational> a = w.A;
  if (b.y_degree() == n - 1 && n >= 1) {
    std::map<long, TruncSeries<Rational>> top;
    top.emplace(0, b.coeff(n - 1).scaled(Rational(1, n)));
    const WPoly<Rational> g(std::move(top), b.x_valid_below());
    const auto df = exterior_derivative(f);
    a -= g * df.A;
    b -= g * df.B;
  }
  a = ydiv(a, f).second;
  return {a, b};
}

Rational monomial_separatrix_power(long a, long b, const Rational& e, long n, long m) {
  const long den = n * (b - 1) - m * (a + 1);
  if (den == 0) throw PreconditionFailed("n(b-1) = m(a+1): no monomial separatrix");
  return -Rational(a + 1) * Rational(b) * e / Rational(den);
}

template TruncSeries<Rational> pullback_form(const OneForm<Rational>&, const PuiseuxParam<Rational>&);
template TruncSeries<RatFunc> pullback_form(const OneForm<RatFunc>&, const PuiseuxParam<RatFunc>&);
template Order value(const OneForm<Rational>&, const PuiseuxParam<Rational>&);
template Order value(const OneForm<RatFunc>&, const PuiseuxParam<RatFunc>&);

}  // namespace dicrit

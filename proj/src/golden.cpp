#include "dicrit/golden.hpp"

#include <functional>
#include <sstream>

#include "dicrit/errors.hpp"

namespace dicrit {

namespace {

using W = WPoly<Rational>;

struct Check {
  std::ostringstream log;
  bool ok = true;

  template <class T, class U>
  void eq(const std::string& what, const T& got, const U& want) {
    if (!(got == want)) {
      ok = false;
      log << what << " mismatch; ";
    }
  }
  void expect(const std::string& what, bool cond) {
    if (!cond) {
      ok = false;
      log << what << " failed; ";
    }
  }
};

CriterionResult run(int id, std::string name, const std::function<void(Check&)>& body) {
  Check c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.log << "exception: " << e.what();
  }
  std::string detail = c.log.str();
  if (c.ok && detail.empty()) detail = "ok";
  return {id, std::move(name), c.ok, detail};
}

RatFunc u() { return RatFunc::variable(); }
RatFunc upow(int k) { return RatFunc(UPoly::monomial(Rational(1), k)); }

long gaps(const Semigroup& s) {
  GammaTable table(s, s.mu);
  long count = 0;
  for (long m = 0; m < s.mu; ++m) count += table.contains(m) ? 0 : 1;
  return count;
}

// Random ladder: gcd chain from ratios in {2, 3}, each beta_i divisible by
// e_i but not by e_{i-1}.
PuiseuxParam<Rational> random_ladder_param(RandomSource& rng) {
  const long g = rng.integer(1, 3);
  std::vector<long> ratios(static_cast<std::size_t>(g));
  for (auto& r : ratios) r = rng.integer(2, 3);
  std::vector<long> e(static_cast<std::size_t>(g + 1), 1);
  for (long i = g - 1; i >= 0; --i) e[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i + 1)] * ratios[static_cast<std::size_t>(i)];
  std::map<long, Rational> y;
  long prev = e[0];
  for (long i = 1; i <= g; ++i) {
    const long ei = e[static_cast<std::size_t>(i)];
    const long eprev = e[static_cast<std::size_t>(i - 1)];
    long b = (prev / ei + 1) * ei + ei * rng.integer(0, 2);
    while (b % eprev == 0) b += ei;
    y.emplace(b, rng.rational());
    prev = b;
  }
  return {e[0], TruncSeries<Rational>(std::move(y), kUnbounded)};
}

}  // namespace

PuiseuxParam<Rational> golden_sextic() {
  return {6, TruncSeries<Rational>({{9, Rational(1)}, {12, Rational(1)}, {13, Rational(2)}}, kUnbounded)};
}

PuiseuxParam<Rational> cusp() { return {2, TruncSeries<Rational>({{3, Rational(1)}}, kUnbounded)}; }

std::vector<GoldenProblem> golden_problems(const SemirootSystem& s) {
  return {
      {"zeta1", {s, 0, 1, W::y(), W::monomial(Rational(-1), 5, 0)}, 10},
      {"zeta2", {s, 0, 2, W::y(), W::monomial(Rational(1), 6, 1)}, 25},
      {"zeta3", {s, 1, 2, W::x(), W::monomial(Rational(33, 20), 0, 2) * s.F[2]}, 21},
  };
}

DicriticalProblem borderline_problem(const SemirootSystem& s) {
  return {s, 0, 1, W::y(), W::monomial(Rational(-1), 4, 0)};
}

long RandomSource::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

Rational RandomSource::rational() {
  long p = 0;
  while (p == 0) p = integer(-5, 5);
  return Rational(p, integer(1, 4));
}

WPoly<Rational> RandomSource::wpoly(long max_x, long max_y, int terms) {
  std::vector<W::Monomial> out;
  while (static_cast<int>(out.size()) < terms) {
    const long i = integer(0, max_x);
    const long j = integer(0, max_y);
    if (i == 0 && j == 0) continue;
    out.push_back({i, j, rational()});
  }
  return W::from_monomials(out);
}

std::vector<CriterionResult> run_golden_suite(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  const auto sextic = canonical_semiroots(golden_sextic());
  const auto problems = golden_problems(sextic);

  out.push_back(run(1, "golden semigroup and semiroots of the sextic", [&](Check& c) {
    c.eq("beta", sextic.ladder.beta, std::vector<long>{6, 9, 13});
    c.eq("v", sextic.sg.v, std::vector<long>{6, 9, 22});
    c.eq("F0", sextic.F[0], W::x());
    c.eq("F1", sextic.F[1], W::y());
    c.eq("F2", sextic.F[2],
         W::from_monomials({{0, 2, Rational(1)}, {3, 0, Rational(-1)}, {2, 1, Rational(-2)}, {4, 0, Rational(1)}}));
  }));

  out.push_back(run(2, "Azevedo decomposition of zeta_1", [&](Check& c) {
    const OneForm<Rational> z1{W::from_monomials({{0, 2, Rational(-9)}, {4, 0, Rational(-5)}}),
                               W::monomial(Rational(6), 1, 1)};
    const auto pair = azevedo_decompose(z1, 6, 9);
    c.eq("H1", pair.H1, W::y());
    c.eq("H2", pair.H2, W::monomial(Rational(-1), 5, 0));
  }));

  out.push_back(run(3, "dicriticality criterion", [&](Check& c) {
    const std::vector<std::pair<long, long>> want{{24, 30}, {37, 45}, {37, 40}};
    for (std::size_t k = 0; k < problems.size(); ++k) {
      const auto v = dicritical_test(problems[k].P);
      c.eq(problems[k].name + " lhs", v.lhs(), want[k].first);
      c.expect(problems[k].name + " I(F,H2)", v.i_h2 && *v.i_h2 == want[k].second);
      c.expect(problems[k].name + " verdict", v.dicritical);
    }
    const auto v = dicritical_test(borderline_problem(sextic));
    c.eq("borderline lhs", v.lhs(), 24L);
    c.expect("borderline I(F,H2)", v.i_h2 && *v.i_h2 == 24);
    c.expect("borderline rejected", !v.dicritical);
  }));

  std::vector<SeparatrixFamily> families;
  for (const auto& g : problems) families.push_back(solve_separatrix_family(g.P, g.K));

  out.push_back(run(4, "separatrix families", [&](Check& c) {
    const auto& f1 = families[0].y_terms;
    const std::map<long, RatFunc> want1{{3, u()},
                                        {5, RatFunc(Rational(5, 6)) / u()},
                                        {7, RatFunc(Rational(-25, 72)) / upow(3)},
                                        {9, RatFunc(Rational(125, 432)) / upow(5)}};
    c.eq("zeta1 family", f1, want1);
    const std::map<long, RatFunc> want2{{9, RatFunc(1)},
                                        {12, RatFunc(1)},
                                        {13, u()},
                                        {17, RatFunc(Rational(-1, 2)) * upow(2)},
                                        {21, RatFunc(Rational(-15, 32)) + RatFunc(Rational(1, 2)) * upow(3)},
                                        {24, RatFunc(Rational(-1, 44))}};
    c.eq("zeta2 family", families[1].y_terms, want2);
    // The reference form of this family has -u at t^13; compare under u -> -u.
    std::map<long, RatFunc> reference3;
    for (const auto& [k, v] : families[2].y_terms) reference3.emplace(k, v.scale_variable(Rational(-1)));
    const std::map<long, RatFunc> want3{{9, RatFunc(1)},
                                        {12, RatFunc(1)},
                                        {13, -u()},
                                        {17, RatFunc(Rational(35, 18)) * upow(2)},
                                        {19, RatFunc(Rational(473, 180)) * u()},
                                        {20, RatFunc(Rational(-748, 189)) * upow(2)}};
    c.eq("zeta3 family (u -> -u)", reference3, want3);
  }));

  out.push_back(run(5, "values and contacts", [&](Check& c) {
    const std::vector<long> nu_want{27, 41, 41};
    const std::vector<Rational> c_want{Rational(2), Rational(17, 6), Rational(17, 6)};
    for (std::size_t k = 0; k < problems.size(); ++k) {
      const auto& P = problems[k].P;
      const long nu = value(P.form(), P.S.source).require("nu");
      c.eq(problems[k].name + " nu", nu, nu_want[k]);
      const auto star = special_separatrix(P, families[k]);
      const Rational ct = contact(P.S.source, star).require("contact");
      c.eq(problems[k].name + " contact", ct, c_want[k]);
      c.eq(problems[k].name + " closed form", contact_value_formula(P, nu), c_want[k]);
    }
  }));

  out.push_back(run(6, "extra separatrices at u = 0", [&](Check& c) {
    const auto psi2 = specialize_family(families[1], Rational(0));
    c.eq("zeta2 psi0 n", psi2.n, 6L);
    c.eq("zeta2 psi0 y", psi2.y.terms(),
         std::map<long, Rational>{{9, Rational(1)}, {12, Rational(1)}, {21, Rational(-15, 32)}, {24, Rational(-1, 44)}});
    const auto psi3 = primitive_reduce(specialize_family(families[2], Rational(0)));
    c.eq("zeta3 psi0 n", psi3.n, 2L);
    c.eq("zeta3 psi0 y", psi3.y.terms(), std::map<long, Rational>{{3, Rational(1)}, {4, Rational(1)}});
    bool pole = false;
    try {
      specialize_family(families[0], Rational(0));
    } catch (const PoleAtPoint&) {
      pole = true;
    }
    c.expect("zeta1 at u = 0 raises PoleAtPoint", pole);
  }));

  out.push_back(run(7, "property suite", [&](Check& c) {
    RandomSource rng(seed);
    const auto cusp_sys = canonical_semiroots(cusp());

    // (a) family annihilation at random non-pole u0
    for (std::size_t k = 0; k < problems.size(); ++k) {
      const auto& P = problems[k].P;
      for (int r = 0; r < 3; ++r) {
        Rational u0 = rng.rational();
        while (u0 == P.source_u()) u0 = rng.rational();
        const auto psi = specialize_family(families[k], u0);
        const auto s = pullback_form(P.form(), psi);
        c.expect(problems[k].name + " annihilation at u0=" + u0.str(),
                 s.is_zero() && s.valid_below() >= families[k].valid_below);
      }
    }
    // (b) expansion round trip, (c) nu(dH) = I(F,H)
    for (int r = 0; r < 20; ++r) {
      const auto h = rng.wpoly(8, 7, 5);
      const auto e = semiroot_expand(sextic, h);
      c.expect("round trip", resubstitute(sextic, e) == h);
      c.expect("re-expansion", semiroot_expand(sextic, resubstitute(sextic, e)).terms == e.terms);
      const auto low = rng.wpoly(8, 5, 4);
      c.expect("nu(dH) = I(F,H)", value(exterior_derivative(low), sextic.source).require("nu(dH)") ==
                                      intersection_multiplicity(sextic.source, low));
    }
    // (d) random ladders
    for (int r = 0; r < 20; ++r) {
      const auto p = random_ladder_param(rng);
      const auto l = char_ladder(p);
      const auto s = semigroup(l);
      c.expect("recursive and closed-form generators", semigroup_generators_closed_form(l) == s.v);
      c.expect("mu = 2 gaps", s.mu == 2 * gaps(s));
    }
    // (e) Jacobian identity
    for (const auto* sys : {&cusp_sys, &sextic}) {
      for (int r = 0; r < 10; ++r) {
        const auto a = rng.wpoly(4, 3, 3) + W::constant(rng.rational());
        const auto b = rng.wpoly(4, 3, 3);
        c.expect("jacobian identity", jacobian_value_check(*sys, a, b).holds);
      }
    }
    // (f) closed form = Merle, and the direct value from the resultant of psi*
    for (std::size_t k = 0; k < problems.size(); ++k) {
      const auto& P = problems[k].P;
      const long nu = value(P.form(), P.S.source).require("nu");
      const auto star = special_separatrix(P, families[k]);
      const Rational ct = contact(P.S.source, star).require("contact");
      const long merle = merle_intersection(P.S.ladder, P.S.sg, ct, star.n);
      const long cor = special_intersection(P, nu);
      c.expect(problems[k].name + " Merle = closed form", merle == cor);
      const long need = (cor / P.S.sg.v[0] + 1) * star.n + star.n;
      const auto deep = solve_separatrix_at(P, P.source_u(), std::max(need, problems[k].K));
      const long direct = intersection_multiplicity(P.S.source, minimal_polynomial(deep.y, deep.n));
      c.expect(problems[k].name + " I(F,F*) by resultant", direct == cor);
    }
    // (g) D1 bound
    const auto d1_branch = canonical_semiroots(PuiseuxParam<Rational>{
        6, TruncSeries<Rational>({{9, Rational(1)}, {13, Rational(2)}}, kUnbounded)});
    const auto w01 = omega_ij(d1_branch, 0, 1);
    for (int r = 0; r < 10; ++r) {
      std::vector<W::Monomial> q1, q2;
      for (int t = 0; t < 3; ++t) {
        q1.push_back({rng.integer(2, 6), 0, rng.rational()});
        q1.push_back({rng.integer(1, 5), 1, rng.rational()});
        q2.push_back({rng.integer(2, 6), 0, rng.rational()});
      }
      const OneForm<Rational> w = w01 + OneForm<Rational>{W::from_monomials(q1), W::from_monomials(q2)};
      c.expect("D1 membership", d1_membership(d1_branch, w));
      c.expect("D1 bound", d1_zariski_bound_check(d1_branch, w).holds);
    }
  }));

  out.push_back(run(8, "monomial separatrix closed form", [&](Check& c) {
    struct Instance {
      long a, b, n, m;
      Rational c;
    };
    const std::vector<Instance> instances{{0, 3, 1, 1, Rational(2)},
                                          {0, 5, 2, 3, Rational(-1, 2)},
                                          {1, 4, 1, 2, Rational(3)},
                                          {1, 6, 3, 1, Rational(-2)},
                                          {2, 5, 2, 1, Rational(1, 3)}};
    for (const auto& in : instances) {
      const Rational ca = pow(in.c, static_cast<unsigned>(in.a + 1));
      const long den = in.n * (in.b - 1) - in.m * (in.a + 1);
      const Rational e = -ca * Rational(den) / (Rational(in.a + 1) * Rational(in.b));
      c.eq("closed form", monomial_separatrix_power(in.a, in.b, e, in.n, in.m), ca);
      // y^a (n x dy - m y dx) + d(e x^b)
      const OneForm<Rational> w{
          W::from_monomials({{0, in.a + 1, Rational(-in.m)}, {in.b - 1, 0, e * Rational(in.b)}}),
          W::monomial(Rational(in.n), 1, in.a)};
      const PuiseuxParam<Rational> psi{in.a + 1, TruncSeries<Rational>::monomial(in.c, in.b - 1)};
      c.expect("annihilation", pullback_form(w, psi).is_zero());
    }
  }));

  return out;
}

}  // namespace dicrit

#include "dicrit/errors.hpp"
#include "dicrit/json_io.hpp"
#include "support.hpp"

using namespace dicrit;
using namespace dicrit::testing;

TEST_CASE("rationals") {
  CHECK(to_json(Rational(-3, 4)) == json("-3/4"));
  CHECK(to_json(Rational(5)) == json("5"));
  CHECK(rational_from_json(json(7)) == Rational(7));
  CHECK(rational_from_json(json("6/8")) == Rational(3, 4));
  CHECK_THROWS_AS(rational_from_json(json("1/0")), ParseError);
  CHECK_THROWS_AS(rational_from_json(json("x")), ParseError);
  CHECK_THROWS_AS(rational_from_json(json(1.5)), ParseError);
}

TEST_CASE("rational functions round trip") {
  RandomSource rng(101);
  for (int r = 0; r < 20; ++r) {
    UPoly num, den;
    for (int k = 0; k < 3; ++k) num += UPoly::monomial(rng.rational(), rng.integer(0, 4));
    den = UPoly::monomial(Rational(1), rng.integer(0, 3)) + UPoly::monomial(rng.rational(), 0);
    if (num.is_zero() || den.is_zero()) continue;
    const RatFunc f = RatFunc(num) / RatFunc(den);
    CHECK(ratfunc_from_json(to_json(f)) == f);
  }
  CHECK_THROWS_AS(ratfunc_from_json(json{{"num", json::array()}, {"den", json::array()}}), ParseError);
}

TEST_CASE("parameterizations") {
  const auto p = golden_sextic();
  CHECK(param_from_json(to_json(p)) == p);
  const auto t = param(6, {{9, Rational(1)}}, 12);
  const auto j = to_json(t);
  CHECK(j.at("valid_below") == json(12));
  CHECK(param_from_json(j) == t);
  CHECK(to_json(p).at("valid_below").is_null());
  CHECK(param_from_json(json::parse(R"({"n": 2, "y": [[3, 1]]})")) == cusp());
  CHECK_THROWS_AS(param_from_json(json::parse(R"({"n": 2, "y": [[1, 1]]})")), PreconditionFailed);
  CHECK_THROWS_AS(param_from_json(json::parse(R"({"y": [[3, 1]]})")), ParseError);
  CHECK_THROWS_AS(param_from_json(json::parse(R"({"n": 2, "y": [[3]]})")), ParseError);
}

TEST_CASE("polynomials and forms round trip") {
  RandomSource rng(103);
  for (int r = 0; r < 20; ++r) {
    const auto w = rng.wpoly(5, 3, 4);
    CHECK(wpoly_from_json(to_json(w)) == w);
    const OneForm<Rational> f{w, rng.wpoly(4, 2, 3)};
    CHECK(form_from_json(to_json(f)) == f);
  }
  const auto bare = wpoly_from_json(json::parse(R"([[1, 2, "3/2"], [0, 1, -1]])"));
  CHECK(bare == poly({{1, 2, Rational(3, 2)}, {0, 1, Rational(-1)}}));
  const auto trunc = poly({{2, 1, Rational(1)}}, 7);
  CHECK(wpoly_from_json(to_json(trunc)) == trunc);
  CHECK_THROWS_AS(wpoly_from_json(json::parse(R"([[1, -2, "1"]])")), ParseError);
  CHECK_THROWS_AS(wpoly_from_json(json::parse(R"({"terms": 3})")), ParseError);
  CHECK_THROWS_AS(form_from_json(json::parse(R"({"A": []})")), ParseError);
}

TEST_CASE("ladders, semigroups and verdicts") {
  const auto s = canonical_semiroots(golden_sextic());
  const auto l = to_json(s.ladder);
  CHECK(l.at("beta") == json({6, 9, 13}));
  CHECK(l.at("g") == json(2));
  CHECK(to_json(s.sg).at("v") == json({6, 9, 22}));
  CHECK(to_json(s.sg).at("mu") == json(48));
  const auto v = to_json(dicritical_test(golden_problems(s)[0].P));
  CHECK(v.at("I_H2") == json(30));
  CHECK(v.at("lhs") == json(24));
  CHECK(v.at("dicritical") == json(true));
  const auto zero = to_json(dicritical_test(DicriticalProblem{s, 0, 1, W::y(), W()}));
  CHECK(zero.at("I_H2") == json("inf"));
}

TEST_CASE("families round trip") {
  const auto s = canonical_semiroots(golden_sextic());
  const auto g = golden_problems(s)[0];
  const auto f = solve_separatrix_family(g.P, g.K);
  const auto j = to_json(f);
  CHECK(j.at("denominators") == json("monomial"));
  const auto back = family_from_json(j);
  CHECK(back.y_terms == f.y_terms);
  CHECK(back.x_exp == f.x_exp);
  CHECK(back.u_exp == f.u_exp);
  CHECK(back.valid_below == f.valid_below);
  CHECK(back.gamma1j == f.gamma1j);
}

#include "dicrit/json_io.hpp"

#include "dicrit/errors.hpp"

namespace dicrit {

namespace {

json bound_json(long b) { return b >= kUnbounded ? json(nullptr) : json(b); }

long bound_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return kUnbounded;
  if (!j.at(key).is_number_integer()) throw ParseError(std::string(key) + " must be an integer or null");
  return j.at(key).get<long>();
}

long int_from(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw ParseError(what + " must be an integer");
  return j.get<long>();
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

json upoly_json(const UPoly& p) {
  json out = json::array();
  for (const auto& [d, c] : p.terms()) out.push_back(json::array({d, to_json(c)}));
  return out;
}

UPoly upoly_from(const json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a list of [deg, coeff] pairs");
  UPoly out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) throw ParseError("polynomial term must be [deg, coeff]");
    out += UPoly::monomial(rational_from_json(t[1]), static_cast<int>(int_from(t[0], "degree")));
  }
  return out;
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string");
  return Rational::parse(j.get<std::string>());
}

json to_json(const RatFunc& f) { return {{"num", upoly_json(f.num())}, {"den", upoly_json(f.den())}}; }

RatFunc ratfunc_from_json(const json& j) {
  if (!j.is_object()) return RatFunc(rational_from_json(j));
  const UPoly den = j.contains("den") ? upoly_from(j.at("den")) : UPoly(Rational(1));
  if (den.is_zero()) throw ParseError("zero denominator");
  return RatFunc(upoly_from(field(j, "num")), den);
}

json to_json(const TruncSeries<Rational>& s) {
  json terms = json::array();
  for (const auto& [k, c] : s.terms()) terms.push_back(json::array({k, to_json(c)}));
  return {{"terms", terms}, {"valid_below", bound_json(s.valid_below())}};
}

json to_json(const PuiseuxParam<Rational>& p) {
  json y = json::array();
  for (const auto& [k, c] : p.y.terms()) y.push_back(json::array({k, to_json(c)}));
  return {{"n", p.n}, {"y", y}, {"valid_below", bound_json(p.valid_below())}};
}

PuiseuxParam<Rational> param_from_json(const json& j) {
  PuiseuxParam<Rational> p;
  p.n = int_from(field(j, "n"), "n");
  std::map<long, Rational> coeffs;
  const auto& y = field(j, "y");
  if (!y.is_array()) throw ParseError("y must be a list of [k, coeff] pairs");
  for (const auto& t : y) {
    if (!t.is_array() || t.size() != 2) throw ParseError("y term must be [k, coeff]");
    const long k = int_from(t[0], "exponent");
    if (k < 0) throw ParseError("negative exponent in y");
    coeffs[k] += rational_from_json(t[1]);
  }
  std::erase_if(coeffs, [](const auto& kv) { return kv.second.is_zero(); });
  p.y = TruncSeries<Rational>(std::move(coeffs), bound_from(j, "valid_below"));
  p.validate();
  return p;
}

json to_json(const WPoly<Rational>& w) {
  json terms = json::array();
  for (const auto& m : w.monomials()) terms.push_back(json::array({m.x_exp, m.y_exp, to_json(m.coeff)}));
  return {{"terms", terms}, {"x_valid_below", bound_json(w.x_valid_below())}};
}

WPoly<Rational> wpoly_from_json(const json& j) {
  const json& terms = j.is_array() ? j : field(j, "terms");
  if (!terms.is_array()) throw ParseError("polynomial terms must be a list of [i, j, coeff]");
  std::vector<WPoly<Rational>::Monomial> out;
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 3) throw ParseError("monomial must be [i, j, coeff]");
    const long i = int_from(t[0], "x exponent");
    const long k = int_from(t[1], "y exponent");
    if (i < 0 || k < 0) throw ParseError("negative monomial exponent");
    out.push_back({i, k, rational_from_json(t[2])});
  }
  return WPoly<Rational>::from_monomials(out, j.is_array() ? kUnbounded : bound_from(j, "x_valid_below"));
}

json to_json(const OneForm<Rational>& w) { return {{"A", to_json(w.A)}, {"B", to_json(w.B)}}; }

OneForm<Rational> form_from_json(const json& j) {
  return {wpoly_from_json(field(j, "A")), wpoly_from_json(field(j, "B"))};
}

json to_json(const CharLadder& l) { return {{"beta", l.beta}, {"e", l.e}, {"n", l.nseq}, {"g", l.g}}; }

json to_json(const Semigroup& s) { return {{"v", s.v}, {"mu", s.mu}}; }

json to_json(const SeparatrixFamily& f) {
  json y = json::array();
  for (const auto& [k, c] : f.y_terms) y.push_back(json::array({k, to_json(c)}));
  return {{"x_exp", f.x_exp},     {"u_exp", f.u_exp},     {"y", y},
          {"valid_below", f.valid_below}, {"gamma1j", f.gamma1j}, {"denominators", f.denominator_shape()}};
}

SeparatrixFamily family_from_json(const json& j) {
  SeparatrixFamily f;
  f.x_exp = int_from(field(j, "x_exp"), "x_exp");
  f.u_exp = int_from(field(j, "u_exp"), "u_exp");
  f.valid_below = int_from(field(j, "valid_below"), "valid_below");
  f.gamma1j = int_from(field(j, "gamma1j"), "gamma1j");
  for (const auto& t : field(j, "y")) {
    if (!t.is_array() || t.size() != 2) throw ParseError("family term must be [k, coeff]");
    f.y_terms.emplace(int_from(t[0], "exponent"), ratfunc_from_json(t[1]));
  }
  return f;
}

json to_json(const DicriticalVerdict& v) {
  return {{"I_H1", v.i_h1},
          {"v_i_plus_v_j", v.v_sum},
          {"lhs", v.lhs()},
          {"I_H2", v.i_h2 ? json(*v.i_h2) : json("inf")},
          {"dicritical", v.dicritical}};
}

}  // namespace dicrit

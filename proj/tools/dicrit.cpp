#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "dicrit/dual_graph.hpp"
#include "dicrit/errors.hpp"
#include "dicrit/golden.hpp"
#include "dicrit/json_io.hpp"

using namespace dicrit;

namespace {

struct Flags {
  std::string input;
  long order = 20;
  long i = 0;
  long j = 1;
  std::string at_u;
  bool special = false;
  bool dot = false;
  long n = 0;
  long m = 0;
  int indent = 2;
};

json load_input(const Flags& f) {
  if (f.input.empty()) throw ParseError("--input FILE is required");
  std::ifstream in(f.input);
  if (!in) throw ParseError("cannot open " + f.input);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const json& key(const json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) throw ParseError(std::string("input lacks \"") + name + "\"");
  return doc.at(name);
}

PuiseuxParam<Rational> branch_of(const json& doc) { return param_from_json(key(doc, "branch")); }

DicriticalProblem problem_of(const json& doc, const Flags& f) {
  DicriticalProblem p{canonical_semiroots(branch_of(doc)), f.i, f.j, wpoly_from_json(key(doc, "H1")),
                      doc.contains("H2") ? wpoly_from_json(doc.at("H2")) : WPoly<Rational>()};
  p.validate();
  return p;
}

json order_json(const Order& o) { return o.exact ? json(o.value) : json(o.str()); }

json cmd_info(const Flags& f) {
  const json doc = load_input(f);
  const auto p = branch_of(doc);
  const auto l = char_ladder(p);
  const auto s = semigroup(l);
  json out = to_json(l);
  out["v"] = s.v;
  out["mu"] = s.mu;
  out["tschirnhausen_normal"] = is_tschirnhausen_normal(p);
  if (doc.contains("weierstrass")) {
    const auto w = wpoly_from_json(doc.at("weierstrass"));
    const auto pb = pullback(w, p);
    out["weierstrass_check"] = w.is_monic() && w.y_degree() == p.n && pb.is_zero();
  }
  return out;
}

json cmd_semiroots(const Flags& f) {
  const auto s = canonical_semiroots(branch_of(load_input(f)));
  json fs = json::array();
  for (const auto& fi : s.F) fs.push_back(to_json(fi));
  return {{"F", fs}, {"ladder", to_json(s.ladder)}, {"semigroup", to_json(s.sg)}};
}

json cmd_expand(const Flags& f) {
  const json doc = load_input(f);
  const auto s = canonical_semiroots(branch_of(doc));
  const auto e = semiroot_expand(s, wpoly_from_json(key(doc, "H")));
  json terms = json::array();
  for (const auto& [delta, c] : e.terms) terms.push_back(json::array({delta, to_json(c)}));
  json out{{"terms", terms}, {"x_valid_below", e.x_valid_below >= kUnbounded ? json(nullptr) : json(e.x_valid_below)}};
  try {
    out["value"] = value_from_expansion(s, e);
  } catch (const NoFiniteValue&) {
    out["value"] = "inf";
  }
  return out;
}

json cmd_azevedo(const Flags& f) {
  const json doc = load_input(f);
  const auto w = form_from_json(key(doc, "form"));
  const auto pair = azevedo_decompose(w, f.n, f.m);
  return {{"n", pair.n}, {"m", pair.m}, {"H1", to_json(pair.H1)}, {"H2", to_json(pair.H2)},
          {"reconstructs", reconstruct(pair) == w}};
}

json cmd_dicritical(const Flags& f) {
  const auto p = problem_of(load_input(f), f);
  json out = to_json(dicritical_test(p));
  out["i"] = p.i;
  out["j"] = p.j;
  out["gamma1j"] = gamma1j(p);
  return out;
}

json cmd_separatrices(const Flags& f) {
  const auto p = problem_of(load_input(f), f);
  SolverOptions opts;
  opts.progress = [](long k, long kij) { std::cerr << "pullback order " << k << " -> coefficient t^" << kij << "\n"; };
  const auto family = solve_separatrix_family(p, f.order, opts);
  json out{{"family", to_json(family)}};
  if (!f.at_u.empty()) out["at_u"] = to_json(specialize_family(family, Rational::parse(f.at_u)));
  if (f.special) {
    const auto star = special_separatrix(p, family);
    const long nu = value(p.form(), p.S.source).require("nu(omega)");
    const auto c = contact(p.S.source, star);
    out["special"] = {{"u", to_json(p.source_u())},
                      {"param", to_json(star)},
                      {"nu", nu},
                      {"contact", c.exact ? to_json(c.value) : json(">=" + c.value.str())},
                      {"contact_formula", to_json(contact_value_formula(p, nu))},
                      {"I_F_Fstar", special_intersection(p, nu)}};
  }
  return out;
}

json cmd_contact(const Flags& f) {
  const json doc = load_input(f);
  const auto c = contact(branch_of(doc), param_from_json(key(doc, "other")));
  return {{"contact", to_json(c.value)}, {"exact", c.exact}};
}

json cmd_value(const Flags& f) {
  const json doc = load_input(f);
  const auto p = branch_of(doc);
  if (doc.contains("form")) return {{"nu", order_json(value(form_from_json(doc.at("form")), p))}};
  return {{"I", order_json(pullback(wpoly_from_json(key(doc, "H")), p).ord())}};
}

json cmd_zariski(const Flags& f) {
  const auto z = zariski_invariant(branch_of(load_input(f)));
  return {{"lambda", z.lambda ? json(*z.lambda) : json("inf")}, {"flagged", z.flagged}};
}

json cmd_selftest(bool& failed) {
  json rows = json::array();
  for (const auto& r : run_golden_suite()) {
    failed = failed || !r.pass;
    rows.push_back({{"criterion", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  }
  return {{"criteria", rows}, {"pass", !failed}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of plane branches and separatrices of dicritical foliations"};
  app.require_subcommand(1, 1);
  Flags f;

  auto add = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--input", f.input, "JSON input file");
    sub->add_option("--json-indent", f.indent, "JSON indentation (-1 for compact)");
    return sub;
  };
  auto add_ij = [&](CLI::App* sub) {
    sub->add_option("--i", f.i, "index i of omega_ij");
    sub->add_option("--j", f.j, "index j of omega_ij");
  };

  add("info", "characteristic exponents, semigroup, Milnor number");
  add("semiroots", "canonical semiroots F_0..F_{g+1}");
  add("expand", "semiroot expansion of H");
  auto* az = add("azevedo", "decompose a form as H1 (n x dy - m y dx) + dH2");
  az->add_option("--n", f.n, "n")->required();
  az->add_option("--m", f.m, "m")->required();
  add_ij(add("dicritical", "dicriticality criterion for H1 w_ij + dH2"));
  auto* sep = add("separatrices", "family of separatrices psi_u");
  add_ij(sep);
  sep->add_option("--order", f.order, "family is determined below t^K");
  sep->add_option("--at-u", f.at_u, "specialize the family at u = p/q");
  sep->add_flag("--special", f.special, "report the special separatrix and its contact");
  add("contact", "contact between branch and other");
  add("value", "value of a form or function along the branch");
  add("zariski", "Zariski invariant lambda");
  auto* graph = add("graph", "schematic dual graph");
  graph->add_flag("--dot", f.dot, "emit DOT text");
  add("selftest", "run the golden suite");

  CLI11_PARSE(app, argc, argv);
  const std::string cmd = app.get_subcommands().front()->get_name();

  try {
    json out;
    bool failed = false;
    if (cmd == "info") out = cmd_info(f);
    else if (cmd == "semiroots") out = cmd_semiroots(f);
    else if (cmd == "expand") out = cmd_expand(f);
    else if (cmd == "azevedo") out = cmd_azevedo(f);
    else if (cmd == "dicritical") out = cmd_dicritical(f);
    else if (cmd == "separatrices") out = cmd_separatrices(f);
    else if (cmd == "contact") out = cmd_contact(f);
    else if (cmd == "value") out = cmd_value(f);
    else if (cmd == "zariski") out = cmd_zariski(f);
    else if (cmd == "selftest") out = cmd_selftest(failed);
    else if (cmd == "graph") {
      const auto l = char_ladder(branch_of(load_input(f)));
      if (f.dot) {
        std::cout << emit_dual_graph_dot(l);
        return 0;
      }
      out = {{"ladder", to_json(l)}, {"dot", emit_dual_graph_dot(l)}};
    }
    std::cout << out.dump(f.indent) << "\n";
    return failed ? 1 : 0;
  } catch (const Error& e) {
    std::cout << json{{"error", e.kind()}, {"detail", e.what()}}.dump(f.indent) << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cout << json{{"error", "InternalError"}, {"detail", e.what()}}.dump(f.indent) << "\n";
    return 1;
  }
}

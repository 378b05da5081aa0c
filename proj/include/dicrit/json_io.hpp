#pragma once

#include <json.hpp>

#include "dicrit/dicritical.hpp"

namespace dicrit {

using json = nlohmann::ordered_json;

/// "p/q", or "p" when q = 1. Plain JSON integers are accepted on input.
json to_json(const Rational& r);
Rational rational_from_json(const json& j);

/// {"num": [[deg, "p/q"], ...], "den": [...]}
json to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const json& j);

/// {"terms": [[k, "p/q"], ...], "valid_below": N or null}
json to_json(const TruncSeries<Rational>& s);

/// {"n": 6, "y": [[9, "1"], ...], "valid_below": N}; null or a missing
/// valid_below means the series is exact.
json to_json(const PuiseuxParam<Rational>& p);
PuiseuxParam<Rational> param_from_json(const json& j);

/// {"terms": [[i, j, "p/q"], ...], "x_valid_below": M or null}; a bare
/// list of triples is accepted on input.
json to_json(const WPoly<Rational>& w);
WPoly<Rational> wpoly_from_json(const json& j);

/// {"A": WPoly, "B": WPoly}
json to_json(const OneForm<Rational>& w);
OneForm<Rational> form_from_json(const json& j);

json to_json(const CharLadder& l);
json to_json(const Semigroup& s);

json to_json(const SeparatrixFamily& f);
SeparatrixFamily family_from_json(const json& j);

json to_json(const DicriticalVerdict& v);

}  // namespace dicrit

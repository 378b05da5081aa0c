#include "dicrit/semiroot.hpp"

#include <bit>
#include <limits>

#include "dicrit/errors.hpp"

namespace dicrit {

namespace {

// Bivariate polynomial keyed by (y_exp, x_exp): lexicographic with y > x,
// which is what exact multivariate division needs.
using BiKey = std::pair<long, long>;
using BiPoly = std::map<BiKey, Rational>;

BiPoly to_bipoly(const WPoly<Rational>& p) {
  if (!p.is_exact()) throw PreconditionFailed("Bareiss elimination needs exact polynomial entries");
  BiPoly out;
  for (const auto& m : p.monomials()) out.emplace(BiKey{m.y_exp, m.x_exp}, m.coeff);
  return out;
}

WPoly<Rational> from_bipoly(const BiPoly& b) {
  std::vector<WPoly<Rational>::Monomial> terms;
  for (const auto& [k, c] : b) terms.push_back({k.second, k.first, c});
  return WPoly<Rational>::from_monomials(terms);
}

void add_into(BiPoly& acc, const BiPoly& b, const Rational& scale) {
  for (const auto& [k, c] : b) {
    auto [it, inserted] = acc.try_emplace(k, c * scale);
    if (!inserted) {
      it->second += c * scale;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

BiPoly mul(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      const BiKey k{ka.first + kb.first, ka.second + kb.second};
      auto [it, inserted] = out.try_emplace(k, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

BiPoly sub(BiPoly a, const BiPoly& b) {
  add_into(a, b, Rational(-1));
  return a;
}

// Exact division; Bareiss guarantees divisibility.
BiPoly exact_div(BiPoly a, const BiPoly& b) {
  if (b.empty()) throw PreconditionFailed("Bareiss pivot vanished");
  const auto& [lk, lc] = *b.rbegin();
  BiPoly q;
  while (!a.empty()) {
    const auto [ak, ac] = *a.rbegin();
    if (ak.first < lk.first || ak.second < lk.second) {
      throw PreconditionFailed("inexact division in Bareiss elimination");
    }
    const BiKey k{ak.first - lk.first, ak.second - lk.second};
    const Rational c = ac / lc;
    q.emplace(k, c);
    add_into(a, mul(BiPoly{{k, c}}, b), Rational(-1));
  }
  return q;
}

}  // namespace

WPoly<Rational> bareiss_determinant(std::vector<std::vector<WPoly<Rational>>> m) {
  const std::size_t n = m.size();
  if (n == 0) return WPoly<Rational>::constant(Rational(1));
  std::vector<std::vector<BiPoly>> a(n, std::vector<BiPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw PreconditionFailed("determinant of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = to_bipoly(m[i][j]);
  }
  BiPoly prev{{BiKey{0, 0}, Rational(1)}};
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].empty()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k].empty()) ++swap_row;
      if (swap_row == n) return WPoly<Rational>();
      std::swap(a[k], a[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BiPoly num = sub(mul(a[i][j], a[k][k]), mul(a[i][k], a[k][j]));
        a[i][j] = exact_div(std::move(num), prev);
      }
      a[i][k].clear();
    }
    prev = a[k][k];
  }
  WPoly<Rational> det = from_bipoly(a[n - 1][n - 1]);
  return negate ? -det : det;
}

WPoly<Rational> minimal_polynomial(const TruncSeries<Rational>& eta, long m) {
  if (m < 1) throw PreconditionFailed("minimal_polynomial needs m >= 1");
  if (m > 20) throw PreconditionFailed("minimal_polynomial supports m <= 20");
  // The coefficients are symmetric in the conjugates eta(w z), so a z-error
  // at order N is an x-error at order ceil(N/m).
  const long bound = eta.is_exact() ? kUnbounded : (eta.valid_below() + m - 1) / m;
  const auto cut = [&](WPoly<Rational> w) { return bound >= kUnbounded ? w : w.x_truncated(bound); };

  // Multiplication by g = y - eta(z) on Q[[x]][y][z]/(z^m - x), basis 1, z, ..., z^(m-1):
  // column k holds g z^k, with z^(k+r) -> x z^(k+r-m) once k + r >= m.
  const auto n = static_cast<std::size_t>(m);
  std::vector<std::vector<std::vector<WPoly<Rational>::Monomial>>> entry(n, std::vector<std::vector<WPoly<Rational>::Monomial>>(n));
  for (std::size_t k = 0; k < n; ++k) entry[k][k].push_back({0, 1, Rational(1)});
  for (const auto& [e, c] : eta.terms()) {
    const long r = e % m;
    for (long k = 0; k < m; ++k) {
      const long wrap = (k + r >= m) ? 1 : 0;
      entry[static_cast<std::size_t>((k + r) % m)][static_cast<std::size_t>(k)].push_back({e / m + wrap, 0, -c});
    }
  }

  // Division-free Laplace expansion memoized on the set of used columns, so
  // every partial product may be truncated at the bound.
  std::vector<WPoly<Rational>> minor(std::size_t{1} << n);
  minor[0] = WPoly<Rational>::constant(Rational(1));
  for (std::size_t row = 0; row < n; ++row) {
    std::vector<WPoly<Rational>> next(minor.size());
    for (std::size_t mask = 0; mask < minor.size(); ++mask) {
      if (minor[mask].is_zero() || static_cast<std::size_t>(std::popcount(mask)) != row) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (mask & (std::size_t{1} << c) || entry[row][c].empty()) continue;
        const auto term = cut(WPoly<Rational>::from_monomials(entry[row][c]) * minor[mask]);
        auto& slot = next[mask | (std::size_t{1} << c)];
        slot = std::popcount(mask >> (c + 1)) % 2 == 1 ? slot - term : slot + term;
      }
    }
    minor = std::move(next);
  }
  return cut(minor.back());
}

SemirootSystem canonical_semiroots(const PuiseuxParam<Rational>& p) {
  SemirootSystem s;
  s.source = p;
  s.ladder = char_ladder(p);
  s.sg = semigroup(s.ladder);
  const auto params = semiroot_params(p, s.ladder);
  s.F.push_back(WPoly<Rational>::x());
  for (long i = 1; i <= s.ladder.g + 1; ++i) {
    const auto& phi = params[static_cast<std::size_t>(i - 1)];
    s.F.push_back(minimal_polynomial(phi.y, phi.n));
  }
  for (long i = 0; i <= s.ladder.g + 1; ++i) {
    const auto& fi = s.F[static_cast<std::size_t>(i)];
    if (i >= 1) {
      const long expected = s.ladder.beta[0] / s.ladder.e[static_cast<std::size_t>(i - 1)];
      if (!fi.is_monic() || fi.y_degree() != expected) {
        throw PreconditionFailed("semiroot F_" + std::to_string(i) + " is not monic of degree " +
                                 std::to_string(expected));
      }
    }
    if (i <= s.ladder.g) {
      const long value = intersection_multiplicity(p, fi);
      if (value != s.sg.v[static_cast<std::size_t>(i)]) {
        throw PreconditionFailed("I(F, F_" + std::to_string(i) + ") = " + std::to_string(value) +
                                 ", expected v_" + std::to_string(i));
      }
    }
  }
  return s;
}

namespace {

void expand_level(const SemirootSystem& s, const WPoly<Rational>& p, long level, std::vector<long>& delta,
                  SemirootExpansion& out) {
  out.x_valid_below = std::min(out.x_valid_below, p.x_valid_below());
  if (level == 0) {
    if (p.y_degree() > 0) throw PreconditionFailed("semiroot expansion left a y-dependent digit");
    const auto digits = p.coeff(0);
    for (const auto& [i, c] : digits.terms()) {
      delta[0] = i;
      out.terms.emplace(delta, c);
    }
    delta[0] = 0;
    return;
  }
  const auto& fl = s.F[static_cast<std::size_t>(level)];
  WPoly<Rational> rest = p;
  long digit = 0;
  while (!rest.is_zero()) {
    auto [q, r] = ydiv(rest, fl);
    delta[static_cast<std::size_t>(level)] = digit;
    expand_level(s, r, level - 1, delta, out);
    out.x_valid_below = std::min(out.x_valid_below, q.x_valid_below());
    rest = std::move(q);
    ++digit;
  }
  delta[static_cast<std::size_t>(level)] = 0;
}

}  // namespace

SemirootExpansion semiroot_expand(const SemirootSystem& s, const WPoly<Rational>& h) {
  SemirootExpansion out;
  std::vector<long> delta(static_cast<std::size_t>(s.g() + 2), 0);
  expand_level(s, h, s.g() + 1, delta, out);
  std::erase_if(out.terms, [&](const auto& kv) { return kv.first[0] >= out.x_valid_below; });
  return out;
}

WPoly<Rational> resubstitute(const SemirootSystem& s, const SemirootExpansion& e) {
  std::map<std::pair<std::size_t, long>, WPoly<Rational>> powers;
  auto power = [&](std::size_t i, long k) -> const WPoly<Rational>& {
    auto it = powers.find({i, k});
    if (it == powers.end()) it = powers.emplace(std::pair{i, k}, pow(s.F[i], static_cast<unsigned>(k))).first;
    return it->second;
  };
  WPoly<Rational> acc;
  for (const auto& [delta, c] : e.terms) {
    WPoly<Rational> term = WPoly<Rational>::constant(c);
    for (std::size_t i = 0; i < delta.size(); ++i) {
      if (delta[i] != 0) term = term * power(i, delta[i]);
    }
    acc += term;
  }
  return acc.x_truncated(e.x_valid_below);
}

std::vector<long> leading_multi_index(const SemirootSystem& s, const SemirootExpansion& e) {
  const std::size_t top = static_cast<std::size_t>(s.g() + 1);
  long best = std::numeric_limits<long>::max();
  std::vector<long> arg;
  for (const auto& [delta, c] : e.terms) {
    if (delta[top] != 0) continue;
    long value = 0;
    for (std::size_t i = 0; i < top; ++i) value += delta[i] * s.sg.v[i];
    if (value < best) {
      best = value;
      arg = delta;
    } else if (value == best) {
      throw PreconditionFailed("semiroot monomials with equal values; system is not a semiroot system");
    }
  }
  const bool truncated = e.x_valid_below < kUnbounded;
  if (arg.empty()) {
    if (truncated) throw InsufficientTruncation("no term of finite value below the x-truncation");
    throw NoFiniteValue("H lies in the ideal of the curve; its value is infinite");
  }
  if (truncated && best >= e.x_valid_below * s.sg.v[0]) {
    throw InsufficientTruncation("value " + std::to_string(best) + " not certified below x-truncation " +
                                 std::to_string(e.x_valid_below));
  }
  return arg;
}

long value_from_expansion(const SemirootSystem& s, const SemirootExpansion& e) {
  const auto delta = leading_multi_index(s, e);
  long value = 0;
  for (std::size_t i = 0; i + 1 < delta.size(); ++i) value += delta[i] * s.sg.v[i];
  return value;
}

}  // namespace dicrit

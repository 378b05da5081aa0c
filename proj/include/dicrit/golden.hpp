#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dicrit/dicritical.hpp"

namespace dicrit {

/// (t^6, t^9 + t^12 + 2 t^13)
PuiseuxParam<Rational> golden_sextic();
/// (t^2, t^3)
PuiseuxParam<Rational> cusp();

struct GoldenProblem {
  std::string name;
  DicriticalProblem P;
  long K = 0;
};

/// zeta_1 = y w01 - d(x^5), zeta_2 = y w02 + d(x^6 y), zeta_3 = x w12 + d((33/20) y^2 F_2).
std::vector<GoldenProblem> golden_problems(const SemirootSystem& sextic);
/// y w01 - d(x^4): the equality case, not dicritical.
DicriticalProblem borderline_problem(const SemirootSystem& sextic);

/// Small random inputs for property runs.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : gen_(seed) {}
  long integer(long lo, long hi);
  /// Nonzero rational p/q with |p| <= 5, 1 <= q <= 4.
  Rational rational();
  /// Random polynomial with x-degree <= max_x, y-degree <= max_y, no constant term.
  WPoly<Rational> wpoly(long max_x, long max_y, int terms);

 private:
  std::mt19937_64 gen_;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

inline constexpr std::uint64_t kGoldenSeed = 20240611;

std::vector<CriterionResult> run_golden_suite(std::uint64_t seed = kGoldenSeed);

}  // namespace dicrit

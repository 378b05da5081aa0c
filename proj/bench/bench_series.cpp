#include <chrono>
#include <cstdlib>
#include <iostream>
#include <omp.h>

#include "dicrit/series.hpp"

using namespace dicrit;

namespace {

TruncSeries<Rational> sample(long terms, long stride, long seed) {
  std::map<long, Rational> c;
  for (long k = 0; k < terms; ++k) c.emplace(k * stride, Rational((k * 7 + seed) % 13 - 6, k % 5 + 1));
  std::erase_if(c, [](const auto& kv) { return kv.second.is_zero(); });
  return TruncSeries<Rational>(std::move(c), kUnbounded);
}

template <class F>
double millis(F&& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  std::cout << "threads " << omp_get_max_threads() << "\n";
  std::cout << "terms  serial_ms  parallel_ms  equal\n";
  for (long terms : {64L, 256L, 1024L, 2048L}) {
    const auto a = sample(terms, 1, 1);
    const auto b = sample(terms, 2, 5);
    TruncSeries<Rational> s, p;
    const double ts = millis([&] { s = series_mul_serial(a, b); }, reps);
    const double tp = millis([&] { p = series_mul_parallel(a, b); }, reps);
    std::cout << terms << "  " << ts << "  " << tp << "  " << (s == p ? "yes" : "NO") << "\n";
  }
  return 0;
}

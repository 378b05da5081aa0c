#include "dicrit/series.hpp"

#include <atomic>
#include <sstream>
#include <vector>

#include <omp.h>

#include "dicrit/errors.hpp"

namespace dicrit {

long Order::require(const std::string& what) const {
  if (!exact) {
    throw InsufficientTruncation(what + ": order not resolved below " + bound_str(value));
  }
  return value;
}

template <Field K>
TruncSeries<K>::TruncSeries(Coeffs coeffs, long valid_below)
    : coeffs_(std::move(coeffs)), valid_below_(std::max(0L, std::min(valid_below, kUnbounded))) {
  std::erase_if(coeffs_, [this](const auto& kv) {
    return kv.second.is_zero() || kv.first >= valid_below_;
  });
  if (!coeffs_.empty() && coeffs_.begin()->first < 0) {
    throw PreconditionFailed("negative exponent in power series");
  }
}

template <Field K>
TruncSeries<K> TruncSeries<K>::monomial(const K& c, long exponent, long valid_below) {
  Coeffs m;
  m.emplace(exponent, c);
  return TruncSeries(std::move(m), valid_below);
}

template <Field K>
K TruncSeries<K>::coeff(long e) const {
  if (e >= valid_below_) {
    throw InsufficientTruncation("coefficient of t^" + std::to_string(e) + " unknown (valid below " +
                                 bound_str(valid_below_) + ")");
  }
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? K(0) : it->second;
}

template <Field K>
Order TruncSeries<K>::ord() const {
  if (coeffs_.empty()) return Order::at_least(valid_below_);
  return {coeffs_.begin()->first, true};
}

template <Field K>
TruncSeries<K> TruncSeries<K>::truncated(long n) const {
  return TruncSeries(coeffs_, std::min(n, valid_below_));
}

template <Field K>
TruncSeries<K> TruncSeries<K>::derive() const {
  Coeffs out;
  for (const auto& [e, c] : coeffs_) {
    if (e > 0) out.emplace(e - 1, c * K(e));
  }
  return TruncSeries(std::move(out), is_exact() ? kUnbounded : valid_below_ - 1);
}

template <Field K>
TruncSeries<K> TruncSeries<K>::shifted(long s) const {
  Coeffs out;
  for (const auto& [e, c] : coeffs_) out.emplace(e + s, c);
  return TruncSeries(std::move(out), is_exact() ? kUnbounded : valid_below_ + s);
}

template <Field K>
TruncSeries<K> TruncSeries<K>::substitute_power(long n) const {
  if (n <= 0) throw PreconditionFailed("substitute_power needs a positive exponent");
  Coeffs out;
  for (const auto& [e, c] : coeffs_) out.emplace(e * n, c);
  // Unknown coefficients at e >= N land at exponents >= N*n.
  return TruncSeries(std::move(out), is_exact() ? kUnbounded : valid_below_ * n);
}

template <Field K>
TruncSeries<K> TruncSeries<K>::scaled(const K& c) const {
  Coeffs out;
  if (!c.is_zero()) {
    for (const auto& [e, a] : coeffs_) out.emplace(e, a * c);
  }
  return TruncSeries(std::move(out), valid_below_);
}

template <Field K>
TruncSeries<K> TruncSeries<K>::operator-() const {
  TruncSeries out = *this;
  for (auto& kv : out.coeffs_) kv.second = -kv.second;
  return out;
}

template <Field K>
TruncSeries<K>& TruncSeries<K>::operator+=(const TruncSeries& o) {
  valid_below_ = std::min(valid_below_, o.valid_below_);
  std::erase_if(coeffs_, [this](const auto& kv) { return kv.first >= valid_below_; });
  for (const auto& [e, c] : o.coeffs_) {
    if (e >= valid_below_) break;
    auto [it, inserted] = coeffs_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }
  return *this;
}

template <Field K>
TruncSeries<K>& TruncSeries<K>::operator-=(const TruncSeries& o) {
  return *this += -o;
}

template <Field K>
TruncSeries<K> series_mul_serial(const TruncSeries<K>& a, const TruncSeries<K>& b) {
  const long bound = product_bound(a, b);
  typename TruncSeries<K>::Coeffs out;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      const long e = ea + eb;
      if (e >= bound) break;
      auto [it, inserted] = out.try_emplace(e, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  return TruncSeries<K>(std::move(out), bound);
}

template <Field K>
TruncSeries<K> series_mul_parallel(const TruncSeries<K>& a, const TruncSeries<K>& b) {
  const long bound = product_bound(a, b);
  if (a.is_zero() || b.is_zero()) return TruncSeries<K>({}, bound);

  std::vector<std::pair<long, const K*>> at;
  at.reserve(a.terms().size());
  for (const auto& [e, c] : a.terms()) at.emplace_back(e, &c);

  const long b_lo = b.terms().begin()->first;
  const long b_hi = b.terms().rbegin()->first;
  std::vector<const K*> b_dense(static_cast<std::size_t>(b_hi - b_lo + 1), nullptr);
  for (const auto& [e, c] : b.terms()) b_dense[static_cast<std::size_t>(e - b_lo)] = &c;

  const long lo = at.front().first + b_lo;
  const long hi = std::min(bound, at.back().first + b_hi + 1);
  if (hi <= lo) return TruncSeries<K>({}, bound);
  std::vector<K> dense(static_cast<std::size_t>(hi - lo), K(0));

#pragma omp parallel for schedule(dynamic, 4)
  for (long k = lo; k < hi; ++k) {
    K acc(0);
    for (const auto& [ea, ca] : at) {
      const long eb = k - ea;
      if (eb < b_lo) break;
      if (eb > b_hi) continue;
      const K* cb = b_dense[static_cast<std::size_t>(eb - b_lo)];
      if (cb != nullptr) acc += (*ca) * (*cb);
    }
    dense[static_cast<std::size_t>(k - lo)] = std::move(acc);
  }

  typename TruncSeries<K>::Coeffs out;
  for (long k = lo; k < hi; ++k) {
    auto& c = dense[static_cast<std::size_t>(k - lo)];
    if (!c.is_zero()) out.emplace_hint(out.end(), k, std::move(c));
  }
  return TruncSeries<K>(std::move(out), bound);
}

namespace {
std::atomic<long> g_parallel_threshold{4096};
}  // namespace

void set_parallel_threshold(long pairs) { g_parallel_threshold.store(pairs); }
long parallel_threshold() { return g_parallel_threshold.load(); }

template <Field K>
TruncSeries<K> series_mul(const TruncSeries<K>& a, const TruncSeries<K>& b) {
  const long pairs = static_cast<long>(a.terms().size() * b.terms().size());
  if (pairs >= parallel_threshold() && omp_get_max_threads() > 1 && !omp_in_parallel()) {
    return series_mul_parallel(a, b);
  }
  return series_mul_serial(a, b);
}

template <Field K>
TruncSeries<K> pow(const TruncSeries<K>& a, unsigned exponent) {
  TruncSeries<K> result = TruncSeries<K>::constant(K(1));
  TruncSeries<K> base = a;
  while (exponent != 0) {
    if (exponent & 1U) result = series_mul(result, base);
    exponent >>= 1U;
    if (exponent != 0) base = series_mul(base, base);
  }
  return result;
}

std::string to_string(const TruncSeries<Rational>& s, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : s.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    if (e != 0) os << "*" << var << "^" << e;
  }
  if (first) os << "0";
  if (!s.is_exact()) os << " + O(" << var << "^" << s.valid_below() << ")";
  return os.str();
}

template class TruncSeries<Rational>;
template class TruncSeries<RatFunc>;

#define DICRIT_SERIES_INSTANTIATE(K)                                                  \
  template TruncSeries<K> series_mul_serial(const TruncSeries<K>&, const TruncSeries<K>&); \
  template TruncSeries<K> series_mul_parallel(const TruncSeries<K>&, const TruncSeries<K>&); \
  template TruncSeries<K> series_mul(const TruncSeries<K>&, const TruncSeries<K>&);        \
  template TruncSeries<K> pow(const TruncSeries<K>&, unsigned);

DICRIT_SERIES_INSTANTIATE(Rational)
DICRIT_SERIES_INSTANTIATE(RatFunc)

#undef DICRIT_SERIES_INSTANTIATE

}  // namespace dicrit

#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "dicrit/ratfunc.hpp"
#include "dicrit/rational.hpp"

namespace dicrit {

/// Validity bound meaning "exact": every coefficient is known.
inline constexpr long kUnbounded = 1L << 40;

/// Saturating sum of two validity bounds / orders.
inline long bound_add(long a, long b) {
  if (a >= kUnbounded || b >= kUnbounded) return kUnbounded;
  return std::min(a + b, kUnbounded);
}

inline std::string bound_str(long b) { return b >= kUnbounded ? "inf" : std::to_string(b); }

/// Either an exact order, or the marker ">= value" when every known
/// coefficient vanished.
struct Order {
  long value = 0;
  bool exact = true;

  static Order at_least(long n) { return {n, false}; }
  /// Returns the exact value or throws InsufficientTruncation.
  long require(const std::string& what) const;
  std::string str() const { return exact ? std::to_string(value) : ">=" + bound_str(value); }
  friend bool operator==(const Order&, const Order&) = default;
};

template <class K>
concept Field = requires(K a, const K b) {
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { -b } -> std::convertible_to<K>;
  { b.is_zero() } -> std::convertible_to<bool>;
  K(0);
  K(1);
};

/// Truncated power series in one variable over K (Rational or RatFunc).
/// Coefficients at exponents >= valid_below are unknown; stored exponents
/// are all below it and no zero coefficient is stored.
template <Field K>
class TruncSeries {
 public:
  using Coeffs = std::map<long, K>;

  TruncSeries() = default;
  TruncSeries(Coeffs coeffs, long valid_below);

  static TruncSeries monomial(const K& c, long exponent, long valid_below = kUnbounded);
  static TruncSeries constant(const K& c, long valid_below = kUnbounded) {
    return monomial(c, 0, valid_below);
  }

  const Coeffs& terms() const { return coeffs_; }
  long valid_below() const { return valid_below_; }
  bool is_exact() const { return valid_below_ >= kUnbounded; }
  /// True when no nonzero coefficient is known (zero up to validity).
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient at e; throws InsufficientTruncation if e >= valid_below.
  K coeff(long e) const;
  Order ord() const;
  /// Least exponent stored, or valid_below when none.
  long ord_or_bound() const { return coeffs_.empty() ? valid_below_ : coeffs_.begin()->first; }

  TruncSeries truncated(long n) const;
  TruncSeries derive() const;
  /// Multiplies by t^s.
  TruncSeries shifted(long s) const;
  /// Substitutes t -> t^n.
  TruncSeries substitute_power(long n) const;
  TruncSeries scaled(const K& c) const;

  /// Same series with the coefficients mapped through f (field change).
  template <class F>
  auto map_coeffs(F&& f) const -> TruncSeries<std::decay_t<decltype(f(std::declval<const K&>()))>> {
    using L = std::decay_t<decltype(f(std::declval<const K&>()))>;
    typename TruncSeries<L>::Coeffs out;
    for (const auto& [e, c] : coeffs_) out.emplace(e, f(c));
    return TruncSeries<L>(std::move(out), valid_below_);
  }

  TruncSeries operator-() const;
  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) { return series_mul(a, b); }
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.valid_below_ == b.valid_below_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Coeffs coeffs_;
  long valid_below_ = kUnbounded;
};

/// Validity bound of a product: min(Na + ord b, Nb + ord a), where the order
/// of a series with no known nonzero term is its own bound.
template <Field K>
long product_bound(const TruncSeries<K>& a, const TruncSeries<K>& b) {
  return std::min(bound_add(a.valid_below(), b.ord_or_bound()),
                  bound_add(b.valid_below(), a.ord_or_bound()));
}

/// Reference product: double loop over the sparse terms.
template <Field K>
TruncSeries<K> series_mul_serial(const TruncSeries<K>& a, const TruncSeries<K>& b);

/// OpenMP product: one output exponent per iteration, dense over the
/// output range. Equal to series_mul_serial term for term.
template <Field K>
TruncSeries<K> series_mul_parallel(const TruncSeries<K>& a, const TruncSeries<K>& b);

/// Dispatches to the parallel kernel when more than one thread is available
/// and the term count is large enough to pay for the fork.
template <Field K>
TruncSeries<K> series_mul(const TruncSeries<K>& a, const TruncSeries<K>& b);

/// Work threshold (|a| * |b| term pairs) above which series_mul goes parallel.
void set_parallel_threshold(long pairs);
long parallel_threshold();

template <Field K>
TruncSeries<K> pow(const TruncSeries<K>& a, unsigned exponent);

std::string to_string(const TruncSeries<Rational>& s, const std::string& var = "t");

extern template class TruncSeries<Rational>;
extern template class TruncSeries<RatFunc>;

}  // namespace dicrit

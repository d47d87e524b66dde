#pragma once

// The tropical semifield T = (Q u {-inf}, max, +), its Boolean subsemifield
// B = {-inf, 0}, and the T-extension R x_e T of a carrier semiring R.

#include "tropfan/numeric.hpp"

#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace tropfan {

/// An exact rational or the bottom element -inf.
class TropValue {
 public:
  TropValue() = default;  // -inf
  TropValue(Rational v) : value_(std::move(v)) {}
  TropValue(long long v) : value_(Rational(v)) {}

  static TropValue bottom() { return TropValue(); }

  bool is_bottom() const noexcept { return !value_.has_value(); }
  const Rational& value() const { return *value_; }

  friend bool operator==(const TropValue&, const TropValue&) = default;
  /// Total order with -inf smallest.
  friend bool operator<(const TropValue& a, const TropValue& b) {
    if (a.is_bottom()) return !b.is_bottom();
    if (b.is_bottom()) return false;
    return *a.value_ < *b.value_;
  }
  friend bool operator>(const TropValue& a, const TropValue& b) { return b < a; }
  friend bool operator<=(const TropValue& a, const TropValue& b) { return !(b < a); }
  friend bool operator>=(const TropValue& a, const TropValue& b) { return !(a < b); }

 private:
  std::optional<Rational> value_;
};

/// a (+) b = max(a, b)
TropValue trop_add(const TropValue& a, const TropValue& b);
/// a (.) b = a + b, -inf absorbing
TropValue trop_mul(const TropValue& a, const TropValue& b);

inline bool is_boolean(const TropValue& a) { return a.is_bottom() || a.value() == 0; }

std::string to_string(const TropValue& a);

/// Requirements on R for R x_e T: a zero test, addition and multiplication
/// such that sums and products of nonzero elements stay nonzero.
template <class R>
concept TExtCarrier = std::equality_comparable<R> && requires(const R& a, const R& b) {
  { a + b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { a.is_zero() } -> std::convertible_to<bool>;
};

template <TExtCarrier R>
class TExtElement {
 public:
  TExtElement() = default;  // -inf

  /// (f, a) with f nonzero; throws std::invalid_argument for f = 0.
  TExtElement(R carrier, Rational grade) : pair_(Pair{std::move(carrier), std::move(grade)}) {
    if (pair_->carrier.is_zero()) {
      throw std::invalid_argument("T-extension carrier part must be nonzero");
    }
  }

  static TExtElement bottom() { return TExtElement(); }

  bool is_bottom() const noexcept { return !pair_.has_value(); }
  const R& carrier() const { return pair_->carrier; }
  const Rational& grade() const { return pair_->grade; }

  /// The grade as a tropical value (-inf for bottom).
  TropValue valuation() const { return is_bottom() ? TropValue() : TropValue(grade()); }

  friend TExtElement operator+(const TExtElement& x, const TExtElement& y) {
    if (x.is_bottom()) return y;
    if (y.is_bottom()) return x;
    if (x.grade() > y.grade()) return x;
    if (x.grade() < y.grade()) return y;
    return TExtElement(x.carrier() + y.carrier(), x.grade());
  }

  friend TExtElement operator*(const TExtElement& x, const TExtElement& y) {
    if (x.is_bottom() || y.is_bottom()) return TExtElement();
    return TExtElement(x.carrier() * y.carrier(), x.grade() + y.grade());
  }

  friend bool operator==(const TExtElement& x, const TExtElement& y) {
    if (x.is_bottom() || y.is_bottom()) return x.is_bottom() == y.is_bottom();
    return x.grade() == y.grade() && x.carrier() == y.carrier();
  }

  /// (f, a)^-1 = (f^-1, -a) when the carrier exposes unit inverses.
  std::optional<TExtElement> inverse() const
    requires requires(const R& f) { { f.unit_inverse() } -> std::same_as<std::optional<R>>; }
  {
    if (is_bottom()) return std::nullopt;
    auto inv = carrier().unit_inverse();
    if (!inv) return std::nullopt;
    return TExtElement(std::move(*inv), -grade());
  }

 private:
  struct Pair {
    R carrier;
    Rational grade;
  };
  std::optional<Pair> pair_;
};

}  // namespace tropfan

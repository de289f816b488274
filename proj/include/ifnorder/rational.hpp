#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalar used for every degree, knot and score.
 *
 * All values in the library are exact. Decimal text such as "0.05" parses to
 * the fraction 1/20, and rounding happens only when a value is rendered with
 * to_decimal(). Storage is an arbitrary-precision rational, so products of
 * cut endpoints never overflow.
 */

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace ifnorder {

class Rational {
 public:
  using Value = boost::multiprecision::mpq_rational;

  Rational() = default;
  Rational(std::int64_t n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(Value v) : value_(std::move(v)) {}

  /// Parses "3", "-0.05", "1.5e-2" or "2/3". Throws ParseError.
  static Rational parse(std::string_view text);

  const Value& value() const noexcept { return value_; }

  std::string numerator_str() const;
  std::string denominator_str() const;

  bool is_zero() const { return value_.is_zero(); }
  int sign() const { return value_.sign(); }

  /// True when the value has a finite decimal expansion (denominator 2^a 5^b).
  bool terminates() const;

  /// Exact text: a terminating decimal ("0.26125") when one exists, else "p/q".
  std::string str() const;

  /// Rounds half-to-even to `places` decimals; trailing zeros are kept.
  std::string to_decimal(int places) const;

  double to_double() const;

  Rational operator-() const { return Rational(Value(-value_)); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  Value value_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// True when r lies in the closed unit interval.
inline bool in_unit_interval(const Rational& r) { return r.sign() >= 0 && r <= Rational(1); }

}  // namespace ifnorder

template <>
struct std::hash<ifnorder::Rational> {
  std::size_t operator()(const ifnorder::Rational& r) const {
    return std::hash<std::string>{}(r.numerator_str() + "/" + r.denominator_str());
  }
};

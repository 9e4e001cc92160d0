#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

namespace bcjq {

using Integer = mpz_class;

/// `numerator / divisor`, throwing InexactDivision if the remainder is nonzero.
Integer exact_divide(const Integer& numerator, long divisor);

Integer pow2(std::uint64_t exponent);

/// Arbitrary-precision fraction, always stored in lowest terms with a
/// positive denominator. Equality is structural.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I value)  // NOLINT(google-explicit-constructor)
      : value_(std::is_signed_v<I> ? mpq_class(static_cast<long>(value)) : mpq_class(static_cast<unsigned long>(value))) {}
  Rational(const Integer& value) : value_(value) {}       // NOLINT(google-explicit-constructor)
  Rational(const Integer& numerator, const Integer& denominator);

  /// Accepts "n" or "n/d" with an optional leading sign.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Throws InexactDivision unless the value is an integer.
  Integer to_integer() const;
  double to_double() const { return value_.get_d(); }
  std::string to_string() const { return value_.get_str(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  /// Throws DivisionByZero.
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpq_class value_;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
Rational inverse(const Rational& x);
inline std::string to_string(const Rational& x) { return x.to_string(); }
std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace bcjq

#pragma once

#include <concepts>
#include <ostream>
#include <string>

#include "bcjq/rational.hpp"

namespace bcjq {

/// Element a + b*w of the cyclotomic field Q(w), where w is a primitive cube
/// root of unity reduced by w^2 = -w - 1.
///
/// The two non-real roots of x^3 - x^2 - x - 2 live here as omega1() = w and
/// omega2() = -1 - w. Every Binet-style closed form in this library is
/// evaluated in this field and projected back to Q only at the end.
class Cyclo {
 public:
  Cyclo() = default;
  template <std::integral I>
  Cyclo(I value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  Cyclo(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  Cyclo(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Cyclo omega() { return {Rational(0), Rational(1)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& omega_part() const { return b_; }
  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  /// Galois conjugate: w -> w^2 = -1 - w.
  Cyclo conjugate() const { return {a_ - b_, -b_}; }
  /// Field norm a^2 - ab + b^2, zero only at zero.
  Rational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

  Cyclo operator-() const { return {-a_, -b_}; }
  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo& operator/=(const Cyclo& o);

  friend Cyclo operator+(Cyclo x, const Cyclo& y) { return x += y; }
  friend Cyclo operator-(Cyclo x, const Cyclo& y) { return x -= y; }
  friend Cyclo operator*(Cyclo x, const Cyclo& y) { return x *= y; }
  friend Cyclo operator/(Cyclo x, const Cyclo& y) { return x /= y; }
  friend bool operator==(const Cyclo&, const Cyclo&) = default;

  std::string to_string() const;

 private:
  Rational a_;
  Rational b_;
};

inline Cyclo omega1() { return Cyclo::omega(); }
inline Cyclo omega2() { return {Rational(-1), Rational(-1)}; }

inline bool is_zero(const Cyclo& x) { return x.is_zero(); }
/// Throws DivisionByZero on zero.
Cyclo inverse(const Cyclo& x);
Cyclo pow(const Cyclo& x, std::uint64_t n);

/// Rational value of `x`; throws ProjectionError if the w-part is nonzero.
Rational project_rational(const Cyclo& x);

inline std::string to_string(const Cyclo& x) { return x.to_string(); }
std::ostream& operator<<(std::ostream& os, const Cyclo& x);

}  // namespace bcjq

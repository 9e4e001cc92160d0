#include "bcjq/rational.hpp"

#include <cctype>

#include "bcjq/error.hpp"

namespace bcjq {

Integer exact_divide(const Integer& numerator, long divisor) {
  if (divisor == 0) throw DivisionByZero("exact_divide: divisor is zero");
  Integer quotient;
  Integer remainder;
  const Integer d(divisor);
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), numerator.get_mpz_t(), d.get_mpz_t());
  if (remainder != 0) {
    throw InexactDivision(numerator.get_str() + " is not divisible by " + std::to_string(divisor));
  }
  return quotient;
}

Integer pow2(std::uint64_t exponent) {
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), 2, exponent);
  return result;
}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw DivisionByZero("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (const char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational literal '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  const Integer d(std::string(den), 10);
  if (negative) n = -n;
  return {n, d};
}

Integer Rational::to_integer() const {
  if (!is_integer()) throw InexactDivision("rational " + to_string() + " is not an integer");
  return value_.get_num();
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw DivisionByZero("rational division by zero");
  value_ /= other.value_;
  return *this;
}

Rational inverse(const Rational& x) {
  if (x.is_zero()) throw DivisionByZero("inverse of zero rational");
  return Rational(1) / x;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

}  // namespace bcjq

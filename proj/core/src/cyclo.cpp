#include "bcjq/cyclo.hpp"

#include "bcjq/algebra.hpp"
#include "bcjq/error.hpp"

namespace bcjq {

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

// (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2, with w^2 = -1 - w.
Cyclo& Cyclo::operator*=(const Cyclo& o) {
  const Rational bd = b_ * o.b_;
  Rational a = a_ * o.a_ - bd;
  Rational b = a_ * o.b_ + b_ * o.a_ - bd;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Cyclo& Cyclo::operator/=(const Cyclo& o) { return *this *= inverse(o); }

std::string Cyclo::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::string out = a_.to_string();
  if (b_.sign() < 0) {
    out += " - " + (-b_).to_string() + "*w";
  } else {
    out += " + " + b_.to_string() + "*w";
  }
  return out;
}

Cyclo inverse(const Cyclo& x) {
  if (x.is_zero()) throw DivisionByZero("inverse of zero in Q(w)");
  const Rational n = x.norm();
  const Cyclo c = x.conjugate();
  return {c.rational_part() / n, c.omega_part() / n};
}

Cyclo pow(const Cyclo& x, std::uint64_t n) { return power(x, n); }

Rational project_rational(const Cyclo& x) {
  if (!x.is_rational()) throw ProjectionError("value " + x.to_string() + " has a nonzero w-part");
  return x.rational_part();
}

std::ostream& operator<<(std::ostream& os, const Cyclo& x) { return os << x.to_string(); }

}  // namespace bcjq

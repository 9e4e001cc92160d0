#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "bcjq/algebra.hpp"
#include "bcjq/complex.hpp"
#include "bcjq/cyclo.hpp"
#include "bcjq/error.hpp"
#include "bcjq/rational.hpp"

namespace bcjq {

/// The three bicomplex conjugations: kind I conjugates both complex parts
/// (negates w1, w3), kind J negates the j-part (w2, w3), kind IJ does both
/// (w1, w2).
enum class Conjugation { I, J, IJ };

std::string_view to_string(Conjugation kind);
/// Accepts "i", "j" and "ij"; nullopt otherwise.
std::optional<Conjugation> parse_conjugation(std::string_view text);

template <typename S>
struct IdempotentPair;

/// w0 + w1*i + w2*j + w3*ij with i^2 = j^2 = -1 and ij = ji, so (ij)^2 = 1.
///
/// Equivalently w = z1 + j*z2 with z1 = w0 + i*w1 and z2 = w2 + i*w3. The
/// ring is commutative and has zero divisors, e.g. (1 + ij)(1 - ij) = 0.
template <typename S>
struct Bicomplex {
  S w0{};
  S w1{};
  S w2{};
  S w3{};

  Bicomplex() = default;
  Bicomplex(int value) : w0(value) {}  // NOLINT(google-explicit-constructor)
  Bicomplex(S real) : w0(std::move(real)) {}  // NOLINT(google-explicit-constructor)
  Bicomplex(S a, S b, S c, S d) : w0(std::move(a)), w1(std::move(b)), w2(std::move(c)), w3(std::move(d)) {}

  static Bicomplex unit_i() { return {S(0), S(1), S(0), S(0)}; }
  static Bicomplex unit_j() { return {S(0), S(0), S(1), S(0)}; }
  static Bicomplex unit_ij() { return {S(0), S(0), S(0), S(1)}; }

  bool is_zero() const { return bcjq::is_zero(w0) && bcjq::is_zero(w1) && bcjq::is_zero(w2) && bcjq::is_zero(w3); }

  Bicomplex operator-() const { return {-w0, -w1, -w2, -w3}; }

  friend Bicomplex operator+(const Bicomplex& a, const Bicomplex& b) {
    return {a.w0 + b.w0, a.w1 + b.w1, a.w2 + b.w2, a.w3 + b.w3};
  }
  friend Bicomplex operator-(const Bicomplex& a, const Bicomplex& b) {
    return {a.w0 - b.w0, a.w1 - b.w1, a.w2 - b.w2, a.w3 - b.w3};
  }
  friend Bicomplex operator*(const Bicomplex& a, const Bicomplex& b) {
    const S& x1 = a.w0;
    const S& y1 = a.w1;
    const S& x2 = a.w2;
    const S& y2 = a.w3;
    return {x1 * b.w0 - y1 * b.w1 - x2 * b.w2 + y2 * b.w3,
            x1 * b.w1 + y1 * b.w0 - x2 * b.w3 - y2 * b.w2,
            x1 * b.w2 - y1 * b.w3 + x2 * b.w0 - y2 * b.w1,
            x1 * b.w3 + y1 * b.w2 + x2 * b.w1 + y2 * b.w0};
  }
  Bicomplex& operator+=(const Bicomplex& o) { return *this = *this + o; }
  Bicomplex& operator-=(const Bicomplex& o) { return *this = *this - o; }
  Bicomplex& operator*=(const Bicomplex& o) { return *this = *this * o; }

  /// Componentwise scaling by an element of S.
  Bicomplex scaled(const S& k) const { return {w0 * k, w1 * k, w2 * k, w3 * k}; }

  friend bool operator==(const Bicomplex&, const Bicomplex&) = default;
};

template <typename S>
bool is_zero(const Bicomplex<S>& w) {
  return w.is_zero();
}

template <typename S>
Bicomplex<S> conj(const Bicomplex<S>& w, Conjugation kind) {
  switch (kind) {
    case Conjugation::I:
      return {w.w0, -w.w1, w.w2, -w.w3};
    case Conjugation::J:
      return {w.w0, w.w1, -w.w2, -w.w3};
    case Conjugation::IJ:
      return {w.w0, -w.w1, -w.w2, w.w3};
  }
  return w;
}

/// Exact w * conj(w, kind). Kind I lands in span{1, j}, kind J in span{1, i},
/// kind IJ in span{1, ij}.
template <typename S>
Bicomplex<S> norm_sq(const Bicomplex<S>& w, Conjugation kind) {
  return w * conj(w, kind);
}

/// Coordinates with respect to the idempotents e1 = (1 + ij)/2 and
/// e2 = (1 - ij)/2. Multiplication acts independently on each component.
template <typename S>
struct IdempotentPair {
  Complex<S> c1;
  Complex<S> c2;

  friend IdempotentPair operator*(const IdempotentPair& a, const IdempotentPair& b) {
    return {a.c1 * b.c1, a.c2 * b.c2};
  }
  friend bool operator==(const IdempotentPair&, const IdempotentPair&) = default;
};

/// c1 = z1 - i*z2, c2 = z1 + i*z2.
template <typename S>
IdempotentPair<S> split(const Bicomplex<S>& w) {
  return {Complex<S>{w.w0 + w.w3, w.w1 - w.w2}, Complex<S>{w.w0 - w.w3, w.w1 + w.w2}};
}

template <typename S>
Bicomplex<S> recompose(const IdempotentPair<S>& p) {
  const S half = inverse(S(2));
  return {(p.c1.re + p.c2.re) * half, (p.c1.im + p.c2.im) * half, (p.c2.im - p.c1.im) * half,
          (p.c1.re - p.c2.re) * half};
}

/// "a + b*i + c*j + d*ij"; rational coefficients carry their sign into the
/// separator, other scalars are parenthesised.
template <typename S>
std::string to_string(const Bicomplex<S>& w) {
  using bcjq::to_string;
  return "(" + to_string(w.w0) + ") + (" + to_string(w.w1) + ")*i + (" + to_string(w.w2) + ")*j + (" +
         to_string(w.w3) + ")*ij";
}

std::string to_string(const Bicomplex<Rational>& w);

template <typename S>
bool is_invertible(const Bicomplex<S>& w) {
  const IdempotentPair<S> p = split(w);
  return !is_zero(p.c1) && !is_zero(p.c2);
}

/// Throws NotInvertible for zero divisors, naming the vanishing idempotent
/// component.
template <typename S>
Bicomplex<S> inverse(const Bicomplex<S>& w) {
  const IdempotentPair<S> p = split(w);
  const bool first = is_zero(p.c1);
  const bool second = is_zero(p.c2);
  if (first || second) {
    std::string which;
    if (first && second) {
      which = "both idempotent components vanish";
    } else if (first) {
      which = "component at e1 = (1+ij)/2 vanishes";
    } else {
      which = "component at e2 = (1-ij)/2 vanishes";
    }
    throw NotInvertible("bicomplex value " + to_string(w) + " is not invertible: " + which);
  }
  return recompose(IdempotentPair<S>{inverse(p.c1), inverse(p.c2)});
}

/// Parses the rendering grammar: signed terms `[coef][*]unit` with unit one
/// of "", "i", "j", "ij" and coef an optional rational literal. Repeated
/// units accumulate. Throws ParseError.
Bicomplex<Rational> parse_bicomplex(std::string_view text);

/// Euclidean length of the coefficient 4-tuple. Display only.
double real_magnitude(const Bicomplex<Rational>& w);

/// Drops the w-parts; throws ProjectionError if any coefficient is irrational.
Bicomplex<Rational> project_rational(const Bicomplex<Cyclo>& w);
Bicomplex<Cyclo> embed(const Bicomplex<Rational>& w);

template <typename S>
std::ostream& operator<<(std::ostream& os, const Bicomplex<S>& w) {
  return os << to_string(w);
}

}  // namespace bcjq

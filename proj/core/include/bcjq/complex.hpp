#pragma once

#include <string>

#include "bcjq/algebra.hpp"
#include "bcjq/error.hpp"

namespace bcjq {

/// re + i*im over a scalar ring S, i^2 = -1. Used for the idempotent
/// components of bicomplex numbers, where the determinant is computed.
template <typename S>
struct Complex {
  S re{};
  S im{};

  Complex() = default;
  Complex(int value) : re(value) {}  // NOLINT(google-explicit-constructor)
  Complex(S real) : re(std::move(real)) {}  // NOLINT(google-explicit-constructor)
  Complex(S real, S imag) : re(std::move(real)), im(std::move(imag)) {}

  Complex operator-() const { return {-re, -im}; }
  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) { return a * inverse(b); }
  friend bool operator==(const Complex&, const Complex&) = default;
};

template <typename S>
bool is_zero(const Complex<S>& z) {
  return is_zero(z.re) && is_zero(z.im);
}

/// Needs re^2 + im^2 invertible in S; true for Q and Q(w), neither of which
/// contains a square root of -1.
template <typename S>
Complex<S> inverse(const Complex<S>& z) {
  if (is_zero(z)) throw DivisionByZero("inverse of zero complex value");
  const S n = inverse(z.re * z.re + z.im * z.im);
  return {z.re * n, -(z.im * n)};
}

template <typename S>
std::string to_string(const Complex<S>& z) {
  return "(" + to_string(z.re) + ") + (" + to_string(z.im) + ")*i";
}

}  // namespace bcjq

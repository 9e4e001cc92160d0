#pragma once

#include <concepts>
#include <cstdint>

namespace bcjq {

/// Commutative ring with unity whose elements are constructible from small
/// integers.
template <typename T>
concept Ring = std::regular<T> && requires(T a, T b) {
  { T(0) } -> std::convertible_to<T>;
  { T(1) } -> std::convertible_to<T>;
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
};

/// A ring where every nonzero element has an `inverse` found by ADL.
template <typename T>
concept Field = Ring<T> && requires(T a) {
  { inverse(a) } -> std::convertible_to<T>;
  { is_zero(a) } -> std::convertible_to<bool>;
};

/// Square-and-multiply. `power(x, 0)` is 1 for every x.
template <Ring T>
T power(T base, std::uint64_t exponent) {
  T result(1);
  while (exponent != 0) {
    if ((exponent & 1U) != 0) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

}  // namespace bcjq

#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bcjq/algebra.hpp"

namespace bcjq {

/// Dense row-major matrix over any scalar type.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  template <typename F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = f((*this)(r, c));
    }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Fraction-free (Bareiss) elimination over a field. Every intermediate entry
/// is a minor of the input, and the division by the previous pivot is exact.
/// Zero pivots are swapped with a lower row and the sign tracked.
template <Field T>
T bareiss_determinant(Matrix<T> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  bool negate = false;
  T previous(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero(m(p, k))) ++p;
      if (p == n) return T(0);
      m.swap_rows(k, p);
      negate = !negate;
    }
    const T scale = inverse(previous);
    const T ratio = m(k, k) * scale;
    // When a product term vanishes the update is a plain rescale, and zero
    // stays zero; banded inputs touch only a few entries per step.
    for (std::size_t i = k + 1; i < n; ++i) {
      const bool lead_zero = is_zero(m(i, k));
      for (std::size_t j = k + 1; j < n; ++j) {
        if (lead_zero || is_zero(m(k, j))) {
          if (!is_zero(m(i, j))) m(i, j) = m(i, j) * ratio;
        } else {
          m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) * scale;
        }
      }
      m(i, k) = T(0);
    }
    previous = m(k, k);
  }
  T det = m(n - 1, n - 1);
  return negate ? -det : det;
}

}  // namespace bcjq

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "bcjq/bicomplex.hpp"

namespace bcjq {

/// Function n -> sum_d c[d][n mod 3] * (2^n)^d with bicomplex rational
/// coefficients.
///
/// Every quantity in this library that depends on a single index has this
/// shape: J(n) = (2^(n+1) - V(n))/7 with V of period 3. The class is closed
/// under +, -, *, and index shifts, so both sides of an identity can be
/// normalised and compared.
///
/// Zero decision: for a fixed residue r the function is a polynomial of
/// degree <= D in x = 2^n, and the samples n = r, r+3, ..., r+3D give D+1
/// distinct x. So p vanishes for all n >= 0 iff it vanishes on 0 .. 3(D+1)-1.
class ExpPoly {
 public:
  using Coefficient = Bicomplex<Rational>;
  using Row = std::array<Coefficient, 3>;  // indexed by n mod 3

  ExpPoly() = default;

  static ExpPoly constant(const Coefficient& c);
  /// Period-3 function taking values[r] at n = r (mod 3).
  static ExpPoly periodic(const Row& values);
  static ExpPoly periodic(const std::array<int, 3>& values);
  /// n -> 2^(degree*n + offset).
  static ExpPoly pow2(std::size_t degree, std::uint64_t offset = 0);

  /// Highest degree with a nonzero coefficient, 0 for the zero function.
  std::size_t degree() const;
  /// 3 * (degree() + 1): enough samples to decide identical vanishing.
  std::size_t sample_count() const { return 3 * (degree() + 1); }

  const Coefficient& coefficient(std::size_t degree, std::size_t residue) const;

  Coefficient eval(std::uint64_t n) const;

  /// n -> p(n + k).
  ExpPoly shift(std::uint64_t k = 1) const;
  /// Coefficientwise conjugation; conj is Q-linear so this commutes with eval.
  ExpPoly conj(Conjugation kind) const;

  /// Decides p == 0 for all n >= 0 by evaluation on 0 .. sample_count()-1.
  bool is_identically_zero() const;
  /// Structural check used to cross-examine the sampling bound.
  bool has_zero_coefficients() const;

  ExpPoly operator-() const;
  ExpPoly& operator+=(const ExpPoly& o);
  ExpPoly& operator-=(const ExpPoly& o);
  friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
  friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator*(const ExpPoly& a, const Coefficient& k);
  friend ExpPoly operator*(const Coefficient& k, const ExpPoly& a) { return a * k; }
  friend ExpPoly operator*(const ExpPoly& a, const Rational& k) { return a * Coefficient(k); }
  friend ExpPoly operator*(const Rational& k, const ExpPoly& a) { return a * Coefficient(k); }
  friend ExpPoly operator*(const ExpPoly& a, int k) { return a * Coefficient(k); }
  friend ExpPoly operator*(int k, const ExpPoly& a) { return a * Coefficient(k); }
  friend ExpPoly operator/(const ExpPoly& a, const Rational& k) { return a * inverse(k); }

 private:
  void trim();

  std::vector<Row> rows_;  // rows_[d] holds the (2^n)^d coefficients
};

}  // namespace bcjq

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bcjq/bicomplex.hpp"
#include "bcjq/matrix.hpp"
#include "bcjq/quaternions.hpp"

namespace bcjq {

/// x(n+3) = r x(n+2) + s x(n+1) + t x(n), with x0 = A, x1 = B, x2 = C.
/// A and t must be invertible in S.
template <typename S>
struct ThirdOrderSpec {
  S r;
  S s;
  S t;
  S a;
  S b;
  S c;
};

/// Replaces one entry after the band is laid out. Row and column are
/// 1-based as in the displayed matrix; entries outside the built order are
/// ignored so one table can be applied across a range of n.
template <typename S>
struct EntryOverride {
  std::size_t row = 0;
  std::size_t col = 0;
  S value;
};

template <typename S>
using BandedMatrix = Matrix<S>;

inline bool is_invertible(const Rational& x) { return !x.is_zero(); }

/// The (n+1) x (n+1) matrix whose determinant is x(n):
///
///   row 1:  A      1     0
///   row 2:  Ar-B   r     1/A
///   row 3:  0      Br-C  r     t
///   row 4:  0      A     -s/t  r     t
///   row k:  ...    1/t   -s/t  r     t      (k >= 5, r on the diagonal)
///
/// Throws NotInvertible if A or t is not a unit.
template <typename S>
BandedMatrix<S> build_matrix(const ThirdOrderSpec<S>& spec, std::uint64_t n,
                             const std::vector<EntryOverride<S>>& overrides = {}) {
  if (!is_invertible(spec.a)) throw NotInvertible("initial value A = x0 is not invertible");
  if (!is_invertible(spec.t)) throw NotInvertible("recurrence weight t is not invertible");
  const S inv_a = inverse(spec.a);
  const S inv_t = inverse(spec.t);
  const S minus_s_over_t = -(spec.s * inv_t);

  const std::size_t order = static_cast<std::size_t>(n) + 1;
  BandedMatrix<S> m(order, order);
  const auto put = [&](std::size_t r, std::size_t c, const S& v) {
    if (r < order && c < order) m(r, c) = v;
  };
  put(0, 0, spec.a);
  put(0, 1, S(1));
  put(1, 0, spec.a * spec.r - spec.b);
  put(1, 1, spec.r);
  put(1, 2, inv_a);
  put(2, 1, spec.b * spec.r - spec.c);
  put(2, 2, spec.r);
  put(2, 3, spec.t);
  put(3, 1, spec.a);
  put(3, 2, minus_s_over_t);
  put(3, 3, spec.r);
  put(3, 4, spec.t);
  for (std::size_t i = 4; i < order; ++i) {
    put(i, i - 2, inv_t);
    put(i, i - 1, minus_s_over_t);
    put(i, i, spec.r);
    put(i, i + 1, spec.t);
  }
  for (const EntryOverride<S>& o : overrides) {
    if (o.row >= 1 && o.col >= 1) put(o.row - 1, o.col - 1, o.value);
  }
  return m;
}

inline Rational det_exact(const Matrix<Rational>& m) { return bareiss_determinant(m); }

/// Determinant over the bicomplex ring: both idempotent components are
/// fields, so each gets its own fraction-free elimination and the results are
/// recomposed. Works for zero-divisor entries.
template <typename S>
Bicomplex<S> det_exact(const Matrix<Bicomplex<S>>& m) {
  const Complex<S> d1 = bareiss_determinant(m.map([](const Bicomplex<S>& w) { return split(w).c1; }));
  const Complex<S> d2 = bareiss_determinant(m.map([](const Bicomplex<S>& w) { return split(w).c2; }));
  return recompose(IdempotentPair<S>{d1, d2});
}

/// r = s = 1, t = 2 and the three initial quaternions.
ThirdOrderSpec<BcQuat> bcj_recurrence_spec();

/// BC(n) as the determinant of the banded matrix; the entry 1/BC(0) needs
/// the bicomplex inverse of i + j + 2ij.
BcQuat bcj_via_det(std::uint64_t n, const std::vector<EntryOverride<BcQuat>>& overrides = {});

}  // namespace bcjq

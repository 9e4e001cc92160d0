#pragma once

#include <cstdint>
#include <random>

#include "bcjq/bicomplex.hpp"
#include "bcjq/cyclo.hpp"
#include "bcjq/exp_poly.hpp"
#include "bcjq/rational.hpp"

namespace bcjq::testing {

inline constexpr std::uint64_t kSeed = 0x5eed'b1c0'4a11'2024ULL;
inline constexpr int kCases = 1000;

// Small fractions, zero included on purpose so zero divisors and zero
// pivots turn up.
class Gen {
 public:
  explicit Gen(std::uint64_t seed = kSeed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Rational rational() {
    if (coin(0.1)) return Rational(0);
    return Rational(Integer(integer(-40, 40)), Integer(integer(1, 12)));
  }
  Cyclo cyclo() { return {rational(), rational()}; }

  Bicomplex<Rational> bicomplex() { return {rational(), rational(), rational(), rational()}; }
  Bicomplex<Cyclo> bicomplex_cyclo() { return {cyclo(), cyclo(), cyclo(), cyclo()}; }

  /// Nonzero divisor: both idempotent components nonzero by construction.
  Bicomplex<Rational> invertible_bicomplex() {
    for (;;) {
      const Bicomplex<Rational> w = bicomplex();
      if (is_invertible(w)) return w;
    }
  }

  /// A zero divisor: one idempotent component forced to zero.
  Bicomplex<Rational> zero_divisor() {
    const Complex<Rational> c{rational(), rational()};
    return coin() ? recompose(IdempotentPair<Rational>{c, Complex<Rational>(0)})
                  : recompose(IdempotentPair<Rational>{Complex<Rational>(0), c});
  }

  ExpPoly exp_poly(std::size_t max_degree) {
    ExpPoly p;
    const std::size_t degree = static_cast<std::size_t>(integer(0, static_cast<long>(max_degree)));
    for (std::size_t d = 0; d <= degree; ++d) {
      ExpPoly::Row row{bicomplex(), bicomplex(), bicomplex()};
      p += ExpPoly::pow2(d) * ExpPoly::periodic(row);
    }
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace bcjq::testing

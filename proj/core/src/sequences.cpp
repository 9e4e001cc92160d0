#include "bcjq/sequences.hpp"

#include "bcjq/algebra.hpp"
#include "bcjq/error.hpp"

namespace bcjq {

std::vector<Integer> j3_terms(std::uint64_t count) {
  std::vector<Integer> out;
  out.reserve(count);
  for (std::uint64_t n = 0; n < count; ++n) {
    if (n == 0) {
      out.emplace_back(0);
    } else if (n < 3) {
      out.emplace_back(1);
    } else {
      out.emplace_back(out[n - 1] + out[n - 2] + 2 * out[n - 3]);
    }
  }
  return out;
}

Integer j3(std::uint64_t n) {
  if (n == 0) return 0;
  if (n < 3) return 1;
  Integer a = 0;  // J(k-3)
  Integer b = 1;  // J(k-2)
  Integer c = 1;  // J(k-1)
  for (std::uint64_t k = 3; k <= n; ++k) {
    Integer next = c + b + 2 * a;
    a = std::move(b);
    b = std::move(c);
    c = std::move(next);
  }
  return c;
}

int v3(std::uint64_t n) {
  static constexpr std::array<int, 3> kCycle{2, -3, 1};
  return kCycle[n % 3];
}

int u3(std::uint64_t n) {
  const int numerator = 2 * v3(n) - v3(n + 1);
  if (numerator % 7 != 0) throw InexactDivision("U sequence numerator not divisible by 7");
  return numerator / 7;
}

SeqParams make_seq_params(const Cyclo& alpha) {
  const Cyclo w1 = omega1();
  const Cyclo w2 = omega2();
  return SeqParams{
      .alpha = alpha,
      .a_binet = Cyclo(-3) - Cyclo(2) * w2,
      .b_binet = Cyclo(-3) - Cyclo(2) * w1,
      .p = Cyclo(1) - (w1 + w2),
      .q = Cyclo(1) - (alpha + w2),
      .r = Cyclo(1) - (alpha + w1),
  };
}

Integer j3_binet(std::uint64_t n) {
  static const SeqParams params = make_seq_params();
  const Cyclo w1 = omega1();
  const Cyclo w2 = omega2();
  const Cyclo v = (params.a_binet * pow(w1, n) - params.b_binet * pow(w2, n)) / (w1 - w2);
  const Cyclo value = (Cyclo(Rational(pow2(n + 1))) - v) / Cyclo(7);
  return project_rational(value).to_integer();
}

Integer j3_sum(std::uint64_t n) { return exact_divide(j3(n + 2) + 2 * j3(n) - 1, 3); }

namespace {

using Mat3 = std::array<std::array<Integer, 3>, 3>;

Mat3 multiply(const Mat3& a, const Mat3& b) {
  Mat3 c;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Integer sum = 0;
      for (std::size_t k = 0; k < 3; ++k) sum += a[i][k] * b[k][j];
      c[i][j] = std::move(sum);
    }
  }
  return c;
}

}  // namespace

Integer j3_matpow(std::uint64_t n) {
  Mat3 result{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  Mat3 base{{{1, 1, 2}, {1, 0, 0}, {0, 1, 0}}};
  std::uint64_t e = n;
  while (e != 0) {
    if ((e & 1U) != 0) result = multiply(result, base);
    e >>= 1U;
    if (e != 0) base = multiply(base, base);
  }
  // M^n (J2, J1, J0)^T = (J(n+2), J(n+1), J(n))^T with (J2, J1, J0) = (1, 1, 0).
  return result[2][0] + result[2][1];
}

QuadraticApproxCheck quadratic_approx_check(std::uint64_t n, const SeqParams& params) {
  const Cyclo jn(Rational(j3(n)));
  const Cyclo jn1(Rational(j3(n + 1)));
  const Cyclo jn2(Rational(j3(n + 2)));

  const auto branch = [&](std::string_view name, const Cyclo& root, const Cyclo& lead) {
    BranchCheck b;
    b.root = name;
    b.lhs = lead * pow(root, n + 2);
    b.rhs = root * root * jn2 + root * (jn1 + Cyclo(2) * jn) + Cyclo(2) * jn1;
    b.holds = b.lhs == b.rhs;
    return b;
  };

  QuadraticApproxCheck out;
  out.n = n;
  out.branches = {branch("2", Cyclo(2), params.p), branch("w1", omega1(), params.q),
                  branch("w2", omega2(), params.r)};
  return out;
}

}  // namespace bcjq

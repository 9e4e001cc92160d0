#include <gtest/gtest.h>

#include "bcjq/exp_poly.hpp"
#include "bcjq/identities.hpp"
#include "bcjq/quaternions.hpp"
#include "bcjq/sequences.hpp"
#include "generators.hpp"

namespace bcjq {
namespace {

using B = Bicomplex<Rational>;

TEST(ExpPoly, ConstructionAndEvaluation) {
  EXPECT_EQ(ExpPoly().degree(), 0U);
  EXPECT_EQ(ExpPoly::pow2(1, 1).eval(5), B(64));
  EXPECT_EQ(ExpPoly::pow2(2).eval(3), B(64));
  const ExpPoly v = v_exp_poly();
  for (std::uint64_t n = 0; n < 9; ++n) EXPECT_EQ(v.eval(n), B(v3(n)));
  EXPECT_EQ(ExpPoly::pow2(2).sample_count(), 9U);
}

TEST(ExpPoly, ShiftRotatesResiduesAndScalesDegrees) {
  const ExpPoly p = ExpPoly::pow2(2) * 3 + v_exp_poly();
  for (std::uint64_t k = 0; k < 5; ++k) {
    const ExpPoly s = p.shift(k);
    for (std::uint64_t n = 0; n < 12; ++n) EXPECT_EQ(s.eval(n), p.eval(n + k));
  }
}

TEST(ExpPoly, TrimmedDegree) {
  const ExpPoly p = ExpPoly::pow2(2) - ExpPoly::pow2(2);
  EXPECT_EQ(p.degree(), 0U);
  EXPECT_TRUE(p.has_zero_coefficients());
  EXPECT_TRUE(p.is_identically_zero());
}

TEST(ExpPoly, ConjugationIsCoefficientwise) {
  const ExpPoly b = bcj_exp_poly();
  for (const Conjugation k : {Conjugation::I, Conjugation::J, Conjugation::IJ}) {
    for (std::uint64_t n = 0; n < 9; ++n) EXPECT_EQ(b.conj(k).eval(n), conj(bcj(n), k));
  }
}

TEST(ExpPoly, NormalFormsAreFaithful) {
  const ExpPoly b = bcj_exp_poly();
  const ExpPoly v = bcv_exp_poly();
  const ExpPoly u = bcu_exp_poly();
  for (std::uint64_t n = 0; n <= 60; ++n) {
    EXPECT_EQ(b.eval(n), bcj(n)) << n;
    EXPECT_EQ(v.eval(n), bcv(n)) << n;
    EXPECT_EQ(u.eval(n), bcu(n)) << n;
    EXPECT_EQ(bcj_sum_exp_poly().eval(n), bcj_sum(n)) << n;
  }
}

TEST(ProveUnary, ClosedFormOfJ) {
  const ExpPoly j = (ExpPoly::pow2(1, 1) - v_exp_poly()) / 7;
  const IdentityReport r = prove_unary("closed_form", j * 7 + v_exp_poly(), ExpPoly::pow2(1, 1));
  EXPECT_EQ(r.verdict, Verdict::ProvedAllN);
  EXPECT_EQ(r.bound, "D=1; samples n=0..5");
}

TEST(ProveUnary, VPeriodSum) {
  const ExpPoly v = v_exp_poly();
  EXPECT_EQ(prove_unary("v", v + v.shift(1) + v.shift(2), ExpPoly()).verdict, Verdict::ProvedAllN);
}

TEST(ProveUnary, RefutationCarriesMinimalIndex) {
  const IdentityReport r = prove_unary("v", v_exp_poly(), ExpPoly());
  ASSERT_EQ(r.verdict, Verdict::Refuted);
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_EQ(r.counterexample->indices, std::vector<std::uint64_t>{0});
  EXPECT_EQ(r.counterexample->lhs, "2 + 0*i + 0*j + 0*ij");
  EXPECT_EQ(r.counterexample->rhs, "0 + 0*i + 0*j + 0*ij");

  // zero on residues 0 and 1, nonzero from n = 2 on
  const ExpPoly late = ExpPoly::periodic(std::array<int, 3>{0, 0, 5});
  EXPECT_EQ(prove_unary("late", late, ExpPoly()).counterexample->indices.front(), 2U);
}

TEST(ProveUnary, DegreeBoundWidensSamples) {
  const IdentityReport r = prove_unary("v", ExpPoly(), ExpPoly(), 2);
  EXPECT_EQ(r.bound, "D=2; samples n=0..8");
}

// The sample bound 3(D+1) is sharp: for a degree-D polynomial in 2^n on one
// residue class, D+1 zeros force it to vanish, while D zeros do not.
TEST(ExpPoly, SampleBoundIsTight) {
  // (2^n - 1)(2^n - 8) vanishes at n = 0 and n = 3 only, on residue 0.
  const ExpPoly p = (ExpPoly::pow2(1) - ExpPoly::constant(B(1))) *
                    (ExpPoly::pow2(1) - ExpPoly::constant(B(8))) *
                    ExpPoly::periodic(std::array<int, 3>{1, 0, 0});
  EXPECT_EQ(p.degree(), 2U);
  EXPECT_EQ(p.eval(0), B());
  EXPECT_EQ(p.eval(3), B());
  EXPECT_NE(p.eval(6), B());
  EXPECT_FALSE(p.is_identically_zero());
}

}  // namespace
}  // namespace bcjq

#include "bcjq/quaternions.hpp"

#include "bcjq/sequences.hpp"

namespace bcjq {

namespace {

BcQuat from_terms(const Integer& a, const Integer& b, const Integer& c, const Integer& d) {
  return {Rational(a), Rational(b), Rational(c), Rational(d)};
}

BcQuatCyclo hat_of(const Cyclo& root) {
  return {Cyclo(1), root, root * root, root * root * root};
}

const BcQuat& unit_for(Conjugation kind) {
  static const BcQuat kI = BcQuat::unit_i();
  static const BcQuat kJ = BcQuat::unit_j();
  static const BcQuat kIJ = BcQuat::unit_ij();
  switch (kind) {
    case Conjugation::I:
      return kJ;
    case Conjugation::J:
      return kI;
    case Conjugation::IJ:
      return kIJ;
  }
  return kIJ;
}

}  // namespace

BcQuat bcj(std::uint64_t n) {
  const std::vector<Integer> t = j3_terms(n + 4);
  return from_terms(t[n], t[n + 1], t[n + 2], t[n + 3]);
}

std::vector<BcQuat> bcj_recurrence_terms(std::uint64_t count) {
  std::vector<BcQuat> out;
  out.reserve(count);
  const BcQuat initial[3] = {parse_bicomplex("i + j + 2ij"), parse_bicomplex("1 + i + 2j + 5ij"),
                             parse_bicomplex("1 + 2i + 5j + 9ij")};
  for (std::uint64_t n = 0; n < count; ++n) {
    if (n < 3) {
      out.push_back(initial[n]);
    } else {
      out.push_back(out[n - 1] + out[n - 2] + out[n - 3].scaled(Rational(2)));
    }
  }
  return out;
}

BcQuat bcj_recurrence(std::uint64_t n) { return bcj_recurrence_terms(n + 1).back(); }

BcQuat bcv(std::uint64_t n) { return {v3(n), v3(n + 1), v3(n + 2), v3(n + 3)}; }

BcQuat bcu(std::uint64_t n) { return {u3(n), u3(n + 1), u3(n + 2), u3(n + 3)}; }

const BcqConstants& bcq_constants() {
  static const BcqConstants kConstants = [] {
    const Cyclo w1 = omega1();
    const Cyclo w2 = omega2();
    return BcqConstants{
        .hat2 = {1, 2, 4, 8},
        .hat_w1 = hat_of(w1),
        .hat_w2 = hat_of(w2),
        .phi = (Cyclo(2) - w1) * (Cyclo(2) - w2) * (w1 - w2),
    };
  }();
  return kConstants;
}

BcQuat BcqConstants::hat_product() const { return project_rational(hat_w1 * hat_w2); }

BcQuat bcj_binet(std::uint64_t n) {
  const BcqConstants& k = bcq_constants();
  const Cyclo w1 = omega1();
  const Cyclo w2 = omega2();
  const BcQuatCyclo real_root = embed(k.hat2).scaled((w1 - w2) * Cyclo(Rational(pow2(n + 1))));
  const BcQuatCyclo first = k.hat_w1.scaled((Cyclo(2) - w2) * pow(w1, n + 1));
  const BcQuatCyclo second = k.hat_w2.scaled((Cyclo(2) - w1) * pow(w2, n + 1));
  return project_rational((real_root - first + second).scaled(inverse(k.phi)));
}

BcQuat bcj_conj(std::uint64_t n, Conjugation kind) { return conj(bcj(n), kind); }

BcQuat bcj_norm(std::uint64_t n, Conjugation kind) { return norm_sq(bcj(n), kind); }

bool in_norm_span(const BcQuat& w, Conjugation kind) {
  switch (kind) {
    case Conjugation::I:
      return w.w1.is_zero() && w.w3.is_zero();
    case Conjugation::J:
      return w.w2.is_zero() && w.w3.is_zero();
    case Conjugation::IJ:
      return w.w1.is_zero() && w.w2.is_zero();
  }
  return false;
}

BcQuat bcj_sum(std::uint64_t n) {
  return {Rational(j3_sum(n)), Rational(j3_sum(n + 1)), Rational(j3_sum(n + 2) - 1), Rational(j3_sum(n + 3) - 2)};
}

BcQuat bcj_sum_case_form(std::uint64_t n) {
  const std::vector<Integer> t = j3_terms(n + 5);
  const BcQuat head = from_terms(t[n + 1], t[n + 2], t[n + 3], t[n + 4]);
  switch (n % 3) {
    case 0:
      return head - BcQuat{1, 0, 1, 3};
    case 1:
      return head - BcQuat{0, 0, 2, 2};
    default:
      return head - BcQuat{0, 1, 1, 2};
  }
}

ExpPoly v_exp_poly() { return ExpPoly::periodic(std::array<int, 3>{2, -3, 1}); }

ExpPoly bcj_exp_poly() {
  return (ExpPoly::pow2(1, 1) * bcq_constants().hat2 - bcv_exp_poly()) / 7;
}

ExpPoly bcv_exp_poly() { return ExpPoly::periodic(ExpPoly::Row{bcv(0), bcv(1), bcv(2)}); }

ExpPoly bcu_exp_poly() { return ExpPoly::periodic(ExpPoly::Row{bcu(0), bcu(1), bcu(2)}); }

namespace {

// Scalar partial sum (J(n+2) + 2 J(n) - 1) / 3 as an ExpPoly with real
// coefficients.
ExpPoly scalar_sum_exp_poly() {
  const ExpPoly j = (ExpPoly::pow2(1, 1) - v_exp_poly()) / 7;
  return (j.shift(2) + j * 2 - ExpPoly::constant(1)) / 3;
}

}  // namespace

ExpPoly bcj_sum_exp_poly() {
  const ExpPoly s = scalar_sum_exp_poly();
  return s + s.shift(1) * BcQuat::unit_i() + (s.shift(2) - ExpPoly::constant(1)) * BcQuat::unit_j() +
         (s.shift(3) - ExpPoly::constant(2)) * BcQuat::unit_ij();
}

ExpPoly bcj_sum_case_exp_poly() {
  const ExpPoly head = bcj_exp_poly().shift(1);
  return head - ExpPoly::periodic(ExpPoly::Row{BcQuat{1, 0, 1, 3}, BcQuat{0, 0, 2, 2}, BcQuat{0, 1, 1, 2}});
}

ExpPoly NormCandidate::combined() const { return x + y * 2 * unit_for(kind); }

NormCandidate norm_candidate(Conjugation kind) {
  const ExpPoly v = v_exp_poly();
  const ExpPoly v1 = v.shift(1);
  const ExpPoly v2 = v.shift(2);
  // Powers of two written as they appear in the candidate closed forms.
  const auto p = [](std::size_t degree, std::uint64_t offset) { return ExpPoly::pow2(degree, offset); };

  switch (kind) {
    case Conjugation::I:
      return {kind,
              (p(2, 2) * -75 - p(1, 2) * 3 * (v1 * 2 - v * 3) - v * v1 * 2 - v * v) / 49,
              (p(2, 4) * 5 - p(1, 1) * (v1 * 2 - v2 * 5) - v * v) / 49};
    case Conjugation::J:
      return {kind,
              (p(2, 2) * -51 - p(1, 2) * (v2 * 6 - v * 5) + v * v1 * 2 + v * v) / 49,
              (p(2, 3) * 17 - p(1, 1) * (v * 5 + v2 * 7) - v * v) / 49};
    case Conjugation::IJ:
      return {kind,
              (p(2, 2) * 85 - p(1, 2) * (v2 * 2 + v * 7) - v1 * v2 * 2 + v * v * 3) / 49,
              (-(p(1, 1) * (v * 11 - v1 * 2)) + v * v - v1 * v2) / 49};
  }
  return {kind, {}, {}};
}

ExpPoly norm_definitional_exp_poly(Conjugation kind) {
  const ExpPoly b = bcj_exp_poly();
  return b * b.conj(kind);
}

NormComparison norm_candidates_eval(std::uint64_t n, Conjugation kind) {
  return {norm_candidate(kind).combined().eval(n), bcj_norm(n, kind)};
}

}  // namespace bcjq

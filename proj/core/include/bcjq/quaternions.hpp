#pragma once

#include <cstdint>
#include <vector>

#include "bcjq/bicomplex.hpp"
#include "bcjq/exp_poly.hpp"

namespace bcjq {

using BcQuat = Bicomplex<Rational>;
using BcQuatCyclo = Bicomplex<Cyclo>;

/// BC(n) = J(n) + i J(n+1) + j J(n+2) + ij J(n+3), built from four terms.
BcQuat bcj(std::uint64_t n);

/// BC(0), ..., BC(count-1) from the recurrence
/// BC(n) = BC(n-1) + BC(n-2) + 2 BC(n-3) seeded with the three initial terms.
std::vector<BcQuat> bcj_recurrence_terms(std::uint64_t count);
BcQuat bcj_recurrence(std::uint64_t n);

/// Companions assembled the same way from V and U; both have period 3.
BcQuat bcv(std::uint64_t n);
BcQuat bcu(std::uint64_t n);

struct BcqConstants {
  BcQuat hat2;         // 1 + 2i + 4j + 8ij
  BcQuatCyclo hat_w1;  // 1 + i w1 + j w1^2 + ij w1^3
  BcQuatCyclo hat_w2;  // 1 + i w2 + j w2^2 + ij w2^3
  Cyclo phi;           // (2 - w1)(2 - w2)(w1 - w2) = 7 (w1 - w2)

  /// hat_w1 * hat_w2 is symmetric under w1 <-> w2 and therefore rational.
  BcQuat hat_product() const;
};

const BcqConstants& bcq_constants();

/// Quaternion Binet form evaluated in Bicomplex<Q(w)>:
///   (1/phi) ((w1 - w2) hat2 2^(n+1) - (2 - w2) hat_w1 w1^(n+1) + (2 - w1) hat_w2 w2^(n+1)).
/// Throws ProjectionError if any w-part survives.
BcQuat bcj_binet(std::uint64_t n);

BcQuat bcj_conj(std::uint64_t n, Conjugation kind);
/// bcj(n) * bcj_conj(n, kind), exact.
BcQuat bcj_norm(std::uint64_t n, Conjugation kind);

/// True iff `w` lies in the two-axis span a norm of this kind must occupy.
bool in_norm_span(const BcQuat& w, Conjugation kind);

/// Sum of BC(0..n) via S(n) + i S(n+1) + j (S(n+2) - 1) + ij (S(n+3) - 2)
/// with S the scalar partial sum.
BcQuat bcj_sum(std::uint64_t n);
/// The three-case form by n mod 3, written with J(n+1) .. J(n+4).
BcQuat bcj_sum_case_form(std::uint64_t n);

/// Normal forms. bcj_exp_poly() encodes 7 BC(n) = hat2 2^(n+1) - BCV(n).
ExpPoly v_exp_poly();
ExpPoly bcj_exp_poly();
ExpPoly bcv_exp_poly();
ExpPoly bcu_exp_poly();
/// Closed partial-sum formula as a function of n.
ExpPoly bcj_sum_exp_poly();
ExpPoly bcj_sum_case_exp_poly();

/// Candidate closed forms for a norm: x + 2*unit*y, where unit is j, i or
/// ij for kinds I, J, IJ. They are candidates to be checked, not truths.
struct NormCandidate {
  Conjugation kind;
  ExpPoly x;
  ExpPoly y;

  ExpPoly combined() const;
};

NormCandidate norm_candidate(Conjugation kind);
/// Definitional normal form bcj * conj(bcj).
ExpPoly norm_definitional_exp_poly(Conjugation kind);

struct NormComparison {
  BcQuat candidate;
  BcQuat definitional;
};

NormComparison norm_candidates_eval(std::uint64_t n, Conjugation kind);

}  // namespace bcjq

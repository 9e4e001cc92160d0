#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bcjq/exp_poly.hpp"
#include "bcjq/quaternions.hpp"
#include "bcjq/sequences.hpp"

namespace bcjq {

enum class Verdict { ProvedAllN, GridVerified, Refuted };

std::string_view to_string(Verdict verdict);

/// Smallest failing index tuple (lexicographic) with both sides rendered
/// exactly.
struct Counterexample {
  std::vector<std::uint64_t> indices;
  std::string lhs;
  std::string rhs;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct IdentityReport {
  std::string name;
  Verdict verdict = Verdict::Refuted;
  std::string bound;
  std::optional<Counterexample> counterexample;
  /// Extra exact values worth citing (projected constants, cross-checks).
  std::vector<std::pair<std::string, std::string>> notes;

  bool holds() const { return verdict != Verdict::Refuted; }

  friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

/// All-n decision for single-index identities: evaluates lhs - rhs on
/// 0 .. 3(D+1)-1, D = max(degree_bound, degree of either side). Quadratic
/// identities pass degree_bound = 2 so the sample set does not depend on
/// cancellations. Refutations carry the smallest n.
IdentityReport prove_unary(std::string name, const ExpPoly& lhs, const ExpPoly& rhs, std::size_t degree_bound = 0);

/// Grid sizes. Bounds are exclusive: an index runs over [0, bound).
struct VerifyOptions {
  std::uint64_t docagne_rows = 30;  // n
  std::uint64_t docagne_gap = 30;   // n < m <= n + gap
  std::uint64_t conj_grid = 21;     // 0 <= n, m <= 20
  std::uint64_t unary_grid = 31;    // direct-arithmetic cross-check, n <= 30
  std::uint64_t binet_range = 201;
  std::uint64_t sum_range = 101;
  std::uint64_t quadratic_range = 51;
  std::uint64_t det_range = 13;
  std::uint64_t series_order = 64;
  Cyclo alpha = Cyclo(2);
};

/// BC(m) BC(n+1) - BC(m+1) BC(n) against
/// (1/7)(hat2 2^(m+1) BCU(n+1) - hat2 2^(n+1) BCU(m+1) + hat_w1 hat_w2 U(m-n)).
IdentityReport verify_docagne(std::uint64_t rows = 30, std::uint64_t gap = 30);

/// BC(n+1)^2 - BC(n+2) BC(n) against
/// (1/7)(hat2 2^(n+1) (2 BCU(n+1) - BCU(n+2)) + hat_w1 hat_w2).
/// Verdict from the ExpPoly proof; the direct grid must agree with it.
IdentityReport verify_cassini(std::uint64_t grid = 31);

/// Per-index comparison of the Cassini form with d'Ocagne at m = n + 1.
struct CassiniDocagneOverlap {
  bool lhs_agree = true;
  bool verdicts_agree = true;
  /// First n where the two stated right-hand sides differ, if any.
  std::optional<std::uint64_t> first_rhs_mismatch;
};

CassiniDocagneOverlap cassini_docagne_overlap(std::uint64_t rows = 30);

/// BC(n)^2 + BC(n+1)^2 + BC(n+2)^2 against
/// (1/7)(3 hat2^2 2^(2n+2) - hat2 2^(n+2) BCU(n) + 2ij).
IdentityReport verify_sum_squares(std::uint64_t grid = 31);
/// BCV(n)^2 + BCV(n+1)^2 + BCV(n+2)^2 = 14ij.
IdentityReport verify_sum_squares_v_step();

/// Product of the truncated series sum_{n<order} BC(n) t^n with
/// 1 - t - t^2 - 2t^3, truncated to degree order-1.
std::vector<BcQuat> genfun_product(std::uint64_t order);
IdentityReport verify_genfun(std::uint64_t order = 64);

/// Power-series coefficients of the three-pole form with poles 1/2, 1/w1,
/// 1/w2, before projection to Q.
std::vector<BcQuatCyclo> partial_fraction_coefficients(std::uint64_t order);
IdentityReport verify_partial_fractions(std::uint64_t order = 64);

/// (BC(n) BC(m))*_k against BC(n)*_k BC(m)*_k and BC(m)*_k BC(n)*_k.
IdentityReport verify_conj_products(Conjugation kind, std::uint64_t grid = 21);

/// Candidate X/Y closed form against the definitional norm, proved or refuted
/// for all n; the definitional value's two-axis shape is asserted on the
/// grid.
IdentityReport verify_norm(Conjugation kind, std::uint64_t grid = 31);

IdentityReport verify_sum_theorem(std::uint64_t range = 101);
/// 7 BC(n) = hat2 2^(n+1) - BCV(n) for all n: the normal form satisfies the
/// quaternion recurrence and matches the three initial terms.
IdentityReport verify_compact_form();
IdentityReport verify_binet(std::uint64_t range = 201);
IdentityReport verify_quadratic_approx(std::uint64_t range = 51, const Cyclo& alpha = Cyclo(2));
IdentityReport verify_scalar_binet();
IdentityReport verify_v_period();
IdentityReport verify_determinant(std::uint64_t range = 13);

enum class Expectation { ExpectedTrue, ExpectedRefuted };

struct IdentityEntry {
  std::string name;
  std::string description;
  Expectation expectation;
  std::function<IdentityReport(const VerifyOptions&)> run;
};

/// Every checkable statement, in a fixed order.
const std::vector<IdentityEntry>& identity_catalog();
const IdentityEntry* find_identity(std::string_view name);

/// Runs the selection concurrently; reports come back in selection order.
std::vector<IdentityReport> run_identities(const std::vector<const IdentityEntry*>& selection,
                                           const VerifyOptions& options);

}  // namespace bcjq

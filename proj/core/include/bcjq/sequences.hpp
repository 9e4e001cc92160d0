#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "bcjq/cyclo.hpp"
#include "bcjq/rational.hpp"

namespace bcjq {

/// Third-order Jacobsthal numbers: J0 = 0, J1 = J2 = 1,
/// J(n) = J(n-1) + J(n-2) + 2 J(n-3).
Integer j3(std::uint64_t n);

/// J(0), ..., J(count - 1) in one linear pass.
std::vector<Integer> j3_terms(std::uint64_t count);

/// Period-3 companion: 2, -3, 1, 2, -3, 1, ...  Satisfies 7 J(n) + V(n) = 2^(n+1).
int v3(std::uint64_t n);

/// (2 V(n) - V(n+1)) / 7, i.e. 1, -1, 0 repeating. The division is checked.
int u3(std::uint64_t n);

/// Closed form evaluated in Q(w):
///   J(n) = (2^(n+1) - (A w1^n - B w2^n) / (w1 - w2)) / 7
/// Throws ProjectionError / InexactDivision if the result is not an integer.
Integer j3_binet(std::uint64_t n);

/// Sum of J(0..n), via (J(n+2) + 2 J(n) - 1) / 3 with a checked division.
Integer j3_sum(std::uint64_t n);

/// J(n) from the n-th power of the companion matrix [[1,1,2],[1,0,0],[0,1,0]].
Integer j3_matpow(std::uint64_t n);

/// Constants of the Binet form and of the quadratic approximation identities.
/// `alpha` has no fixed definition; 2 (the real characteristic root) makes the
/// identities hold with Q = w1 and R = w2.
struct SeqParams {
  Cyclo alpha;
  Cyclo a_binet;  // -3 - 2 w2
  Cyclo b_binet;  // -3 - 2 w1
  Cyclo p;        // 1 - (w1 + w2)
  Cyclo q;        // 1 - (alpha + w2)
  Cyclo r;        // 1 - (alpha + w1)
};

SeqParams make_seq_params(const Cyclo& alpha = Cyclo(2));

struct BranchCheck {
  std::string_view root;  // "2", "w1" or "w2"
  Cyclo lhs;
  Cyclo rhs;
  bool holds = false;
};

struct QuadraticApproxCheck {
  std::uint64_t n = 0;
  std::array<BranchCheck, 3> branches;
  bool all_hold() const { return branches[0].holds && branches[1].holds && branches[2].holds; }
};

/// Checks, for root x in {2, w1, w2} with leading constant K in {P, Q, R}:
///   K x^(n+2) = x^2 J(n+2) + x (J(n+1) + 2 J(n)) + 2 J(n+1).
QuadraticApproxCheck quadratic_approx_check(std::uint64_t n, const SeqParams& params = make_seq_params());

}  // namespace bcjq

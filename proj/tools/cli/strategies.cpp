#include "cli/strategies.hpp"

#include <algorithm>

#include "bcjq/banded.hpp"
#include "bcjq/sequences.hpp"

namespace bcjq::cli {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::Recurrence:
      return "recurrence";
    case Strategy::Matpow:
      return "matpow";
    case Strategy::Binet:
      return "binet";
    case Strategy::Det:
      return "det";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  for (const Strategy s : {Strategy::Recurrence, Strategy::Matpow, Strategy::Binet, Strategy::Det}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::uint64_t effective_max(Strategy s, std::uint64_t n_max) {
  return s == Strategy::Det ? std::min(n_max, kDetCap) : n_max;
}

std::vector<BcQuat> evaluate(Strategy s, std::uint64_t n_max) {
  const std::uint64_t last = effective_max(s, n_max);
  if (s == Strategy::Recurrence) return bcj_recurrence_terms(last + 1);

  std::vector<BcQuat> out;
  out.reserve(last + 1);
  for (std::uint64_t n = 0; n <= last; ++n) {
    switch (s) {
      case Strategy::Matpow:
        out.emplace_back(Rational(j3_matpow(n)), Rational(j3_matpow(n + 1)), Rational(j3_matpow(n + 2)),
                         Rational(j3_matpow(n + 3)));
        break;
      case Strategy::Binet:
        out.push_back(bcj_binet(n));
        break;
      default:
        out.push_back(bcj_via_det(n));
        break;
    }
  }
  return out;
}

std::vector<BcQuat> reference_terms(std::uint64_t n_max) {
  const std::vector<Integer> j = j3_terms(n_max + 4);
  std::vector<BcQuat> out;
  out.reserve(n_max + 1);
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    out.emplace_back(Rational(j[n]), Rational(j[n + 1]), Rational(j[n + 2]), Rational(j[n + 3]));
  }
  return out;
}

}  // namespace bcjq::cli

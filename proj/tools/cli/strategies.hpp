#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "bcjq/quaternions.hpp"

namespace bcjq::cli {

/// Four independent ways of producing BC(0..n).
enum class Strategy { Recurrence, Matpow, Binet, Det };

std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);

/// The determinant path is cubic per index; bench runs it only this far.
inline constexpr std::uint64_t kDetCap = 64;

/// Last index a strategy is run to when asked for n_max.
std::uint64_t effective_max(Strategy s, std::uint64_t n_max);

/// BC(n) for n = 0 .. effective_max(s, n_max).
std::vector<BcQuat> evaluate(Strategy s, std::uint64_t n_max);

/// Definitional terms from the scalar sequence, used as the reference.
std::vector<BcQuat> reference_terms(std::uint64_t n_max);

}  // namespace bcjq::cli

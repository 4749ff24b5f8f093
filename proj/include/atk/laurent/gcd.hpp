#pragma once

#include <optional>

#include "atk/laurent/laurent_poly.hpp"

namespace atk {

/// Largest supported ring rank for lp_gcd.
inline constexpr std::size_t kMaxGcdRank = 3;

/// Exact quotient a / b in the Laurent ring, or nothing when b does not
/// divide a. Division by zero yields nothing unless a is also zero.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// A greatest common divisor in Z[t_1^{±1}, ..., t_r^{±1}], unit-normalized.
/// gcd(0, b) is the class of b. Throws RankMismatch, or UnsupportedRank
/// for r > kMaxGcdRank.
UnitClass lp_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace atk

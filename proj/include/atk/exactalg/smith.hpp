#pragma once

#include <vector>

#include "atk/exactalg/int_matrix.hpp"

namespace atk {

/// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ... , di >= 0.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// Diagonal entries d1..dk, k = min(rows, cols).
  std::vector<Integer> diagonal() const;
  /// Number of nonzero diagonal entries.
  std::size_t rank() const;
};

/// Smith normal form. The pivot is always an entry of least absolute value in
/// the active block, which keeps intermediate entries small on the matrices
/// this library meets (boundary maps, relator exponent matrices).
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Elementary divisors only (no transforms), same pivoting.
std::vector<Integer> elementary_divisors(const IntMatrix& m);

}  // namespace atk

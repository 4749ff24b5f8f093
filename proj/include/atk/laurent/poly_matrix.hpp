#pragma once

#include <cstddef>
#include <vector>

#include "atk/laurent/laurent_poly.hpp"

namespace atk {

/// Dense matrix over a Laurent ring of fixed rank.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t ring_rank);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t ring_rank() const noexcept { return ring_rank_; }

  LaurentPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  PolyMatrix without_column(std::size_t j) const;
  PolyMatrix submatrix(const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) const;
  /// Stacks `below` under this matrix; column counts must agree.
  PolyMatrix stacked(const PolyMatrix& below) const;
  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t ring_rank_ = 0;
  std::vector<LaurentPoly> data_;
};

/// Fraction-free determinant of a square matrix.
LaurentPoly determinant(const PolyMatrix& m);

/// gcd of all (cols x cols) minors by direct enumeration. Rows past the
/// column count are the only freedom; fewer rows than columns gives 0.
UnitClass maximal_minor_gcd(const PolyMatrix& m);
UnitClass maximal_minor_gcd_serial(const PolyMatrix& m);

/// Order of the module presented by m: rows are relations, columns are
/// generators. Pivots on entries that divide their whole column before
/// falling back to minor enumeration. Zero module has order 1, a
/// non-torsion module order 0.
UnitClass presentation_order(const PolyMatrix& m);
UnitClass presentation_order_serial(const PolyMatrix& m);

}  // namespace atk

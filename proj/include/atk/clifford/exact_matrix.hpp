#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "atk/clifford/gaussian_rational.hpp"

namespace atk {

/// Dense matrix over Q(i).
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(const std::vector<std::vector<GaussianRational>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix scaled(const GaussianRational& c) const;
  bool operator==(const ExactMatrix& o) const;

  ExactMatrix transpose() const;
  bool is_zero() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b);

/// Rank over Q(i) by Gaussian elimination.
std::size_t rank(ExactMatrix m);

/// Determinant of a square matrix; DimensionMismatch otherwise.
GaussianRational determinant(ExactMatrix m);

}  // namespace atk

#include "atk/laurent/poly_matrix.hpp"

#include <algorithm>
#include <atomic>
#include <optional>

#include "atk/error.hpp"
#include "atk/laurent/gcd.hpp"

namespace atk {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t ring_rank)
    : rows_(rows), cols_(cols), ring_rank_(ring_rank),
      data_(rows * cols, LaurentPoly(ring_rank)) {}

PolyMatrix PolyMatrix::without_column(std::size_t j) const {
  PolyMatrix out(rows_, cols_ - 1, ring_rank_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t c = 0, k = 0; c < cols_; ++c)
      if (c != j) out(i, k++) = (*this)(i, c);
  return out;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows,
                                 const std::vector<std::size_t>& cols) const {
  PolyMatrix out(rows.size(), cols.size(), ring_rank_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
  return out;
}

PolyMatrix PolyMatrix::stacked(const PolyMatrix& below) const {
  if (below.cols_ != cols_) throw Error(ErrorKind::DimensionMismatch, "stacking column counts");
  PolyMatrix out(rows_ + below.rows_, cols_, ring_rank_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + data_.size());
  return out;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

LaurentPoly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  }
  const std::size_t n = m.rows();
  const std::size_t r = m.ring_rank();
  if (n == 0) return LaurentPoly::constant(r, 1);
  PolyMatrix a = m;
  LaurentPoly previous = LaurentPoly::constant(r, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // sparsest nonzero pivot in column k keeps the products small
    std::optional<std::size_t> best;
    for (std::size_t i = k; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      if (!best || a(i, k).term_count() < a(*best, k).term_count()) best = i;
    }
    if (!best) return LaurentPoly(r);
    if (*best != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(*best, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        if (!previous.is_one()) {
          auto q = divide_exact(v, previous);
          if (!q) throw Error(ErrorKind::VerificationFailed, "Bareiss step was not exact");
          v = *std::move(q);
        } else if (previous.leading_term().second < 0) {
          v = -v;
        }
        a(i, j) = std::move(v);
      }
    }
    previous = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

namespace {

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > static_cast<unsigned __int128>(UINT64_MAX)) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(acc);
}

// The idx-th k-subset of {0..n-1} in lexicographic order.
std::vector<std::size_t> unrank_subset(std::uint64_t idx, std::size_t n, std::size_t k) {
  std::vector<std::size_t> out;
  out.reserve(k);
  std::size_t next = 0;
  for (std::size_t slot = 0; slot < k; ++slot) {
    for (std::size_t x = next;; ++x) {
      std::uint64_t with_x = binomial(n - x - 1, k - slot - 1);
      if (idx < with_x) {
        out.push_back(x);
        next = x + 1;
        break;
      }
      idx -= with_x;
    }
  }
  return out;
}

constexpr std::uint64_t kMinorLimit = 50'000'000;

LaurentPoly minor_gcd(const PolyMatrix& m, bool parallel) {
  const std::size_t r = m.ring_rank();
  const std::size_t k = m.cols();
  if (k == 0) return LaurentPoly::constant(r, 1);
  if (m.rows() < k) return LaurentPoly(r);
  const std::uint64_t count = binomial(m.rows(), k);
  if (count > kMinorLimit) {
    throw Error(ErrorKind::BoundExceeded,
                "too many maximal minors (" + std::to_string(count) + ") to enumerate");
  }
  std::vector<std::size_t> all_cols(k);
  for (std::size_t j = 0; j < k; ++j) all_cols[j] = j;

  LaurentPoly result(r);
  std::atomic<bool> unit_found{false};
  const std::int64_t total = static_cast<std::int64_t>(count);

#pragma omp parallel if (parallel)
  {
    LaurentPoly local(r);
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t idx = 0; idx < total; ++idx) {
      if (unit_found.load(std::memory_order_relaxed)) continue;
      auto rows = unrank_subset(static_cast<std::uint64_t>(idx), m.rows(), k);
      LaurentPoly d = determinant(m.submatrix(rows, all_cols));
      if (d.is_zero()) continue;
      local = lp_gcd(local, d).representative();
      if (local.is_one()) unit_found.store(true, std::memory_order_relaxed);
    }
#pragma omp critical(atk_minor_gcd)
    result = lp_gcd(result, local).representative();
  }
  return result;
}

bool divides_poly(const LaurentPoly& d, const LaurentPoly& a) {
  if (a.is_zero()) return true;
  if (d.is_unit()) return true;
  return divide_exact(a, d).has_value();
}

struct Pivot {
  std::size_t row;
  std::size_t col;
};

// An entry that divides every other entry of its column.
std::optional<Pivot> find_pivot(const PolyMatrix& m) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (m(i, j).is_unit()) return Pivot{i, j};

  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) candidates.push_back(i);
    std::sort(candidates.begin(), candidates.end(), [&](std::size_t x, std::size_t y) {
      return m(x, j).term_count() < m(y, j).term_count();
    });
    for (std::size_t c : candidates) {
      bool ok = true;
      for (std::size_t i : candidates) {
        if (i == c) continue;
        if (!divides_poly(m(c, j), m(i, j))) {
          ok = false;
          break;
        }
      }
      if (ok) return Pivot{c, j};
    }
  }
  return std::nullopt;
}

PolyMatrix eliminate(const PolyMatrix& m, Pivot p) {
  const LaurentPoly& pivot = m(p.row, p.col);
  std::vector<std::size_t> keep_rows;
  PolyMatrix work = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i == p.row) continue;
    const LaurentPoly& entry = m(i, p.col);
    if (!entry.is_zero()) {
      LaurentPoly q = *divide_exact(entry, pivot);
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j == p.col || m(p.row, j).is_zero()) continue;
        work(i, j) -= q * m(p.row, j);
      }
    }
    bool zero_row = true;
    for (std::size_t j = 0; j < m.cols() && zero_row; ++j)
      if (j != p.col && !work(i, j).is_zero()) zero_row = false;
    if (!zero_row) keep_rows.push_back(i);
  }
  std::vector<std::size_t> keep_cols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (j != p.col) keep_cols.push_back(j);
  return work.submatrix(keep_rows, keep_cols);
}

PolyMatrix drop_zero_rows(const PolyMatrix& m) {
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) {
        rows.push_back(i);
        break;
      }
    }
  }
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(j);
  return m.submatrix(rows, cols);
}

UnitClass order_impl(const PolyMatrix& input, bool parallel) {
  const std::size_t r = input.ring_rank();
  LaurentPoly factor = LaurentPoly::constant(r, 1);
  PolyMatrix m = drop_zero_rows(input);
  for (;;) {
    if (m.cols() == 0) return UnitClass(factor);
    if (m.rows() < m.cols()) return UnitClass(LaurentPoly(r));
    for (std::size_t j = 0; j < m.cols(); ++j) {
      bool zero = true;
      for (std::size_t i = 0; i < m.rows() && zero; ++i) zero = m(i, j).is_zero();
      if (zero) return UnitClass(LaurentPoly(r));
    }
    auto pivot = find_pivot(m);
    if (!pivot) break;
    factor = factor * m(pivot->row, pivot->col);
    m = eliminate(m, *pivot);
  }
  return UnitClass(factor * minor_gcd(m, parallel));
}

}  // namespace

UnitClass maximal_minor_gcd(const PolyMatrix& m) { return UnitClass(minor_gcd(m, true)); }
UnitClass maximal_minor_gcd_serial(const PolyMatrix& m) { return UnitClass(minor_gcd(m, false)); }

UnitClass presentation_order(const PolyMatrix& m) { return order_impl(m, true); }
UnitClass presentation_order_serial(const PolyMatrix& m) { return order_impl(m, false); }

}  // namespace atk

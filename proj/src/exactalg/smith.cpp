#include "atk/exactalg/smith.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace atk {
namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

std::optional<Position> least_nonzero(const IntMatrix& d, std::size_t t) {
  std::optional<Position> best;
  Integer best_abs;
  for (std::size_t i = t; i < d.rows(); ++i) {
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Integer a = abs_value(d(i, j));
      if (!best || a < best_abs) {
        best = Position{i, j};
        best_abs = std::move(a);
        if (best_abs == 1) return best;
      }
    }
  }
  return best;
}

// Least nonzero entry in row t / column t of the active block, or nothing if
// the pivot is already isolated.
std::optional<Position> least_in_cross(const IntMatrix& d, std::size_t t) {
  std::optional<Position> best;
  Integer best_abs;
  auto consider = [&](std::size_t i, std::size_t j) {
    if (d(i, j) == 0) return;
    Integer a = abs_value(d(i, j));
    if (!best || a < best_abs) {
      best = Position{i, j};
      best_abs = std::move(a);
    }
  };
  bool dirty = false;
  for (std::size_t i = t + 1; i < d.rows(); ++i) dirty = dirty || d(i, t) != 0;
  for (std::size_t j = t + 1; j < d.cols(); ++j) dirty = dirty || d(t, j) != 0;
  if (!dirty) return std::nullopt;
  consider(t, t);
  for (std::size_t i = t + 1; i < d.rows(); ++i) consider(i, t);
  for (std::size_t j = t + 1; j < d.cols(); ++j) consider(t, j);
  return best;
}

class SmithWorker {
 public:
  SmithWorker(const IntMatrix& m, bool track)
      : d_(m), track_(track) {
    if (track_) {
      u_ = IntMatrix::identity(m.rows());
      v_ = IntMatrix::identity(m.cols());
    }
  }

  void run() {
    const std::size_t k = std::min(d_.rows(), d_.cols());
    for (std::size_t t = 0; t < k; ++t) {
      auto pivot = least_nonzero(d_, t);
      if (!pivot) break;
      move_to(t, *pivot);
      for (;;) {
        clear_cross(t);
        if (auto next = least_in_cross(d_, t)) {
          move_to(t, *next);
          continue;
        }
        if (auto bad = non_divisible(t)) {
          // Pull the offending row into the pivot row; clearing then leaves a
          // remainder smaller than the pivot.
          add_row(t, bad->row, 1);
          continue;
        }
        break;
      }
      if (d_(t, t) < 0) negate_row(t);
    }
  }

  IntMatrix& d() { return d_; }
  IntMatrix& u() { return u_; }
  IntMatrix& v() { return v_; }

 private:
  void move_to(std::size_t t, Position p) {
    if (p.row != t) {
      d_.swap_rows(t, p.row);
      if (track_) u_.swap_rows(t, p.row);
    }
    if (p.col != t) {
      d_.swap_cols(t, p.col);
      if (track_) v_.swap_cols(t, p.col);
    }
  }

  void add_row(std::size_t dst, std::size_t src, const Integer& f) {
    d_.add_row_multiple(dst, src, f);
    if (track_) u_.add_row_multiple(dst, src, f);
  }

  void add_col(std::size_t dst, std::size_t src, const Integer& f) {
    d_.add_col_multiple(dst, src, f);
    if (track_) v_.add_col_multiple(dst, src, f);
  }

  void negate_row(std::size_t r) {
    d_.negate_row(r);
    if (track_) u_.negate_row(r);
  }

  void clear_cross(std::size_t t) {
    const Integer p = d_(t, t);
    for (std::size_t i = t + 1; i < d_.rows(); ++i) {
      if (d_(i, t) == 0) continue;
      Integer q = truncated_quotient(d_(i, t), p);
      if (q != 0) add_row(i, t, -q);
    }
    for (std::size_t j = t + 1; j < d_.cols(); ++j) {
      if (d_(t, j) == 0) continue;
      Integer q = truncated_quotient(d_(t, j), p);
      if (q != 0) add_col(j, t, -q);
    }
  }

  std::optional<Position> non_divisible(std::size_t t) const {
    const Integer& p = d_(t, t);
    for (std::size_t i = t + 1; i < d_.rows(); ++i)
      for (std::size_t j = t + 1; j < d_.cols(); ++j)
        if (d_(i, j) != 0 && !divides(p, d_(i, j))) return Position{i, j};
    return std::nullopt;
  }

  IntMatrix d_;
  IntMatrix u_;
  IntMatrix v_;
  bool track_;
};

}  // namespace

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> out;
  const std::size_t k = std::min(D.rows(), D.cols());
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(D(i, i));
  return out;
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  for (const auto& d : diagonal())
    if (d != 0) ++r;
  return r;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  SmithWorker w(m, true);
  w.run();
  return SmithDecomposition{std::move(w.u()), std::move(w.d()), std::move(w.v())};
}

std::vector<Integer> elementary_divisors(const IntMatrix& m) {
  SmithWorker w(m, false);
  w.run();
  std::vector<Integer> out;
  const std::size_t k = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < k; ++i) out.push_back(w.d()(i, i));
  return out;
}

}  // namespace atk

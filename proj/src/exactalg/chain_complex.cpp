#include "atk/exactalg/chain_complex.hpp"

#include <sstream>
#include <utility>

#include "atk/error.hpp"
#include "atk/exactalg/smith.hpp"

namespace atk {

std::string HomologyGroup::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank == 1) {
    os << "Z";
    first = false;
  } else if (free_rank > 1) {
    os << "Z^" << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    if (!first) os << '+';
    os << "Z/" << t.get_str();
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

ChainComplex::ChainComplex(std::vector<std::size_t> cells, std::vector<IntMatrix> boundaries)
    : cells_(std::move(cells)), boundaries_(std::move(boundaries)) {
  if (cells_.empty()) {
    if (!boundaries_.empty()) {
      throw Error(ErrorKind::ComplexInvalid, "boundary maps given for a complex without cells");
    }
    cells_.push_back(0);
    empty_ = true;
    return;
  }
  if (boundaries_.size() != cells_.size() - 1) {
    throw Error(ErrorKind::ComplexInvalid, "expected one boundary map per positive degree");
  }
  for (std::size_t k = 1; k < cells_.size(); ++k) {
    const IntMatrix& d = boundaries_[k - 1];
    if (d.rows() != cells_[k - 1] || d.cols() != cells_[k]) {
      throw Error(ErrorKind::ComplexInvalid,
                  "boundary map " + std::to_string(k) + " has the wrong shape");
    }
  }
  for (std::size_t k = 1; k + 1 < cells_.size(); ++k) {
    if (!(boundaries_[k - 1] * boundaries_[k]).is_zero()) {
      throw Error(ErrorKind::ComplexInvalid,
                  "composite of boundary maps " + std::to_string(k) + " and " +
                      std::to_string(k + 1) + " is nonzero");
    }
  }
}

HomologyGroup homology(const ChainComplex& complex, std::size_t k) {
  if (k > complex.top_dimension()) {
    throw Error(ErrorKind::IndexOutOfRange, "homology degree " + std::to_string(k) +
                                                " exceeds the top dimension");
  }
  const std::size_t n = complex.top_dimension();
  std::size_t out_rank = 0;
  if (k >= 1) out_rank = rank(complex.boundary(k));
  HomologyGroup h;
  std::size_t in_rank = 0;
  if (k + 1 <= n) {
    for (const auto& d : elementary_divisors(complex.boundary(k + 1))) {
      if (d == 0) continue;
      ++in_rank;
      if (d != 1) h.torsion.push_back(d);
    }
  }
  h.free_rank = complex.cells(k) - out_rank - in_rank;
  return h;
}

std::vector<HomologyGroup> homology_all(const ChainComplex& complex) {
  std::vector<HomologyGroup> out;
  for (std::size_t k = 0; k <= complex.top_dimension(); ++k) out.push_back(homology(complex, k));
  return out;
}

long euler_characteristic(const ChainComplex& complex) {
  long chi = 0;
  for (std::size_t k = 0; k < complex.cells().size(); ++k) {
    long c = static_cast<long>(complex.cells(k));
    chi += (k % 2 == 0) ? c : -c;
  }
  return chi;
}

ChainComplex circle_complex() {
  return ChainComplex({1, 1}, {IntMatrix(1, 1)});
}

ChainComplex product_complex(const ChainComplex& left, const ChainComplex& right) {
  const std::size_t p = left.top_dimension();
  const std::size_t q = right.top_dimension();
  const std::size_t top = p + q;

  // offset[k][i] = index of the first cell (a, b) with dim a = i in degree k
  std::vector<std::vector<std::size_t>> offset(top + 1);
  std::vector<std::size_t> cells(top + 1, 0);
  for (std::size_t k = 0; k <= top; ++k) {
    offset[k].assign(p + 1, 0);
    for (std::size_t i = 0; i <= p; ++i) {
      offset[k][i] = cells[k];
      if (k >= i && k - i <= q) cells[k] += left.cells(i) * right.cells(k - i);
    }
  }

  std::vector<IntMatrix> boundaries;
  for (std::size_t k = 1; k <= top; ++k) {
    IntMatrix d(cells[k - 1], cells[k]);
    for (std::size_t i = 0; i <= p; ++i) {
      if (k < i || k - i > q) continue;
      const std::size_t j = k - i;
      const std::size_t nb = right.cells(j);
      for (std::size_t a = 0; a < left.cells(i); ++a) {
        for (std::size_t b = 0; b < nb; ++b) {
          const std::size_t col = offset[k][i] + a * nb + b;
          if (i >= 1) {
            const IntMatrix& dl = left.boundary(i);
            const std::size_t nb_same = right.cells(j);
            for (std::size_t a2 = 0; a2 < left.cells(i - 1); ++a2) {
              if (dl(a2, a) == 0) continue;
              d(offset[k - 1][i - 1] + a2 * nb_same + b, col) += dl(a2, a);
            }
          }
          if (j >= 1) {
            const IntMatrix& dr = right.boundary(j);
            const std::size_t nb_lower = right.cells(j - 1);
            const long sign = (i % 2 == 0) ? 1 : -1;
            for (std::size_t b2 = 0; b2 < nb_lower; ++b2) {
              if (dr(b2, b) == 0) continue;
              d(offset[k - 1][i] + a * nb_lower + b2, col) += sign * dr(b2, b);
            }
          }
        }
      }
    }
    boundaries.push_back(std::move(d));
  }
  return ChainComplex(std::move(cells), std::move(boundaries));
}

}  // namespace atk

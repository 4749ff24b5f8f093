#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "atk/exactalg/int_matrix.hpp"

namespace atk {

/// Finitely generated abelian group Z^free_rank + Z/t1 + ... with t1 | t2 | ...
struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool operator==(const HomologyGroup&) const = default;
  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  /// "Z^2", "Z", "0", "Z+Z/2"; torsion factors are appended after the free part.
  std::string to_string() const;
};

/// Cellular chain complex C_n -> ... -> C_0 with boundary(k) : C_k -> C_{k-1}
/// stored as a (cells[k-1] x cells[k]) matrix. Construction rejects complexes
/// with a nonzero composite boundary, so consumers may assume d o d = 0.
class ChainComplex {
 public:
  /// `boundaries[k-1]` is the k-th boundary map. An empty `cells` list is
  /// accepted and treated as the zero complex concentrated in degree 0.
  ChainComplex(std::vector<std::size_t> cells, std::vector<IntMatrix> boundaries);

  std::size_t top_dimension() const noexcept { return cells_.size() - 1; }
  const std::vector<std::size_t>& cells() const noexcept { return cells_; }
  std::size_t cells(std::size_t k) const { return cells_.at(k); }
  /// Boundary C_k -> C_{k-1}; k in 1..top_dimension().
  const IntMatrix& boundary(std::size_t k) const { return boundaries_.at(k - 1); }
  const std::vector<IntMatrix>& boundaries() const noexcept { return boundaries_; }
  bool is_empty() const noexcept { return empty_; }

 private:
  std::vector<std::size_t> cells_;
  std::vector<IntMatrix> boundaries_;
  bool empty_ = false;
};

/// H_k = ker d_k / im d_{k+1}; unit elementary divisors are dropped.
HomologyGroup homology(const ChainComplex& complex, std::size_t k);
std::vector<HomologyGroup> homology_all(const ChainComplex& complex);

/// Alternating sum of cell counts.
long euler_characteristic(const ChainComplex& complex);

/// One 0-cell, one 1-cell, zero boundary.
ChainComplex circle_complex();

/// Cellular product complex. Cells of degree k are the pairs (a, b) with
/// dim a + dim b = k, ordered by dim a and then lexicographically; the
/// boundary is d(a x b) = da x b + (-1)^{dim a} a x db.
ChainComplex product_complex(const ChainComplex& left, const ChainComplex& right);

}  // namespace atk

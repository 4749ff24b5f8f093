#pragma once

// Reference computations used only by the test suites. Each one avoids the
// library algorithm it checks: no Smith form, no Fox calculus, no Bareiss.

#include <cstddef>
#include <vector>

#include "atk/exactalg/chain_complex.hpp"
#include "atk/exactalg/int_matrix.hpp"
#include "atk/grouppres/finite_group.hpp"
#include "atk/grouppres/presentation.hpp"
#include "atk/laurent/laurent_poly.hpp"
#include "atk/laurent/poly_matrix.hpp"

namespace atk::oracle {

/// Dense polynomial in one variable with nonnegative exponents; index = power.
using DensePoly = std::vector<Integer>;

DensePoly poly_mul(const DensePoly& a, const DensePoly& b);
DensePoly poly_add(const DensePoly& a, const DensePoly& b);
LaurentPoly to_laurent(const DensePoly& p);

/// Leibniz-formula determinant of a square matrix of dense polynomials.
DensePoly leibniz_determinant(const std::vector<std::vector<DensePoly>>& m);

/// det(V - t V^T) for a Seifert matrix V.
LaurentPoly seifert_alexander(const IntMatrix& v);

/// det(t A - I), the characteristic polynomial of a monodromy.
LaurentPoly mapping_torus_polynomial(const IntMatrix& a);

/// Rank over Q by Gaussian elimination on rationals.
std::size_t rational_rank(const IntMatrix& m);

/// Invariant factors d_k / d_{k-1} from determinantal divisors (gcds of all
/// k x k minors), units dropped.
std::vector<Integer> invariant_factors_by_minors(const IntMatrix& m);

/// Homology of every degree via ranks and determinantal divisors.
std::vector<HomologyGroup> brute_homology(const ChainComplex& complex);

/// All image tuples whose relators vanish and whose images generate G,
/// found by exhaustive search. Sorted lexicographically.
std::vector<std::vector<std::size_t>> brute_epimorphisms(const Presentation& p, const FiniteGroup& g);

/// Cofactor-expansion determinant over the Laurent ring.
LaurentPoly laplace_determinant(const PolyMatrix& m);

/// gcd of all maximal minors, each by cofactor expansion.
UnitClass brute_maximal_minor_gcd(const PolyMatrix& m);

}  // namespace atk::oracle

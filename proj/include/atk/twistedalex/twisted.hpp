#pragma once

#include <optional>
#include <vector>

#include "atk/grouppres/finite_group.hpp"
#include "atk/grouppres/presentation.hpp"
#include "atk/laurent/poly_matrix.hpp"

namespace atk {

/// A class phi : pi -> Z^s together with a finite quotient alpha. The
/// tensor representation sends a generator g to t^{phi(g)} P(alpha(g)),
/// with P the left-regular permutation matrix.
struct TwistData {
  ClassMap phi;
  FiniteQuotient alpha;
};

/// Permutation matrix with a Laurent monomial t^e in each nonzero slot:
/// column x carries t^{exps[x]} in row perm[x].
class MonomialMatrix {
 public:
  static MonomialMatrix identity(std::size_t m, std::size_t ring_rank);
  static MonomialMatrix generator(const TwistData& t, std::size_t gen);

  std::size_t size() const noexcept { return perm_.size(); }
  const std::vector<std::size_t>& permutation() const noexcept { return perm_; }
  const std::vector<ExponentVector>& exponents() const noexcept { return exps_; }

  MonomialMatrix operator*(const MonomialMatrix& o) const;
  MonomialMatrix inverse() const;
  PolyMatrix to_poly() const;
  bool operator==(const MonomialMatrix&) const = default;

 private:
  std::vector<std::size_t> perm_;
  std::vector<ExponentVector> exps_;
};

/// Image of a word; throws Incompatible for letters outside the twist's
/// presentation.
MonomialMatrix twist_word(const Word& w, const TwistData& t);
/// Linear extension to Z[F].
PolyMatrix twist_ring_map(const GroupRingElement& x, const TwistData& t);

/// Twisted Fox Jacobian: block (i, j) is the image of d r_i / d g_j.
PolyMatrix twisted_jacobian(const Presentation& p, const TwistData& t);

struct TwistedPoly {
  /// Order of the twisted Alexander module, unit-normalized.
  UnitClass value;
  /// gcd of maximal minors of the Jacobian with block column j removed.
  UnitClass raw_minor_gcd;
  /// Order of the twisted H_0.
  UnitClass h0_order;
  /// det(twist(g_j) - I).
  LaurentPoly column_determinant;
  std::size_t deleted_column = 0;
  std::size_t ring_rank = 0;
  /// False when raw * h0 / column_determinant was not exact and the raw
  /// value was kept.
  bool corrected = true;
};

struct TwistOptions {
  /// Force a particular deleted generator; must satisfy the determinant
  /// condition.
  std::optional<std::size_t> column;
  bool parallel = true;
};

/// Generators j with det(twist(g_j) - I) != 0.
std::vector<std::size_t> valid_columns(const Presentation& p, const TwistData& t);

/// Throws Precondition for a zero class or a quotient that does not fit the
/// presentation, NoValidColumn when no generator qualifies.
TwistedPoly twisted_alexander(const Presentation& p, const TwistData& t,
                              const TwistOptions& options = {});

/// phi = identity onto the free part of H_1, trivial quotient. Throws
/// Precondition for b1 = 0 and UnsupportedRank for b1 > 3.
TwistedPoly multivariable_alexander(const Presentation& p, const TwistOptions& options = {});

}  // namespace atk

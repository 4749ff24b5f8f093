#pragma once

#include <string>
#include <vector>

#include "atk/grouppres/presentation.hpp"
#include "atk/laurent/laurent_poly.hpp"
#include "atk/twistedalex/twisted.hpp"

namespace atk {

/// Width of the support of delta along phi (a 1 x r row over Z[H]);
/// 0 for delta = 0.
Integer alexander_norm(const LaurentPoly& delta, const IntMatrix& phi);

/// gcd of the class values; throws ZeroClass for phi = 0.
Integer divisibility(const IntMatrix& phi);
Integer divisibility(const ClassMap& phi);

struct NormReport {
  Integer alexander_norm;
  Integer div;
  Integer thurston_norm;
  std::size_t b1 = 0;
  /// Right-hand side of the inequality that was tested.
  Integer bound;
  bool mcmullen_ok = false;
  std::vector<std::string> warnings;
};

/// ||phi||_A <= ||phi||_T + (b1 == 1 ? 2 div : 0). The Thurston norm is
/// supplied by the caller and must be even and nonnegative (Precondition).
NormReport mcmullen_check(const Integer& alexander_norm, const Integer& div,
                          const Integer& thurston_norm, std::size_t b1);

struct NormRelation {
  UnitClass single;     // Delta_{Y,phi}
  UnitClass predicted;  // (t^div - 1)^2 * phi(Delta_Y)
  Integer div;
  bool holds = false;
};

/// Compares the single-variable polynomial of phi with the specialization of
/// the multivariable one. Requires b1 > 1 (Precondition).
NormRelation norm_relation_check(const Presentation& p, const ClassMap& phi);

struct DegreeBoundAudit {
  Degree degree;
  Integer alexander_norm;
  Integer div;
  bool holds = false;
};

/// deg Delta_{Y,phi} <= ||phi||_A + 2 div phi. Requires b1 > 1.
DegreeBoundAudit degree_bound_audit(const Presentation& p, const ClassMap& phi);

enum class DegreeCase { MinusInfinity, Zero, Two, Four, Other };
const char* to_string(DegreeCase c);
DegreeCase degree_case_analysis(const UnitClass& delta);

}  // namespace atk

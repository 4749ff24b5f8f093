#include "atk/normsfibred/norms.hpp"

#include "atk/error.hpp"

namespace atk {

Integer alexander_norm(const LaurentPoly& delta, const IntMatrix& phi) {
  if (phi.rows() != 1 || phi.cols() != delta.rank()) {
    throw Error(ErrorKind::RankMismatch, "class must be a single row with one entry per variable");
  }
  if (delta.is_zero()) return 0;
  bool first = true;
  Integer lo, hi;
  for (const auto& [e, c] : delta.terms()) {
    Integer v = 0;
    for (std::size_t i = 0; i < e.size(); ++i) v += phi(0, i) * e[i];
    if (first || v < lo) lo = v;
    if (first || v > hi) hi = v;
    first = false;
  }
  return hi - lo;
}

Integer divisibility(const IntMatrix& phi) {
  Integer g = 0;
  for (const auto& v : phi.entries()) g = gcd(g, v);
  if (g == 0) throw Error(ErrorKind::ZeroClass, "divisibility of the zero class");
  return g;
}

Integer divisibility(const ClassMap& phi) { return divisibility(phi.values()); }

NormReport mcmullen_check(const Integer& alexander_norm, const Integer& div,
                          const Integer& thurston_norm, std::size_t b1) {
  if (thurston_norm < 0 || !divides(Integer(2), thurston_norm)) {
    throw Error(ErrorKind::Precondition,
                "Thurston norm must be even and nonnegative, got " + thurston_norm.get_str());
  }
  NormReport r;
  r.alexander_norm = alexander_norm;
  r.div = div;
  r.thurston_norm = thurston_norm;
  r.b1 = b1;
  r.bound = thurston_norm + (b1 == 1 ? Integer(2 * div) : Integer(0));
  r.mcmullen_ok = alexander_norm <= r.bound;
  if (div > 0 && !divides(Integer(2 * div), thurston_norm)) {
    r.warnings.push_back("Thurston norm " + thurston_norm.get_str() +
                         " is not a multiple of 2 div = " + Integer(2 * div).get_str() +
                         "; homogeneity suggests otherwise");
  }
  return r;
}

namespace {

void require_b1_above_one(const Abelianization& ab) {
  if (ab.b1() <= 1) {
    throw Error(ErrorKind::Precondition,
                "needs first Betti number > 1, got " + std::to_string(ab.b1()));
  }
}

void require_rank_one(const ClassMap& phi) {
  if (phi.target_rank() != 1) throw Error(ErrorKind::Precondition, "class must take values in Z");
}

}  // namespace

NormRelation norm_relation_check(const Presentation& p, const ClassMap& phi) {
  require_rank_one(phi);
  const Abelianization ab = abelianize(p);
  require_b1_above_one(ab);
  NormRelation out;
  out.div = divisibility(phi);
  out.single = twisted_alexander(p, TwistData{phi, trivial_quotient(p)}).value;
  const TwistedPoly multi = multivariable_alexander(p);
  const LaurentPoly specialized = specialize(multi.value.representative(), class_on_homology(phi, ab));
  ExponentVector d{static_cast<int>(out.div.get_si())};
  const LaurentPoly factor = LaurentPoly::monomial(1, d) - LaurentPoly::constant(1, 1);
  out.predicted = UnitClass(factor * factor * specialized);
  out.holds = out.single == out.predicted;
  return out;
}

DegreeBoundAudit degree_bound_audit(const Presentation& p, const ClassMap& phi) {
  require_rank_one(phi);
  const Abelianization ab = abelianize(p);
  require_b1_above_one(ab);
  DegreeBoundAudit out;
  out.div = divisibility(phi);
  const UnitClass single = twisted_alexander(p, TwistData{phi, trivial_quotient(p)}).value;
  out.degree = laurent_degree(single.representative());
  const TwistedPoly multi = multivariable_alexander(p);
  out.alexander_norm = alexander_norm(multi.value.representative(), class_on_homology(phi, ab));
  const Integer bound = out.alexander_norm + 2 * out.div;
  out.holds = !out.degree.is_finite() || Integer(out.degree.value()) <= bound;
  return out;
}

const char* to_string(DegreeCase c) {
  switch (c) {
    case DegreeCase::MinusInfinity:
      return "-inf";
    case DegreeCase::Zero:
      return "0";
    case DegreeCase::Two:
      return "2";
    case DegreeCase::Four:
      return "4";
    case DegreeCase::Other:
      return "other";
  }
  return "other";
}

DegreeCase degree_case_analysis(const UnitClass& delta) {
  const Degree d = laurent_degree(delta.representative());
  if (!d.is_finite()) return DegreeCase::MinusInfinity;
  switch (d.value()) {
    case 0:
      return DegreeCase::Zero;
    case 2:
      return DegreeCase::Two;
    case 4:
      return DegreeCase::Four;
    default:
      return DegreeCase::Other;
  }
}

}  // namespace atk

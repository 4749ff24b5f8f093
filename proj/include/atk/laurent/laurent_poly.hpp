#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "atk/exactalg/int_matrix.hpp"
#include "atk/integer.hpp"

namespace atk {

using ExponentVector = std::vector<int>;

/// Laurent degree: an integer or minus infinity (the degree of 0).
/// Minus infinity sorts below every integer and absorbs addition.
class Degree {
 public:
  Degree() = default;  // minus infinity
  explicit Degree(long v) : finite_(true), value_(v) {}
  static Degree minus_infinity() { return Degree(); }

  bool is_finite() const noexcept { return finite_; }
  long value() const;

  Degree operator+(const Degree& o) const;
  bool operator==(const Degree& o) const = default;
  std::strong_ordering operator<=>(const Degree& o) const;
  std::string to_string() const;  // "-inf" or the integer

 private:
  bool finite_ = false;
  long value_ = 0;
};

/// Element of Z[t_1^{±1}, ..., t_r^{±1}]. Terms are kept sparse, keyed by
/// exponent vector in lexicographic order, with no zero coefficients.
class LaurentPoly {
 public:
  using TermMap = std::map<ExponentVector, Integer>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t rank) : rank_(rank) {}

  static LaurentPoly constant(std::size_t rank, const Integer& c);
  static LaurentPoly monomial(std::size_t rank, ExponentVector e, const Integer& c = 1);
  /// t_i (0-based index).
  static LaurentPoly variable(std::size_t rank, std::size_t i);

  std::size_t rank() const noexcept { return rank_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }
  Integer coefficient(const ExponentVector& e) const;
  /// Constant polynomial with value 1 or -1.
  bool is_one() const;
  /// Single term with coefficient +-1, i.e. a unit of the ring.
  bool is_unit() const;

  void add_term(const ExponentVector& e, const Integer& c);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const = default;

  LaurentPoly scaled(const Integer& c) const;
  /// Multiplies by the monomial t^shift.
  LaurentPoly shifted(const ExponentVector& shift) const;
  LaurentPoly pow(unsigned k) const;

  /// Per-variable minimum / maximum exponent over the support; zero vector
  /// for the zero polynomial.
  ExponentVector min_exponents() const;
  ExponentVector max_exponents() const;
  /// Lexicographically largest term. Requires a nonzero polynomial.
  const TermMap::value_type& leading_term() const;
  /// gcd of the coefficients (0 for the zero polynomial).
  Integer content() const;

  /// Canonical text: terms in descending lexicographic exponent order,
  /// variables "t" (rank 1) or "t1".."tr".
  std::string to_string() const;

 private:
  void check_rank(const LaurentPoly& o) const;

  std::size_t rank_ = 0;
  TermMap terms_;
};

/// Parses the text form produced by LaurentPoly::to_string. Accepts
/// optional whitespace, optional '*' between factors and repeated factors.
LaurentPoly parse_laurent(std::string_view text, std::size_t rank);

/// Canonical representative of the orbit under multiplication by units
/// +-t^n: every variable's minimum exponent shifted to 0 and the
/// lexicographically leading coefficient made positive.
LaurentPoly normalize(const LaurentPoly& p);

/// The class of a polynomial modulo units. Equality is equality of
/// normal forms.
class UnitClass {
 public:
  UnitClass() = default;
  explicit UnitClass(const LaurentPoly& p) : rep_(normalize(p)) {}

  const LaurentPoly& representative() const noexcept { return rep_; }
  std::size_t rank() const noexcept { return rep_.rank(); }
  bool is_zero() const noexcept { return rep_.is_zero(); }
  bool operator==(const UnitClass& o) const = default;
  std::string to_string() const { return rep_.to_string(); }

 private:
  LaurentPoly rep_;
};

inline bool unit_equivalent(const LaurentPoly& a, const LaurentPoly& b) {
  return normalize(a) == normalize(b);
}

enum class ArithOp { Add, Sub, Mul };
LaurentPoly lp_arith(const LaurentPoly& a, const LaurentPoly& b, ArithOp op);

/// max exponent - min exponent; rank must be 1.
Degree laurent_degree(const LaurentPoly& p);

/// Substitutes t^h -> t^{phi h}; phi is (s x r) for a rank-r input.
LaurentPoly specialize(const LaurentPoly& p, const IntMatrix& phi);

/// Top coefficient of the normalized representative is +-1; rank 1 only.
bool is_monic(const UnitClass& p);

struct SymmetricRepresentative {
  LaurentPoly poly;
  /// q(t) = sign * t^shift * q(1/t); shift is 0 for even degree and the
  /// degree for odd degree.
  int sign = 1;
  long shift = 0;
};

/// Representative whose coefficients read the same (up to one global sign)
/// from both ends, centered at exponent 0 when the degree is even.
SymmetricRepresentative symmetric_representative(const UnitClass& p);

}  // namespace atk

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "atk/clifford/gaussian_rational.hpp"

namespace atk {

enum class Field { Real, Complex };

/// Bit i-1 set means e_i is present; blades are products in increasing
/// index order.
using Blade = std::uint32_t;

inline constexpr std::size_t kMaxCliffordDimension = 16;

/// Sign and blade of the product e_A e_B under e_i^2 = -1.
std::pair<int, Blade> blade_product(Blade a, Blade b);
int blade_grade(Blade b);
std::string blade_name(Blade b);  // "1", "e1", "e1e2"

/// Element of Cl(K^n) expanded in the blade basis.
class CliffordElement {
 public:
  CliffordElement() = default;
  CliffordElement(std::size_t n, Field field);

  static CliffordElement scalar(std::size_t n, Field field, const GaussianRational& c);
  static CliffordElement blade(std::size_t n, Field field, Blade b,
                               const GaussianRational& c = 1);
  /// e_i, 1-based.
  static CliffordElement basis_vector(std::size_t n, Field field, std::size_t i);

  std::size_t dimension() const noexcept { return n_; }
  Field field() const noexcept { return field_; }
  const std::map<Blade, GaussianRational>& terms() const noexcept { return terms_; }
  GaussianRational coefficient(Blade b) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(Blade b, const GaussianRational& c);

  CliffordElement operator+(const CliffordElement& o) const;
  CliffordElement operator-(const CliffordElement& o) const;
  CliffordElement operator*(const CliffordElement& o) const;
  CliffordElement operator-() const;
  CliffordElement scaled(const GaussianRational& c) const;
  bool operator==(const CliffordElement& o) const;

  /// Part of grade k.
  CliffordElement grade(int k) const;
  bool is_even() const;
  bool is_odd() const;
  /// The automorphism induced by v -> -v.
  CliffordElement grade_involution() const;
  /// Reverses the order of vector factors in each blade.
  CliffordElement reversed() const;

  /// Terms ordered by grade then blade, e.g. "1/2*e1e2-1/2*e3".
  std::string to_string() const;

 private:
  void check(const CliffordElement& o) const;

  std::size_t n_ = 0;
  Field field_ = Field::Real;
  std::map<Blade, GaussianRational> terms_;
};

/// x y; throws DimensionMismatch on differing dimension or field.
CliffordElement clifford_product(const CliffordElement& x, const CliffordElement& y);

/// e_1 ... e_n, times i^{floor(n(n-1)/2)} in the complex case.
CliffordElement volume_element(std::size_t n, Field field);

/// (1 +- omega) / 2; throws NotSplitting when omega^2 != 1.
CliffordElement projector(bool plus, std::size_t n, Field field);

/// Hodge star of e_I in the exterior algebra of R^n: the sign of the
/// permutation (I, I^c) times e_{I^c}.
std::pair<int, Blade> hodge_star(Blade b, std::size_t n);

}  // namespace atk

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "atk/exactalg/int_matrix.hpp"

namespace atk {

enum class SurfaceType { Symplectic, Lagrangian, None };

const char* to_string(SurfaceType t);
SurfaceType surface_type_from_string(const std::string& s);  // ParseError on unknown

struct SurfaceInfo {
  std::optional<long> genus;
  SurfaceType type = SurfaceType::None;

  bool operator==(const SurfaceInfo&) const = default;
};

/// Intersection pairing on a chosen basis of H_2 together with attested
/// geometry. Unknown pairings are left empty; every check states which
/// entries it needs.
struct FormData {
  std::vector<std::string> labels;
  std::vector<std::vector<std::optional<Integer>>> pairing;
  std::vector<std::optional<Integer>> canonical;  // K . basis_i
  std::vector<SurfaceInfo> surfaces;

  std::size_t size() const noexcept { return labels.size(); }
  std::size_t index_of(const std::string& label) const;  // InvalidInput if absent
  /// Shapes agree and Q is symmetric where both entries are known.
  void validate() const;
  bool operator==(const FormData&) const = default;
};

struct SurfaceCheck {
  std::string label;
  Integer lhs;
  Integer rhs;
  bool holds = false;
};

/// K.S + S.S = 2g - 2 for a symplectic surface. Precondition if the entry is
/// not symplectic, MissingData if genus or a pairing is absent.
SurfaceCheck adjunction_check(const FormData& form, std::size_t index);

/// S.S = 2g - 2 for a Lagrangian surface. Same error rules.
SurfaceCheck lagrangian_square_check(const FormData& form, std::size_t index);

struct EvennessReport {
  /// Q(v,v) = K.v mod 2 on every basis vector.
  bool characteristic = false;
  /// Every Q(v,v) even; by bilinearity this is evenness of the whole form.
  bool diagonal_even = false;
  std::vector<std::string> odd_labels;

  bool even() const { return diagonal_even; }
};

/// Needs the diagonal of Q and all of K; MissingData otherwise.
EvennessReport evenness_check(const FormData& form);

/// The full pairing matrix; MissingData if any entry is unknown.
IntMatrix pairing_matrix(const FormData& form);

/// New basis given by the rows of p: Q' = P Q P^T, K' = P K. Labels become
/// "v0", "v1", ... and surface data is dropped. Needs complete Q and K.
FormData change_basis(const FormData& form, const IntMatrix& p);

}  // namespace atk

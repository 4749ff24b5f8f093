#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "atk/grouppres/presentation.hpp"

namespace atk {

/// A finite group given by its multiplication table. Element 0 is the
/// identity.
class FiniteGroup {
 public:
  static FiniteGroup trivial();
  static FiniteGroup cyclic(std::size_t n);
  /// Symmetries of the n-gon, order 2n; D_2 is the Klein four-group.
  static FiniteGroup dihedral(std::size_t n);
  /// n <= 4; elements are permutations in lexicographic order.
  static FiniteGroup symmetric(std::size_t n);
  /// Validates closure, identity at 0, inverses and associativity.
  static FiniteGroup from_table(std::vector<std::vector<std::size_t>> table, std::string label);

  std::size_t order() const noexcept { return order_; }
  const std::string& label() const noexcept { return label_; }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a * order_ + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  /// Left-regular action x -> g x as a permutation of {0..m-1}.
  std::vector<std::size_t> left_regular(std::size_t g) const;
  /// Subgroup generated by the given elements (sorted element list).
  std::vector<std::size_t> generated_subgroup(const std::vector<std::size_t>& gens) const;

 private:
  FiniteGroup(std::size_t order, std::vector<std::size_t> table, std::string label);

  std::size_t order_ = 0;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  std::string label_;
};

/// Every catalogued group of order <= max_order: trivial, cyclic, dihedral,
/// and S_4 when max_order >= 24. Ordered by (order, label).
std::vector<FiniteGroup> group_catalogue(std::size_t max_order);

/// Parses "trivial", "Z/n", "D_n" or "S_n".
FiniteGroup group_from_label(const std::string& label);

/// A homomorphism from a presented group onto a finite group, recorded by
/// the image of each generator.
struct FiniteQuotient {
  std::shared_ptr<const FiniteGroup> group;
  std::vector<std::size_t> images;

  std::size_t order() const { return group->order(); }
  std::size_t evaluate(const Word& w) const;
  /// Left-regular permutation of the generator's image.
  std::vector<std::size_t> permutation(std::size_t generator) const;
  /// True when every relator maps to the identity.
  bool respects(const Presentation& p) const;
  bool is_surjective() const;
};

/// The trivial quotient onto the one-element group.
FiniteQuotient trivial_quotient(const Presentation& p);

}  // namespace atk

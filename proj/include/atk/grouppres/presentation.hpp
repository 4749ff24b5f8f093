#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "atk/exactalg/chain_complex.hpp"
#include "atk/exactalg/int_matrix.hpp"
#include "atk/grouppres/word.hpp"

namespace atk {

class Presentation {
 public:
  Presentation() = default;
  /// Throws InvalidInput on duplicate or malformed names and on relators
  /// that reference a generator index outside the list.
  Presentation(std::vector<std::string> generators, std::vector<Word> relators);
  /// Relators given in the text syntax of parse_word.
  static Presentation parse(std::vector<std::string> generators,
                            const std::vector<std::string>& relators);

  std::size_t generator_count() const noexcept { return generators_.size(); }
  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }
  std::size_t generator_index(const std::string& name) const;

  /// Relator exponent sums: (relators x generators).
  IntMatrix exponent_matrix() const;

  bool operator==(const Presentation&) const = default;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

/// H_1 of the presented group together with coordinates on its free part.
struct Abelianization {
  HomologyGroup group;
  /// (b1 x n): column g holds the free coordinates of generator g.
  IntMatrix generator_images;
  /// Change of basis from the Smith decomposition of the exponent matrix.
  IntMatrix V;
  IntMatrix V_inverse;
  std::vector<std::size_t> free_columns;

  std::size_t b1() const noexcept { return group.free_rank; }
};

Abelianization abelianize(const Presentation& p);

/// A homomorphism from the group to Z^s, stored as its values on the
/// generators: an (s x n) integer matrix. Validated against the relators.
class ClassMap {
 public:
  ClassMap() = default;
  /// Throws InvalidInput if some relator has nonzero image.
  ClassMap(const Presentation& p, IntMatrix values);
  /// s = 1 convenience form.
  ClassMap(const Presentation& p, const std::vector<long>& values);

  const IntMatrix& values() const noexcept { return values_; }
  std::size_t target_rank() const noexcept { return values_.rows(); }
  std::size_t generator_count() const noexcept { return values_.cols(); }
  bool is_zero() const { return values_.is_zero(); }
  /// Image of a word in Z^s.
  std::vector<Integer> evaluate(const Word& w) const;

 private:
  IntMatrix values_;
};

/// The identity class onto the free part of H_1: generator g maps to its
/// free coordinates.
ClassMap identity_class(const Presentation& p, const Abelianization& ab);

/// The same homomorphism written on the free coordinates of H_1: an
/// (s x b1) matrix phi_H with values = phi_H * generator_images.
IntMatrix class_on_homology(const ClassMap& phi, const Abelianization& ab);

}  // namespace atk

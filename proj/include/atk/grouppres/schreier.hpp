#pragma once

#include <optional>
#include <vector>

#include "atk/grouppres/finite_group.hpp"
#include "atk/grouppres/presentation.hpp"

namespace atk {

/// Presentation of ker(alpha) from the Reidemeister-Schreier process.
/// Cosets are identified with group elements; the transversal is a
/// breadth-first spanning tree of the coset graph.
struct CoverPresentation {
  Presentation presentation;
  /// Each cover generator as a freely reduced word in the parent generators.
  std::vector<Word> generator_words;
  /// Transversal word for each coset.
  std::vector<Word> transversal;
  FiniteQuotient alpha;
};

/// Throws InvalidQuotient if alpha does not respect the relators or is not
/// surjective.
CoverPresentation reidemeister_schreier(const Presentation& p, const FiniteQuotient& alpha);

struct PulledBackClass {
  ClassMap phi;
  Integer divisibility;
};

/// The class phi restricted to ker(alpha), on the cover's generators.
/// phi must have a rank-1 target. Throws Incompatible if the cover was not
/// built from a presentation with phi's generator count.
PulledBackClass pullback_class(const ClassMap& phi, const CoverPresentation& cover);

}  // namespace atk

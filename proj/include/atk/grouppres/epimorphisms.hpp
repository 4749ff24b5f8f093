#pragma once

#include <memory>
#include <vector>

#include "atk/grouppres/finite_group.hpp"
#include "atk/grouppres/presentation.hpp"

namespace atk {

inline constexpr std::size_t kDefaultGroupBound = 12;

struct EpimorphismOptions {
  std::size_t order_bound = kDefaultGroupBound;
  /// Keep one representative per orbit of Aut(G) acting on the targets.
  bool dedup_automorphisms = false;
};

/// All surjections from the presented group onto G, sorted by image tuple.
/// Throws BoundExceeded when |G| exceeds the configured bound.
std::vector<FiniteQuotient> enumerate_epimorphisms(const Presentation& p,
                                                   std::shared_ptr<const FiniteGroup> g,
                                                   const EpimorphismOptions& options = {});
std::vector<FiniteQuotient> enumerate_epimorphisms_serial(
    const Presentation& p, std::shared_ptr<const FiniteGroup> g,
    const EpimorphismOptions& options = {});

/// Automorphisms of G as element permutations; the identity comes first.
std::vector<std::vector<std::size_t>> automorphisms(const FiniteGroup& g);

}  // namespace atk

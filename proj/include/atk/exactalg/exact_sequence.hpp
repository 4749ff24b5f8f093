#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace atk {

/// A rank fact about map i, the map from term i to term i + 1.
struct MapRankConstraint {
  enum class Kind { Image, Kernel };
  std::size_t map_index = 0;
  Kind kind = Kind::Image;
  long value = 0;

  bool operator==(const MapRankConstraint&) const = default;
};

/// A long exact sequence T_0 -> T_1 -> ... -> T_{n-1} of free ranks, some
/// unknown. Exactness holds at every interior term.
struct ExactSequenceData {
  std::vector<std::optional<long>> terms;
  std::vector<MapRankConstraint> constraints;
  std::vector<std::string> labels;  // optional, one per term

  bool operator==(const ExactSequenceData&) const = default;
};

struct ExactSequenceSolution {
  std::vector<long> term_ranks;
  /// Rank of the image of each map, when the data pins it down.
  std::vector<std::optional<long>> map_ranks;
};

/// Resolves unknown term ranks from exactness (rank T_i = rank im f_{i-1} +
/// rank im f_i) and the supplied map facts. Throws Underdetermined when some
/// unknown term is not forced, Inconsistent when the givens contradict
/// exactness or bound checks.
ExactSequenceSolution exact_sequence_solve(const ExactSequenceData& data);

}  // namespace atk

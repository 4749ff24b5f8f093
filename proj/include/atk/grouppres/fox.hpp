#pragma once

#include <vector>

#include "atk/grouppres/presentation.hpp"
#include "atk/grouppres/word.hpp"

namespace atk {

/// Fox derivative d r / d g in Z[F].
GroupRingElement fox_derivative(const Word& r, std::size_t g);

/// Rows are relators, columns generators.
using FoxJacobian = std::vector<std::vector<GroupRingElement>>;
FoxJacobian fox_jacobian(const Presentation& p);

}  // namespace atk

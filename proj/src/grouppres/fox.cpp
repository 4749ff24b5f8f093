#include "atk/grouppres/fox.hpp"

namespace atk {

GroupRingElement fox_derivative(const Word& r, std::size_t g) {
  GroupRingElement out;
  Word prefix;
  for (const auto& l : r.letters) {
    if (l.gen == g) {
      if (l.exp > 0) {
        out.add(prefix, 1);
        prefix.letters.push_back(l);
      } else {
        prefix.letters.push_back(l);
        out.add(prefix, -1);
      }
    } else {
      prefix.letters.push_back(l);
    }
  }
  return out;
}

FoxJacobian fox_jacobian(const Presentation& p) {
  FoxJacobian j(p.relators().size());
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    j[i].reserve(p.generator_count());
    for (std::size_t g = 0; g < p.generator_count(); ++g)
      j[i].push_back(fox_derivative(p.relators()[i], g));
  }
  return j;
}

}  // namespace atk

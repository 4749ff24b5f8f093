#include "atk/grouppres/schreier.hpp"

#include <deque>

#include "atk/error.hpp"

namespace atk {

CoverPresentation reidemeister_schreier(const Presentation& p, const FiniteQuotient& alpha) {
  if (!alpha.group || alpha.images.size() != p.generator_count()) {
    throw Error(ErrorKind::InvalidQuotient, "quotient does not match the presentation");
  }
  if (!alpha.respects(p)) throw Error(ErrorKind::InvalidQuotient, "a relator has nontrivial image");
  if (!alpha.is_surjective()) throw Error(ErrorKind::InvalidQuotient, "quotient is not surjective");

  const FiniteGroup& g = *alpha.group;
  const std::size_t m = g.order();
  const std::size_t n = p.generator_count();

  std::vector<std::optional<Word>> transversal(m);
  transversal[0] = Word();
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < n; ++s) {
      for (int e : {1, -1}) {
        const std::size_t a = alpha.images[s];
        const std::size_t y = g.multiply(x, e > 0 ? a : g.inverse(a));
        if (transversal[y]) continue;
        transversal[y] = *transversal[x] * Word::generator(s, e);
        queue.push_back(y);
      }
    }
  }

  // gamma(x, s) = T(x) s T(x alpha(s))^-1
  std::vector<std::vector<std::optional<std::size_t>>> index(m, std::vector<std::optional<std::size_t>>(n));
  std::vector<std::string> names;
  std::vector<Word> words;
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t s = 0; s < n; ++s) {
      const std::size_t y = g.multiply(x, alpha.images[s]);
      Word w = free_reduce(*transversal[x] * Word::generator(s) * transversal[y]->inverse());
      if (w.empty()) continue;
      index[x][s] = names.size();
      names.push_back(p.generators()[s] + "_" + std::to_string(x));
      words.push_back(std::move(w));
    }
  }

  std::vector<Word> relators;
  for (std::size_t x = 0; x < m; ++x) {
    for (const Word& r : p.relators()) {
      Word out;
      std::size_t cur = x;
      for (const auto& l : r.letters) {
        const std::size_t a = alpha.images[l.gen];
        if (l.exp > 0) {
          if (index[cur][l.gen]) out.letters.push_back(Letter{*index[cur][l.gen], 1});
          cur = g.multiply(cur, a);
        } else {
          const std::size_t prev = g.multiply(cur, g.inverse(a));
          if (index[prev][l.gen]) out.letters.push_back(Letter{*index[prev][l.gen], -1});
          cur = prev;
        }
      }
      out = free_reduce(out);
      if (!out.empty()) relators.push_back(std::move(out));
    }
  }

  CoverPresentation cover{Presentation(std::move(names), std::move(relators)), std::move(words), {},
                          alpha};
  cover.transversal.reserve(m);
  for (auto& t : transversal) cover.transversal.push_back(*std::move(t));
  return cover;
}

PulledBackClass pullback_class(const ClassMap& phi, const CoverPresentation& cover) {
  if (phi.target_rank() != 1) {
    throw Error(ErrorKind::Precondition, "pullback needs a class with target Z");
  }
  if (phi.generator_count() != cover.alpha.images.size()) {
    throw Error(ErrorKind::Incompatible, "class and cover come from different presentations");
  }
  const std::size_t k = cover.generator_words.size();
  if (k != cover.presentation.generator_count()) {
    throw Error(ErrorKind::Incompatible, "cover generator words are inconsistent");
  }
  IntMatrix values(1, k);
  Integer div = 0;
  for (std::size_t j = 0; j < k; ++j) {
    values(0, j) = phi.evaluate(cover.generator_words[j])[0];
    div = gcd(div, values(0, j));
  }
  return PulledBackClass{ClassMap(cover.presentation, std::move(values)), div};
}

}  // namespace atk

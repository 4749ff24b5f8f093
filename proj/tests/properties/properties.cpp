#include "properties.hpp"

#include <algorithm>
#include <memory>

#include "atk/error.hpp"
#include "atk/exactalg/smith.hpp"
#include "atk/grouppres/epimorphisms.hpp"
#include "atk/grouppres/fox.hpp"
#include "atk/grouppres/schreier.hpp"
#include "atk/twistedalex/twisted.hpp"

namespace atk::prop {

namespace {

long uniform(std::mt19937& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Word power(std::size_t gen, long e) {
  Word w;
  for (long k = 0; k < (e < 0 ? -e : e); ++k) w.letters.push_back(Letter{gen, e < 0 ? -1 : 1});
  return w;
}

bool unimodular(const IntMatrix& m) { return abs_value(determinant(m)) == 1; }

}  // namespace

IntMatrix random_matrix(std::mt19937& rng, std::size_t max_dim, long bound) {
  const auto rows = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_dim)));
  const auto cols = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_dim)));
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, -bound, bound);
  return m;
}

Word random_word(std::mt19937& rng, std::size_t generators, std::size_t max_length) {
  Word w;
  const long len = uniform(rng, 0, static_cast<long>(max_length));
  for (long k = 0; k < len; ++k) {
    w.letters.push_back(
        Letter{static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(generators) - 1)), uniform(rng, 0, 1) ? 1 : -1});
  }
  return w;
}

LaurentPoly random_laurent(std::mt19937& rng, std::size_t rank, std::size_t max_terms, int exponent_span) {
  LaurentPoly p(rank);
  const long terms = uniform(rng, 1, static_cast<long>(max_terms));
  for (long k = 0; k < terms; ++k) {
    ExponentVector e(rank);
    for (int& x : e) x = static_cast<int>(uniform(rng, -exponent_span, exponent_span));
    p.add_term(e, uniform(rng, -3, 3));
  }
  return p;
}

CliffordElement random_clifford(std::mt19937& rng, std::size_t n, Field field) {
  CliffordElement x(n, field);
  const long terms = uniform(rng, 1, 4);
  for (long k = 0; k < terms; ++k) {
    const auto blade = static_cast<Blade>(uniform(rng, 0, (1L << n) - 1));
    const Rational re(uniform(rng, -3, 3), uniform(rng, 1, 3));
    const Rational im = field == Field::Complex ? Rational(uniform(rng, -2, 2), uniform(rng, 1, 2)) : Rational(0);
    x.add(blade, GaussianRational(re, im));
  }
  return x;
}

FormData random_form(std::mt19937& rng, std::size_t n) {
  FormData f;
  f.pairing.assign(n, std::vector<std::optional<Integer>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    f.labels.push_back("x" + std::to_string(i));
    f.canonical.emplace_back(Integer(uniform(rng, -3, 3)));
    f.surfaces.emplace_back();
    for (std::size_t j = i; j < n; ++j) {
      const Integer v = uniform(rng, -3, 3);
      f.pairing[i][j] = v;
      f.pairing[j][i] = v;
    }
  }
  return f;
}

IntMatrix random_unimodular(std::mt19937& rng, std::size_t n, std::size_t steps) {
  IntMatrix p = IntMatrix::identity(n);
  for (std::size_t s = 0; s < steps; ++s) {
    const auto a = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    const auto b = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    switch (uniform(rng, 0, 2)) {
      case 0:
        if (a != b) p.add_row_multiple(a, b, uniform(rng, -2, 2));
        break;
      case 1:
        p.swap_rows(a, b);
        break;
      default:
        p.negate_row(a);
    }
  }
  return p;
}

std::vector<IntMatrix> random_sl2(std::mt19937& rng, std::size_t count, long bound) {
  std::vector<IntMatrix> all;
  for (long a = -bound; a <= bound; ++a)
    for (long b = -bound; b <= bound; ++b)
      for (long c = -bound; c <= bound; ++c)
        for (long d = -bound; d <= bound; ++d)
          if (a * d - b * c == 1) all.push_back(IntMatrix::from_rows(2, 2, {a, b, c, d}));
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min(count, all.size()));
  return all;
}

Presentation mapping_torus_presentation(const IntMatrix& a) {
  const Word ga = Word::generator(0), gb = Word::generator(1), gc = Word::generator(2);
  const Word image_a = power(0, a(0, 0).get_si()) * power(1, a(1, 0).get_si());
  const Word image_b = power(0, a(0, 1).get_si()) * power(1, a(1, 1).get_si());
  std::vector<Word> rels{
      ga * gb * ga.inverse() * gb.inverse(),
      gc * ga * gc.inverse() * image_a.inverse(),
      gc * gb * gc.inverse() * image_b.inverse(),
  };
  return Presentation({"a", "b", "c"}, rels);
}

Tally smith_property_failures(std::mt19937& rng, std::size_t count) {
  Tally t;
  for (std::size_t k = 0; k < count; ++k) {
    const IntMatrix m = random_matrix(rng, 6, 9);
    const SmithDecomposition s = smith_normal_form(m);
    bool ok = unimodular(s.U) && unimodular(s.V) && s.D.is_diagonal() && s.U * m * s.V == s.D;
    const auto diag = s.diagonal();
    for (std::size_t i = 0; i < diag.size() && ok; ++i) {
      if (diag[i] < 0) ok = false;
      if (i + 1 < diag.size() && !divides(diag[i], diag[i + 1])) ok = false;
    }
    ok = ok && diag == elementary_divisors(m);
    ++t.cases;
    if (!ok) ++t.failures;
  }
  return t;
}

Tally fox_identity_failures(std::mt19937& rng, std::size_t count) {
  Tally t;
  const GroupRingElement one = GroupRingElement::from_word(Word());
  for (std::size_t k = 0; k < count; ++k) {
    const Word r = random_word(rng, 3, 14);
    GroupRingElement sum;
    for (std::size_t j = 0; j < 3; ++j) {
      sum = sum + fox_derivative(r, j) * (GroupRingElement::from_word(Word::generator(j)) - one);
    }
    ++t.cases;
    if (!(sum == GroupRingElement::from_word(r) - one)) ++t.failures;
  }
  return t;
}

Tally normalization_failures(std::mt19937& rng, std::size_t count) {
  Tally t;
  while (t.cases < count) {
    const std::size_t rank = static_cast<std::size_t>(uniform(rng, 1, 3));
    const LaurentPoly p = random_laurent(rng, rank, 5, 4);
    if (p.is_zero()) continue;
    ExponentVector shift(rank);
    for (int& x : shift) x = static_cast<int>(uniform(rng, -6, 6));
    const LaurentPoly unit = LaurentPoly::monomial(rank, shift, uniform(rng, 0, 1) ? 1 : -1);
    const LaurentPoly n = normalize(p);
    bool ok = normalize(unit * p) == n && normalize(n) == n && n.leading_term().second > 0;
    for (int x : n.min_exponents()) ok = ok && x == 0;
    ++t.cases;
    if (!ok) ++t.failures;
  }
  return t;
}

Tally cover_consistency_failures(const Presentation& p, const ClassMap& phi, std::size_t max_order) {
  Tally t;
  for (const FiniteGroup& g : group_catalogue(max_order)) {
    auto shared = std::make_shared<const FiniteGroup>(g);
    for (const FiniteQuotient& alpha : enumerate_epimorphisms(p, shared)) {
      ++t.cases;
      try {
        const UnitClass twisted = twisted_alexander(p, TwistData{phi, alpha}).value;
        const CoverPresentation cover = reidemeister_schreier(p, alpha);
        const PulledBackClass pulled = pullback_class(phi, cover);
        const UnitClass untwisted =
            twisted_alexander(cover.presentation, TwistData{pulled.phi, trivial_quotient(cover.presentation)}).value;
        if (!(twisted == untwisted)) ++t.failures;
      } catch (const Error&) {
        ++t.failures;
      }
    }
  }
  return t;
}

}  // namespace atk::prop

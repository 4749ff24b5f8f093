#include <memory>
#include <random>

#include "../oracles/oracles.hpp"
#include "../support.hpp"
#include "atk/clifford/clifford.hpp"
#include "atk/exactalg/smith.hpp"
#include "atk/fourman/form.hpp"
#include "atk/grouppres/epimorphisms.hpp"
#include "atk/grouppres/fox.hpp"
#include "atk/grouppres/schreier.hpp"
#include "atk/laurent/gcd.hpp"
#include "atk/normsfibred/norms.hpp"
#include "atk/twistedalex/twisted.hpp"
#include "doctest.h"
#include "properties.hpp"

using namespace atk;
using namespace atk::prop;

TEST_CASE("Smith normal form invariants on random matrices") {
  std::mt19937 rng(1);
  const auto failures = smith_property_failures(rng, 1000).failures;
  CHECK(failures == 0);
}

TEST_CASE("homology agrees with the minors oracle on random boundary maps") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const IntMatrix d = random_matrix(rng, 6, 3);
    const ChainComplex c({d.rows(), d.cols()}, {d});
    CAPTURE(d.to_string());
    CHECK(homology_all(c) == oracle::brute_homology(c));
  }
}

TEST_CASE("Fox fundamental identity on random words") {
  std::mt19937 rng(3);
  CHECK(fox_identity_failures(rng, 500).failures == 0);
}

TEST_CASE("free reduction is idempotent and never lengthens") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 500; ++trial) {
    const Word w = random_word(rng, 3, 12);
    const Word r = free_reduce(w);
    CHECK(r.size() <= w.size());
    CHECK(free_reduce(r) == r);
  }
}

TEST_CASE("unit normalization is constant on orbits") {
  std::mt19937 rng(5);
  CHECK(normalization_failures(rng, 500).failures == 0);
}

TEST_CASE("laurent gcd divides and is multiplicative in a common factor") {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t rank = 1 + trial % 2;
    const LaurentPoly a = random_laurent(rng, rank, 3, 3);
    const LaurentPoly b = random_laurent(rng, rank, 3, 3);
    const LaurentPoly c = random_laurent(rng, rank, 2, 2);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    const UnitClass g = lp_gcd(a, b);
    CAPTURE(a.to_string());
    CAPTURE(b.to_string());
    CHECK(divide_exact(a, g.representative()).has_value());
    CHECK(divide_exact(b, g.representative()).has_value());
    CHECK(lp_gcd(a * c, b * c) == UnitClass(g.representative() * c));
  }
}

TEST_CASE("degree is additive on random products") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentPoly f = random_laurent(rng, 1, 4, 4);
    const LaurentPoly g = random_laurent(rng, 1, 4, 4);
    if (f.is_zero() || g.is_zero()) continue;
    CHECK(laurent_degree(f * g) == laurent_degree(f) + laurent_degree(g));
  }
}

TEST_CASE("symmetric representatives are palindromic") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    // f(t) f(1/t) is symmetric for any f
    const LaurentPoly f = random_laurent(rng, 1, 3, 3);
    if (f.is_zero()) continue;
    IntMatrix inv = IntMatrix::from_rows(1, 1, {-1});
    const LaurentPoly sym = f * specialize(f, inv);
    const SymmetricRepresentative s = symmetric_representative(UnitClass(sym));
    const LaurentPoly flipped = specialize(s.poly, inv).shifted({static_cast<int>(s.shift)}).scaled(s.sign);
    CHECK(flipped == s.poly);
  }
}

TEST_CASE("SL(2,Z) mapping tori match det(tA - I)") {
  std::mt19937 rng(9);
  const auto matrices = random_sl2(rng, 20, 3);
  REQUIRE(matrices.size() == 20);
  for (const IntMatrix& a : matrices) {
    CAPTURE(a.to_string());
    const Presentation p = mapping_torus_presentation(a);
    const TwistedPoly d = twisted_alexander(p, TwistData{ClassMap(p, std::vector<long>{0, 0, 1}), trivial_quotient(p)});
    CHECK(d.value == UnitClass(oracle::mapping_torus_polynomial(a)));
    CHECK_NOTHROW(symmetric_representative(d.value));
  }
}

TEST_CASE("twisted polynomials equal the untwisted polynomial of the cover") {
  struct Case {
    const char* file;
    std::vector<long> phi;
  };
  for (const Case& c : {Case{"na.pres", {0, 0, 1}}, Case{"na.pres", {0, 1, 0}}, Case{"trefoil.pres", {1, 1}},
                        Case{"figure8.pres", {1, 1}}}) {
    const Presentation p = test::load_presentation(c.file).presentation;
    CAPTURE(c.file);
    CHECK(cover_consistency_failures(p, ClassMap(p, c.phi), 6).failures == 0);
  }
}

TEST_CASE("covers never lose first Betti number on fixtures") {
  for (const char* name : {"na.pres", "trefoil.pres"}) {
    const Presentation p = test::load_presentation(name).presentation;
    const std::size_t base = abelianize(p).b1();
    for (const FiniteGroup& g : group_catalogue(6)) {
      auto shared = std::make_shared<const FiniteGroup>(g);
      for (const FiniteQuotient& alpha : enumerate_epimorphisms(p, shared)) {
        CHECK(abelianize(reidemeister_schreier(p, alpha).presentation).b1() >= base);
      }
    }
  }
}

TEST_CASE("Clifford products are associative") {
  std::mt19937 rng(10);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const Field f = trial % 3 == 0 ? Field::Complex : Field::Real;
    const CliffordElement x = random_clifford(rng, n, f), y = random_clifford(rng, n, f), z = random_clifford(rng, n, f);
    CHECK((x * y) * z == x * (y * z));
    // grade involution is multiplicative, reversion is anti-multiplicative
    CHECK((x * y).grade_involution() == x.grade_involution() * y.grade_involution());
    CHECK((x * y).reversed() == y.reversed() * x.reversed());
    CHECK(x.grade_involution() + x == (x.grade(0) + x.grade(2) + x.grade(4)).scaled(2));
  }
}

TEST_CASE("evenness is invariant under unimodular change of basis") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const FormData f = random_form(rng, 1 + trial % 4);
    const IntMatrix p = random_unimodular(rng, f.size(), 6);
    const EvennessReport before = evenness_check(f), after = evenness_check(change_basis(f, p));
    CHECK(before.even() == after.even());
    CHECK(before.characteristic == after.characteristic);
  }
}

TEST_CASE("characteristic relation extends to the whole lattice") {
  std::mt19937 rng(12);
  std::uniform_int_distribution<long> coef(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const FormData f = random_form(rng, 1 + trial % 4);
    if (!evenness_check(f).characteristic) continue;
    const IntMatrix q = pairing_matrix(f);
    std::vector<Integer> v(f.size());
    for (auto& x : v) x = coef(rng);
    Integer qvv = 0, kv = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      kv += *f.canonical[i] * v[i];
      for (std::size_t j = 0; j < f.size(); ++j) qvv += v[i] * q(i, j) * v[j];
    }
    CHECK(divides(2, qvv - kv));
  }
}

TEST_CASE("Alexander norm is homogeneous") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<long> c(-3, 3), k(-4, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rank = 1 + trial % 3;
    const LaurentPoly d = random_laurent(rng, rank, 4, 3);
    IntMatrix phi(1, rank), scaled(1, rank);
    const long factor = k(rng);
    for (std::size_t i = 0; i < rank; ++i) {
      phi(0, i) = c(rng);
      scaled(0, i) = phi(0, i) * factor;
    }
    CHECK(alexander_norm(d, scaled) == abs_value(Integer(factor)) * alexander_norm(d, phi));
  }
}

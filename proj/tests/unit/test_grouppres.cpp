#include <algorithm>
#include <memory>

#include "../oracles/oracles.hpp"
#include "../support.hpp"
#include "atk/grouppres/epimorphisms.hpp"
#include "atk/grouppres/finite_group.hpp"
#include "atk/grouppres/fox.hpp"
#include "atk/grouppres/presentation.hpp"
#include "atk/grouppres/schreier.hpp"
#include "atk/grouppres/word.hpp"
#include "doctest.h"

using namespace atk;

namespace {

const std::vector<std::string> kAB{"a", "b"};

Word w(const char* s, const std::vector<std::string>& names = kAB) { return parse_word(s, names); }

GroupRingElement ring(const char* s, long c = 1, const std::vector<std::string>& names = kAB) {
  return GroupRingElement::from_word(w(s, names), c);
}

}  // namespace

TEST_CASE("word parsing and printing") {
  CHECK(word_to_string(w("a b^2 a^-1"), kAB) == "a b^2 a^-1");
  CHECK(word_to_string(w("[a,b]"), kAB) == "a b a^-1 b^-1");
  CHECK(word_to_string(w("(a b)^-2"), kAB) == "b^-1 a^-1 b^-1 a^-1");
  CHECK(w("1").empty());
  CHECK(test::error_kind([] { w("c"); }) == ErrorKind::ParseError);
  CHECK(test::error_kind([] { w("[a,b"); }) == ErrorKind::ParseError);
}

TEST_CASE("free reduction") {
  CHECK(free_reduce(w("a b b^-1 a^-1")).empty());
  CHECK(free_reduce(w("a a^-1 b")) == w("b"));
  const Word r = free_reduce(w("b a a^-1 b^-1 a"));
  CHECK(r == w("a"));
  CHECK(free_reduce(r) == r);
  CHECK(w("a b").inverse() == w("b^-1 a^-1"));
  CHECK(w("a^3 b^-1 a").exponent_sum(0) == 4);
}

TEST_CASE("abelianization of fixtures") {
  SUBCASE("N_a has H_1 = Z^2") {
    const Abelianization ab = abelianize(test::load_presentation("na.pres").presentation);
    CHECK(ab.group == HomologyGroup{2, {}});
  }
  SUBCASE("M has H_1 = Z^4 and no torsion") {
    for (const char* name : {"m_twist.pres", "m_identity.pres"}) {
      CAPTURE(name);
      const Abelianization ab = abelianize(test::load_presentation(name).presentation);
      CHECK(ab.b1() == 4);
      CHECK(ab.group.torsion.empty());
    }
  }
  SUBCASE("knots have H_1 = Z") {
    CHECK(abelianize(test::load_presentation("trefoil.pres").presentation).group == HomologyGroup{1, {}});
    CHECK(abelianize(test::load_presentation("figure8.pres").presentation).group == HomologyGroup{1, {}});
  }
  SUBCASE("torsion") {
    const Presentation p = Presentation::parse({"a"}, {"a^6"});
    CHECK(abelianize(p).group == HomologyGroup{0, {Integer(6)}});
  }
  SUBCASE("coordinates satisfy the relators") {
    const Presentation p = test::load_presentation("na.pres").presentation;
    const Abelianization ab = abelianize(p);
    CHECK((ab.generator_images * p.exponent_matrix().transpose()).is_zero());
    CHECK(ab.V * ab.V_inverse == IntMatrix::identity(p.generator_count()));
  }
}

TEST_CASE("class maps must kill relators") {
  const Presentation p = test::load_presentation("na.pres").presentation;
  CHECK(test::error_kind([&] { ClassMap(p, std::vector<long>{1, 0, 0}); }) == ErrorKind::InvalidInput);
  const ClassMap phi(p, std::vector<long>{0, 0, 1});
  CHECK(phi.evaluate(w("c b c^-1", p.generators())) == std::vector<Integer>{0});
  CHECK(phi.evaluate(w("c^3", p.generators())) == std::vector<Integer>{3});
}

TEST_CASE("Fox derivatives") {
  SUBCASE("commutator") {
    const Word r = w("[a,b]");
    CHECK(fox_derivative(r, 0) == ring("1") - ring("a b a^-1"));
    CHECK(fox_derivative(r, 1) == ring("a") - ring("a b a^-1 b^-1"));
  }
  SUBCASE("powers") {
    CHECK(fox_derivative(w("a^3"), 0) == ring("1") + ring("a") + ring("a^2"));
    CHECK(fox_derivative(w("a^-1"), 0) == ring("a^-1", -1));
    CHECK(fox_derivative(w("b^2"), 0).is_zero());
  }
  SUBCASE("fundamental identity on fixture relators") {
    for (const char* name : {"na.pres", "trefoil.pres", "figure8.pres", "m_twist.pres", "m_identity.pres"}) {
      CAPTURE(name);
      const Presentation p = test::load_presentation(name).presentation;
      for (const Word& r : p.relators()) {
        GroupRingElement sum;
        for (std::size_t j = 0; j < p.generator_count(); ++j) {
          const GroupRingElement gj = GroupRingElement::from_word(Word::generator(j)) - GroupRingElement::from_word(Word());
          sum = sum + fox_derivative(r, j) * gj;
        }
        CHECK(sum == GroupRingElement::from_word(r) - GroupRingElement::from_word(Word()));
      }
    }
  }
  SUBCASE("jacobian shape") {
    const Presentation p = test::load_presentation("na.pres").presentation;
    const FoxJacobian j = fox_jacobian(p);
    CHECK(j.size() == 3);
    CHECK(j[0].size() == 3);
  }
}

TEST_CASE("finite groups") {
  CHECK(FiniteGroup::cyclic(5).order() == 5);
  CHECK(FiniteGroup::dihedral(3).order() == 6);
  CHECK(FiniteGroup::dihedral(2).order() == 4);
  CHECK(FiniteGroup::symmetric(4).order() == 24);
  CHECK(group_from_label("Z/7").order() == 7);
  CHECK(group_from_label("D_4").order() == 8);
  CHECK(group_from_label("trivial").order() == 1);
  CHECK(test::error_kind([] { group_from_label("Q_8"); }).has_value());
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  for (std::size_t a = 0; a < 6; ++a) CHECK(s3.multiply(a, s3.inverse(a)) == 0);
  CHECK(s3.generated_subgroup({1}).size() == 2);
  CHECK(test::error_kind([] { FiniteGroup::from_table({{0, 1}, {1, 1}}, "bad"); }).has_value());
}

TEST_CASE("group catalogue") {
  const auto groups = group_catalogue(6);
  std::vector<std::string> labels;
  for (const auto& g : groups) labels.push_back(g.label());
  CHECK(labels == std::vector<std::string>{"trivial", "Z/2", "Z/3", "D_2", "Z/4", "Z/5", "D_3", "Z/6"});
  const auto big = group_catalogue(24);
  CHECK(std::any_of(big.begin(), big.end(), [](const FiniteGroup& g) { return g.label() == "S_4"; }));
  CHECK(big.back().label() == "Z/24");
}

TEST_CASE("epimorphisms of N_a") {
  const Presentation p = test::load_presentation("na.pres").presentation;
  auto z2 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2));
  // H_1 = Z^2, so there are 2^2 - 1 = 3 surjections to Z/2
  CHECK(enumerate_epimorphisms(p, z2).size() == 3);
  auto s3 = std::make_shared<const FiniteGroup>(FiniteGroup::symmetric(3));
  CHECK(enumerate_epimorphisms(p, s3).empty());
  EpimorphismOptions tight;
  tight.order_bound = 4;
  CHECK(test::error_kind([&] { enumerate_epimorphisms(p, s3, tight); }) == ErrorKind::BoundExceeded);
}

TEST_CASE("epimorphisms agree with exhaustive search") {
  for (const char* name : {"na.pres", "trefoil.pres", "figure8.pres", "t3.pres"}) {
    const Presentation p = test::load_presentation(name).presentation;
    for (const FiniteGroup& g : group_catalogue(6)) {
      CAPTURE(name);
      CAPTURE(g.label());
      auto shared = std::make_shared<const FiniteGroup>(g);
      std::vector<std::vector<std::size_t>> got;
      for (const auto& q : enumerate_epimorphisms(p, shared)) got.push_back(q.images);
      CHECK(got == oracle::brute_epimorphisms(p, g));
      std::vector<std::vector<std::size_t>> serial;
      for (const auto& q : enumerate_epimorphisms_serial(p, shared)) serial.push_back(q.images);
      CHECK(serial == got);
    }
  }
}

TEST_CASE("trefoil maps onto S_3") {
  const Presentation p = test::load_presentation("trefoil.pres").presentation;
  auto s3 = std::make_shared<const FiniteGroup>(FiniteGroup::symmetric(3));
  const auto all = enumerate_epimorphisms(p, s3);
  CHECK(all.size() == 6);
  EpimorphismOptions dedup;
  dedup.dedup_automorphisms = true;
  CHECK(enumerate_epimorphisms(p, s3, dedup).size() == 1);
  CHECK(automorphisms(FiniteGroup::symmetric(3)).size() == 6);
  CHECK(automorphisms(FiniteGroup::cyclic(5)).size() == 4);
}

TEST_CASE("Reidemeister-Schreier covers") {
  const Presentation p = test::load_presentation("na.pres").presentation;
  auto z2 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2));
  for (const FiniteQuotient& alpha : enumerate_epimorphisms(p, z2)) {
    const CoverPresentation cover = reidemeister_schreier(p, alpha);
    // index 2 cover of a 3-generator, 3-relator presentation: 2*(3-1)+1 generators, 6 relators
    CHECK(cover.presentation.generator_count() == 5);
    CHECK(cover.presentation.relators().size() == 6);
    CHECK(cover.transversal.size() == 2);
    CHECK(abelianize(cover.presentation).b1() >= abelianize(p).b1());
    const ClassMap phi(p, std::vector<long>{0, 0, 1});
    const PulledBackClass pulled = pullback_class(phi, cover);
    CHECK(pulled.divisibility >= 1);
    for (std::size_t g = 0; g < cover.generator_words.size(); ++g) {
      CHECK(pulled.phi.values()(0, g) == phi.evaluate(cover.generator_words[g])[0]);
    }
  }
  FiniteQuotient bad = trivial_quotient(p);
  bad.group = z2;
  bad.images = {1, 1, 1};
  CHECK(test::error_kind([&] { reidemeister_schreier(p, bad); }) == ErrorKind::InvalidQuotient);
}

TEST_CASE("trivial cover keeps the presentation size") {
  const Presentation p = test::load_presentation("trefoil.pres").presentation;
  const CoverPresentation cover = reidemeister_schreier(p, trivial_quotient(p));
  CHECK(cover.presentation.generator_count() == p.generator_count());
  const ClassMap phi = identity_class(p, abelianize(p));
  CHECK(pullback_class(phi, cover).divisibility == 1);
}

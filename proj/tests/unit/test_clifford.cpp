#include "../support.hpp"
#include "atk/clifford/clifford.hpp"
#include "atk/clifford/exact_matrix.hpp"
#include "atk/clifford/verify.hpp"
#include "doctest.h"

using namespace atk;

namespace {

CliffordElement e(std::size_t n, std::size_t i, Field f = Field::Real) { return CliffordElement::basis_vector(n, f, i); }

Blade b(std::initializer_list<int> idx) {
  Blade out = 0;
  for (int i : idx) out |= Blade{1} << (i - 1);
  return out;
}

}  // namespace

TEST_CASE("Gaussian rationals") {
  const GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  CHECK((GaussianRational(1) / GaussianRational(Rational(1), Rational(1))).to_string() == "1/2-1/2i");
  CHECK(GaussianRational::fraction(3, 6).to_string() == "1/2");
  CHECK((-i).to_string() == "-i");
}

TEST_CASE("blade products") {
  CHECK(blade_product(b({1}), b({1})) == std::pair<int, Blade>{-1, 0});
  CHECK(blade_product(b({1}), b({2})) == std::pair<int, Blade>{1, b({1, 2})});
  CHECK(blade_product(b({2}), b({1})) == std::pair<int, Blade>{-1, b({1, 2})});
  CHECK(blade_product(b({1, 2}), b({1, 2})).first == -1);
  CHECK(blade_name(b({1, 3})) == "e1e3");
  CHECK(blade_grade(b({1, 2, 4})) == 3);
}

TEST_CASE("quaternion relations in Cl(R^2)") {
  const CliffordElement i = e(2, 1), j = e(2, 2), k = i * j;
  const CliffordElement minus_one = CliffordElement::scalar(2, Field::Real, -1);
  CHECK(i * i == minus_one);
  CHECK(j * j == minus_one);
  CHECK(k * k == minus_one);
  CHECK(i * j == -(j * i));
}

TEST_CASE("element operations") {
  const CliffordElement x = e(3, 1) + e(3, 2) * e(3, 3);
  CHECK(x.to_string() == "e1+e2e3");
  CHECK(x.grade(2).to_string() == "e2e3");
  CHECK(x.grade_involution().to_string() == "-e1+e2e3");
  CHECK(x.reversed().to_string() == "e1-e2e3");
  CHECK_FALSE(x.is_even());
  CHECK((e(3, 2) * e(3, 3)).is_even());
  CHECK(x.scaled(GaussianRational::fraction(1, 2)).to_string() == "1/2*e1+1/2*e2e3");
  CHECK(test::error_kind([] { e(3, 1) * e(4, 1); }) == ErrorKind::DimensionMismatch);
  CHECK(test::error_kind([] { e(3, 4); }) == ErrorKind::DimensionMismatch);
  CHECK(test::error_kind([] {
          CliffordElement::scalar(2, Field::Real, GaussianRational::i());
        }) == ErrorKind::InvalidInput);
}

TEST_CASE("volume elements and projectors") {
  const CliffordElement one4 = CliffordElement::scalar(4, Field::Complex, 1);
  const CliffordElement w = volume_element(4, Field::Complex);
  CHECK(w * w == one4);
  const CliffordElement p = projector(true, 4, Field::Complex), m = projector(false, 4, Field::Complex);
  CHECK(p * p == p);
  CHECK(m * m == m);
  CHECK((p * m).is_zero());
  CHECK(p + m == one4);
  CHECK(projector(true, 3, Field::Real) * projector(true, 3, Field::Real) == projector(true, 3, Field::Real));
  CHECK(test::error_kind([] { projector(true, 3, Field::Complex); }) == ErrorKind::NotSplitting);
  CHECK(test::error_kind([] { projector(true, 2, Field::Real); }) == ErrorKind::NotSplitting);
}

TEST_CASE("Hodge star table in dimension 4") {
  CHECK(hodge_star(b({1, 2}), 4) == std::pair<int, Blade>{1, b({3, 4})});
  CHECK(hodge_star(b({1, 3}), 4) == std::pair<int, Blade>{-1, b({2, 4})});
  CHECK(hodge_star(b({1, 4}), 4) == std::pair<int, Blade>{1, b({2, 3})});
  CHECK(hodge_star(b({2, 3}), 4) == std::pair<int, Blade>{1, b({1, 4})});
  CHECK(hodge_star(b({2, 4}), 4) == std::pair<int, Blade>{-1, b({1, 3})});
  CHECK(hodge_star(b({3, 4}), 4) == std::pair<int, Blade>{1, b({1, 2})});
  const auto once = hodge_star(b({2, 4}), 4);
  const auto twice = hodge_star(once.second, 4);
  CHECK(once.first * twice.first == 1);
  CHECK(twice.second == b({2, 4}));
}

TEST_CASE("exact matrices") {
  const ExactMatrix a = ExactMatrix::from_rows({{1, 2}, {3, 4}});
  CHECK(determinant(a) == GaussianRational(-2));
  CHECK(rank(a) == 2);
  CHECK(rank(ExactMatrix::from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(kronecker(ExactMatrix::identity(2), a).rows() == 4);
  CHECK(determinant(kronecker(ExactMatrix::identity(2), a)) == GaussianRational(4));
  CHECK(test::error_kind([] { determinant(ExactMatrix(2, 3)); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("mu is defined on the complex 4-dimensional algebra only") {
  CHECK(rank(mu_map(CliffordElement::scalar(4, Field::Complex, 1))) == 4);
  CHECK(mu_map(e(4, 1, Field::Complex)) * mu_map(e(4, 1, Field::Complex)) == ExactMatrix::identity(4).scaled(-1));
  CHECK(test::error_kind([] { mu_map(e(4, 1)); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("every verification suite passes") {
  for (const std::string& suite : verification_suites()) {
    CAPTURE(suite);
    VerifyOptions o;
    o.spin_samples = 25;
    const VerificationReport r = verify_iso(suite, o);
    CHECK(r.passed());
    CHECK(r.failures() == 0);
    CHECK_FALSE(r.checks.empty());
    CHECK_NOTHROW(require_passed(r));
  }
  CHECK(test::error_kind([] { verify_iso("nonsense"); }) == ErrorKind::InvalidInput);
}

TEST_CASE("a failing report names the identity") {
  VerificationReport r{"demo", {{"x*y = y*x", false, "x=e1 y=e2"}}};
  CHECK_FALSE(r.passed());
  CHECK(r.to_string().find("FAIL") != std::string::npos);
  CHECK(test::error_kind([&] { require_passed(r); }) == ErrorKind::VerificationFailed);
}

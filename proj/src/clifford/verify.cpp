#include "atk/clifford/verify.hpp"

#include <array>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "atk/error.hpp"

namespace atk {

namespace {

using GR = GaussianRational;

ExactMatrix m2(GR a, GR b, GR c, GR d) { return ExactMatrix::from_rows({{a, b}, {c, d}}); }

const std::array<ExactMatrix, 4>& mu_generators() {
  static const std::array<ExactMatrix, 4> gens = [] {
    const GR i = GR::i();
    const ExactMatrix id = ExactMatrix::identity(2);
    const ExactMatrix sigma = m2(0, i, -i, 0);
    return std::array<ExactMatrix, 4>{
        kronecker(m2(i, 0, 0, -i), sigma),
        kronecker(m2(0, 1, -1, 0), sigma),
        kronecker(id, m2(0, i, i, 0)),
        kronecker(id, m2(i, 0, 0, -i)),
    };
  }();
  return gens;
}

ExactMatrix mu_blade(Blade b) {
  ExactMatrix m = ExactMatrix::identity(4);
  for (int k = 0; k < 4; ++k)
    if (b & (Blade{1} << k)) m = m * mu_generators()[k];
  return m;
}

std::size_t blade_count(std::size_t n) { return std::size_t{1} << n; }

CliffordElement blade_of(std::size_t n, Field f, Blade b) { return CliffordElement::blade(n, f, b); }

/// Coefficients of x in the blade basis, as a row.
std::vector<GR> coordinates(const CliffordElement& x) {
  std::vector<GR> row(blade_count(x.dimension()));
  for (const auto& [b, c] : x.terms()) row[b] = c;
  return row;
}

std::vector<GR> flatten(const ExactMatrix& m) {
  std::vector<GR> row;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
  return row;
}

std::size_t span_dimension(const std::vector<std::vector<GR>>& rows) {
  if (rows.empty()) return 0;
  return rank(ExactMatrix::from_rows(rows));
}

std::size_t element_span(const std::vector<CliffordElement>& xs) {
  std::vector<std::vector<GR>> rows;
  for (const auto& x : xs) rows.push_back(coordinates(x));
  return span_dimension(rows);
}

std::size_t matrix_span(const std::vector<ExactMatrix>& ms) {
  std::vector<std::vector<GR>> rows;
  for (const auto& m : ms) rows.push_back(flatten(m));
  return span_dimension(rows);
}

class Recorder {
 public:
  explicit Recorder(std::string suite) { report_.suite = std::move(suite); }

  void check(const std::string& identity, bool ok, const std::string& detail = {}) {
    report_.checks.push_back({identity, ok, ok ? std::string() : detail});
  }

  /// Records one identity quantified over `count` instances; `probe(k)`
  /// returns an empty string on success or a description of the failure.
  void family(const std::string& identity, std::size_t count,
              const std::function<std::string(std::size_t)>& probe) {
    for (std::size_t k = 0; k < count; ++k) {
      std::string failure = probe(k);
      if (!failure.empty()) {
        check(identity, false, failure);
        return;
      }
    }
    check(identity + " [" + std::to_string(count) + " cases]", true);
  }

  void equal(const std::string& identity, const CliffordElement& lhs, const CliffordElement& rhs) {
    check(identity, lhs == rhs, lhs.to_string() + " != " + rhs.to_string());
  }

  void equal(const std::string& identity, const ExactMatrix& lhs, const ExactMatrix& rhs) {
    check(identity, lhs == rhs, lhs.to_string() + " != " + rhs.to_string());
  }

  void count(const std::string& identity, std::size_t got, std::size_t want) {
    check(identity + " = " + std::to_string(want), got == want, "got " + std::to_string(got));
  }

  VerificationReport take() { return std::move(report_); }

 private:
  VerificationReport report_;
};

std::string pair_name(Blade a, Blade b) { return blade_name(a) + " * " + blade_name(b); }

VerificationReport suite_cliffmult() {
  Recorder rec("cliffmult");
  const ExactMatrix id = ExactMatrix::identity(4);
  for (int k = 0; k < 4; ++k) {
    const std::string e = "mu(e" + std::to_string(k + 1) + ")";
    rec.equal(e + "^2 = -I", mu_generators()[k] * mu_generators()[k], id.scaled(-1));
  }
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      const ExactMatrix& x = mu_generators()[a];
      const ExactMatrix& y = mu_generators()[b];
      rec.check("mu(e" + std::to_string(a + 1) + ") mu(e" + std::to_string(b + 1) + ") anticommute",
                (x * y + y * x).is_zero());
    }
  rec.equal("mu(e4) = diag(i,-i,i,-i)", mu_generators()[3],
            ExactMatrix::from_rows({{GR::i(), 0, 0, 0}, {0, -GR::i(), 0, 0}, {0, 0, GR::i(), 0}, {0, 0, 0, -GR::i()}}));
  rec.family("mu(e_A e_B) = mu(e_A) mu(e_B)", 256, [](std::size_t k) -> std::string {
    const Blade a = static_cast<Blade>(k / 16), b = static_cast<Blade>(k % 16);
    const auto [sign, ab] = blade_product(a, b);
    const ExactMatrix lhs = mu_blade(ab).scaled(sign);
    if (lhs == mu_blade(a) * mu_blade(b)) return {};
    return pair_name(a, b);
  });
  std::vector<ExactMatrix> images;
  for (Blade b = 0; b < 16; ++b) images.push_back(mu_blade(b));
  rec.count("rank of mu on the 16 basis blades", matrix_span(images), 16);
  return rec.take();
}

// Quaternion algebra H on basis 1, i, j, k: product table as (sign, index).
std::pair<int, int> quaternion_product(int x, int y) {
  static const int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  return {sgn[x][y], idx[x][y]};
}

VerificationReport suite_cliff3() {
  Recorder rec("cliff3");
  constexpr std::size_t n = 3;
  const Field f = Field::Real;
  const GR half = GR::fraction(1, 2);
  const CliffordElement e1 = blade_of(n, f, 1), e2 = blade_of(n, f, 2), e3 = blade_of(n, f, 4);
  const CliffordElement e12 = e1 * e2, e23 = e2 * e3;
  const CliffordElement pp = projector(true, n, f), pm = projector(false, n, f);

  // Images of the basis of H + H: index 0..3 is (1,i,j,k) + 0, 4..7 is 0 + (1,i,j,k).
  std::array<CliffordElement, 8> image;
  image[0] = pp;
  image[1] = (e12 - e3).scaled(half);
  image[2] = (e23 - e1).scaled(half);
  image[3] = image[1] * image[2];
  image[4] = pm;
  image[5] = (e12 + e3).scaled(half);
  image[6] = (e23 + e1).scaled(half);
  image[7] = image[5] * image[6];

  const std::array<const char*, 8> names = {"1+0", "i+0", "j+0", "k+0", "0+1", "0+i", "0+j", "0+k"};
  rec.equal("(i+0)^2 = -(1+0)", image[1] * image[1], -image[0]);
  rec.equal("(0+i)^2 = -(0+1)", image[5] * image[5], -image[4]);
  rec.equal("(j+0)^2 = -(1+0)", image[2] * image[2], -image[0]);
  rec.equal("(k+0)^2 = -(1+0)", image[3] * image[3], -image[0]);
  rec.equal("(i+0)(j+0)(k+0) = -(1+0)", image[1] * image[2] * image[3], -image[0]);
  rec.equal("(0+i)(0+j)(0+k) = -(0+1)", image[5] * image[6] * image[7], -image[4]);
  rec.equal("(1+0) + (0+1) = 1", image[0] + image[4], CliffordElement::scalar(n, f, 1));
  rec.family("images multiply like H + H", 64, [&](std::size_t k) -> std::string {
    const std::size_t x = k / 8, y = k % 8;
    CliffordElement want(n, f);
    if (x / 4 == y / 4) {
      const auto [sign, z] = quaternion_product(static_cast<int>(x % 4), static_cast<int>(y % 4));
      want = image[(x / 4) * 4 + z].scaled(sign);
    }
    if (image[x] * image[y] == want) return {};
    return std::string(names[x]) + " * " + names[y];
  });
  rec.count("rank of the 8 images", element_span({image.begin(), image.end()}), 8);
  rec.family("H+0 lands in pi+ Cl, 0+H in pi- Cl", 8, [&](std::size_t k) -> std::string {
    const CliffordElement& p = k < 4 ? pp : pm;
    return p * image[k] == image[k] ? std::string() : names[k];
  });
  return rec.take();
}

// Image of a blade of Cl(K^{n-1}) under e_i -> e_i e_n.
CliffordElement cliffm1_image(Blade b, std::size_t n, Field f) {
  CliffordElement r = CliffordElement::scalar(n, f, 1);
  const CliffordElement en = CliffordElement::basis_vector(n, f, n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (b & (Blade{1} << i)) r = r * CliffordElement::basis_vector(n, f, i + 1) * en;
  return r;
}

VerificationReport suite_cliffm1() {
  Recorder rec("cliffm1");
  for (Field f : {Field::Real, Field::Complex}) {
    for (std::size_t n = 2; n <= 5; ++n) {
      const std::string tag = std::string(f == Field::Real ? "R" : "C") + "^" + std::to_string(n);
      const std::size_t m = blade_count(n - 1);
      rec.family(tag + ": psi(e_A e_B) = psi(e_A) psi(e_B)", m * m, [&](std::size_t k) -> std::string {
        const Blade a = static_cast<Blade>(k / m), b = static_cast<Blade>(k % m);
        const auto [sign, ab] = blade_product(a, b);
        const CliffordElement lhs = cliffm1_image(ab, n, f).scaled(sign);
        return lhs == cliffm1_image(a, n, f) * cliffm1_image(b, n, f) ? std::string() : pair_name(a, b);
      });
      std::vector<CliffordElement> images;
      bool even = true;
      for (Blade b = 0; b < m; ++b) {
        images.push_back(cliffm1_image(b, n, f));
        even = even && images.back().is_even();
      }
      rec.check(tag + ": images lie in Cl_0", even);
      rec.count(tag + ": rank of images", element_span(images), m);
    }
  }
  const Blade all3 = 0b111;
  rec.equal("psi(omega_3) = omega_4", cliffm1_image(all3, 4, Field::Real), volume_element(4, Field::Real));
  return rec.take();
}

CliffordElement vector4(const std::array<GR, 4>& c) {
  CliffordElement v(4, Field::Complex);
  for (int k = 0; k < 4; ++k) v.add(Blade{1} << k, c[k]);
  return v;
}

VerificationReport suite_cliffiso() {
  Recorder rec("cliffiso");
  const Field C = Field::Complex;
  const CliffordElement one = CliffordElement::scalar(4, C, 1);
  const CliffordElement omega = volume_element(4, C);
  rec.equal("omega_C = -e1e2e3e4", omega, blade_of(4, C, 0b1111).scaled(-1));
  rec.equal("omega_C^2 = 1", omega * omega, one);

  struct Split {
    std::size_t n;
    Field f;
    const char* tag;
  };
  for (const Split& s : {Split{3, Field::Real, "R^3"}, Split{4, Field::Real, "R^4"}, Split{4, C, "C^4"}}) {
    const CliffordElement p = projector(true, s.n, s.f), q = projector(false, s.n, s.f);
    const std::string t = s.tag;
    rec.equal(t + ": pi+ pi+ = pi+", p * p, p);
    rec.equal(t + ": pi- pi- = pi-", q * q, q);
    rec.check(t + ": pi+ pi- = 0", (p * q).is_zero(), (p * q).to_string());
    rec.check(t + ": pi- pi+ = 0", (q * p).is_zero(), (q * p).to_string());
    rec.equal(t + ": pi+ + pi- = 1", p + q, CliffordElement::scalar(s.n, s.f, 1));
  }

  const CliffordElement pp = projector(true, 4, C), pm = projector(false, 4, C);
  rec.family("e_k pi+- = pi-+ e_k", 4, [&](std::size_t k) -> std::string {
    const CliffordElement e = CliffordElement::basis_vector(4, C, k + 1);
    return (e * pp == pm * e && e * pm == pp * e) ? std::string() : blade_name(e.terms().begin()->first);
  });
  rec.count("dim (C^4)+ = rank mu(pi+)", rank(mu_map(pp)), 2);
  rec.count("dim (C^4)- = rank mu(pi-)", rank(mu_map(pm)), 2);

  // pi- applied to sum c_k e_k, expanded in blades.
  const std::array<GR, 4> c = {GR(2), GR(3), GR(5), GR(7)};
  CliffordElement expected(4, C);
  expected.add(0b0001, c[0]);
  expected.add(0b0010, c[1]);
  expected.add(0b0100, c[2]);
  expected.add(0b1000, c[3]);
  expected.add(0b1110, c[0]);
  expected.add(0b1101, -c[1]);
  expected.add(0b1011, c[2]);
  expected.add(0b0111, -c[3]);
  rec.equal("pi- (sum c_k e_k) expansion", pm * vector4(c), expected.scaled(GR::fraction(1, 2)));

  for (bool plus : {true, false}) {
    const CliffordElement& from = plus ? pp : pm;
    const CliffordElement& to = plus ? pm : pp;
    const std::string t = plus ? "phi+" : "phi-";
    std::vector<ExactMatrix> maps;
    bool lands = true;
    bool squares = true;
    for (std::size_t k = 1; k <= 4; ++k) {
      const CliffordElement e = CliffordElement::basis_vector(4, C, k);
      const ExactMatrix m = mu_map(e) * mu_map(from);
      maps.push_back(m);
      lands = lands && mu_map(to) * m == m;
      squares = squares && mu_map(e) * m == mu_map(from).scaled(-1);
    }
    rec.check(t + "(e_k) maps into the opposite half-spinor space", lands);
    rec.check(t + ": e.(e.v) = -<e,e> v on the half-spinor space", squares);
    rec.count(t + ": rank of C^4 -> Hom", matrix_span(maps), 4);
  }
  return rec.take();
}

std::vector<Blade> even_blades(std::size_t n) {
  std::vector<Blade> out;
  for (Blade b = 0; b < blade_count(n); ++b)
    if (blade_grade(b) % 2 == 0) out.push_back(b);
  return out;
}

VerificationReport suite_endiso() {
  Recorder rec("endiso");
  const Field C = Field::Complex;
  const CliffordElement omega = volume_element(4, C);
  const std::vector<Blade> evens = even_blades(4);
  rec.family("omega_C commutes with Cl_0", evens.size(), [&](std::size_t k) -> std::string {
    const CliffordElement x = blade_of(4, C, evens[k]);
    return omega * x == x * omega ? std::string() : blade_name(evens[k]);
  });
  for (bool plus : {true, false}) {
    const std::string t = plus ? "phi+" : "phi-";
    const CliffordElement p = projector(plus, 4, C);
    const ExactMatrix mp = mu_map(p);
    std::vector<CliffordElement> basis;
    for (Blade b : evens) basis.push_back(p * blade_of(4, C, b));
    rec.count(t + ": dim Cl_0^" + (plus ? "+" : "-"), element_span(basis), 4);
    std::vector<ExactMatrix> ends;
    for (const auto& x : basis) ends.push_back(mu_map(x) * mp);
    rec.count(t + ": rank into End of the half-spinor space", matrix_span(ends), 4);
    const std::size_t m = basis.size();
    rec.family(t + "(xy) = phi(x) phi(y)", m * m, [&](std::size_t k) -> std::string {
      const CliffordElement& x = basis[k / m];
      const CliffordElement& y = basis[k % m];
      const ExactMatrix lhs = mu_map(x * y) * mp;
      return lhs == (mu_map(x) * mp) * (mu_map(y) * mp) ? std::string()
                                                        : x.to_string() + " * " + y.to_string();
    });
  }
  return rec.take();
}

VerificationReport suite_extcliff() {
  Recorder rec("extcliff");
  // Hodge star on 2-blades of R^4, literal table.
  const std::array<std::tuple<Blade, int, Blade>, 6> table = {{
      {0b0011, 1, 0b1100},
      {0b0101, -1, 0b1010},
      {0b1001, 1, 0b0110},
      {0b0110, 1, 0b1001},
      {0b1010, -1, 0b0101},
      {0b1100, 1, 0b0011},
  }};
  for (const auto& [from, sign, to] : table) {
    const auto [s, b] = hodge_star(from, 4);
    rec.check("*" + blade_name(from) + " = " + (sign < 0 ? "-" : "") + blade_name(to), s == sign && b == to,
              (s < 0 ? "-" : "") + blade_name(b));
  }
  rec.family("** = id on 2-forms of R^4", table.size(), [&](std::size_t k) -> std::string {
    const auto [s1, b1] = hodge_star(std::get<0>(table[k]), 4);
    const auto [s2, b2] = hodge_star(b1, 4);
    return (s1 * s2 == 1 && b2 == std::get<0>(table[k])) ? std::string() : blade_name(std::get<0>(table[k]));
  });

  // Eigenspace dimensions of * on the 6-dimensional space of 2-forms.
  std::vector<Blade> two;
  for (Blade b = 0; b < 16; ++b)
    if (blade_grade(b) == 2) two.push_back(b);
  for (int eig : {1, -1}) {
    ExactMatrix m(6, 6);
    for (std::size_t c = 0; c < 6; ++c) {
      const auto [s, b] = hodge_star(two[c], 4);
      for (std::size_t r = 0; r < 6; ++r)
        if (two[r] == b) m(r, c) = s;
      m(c, c) -= eig;
    }
    rec.count(std::string("dim of the ") + (eig > 0 ? "self" : "anti-self") + "-dual 2-forms", 6 - rank(m), 3);
  }

  const Field C = Field::Complex;
  const CliffordElement pp = projector(true, 4, C);
  const std::array<CliffordElement, 4> basis = {
      pp,
      blade_of(4, C, 0b0011) + blade_of(4, C, 0b1100),
      blade_of(4, C, 0b0101) - blade_of(4, C, 0b1010),
      blade_of(4, C, 0b1001) + blade_of(4, C, 0b0110),
  };
  bool even = true, fixed = true, dual = true;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    even = even && basis[k].is_even();
    fixed = fixed && pp * basis[k] == basis[k];
    if (k == 0) continue;
    for (const auto& [b, c] : basis[k].terms()) {
      const auto [s, star] = hodge_star(b, 4);
      dual = dual && basis[k].coefficient(star) == c * GR(s);
    }
  }
  rec.check("basis elements are even", even);
  rec.check("basis elements are fixed by pi+_C", fixed);
  rec.check("2-form parts are self-dual", dual);
  rec.count("rank of the basis", element_span({basis.begin(), basis.end()}), 4);

  std::vector<CliffordElement> plus_part;
  for (Blade b : even_blades(4)) plus_part.push_back(pp * blade_of(4, C, b));
  rec.count("dim (Cl_0 (x) C)^+", element_span(plus_part), 4);
  plus_part.insert(plus_part.end(), basis.begin(), basis.end());
  rec.count("basis spans (Cl_0 (x) C)^+", element_span(plus_part), 4);
  return rec.take();
}

// Rational point on S^3 from (a, b, c) by inverse stereographic projection.
CliffordElement rational_unit_vector(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  std::array<Rational, 3> x;
  for (auto& v : x) {
    v = Rational(num(rng), den(rng));
    v.canonicalize();
  }
  const Rational s = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
  const Rational d = s + 1;
  CliffordElement v(4, Field::Real);
  for (int k = 0; k < 3; ++k) v.add(Blade{1} << k, GR(Rational(2 * x[k] / d)));
  v.add(Blade{8}, GR(Rational((s - 1) / d)));
  return v;
}

VerificationReport suite_spin4_adjoint(const VerifyOptions& options) {
  Recorder rec("spin4-adjoint");
  std::mt19937 rng(options.seed);
  std::uniform_int_distribution<int> pairs(1, 2);
  const CliffordElement one = CliffordElement::scalar(4, Field::Real, 1);
  std::vector<CliffordElement> samples;
  bool unit = true;
  for (std::size_t s = 0; s < options.spin_samples; ++s) {
    CliffordElement phi = one;
    const int count = 2 * pairs(rng);
    for (int k = 0; k < count; ++k) {
      const CliffordElement v = rational_unit_vector(rng);
      unit = unit && v * v == -one;
      phi = phi * v;
    }
    samples.push_back(phi);
  }
  rec.check("sampled vectors have <v,v> = 1", unit);

  rec.family("phi reversed(phi) = 1", samples.size(), [&](std::size_t k) -> std::string {
    return samples[k] * samples[k].reversed() == one ? std::string() : samples[k].to_string();
  });
  rec.family("phi is even", samples.size(), [&](std::size_t k) -> std::string {
    return samples[k].is_even() ? std::string() : samples[k].to_string();
  });

  std::vector<ExactMatrix> adjoints(samples.size());
  rec.family("Ad_phi maps R^4 into R^4", samples.size(), [&](std::size_t k) -> std::string {
    const CliffordElement inv = samples[k].reversed();
    ExactMatrix a(4, 4);
    for (std::size_t j = 0; j < 4; ++j) {
      const CliffordElement image = samples[k] * CliffordElement::basis_vector(4, Field::Real, j + 1) * inv;
      if (!(image.grade(1) == image)) return "sample " + std::to_string(k) + ": " + image.to_string();
      for (std::size_t i = 0; i < 4; ++i) a(i, j) = image.coefficient(Blade{1} << i);
    }
    adjoints[k] = a;
    return {};
  });
  rec.family("Ad_phi^T Ad_phi = I", adjoints.size(), [&](std::size_t k) -> std::string {
    return adjoints[k].transpose() * adjoints[k] == ExactMatrix::identity(4) ? std::string()
                                                                              : adjoints[k].to_string();
  });
  rec.family("det Ad_phi = 1", adjoints.size(), [&](std::size_t k) -> std::string {
    const GR d = determinant(adjoints[k]);
    return d == GR(1) ? std::string() : d.to_string();
  });
  return rec.take();
}

}  // namespace

ExactMatrix mu_map(const CliffordElement& x) {
  if (x.dimension() != 4 || x.field() != Field::Complex) {
    throw Error(ErrorKind::DimensionMismatch, "mu is defined on the complex algebra of dimension 4");
  }
  ExactMatrix m(4, 4);
  for (const auto& [b, c] : x.terms()) m = m + mu_blade(b).scaled(c);
  return m;
}

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.passed ? 0 : 1;
  return n;
}

std::string VerificationReport::to_string() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << suite << ": " << c.identity;
    if (!c.passed && !c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
  return out.str();
}

const std::vector<std::string>& verification_suites() {
  static const std::vector<std::string> names = {"cliffmult", "cliff3",   "cliffm1",      "cliffiso",
                                                 "endiso",    "extcliff", "spin4-adjoint"};
  return names;
}

VerificationReport verify_iso(const std::string& which, const VerifyOptions& options) {
  if (which == "cliffmult") return suite_cliffmult();
  if (which == "cliff3") return suite_cliff3();
  if (which == "cliffm1") return suite_cliffm1();
  if (which == "cliffiso") return suite_cliffiso();
  if (which == "endiso") return suite_endiso();
  if (which == "extcliff") return suite_extcliff();
  if (which == "spin4-adjoint") return suite_spin4_adjoint(options);
  throw Error(ErrorKind::InvalidInput, "unknown verification suite '" + which + "'");
}

void require_passed(const VerificationReport& report) {
  for (const auto& c : report.checks) {
    if (!c.passed) {
      throw Error(ErrorKind::VerificationFailed,
                  report.suite + ": " + c.identity + (c.detail.empty() ? "" : " (" + c.detail + ")"));
    }
  }
}

}  // namespace atk

#include "atk/twistedalex/twisted.hpp"

#include "atk/error.hpp"
#include "atk/grouppres/fox.hpp"
#include "atk/laurent/gcd.hpp"

namespace atk {

MonomialMatrix MonomialMatrix::identity(std::size_t m, std::size_t ring_rank) {
  MonomialMatrix out;
  out.perm_.resize(m);
  for (std::size_t x = 0; x < m; ++x) out.perm_[x] = x;
  out.exps_.assign(m, ExponentVector(ring_rank, 0));
  return out;
}

MonomialMatrix MonomialMatrix::generator(const TwistData& t, std::size_t gen) {
  if (gen >= t.alpha.images.size() || gen >= t.phi.generator_count()) {
    throw Error(ErrorKind::Incompatible, "generator outside the twist data");
  }
  const std::size_t s = t.phi.target_rank();
  ExponentVector e(s);
  for (std::size_t k = 0; k < s; ++k) e[k] = static_cast<int>(t.phi.values()(k, gen).get_si());
  MonomialMatrix out;
  out.perm_ = t.alpha.permutation(gen);
  out.exps_.assign(out.perm_.size(), e);
  return out;
}

MonomialMatrix MonomialMatrix::operator*(const MonomialMatrix& o) const {
  MonomialMatrix out;
  const std::size_t m = o.perm_.size();
  out.perm_.resize(m);
  out.exps_.resize(m);
  for (std::size_t x = 0; x < m; ++x) {
    const std::size_t y = o.perm_[x];
    out.perm_[x] = perm_[y];
    ExponentVector e = exps_[y];
    for (std::size_t k = 0; k < e.size(); ++k) e[k] += o.exps_[x][k];
    out.exps_[x] = std::move(e);
  }
  return out;
}

MonomialMatrix MonomialMatrix::inverse() const {
  MonomialMatrix out;
  const std::size_t m = perm_.size();
  out.perm_.resize(m);
  out.exps_.resize(m);
  for (std::size_t x = 0; x < m; ++x) {
    out.perm_[perm_[x]] = x;
    ExponentVector e = exps_[x];
    for (auto& v : e) v = -v;
    out.exps_[perm_[x]] = std::move(e);
  }
  return out;
}

PolyMatrix MonomialMatrix::to_poly() const {
  const std::size_t m = perm_.size();
  const std::size_t r = m == 0 ? 0 : exps_[0].size();
  PolyMatrix out(m, m, r);
  for (std::size_t x = 0; x < m; ++x) out(perm_[x], x) = LaurentPoly::monomial(r, exps_[x]);
  return out;
}

namespace {

struct GeneratorImages {
  std::vector<MonomialMatrix> pos;
  std::vector<MonomialMatrix> neg;

  explicit GeneratorImages(const TwistData& t) {
    for (std::size_t g = 0; g < t.alpha.images.size(); ++g) {
      pos.push_back(MonomialMatrix::generator(t, g));
      neg.push_back(pos.back().inverse());
    }
  }

  MonomialMatrix word(const Word& w, std::size_t m, std::size_t s) const {
    MonomialMatrix acc = MonomialMatrix::identity(m, s);
    for (const auto& l : w.letters) {
      if (l.gen >= pos.size()) throw Error(ErrorKind::Incompatible, "word outside the twist data");
      acc = acc * (l.exp > 0 ? pos[l.gen] : neg[l.gen]);
    }
    return acc;
  }
};

// Adds c * M into the (m x m) block of `out` at (row0, col0).
void add_block(PolyMatrix& out, std::size_t row0, std::size_t col0, const MonomialMatrix& mm,
               const Integer& c) {
  const std::size_t s = out.ring_rank();
  for (std::size_t x = 0; x < mm.size(); ++x) {
    LaurentPoly& entry = out(row0 + mm.permutation()[x], col0 + x);
    if (entry.rank() != s) entry = LaurentPoly(s);
    entry.add_term(mm.exponents()[x], c);
  }
}

void check_twist(const Presentation& p, const TwistData& t) {
  if (t.phi.generator_count() != p.generator_count()) {
    throw Error(ErrorKind::Precondition, "class does not match the presentation");
  }
  if (t.phi.is_zero()) throw Error(ErrorKind::Precondition, "class is zero; a nontrivial class is required");
  if (!t.alpha.group || !t.alpha.respects(p)) {
    throw Error(ErrorKind::InvalidQuotient, "quotient does not respect the relators");
  }
  if (!t.alpha.is_surjective()) throw Error(ErrorKind::InvalidQuotient, "quotient is not surjective");
}

PolyMatrix minus_identity(const MonomialMatrix& a, std::size_t s) {
  PolyMatrix m = a.to_poly();
  for (std::size_t i = 0; i < a.size(); ++i) m(i, i) -= LaurentPoly::constant(s, 1);
  return m;
}

}  // namespace

MonomialMatrix twist_word(const Word& w, const TwistData& t) {
  return GeneratorImages(t).word(w, t.alpha.order(), t.phi.target_rank());
}

PolyMatrix twist_ring_map(const GroupRingElement& x, const TwistData& t) {
  const std::size_t m = t.alpha.order();
  const std::size_t s = t.phi.target_rank();
  GeneratorImages images(t);
  PolyMatrix out(m, m, s);
  for (const auto& [w, c] : x.terms()) add_block(out, 0, 0, images.word(w, m, s), c);
  return out;
}

PolyMatrix twisted_jacobian(const Presentation& p, const TwistData& t) {
  const std::size_t m = t.alpha.order();
  const std::size_t s = t.phi.target_rank();
  const std::size_t n = p.generator_count();
  GeneratorImages images(t);
  const FoxJacobian fox = fox_jacobian(p);
  PolyMatrix out(p.relators().size() * m, n * m, s);
  for (std::size_t i = 0; i < fox.size(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [w, c] : fox[i][j].terms()) add_block(out, i * m, j * m, images.word(w, m, s), c);
  return out;
}

std::vector<std::size_t> valid_columns(const Presentation& p, const TwistData& t) {
  check_twist(p, t);
  const std::size_t s = t.phi.target_rank();
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < p.generator_count(); ++j)
    if (!determinant(minus_identity(MonomialMatrix::generator(t, j), s)).is_zero()) out.push_back(j);
  return out;
}

TwistedPoly twisted_alexander(const Presentation& p, const TwistData& t,
                              const TwistOptions& options) {
  check_twist(p, t);
  const std::size_t m = t.alpha.order();
  const std::size_t s = t.phi.target_rank();
  const std::size_t n = p.generator_count();

  std::optional<std::size_t> column;
  LaurentPoly column_det(s);
  auto try_column = [&](std::size_t j) {
    LaurentPoly d = determinant(minus_identity(MonomialMatrix::generator(t, j), s));
    if (d.is_zero()) return false;
    column = j;
    column_det = std::move(d);
    return true;
  };
  if (options.column) {
    if (*options.column >= n || !try_column(*options.column)) {
      throw Error(ErrorKind::NoValidColumn,
                  "generator " + std::to_string(*options.column) + " is not a valid column");
    }
  } else {
    for (std::size_t j = 0; j < n && !column; ++j) try_column(j);
    if (!column) {
      throw Error(ErrorKind::NoValidColumn, "no generator g has det(twist(g) - I) != 0");
    }
  }

  const PolyMatrix jac = twisted_jacobian(p, t);
  std::vector<std::size_t> all_rows(jac.rows()), kept_cols;
  for (std::size_t i = 0; i < jac.rows(); ++i) all_rows[i] = i;
  for (std::size_t c = 0; c < jac.cols(); ++c)
    if (c / m != *column) kept_cols.push_back(c);
  const PolyMatrix reduced = jac.submatrix(all_rows, kept_cols);

  PolyMatrix d1(n * m, m, s);
  for (std::size_t g = 0; g < n; ++g) {
    const PolyMatrix block = minus_identity(MonomialMatrix::generator(t, g), s);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) d1(g * m + i, j) = block(i, j);
  }

  TwistedPoly out;
  out.raw_minor_gcd = options.parallel ? presentation_order(reduced) : presentation_order_serial(reduced);
  out.h0_order = options.parallel ? presentation_order(d1) : presentation_order_serial(d1);
  out.column_determinant = column_det;
  out.deleted_column = *column;
  out.ring_rank = s;
  auto quotient = divide_exact(out.raw_minor_gcd.representative() * out.h0_order.representative(),
                               column_det);
  if (quotient) {
    out.value = UnitClass(*quotient);
  } else {
    out.value = out.raw_minor_gcd;
    out.corrected = false;
  }
  return out;
}

TwistedPoly multivariable_alexander(const Presentation& p, const TwistOptions& options) {
  const Abelianization ab = abelianize(p);
  if (ab.b1() == 0) throw Error(ErrorKind::Precondition, "first Betti number is zero");
  if (ab.b1() > kMaxGcdRank) {
    throw Error(ErrorKind::UnsupportedRank,
                "first Betti number " + std::to_string(ab.b1()) + " exceeds 3");
  }
  TwistData t{identity_class(p, ab), trivial_quotient(p)};
  return twisted_alexander(p, t, options);
}

}  // namespace atk

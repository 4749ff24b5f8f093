#include "atk/laurent/gcd.hpp"

#include <map>

#include "atk/error.hpp"

namespace atk {

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.rank() != b.rank()) throw Error(ErrorKind::RankMismatch, "divide_exact ring ranks");
  const std::size_t r = a.rank();
  if (b.is_zero()) {
    if (a.is_zero()) return a;
    return std::nullopt;
  }
  if (a.is_zero()) return a;

  if (b.term_count() == 1) {
    const auto& [eb, cb] = *b.terms().begin();
    LaurentPoly q(r);
    ExponentVector e(r);
    for (const auto& [ea, ca] : a.terms()) {
      if (!divides(cb, ca)) return std::nullopt;
      for (std::size_t i = 0; i < r; ++i) e[i] = ea[i] - eb[i];
      q.add_term(e, ca / cb);
    }
    return q;
  }

  // Quotient support must lie in the box [min_a - min_b, max_a - max_b].
  const ExponentVector amin = a.min_exponents(), amax = a.max_exponents();
  const ExponentVector bmin = b.min_exponents(), bmax = b.max_exponents();
  ExponentVector lo(r), hi(r);
  for (std::size_t i = 0; i < r; ++i) {
    lo[i] = amin[i] - bmin[i];
    hi[i] = amax[i] - bmax[i];
    if (lo[i] > hi[i]) return std::nullopt;
  }

  const auto& [eb, cb] = b.leading_term();
  LaurentPoly rem = a;
  LaurentPoly q(r);
  ExponentVector e(r), f(r);
  while (!rem.is_zero()) {
    const auto& [er, cr] = rem.leading_term();
    for (std::size_t i = 0; i < r; ++i) {
      e[i] = er[i] - eb[i];
      if (e[i] < lo[i] || e[i] > hi[i]) return std::nullopt;
    }
    if (!divides(cb, cr)) return std::nullopt;
    const Integer c = cr / cb;
    q.add_term(e, c);
    for (const auto& [bt, bc] : b.terms()) {
      for (std::size_t i = 0; i < r; ++i) f[i] = bt[i] + e[i];
      rem.add_term(f, -c * bc);
    }
  }
  return q;
}

namespace {

// Polynomials below have nonnegative exponents and involve only variables
// with index < k.

int degree_in(const LaurentPoly& p, std::size_t v) {
  int d = 0;
  for (const auto& [e, c] : p.terms()) d = std::max(d, e[v]);
  return d;
}

std::map<int, LaurentPoly> coefficients_in(const LaurentPoly& p, std::size_t v) {
  std::map<int, LaurentPoly> out;
  for (const auto& [e, c] : p.terms()) {
    ExponentVector f = e;
    f[v] = 0;
    auto [it, inserted] = out.try_emplace(e[v], p.rank());
    it->second.add_term(f, c);
  }
  return out;
}

LaurentPoly leading_coefficient_in(const LaurentPoly& p, std::size_t v, int d) {
  LaurentPoly out(p.rank());
  for (const auto& [e, c] : p.terms()) {
    if (e[v] != d) continue;
    ExponentVector f = e;
    f[v] = 0;
    out.add_term(f, c);
  }
  return out;
}

LaurentPoly exact_or_throw(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw Error(ErrorKind::VerificationFailed, "gcd step produced an inexact quotient");
  return *std::move(q);
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b, std::size_t k);

LaurentPoly content_in(const LaurentPoly& p, std::size_t v) {
  LaurentPoly g(p.rank());
  for (const auto& [d, c] : coefficients_in(p, v)) {
    g = poly_gcd(g, c, v);
    if (g.is_one()) break;
  }
  return g;
}

LaurentPoly primitive_part(const LaurentPoly& p, std::size_t v) {
  if (p.is_zero()) return p;
  return exact_or_throw(p, content_in(p, v));
}

// a * lc(b)^(deg a - deg b + 1) mod b, computed one step at a time.
LaurentPoly pseudo_remainder(const LaurentPoly& a, const LaurentPoly& b, std::size_t v) {
  const int db = degree_in(b, v);
  const LaurentPoly lcb = leading_coefficient_in(b, v, db);
  LaurentPoly r = a;
  while (!r.is_zero()) {
    const int dr = degree_in(r, v);
    if (dr < db) break;
    LaurentPoly lcr = leading_coefficient_in(r, v, dr);
    ExponentVector shift(r.rank(), 0);
    shift[v] = dr - db;
    r = r * lcb - lcr * b.shifted(shift);
  }
  return r;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b, std::size_t k) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (k == 0) {
    return LaurentPoly::constant(a.rank(), gcd(a.leading_term().second, b.leading_term().second));
  }
  const std::size_t v = k - 1;
  const LaurentPoly ca = content_in(a, v);
  const LaurentPoly cb = content_in(b, v);
  const LaurentPoly c = poly_gcd(ca, cb, v);

  LaurentPoly p = exact_or_throw(a, ca);
  LaurentPoly q = exact_or_throw(b, cb);
  if (degree_in(p, v) < degree_in(q, v)) std::swap(p, q);
  while (!q.is_zero()) {
    if (degree_in(q, v) == 0) {
      // q is primitive and constant in v, hence a unit
      p = LaurentPoly::constant(a.rank(), 1);
      break;
    }
    LaurentPoly r = pseudo_remainder(p, q, v);
    p = std::move(q);
    q = primitive_part(r, v);
  }
  return c * primitive_part(p, v);
}

}  // namespace

UnitClass lp_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.rank() != b.rank()) {
    throw Error(ErrorKind::RankMismatch, "gcd of polynomials over rings of rank " +
                                             std::to_string(a.rank()) + " and " +
                                             std::to_string(b.rank()));
  }
  if (a.rank() > kMaxGcdRank) {
    throw Error(ErrorKind::UnsupportedRank,
                "gcd supports rank <= 3, got " + std::to_string(a.rank()));
  }
  if (a.is_zero()) return UnitClass(b);
  if (b.is_zero()) return UnitClass(a);
  const LaurentPoly na = normalize(a);
  const LaurentPoly nb = normalize(b);
  if (na.is_one() || nb.is_one()) return UnitClass(LaurentPoly::constant(a.rank(), 1));
  UnitClass g(poly_gcd(na, nb, a.rank()));
  if (!divide_exact(a, g.representative()) || !divide_exact(b, g.representative())) {
    throw Error(ErrorKind::VerificationFailed, "gcd does not divide its inputs");
  }
  return g;
}

}  // namespace atk

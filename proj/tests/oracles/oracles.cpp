#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "atk/laurent/gcd.hpp"

namespace atk::oracle {

namespace {

void trim(DensePoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// All k-element subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

Rational rational_det(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

}  // namespace

DensePoly poly_mul(const DensePoly& a, const DensePoly& b) {
  if (a.empty() || b.empty()) return {};
  DensePoly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

DensePoly poly_add(const DensePoly& a, const DensePoly& b) {
  DensePoly out(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

LaurentPoly to_laurent(const DensePoly& p) {
  LaurentPoly out(1);
  for (std::size_t i = 0; i < p.size(); ++i) out.add_term({static_cast<int>(i)}, p[i]);
  return out;
}

DensePoly leibniz_determinant(const std::vector<std::vector<DensePoly>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  DensePoly total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    DensePoly term{Integer(inversions % 2 == 0 ? 1 : -1)};
    for (std::size_t i = 0; i < n; ++i) term = poly_mul(term, m[i][perm[i]]);
    total = poly_add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

LaurentPoly seifert_alexander(const IntMatrix& v) {
  const std::size_t n = v.rows();
  std::vector<std::vector<DensePoly>> m(n, std::vector<DensePoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      DensePoly e{v(i, j), Integer(-v(j, i))};
      trim(e);
      m[i][j] = e;
    }
  return to_laurent(leibniz_determinant(m));
}

LaurentPoly mapping_torus_polynomial(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<DensePoly>> m(n, std::vector<DensePoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      DensePoly e{Integer(i == j ? -1 : 0), a(i, j)};
      trim(e);
      m[i][j] = e;
    }
  return to_laurent(leibniz_determinant(m));
}

std::size_t rational_rank(const IntMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

std::vector<Integer> invariant_factors_by_minors(const IntMatrix& m) {
  std::vector<Integer> out;
  Integer previous = 1;
  const std::size_t kmax = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= kmax; ++k) {
    Integer d = 0;
    for (const auto& rows : subsets(m.rows(), k)) {
      for (const auto& cols : subsets(m.cols(), k)) {
        std::vector<std::vector<Rational>> sub(k, std::vector<Rational>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(rows[i], cols[j]);
        const Rational det = rational_det(sub);
        d = gcd(d, Integer(det.get_num()));
      }
    }
    if (d == 0) break;
    const Integer factor = d / previous;
    if (factor != 1) out.push_back(factor);
    previous = d;
  }
  return out;
}

std::vector<HomologyGroup> brute_homology(const ChainComplex& complex) {
  if (complex.is_empty()) return {HomologyGroup{}};
  const std::size_t top = complex.top_dimension();
  std::vector<HomologyGroup> out;
  for (std::size_t k = 0; k <= top; ++k) {
    const std::size_t rank_out = k == 0 ? 0 : rational_rank(complex.boundary(k));
    const std::size_t rank_in = k == top ? 0 : rational_rank(complex.boundary(k + 1));
    HomologyGroup h;
    h.free_rank = complex.cells(k) - rank_out - rank_in;
    if (k < top) h.torsion = invariant_factors_by_minors(complex.boundary(k + 1));
    out.push_back(h);
  }
  return out;
}

std::vector<std::vector<std::size_t>> brute_epimorphisms(const Presentation& p, const FiniteGroup& g) {
  const std::size_t n = p.generator_count();
  const std::size_t m = g.order();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> tuple(n, 0);
  while (true) {
    bool ok = true;
    for (const Word& r : p.relators()) {
      std::size_t x = 0;
      for (const Letter& l : r.letters) {
        const std::size_t img = l.exp > 0 ? tuple[l.gen] : g.inverse(tuple[l.gen]);
        x = g.multiply(x, img);
      }
      if (x != 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      // closure of the images under multiplication
      std::set<std::size_t> reached{0};
      bool grew = true;
      while (grew) {
        grew = false;
        std::vector<std::size_t> current(reached.begin(), reached.end());
        for (std::size_t x : current)
          for (std::size_t gi : tuple)
            if (reached.insert(g.multiply(x, gi)).second) grew = true;
      }
      if (reached.size() == m) out.push_back(tuple);
    }
    std::size_t i = n;
    while (i > 0 && tuple[i - 1] == m - 1) tuple[--i] = 0;
    if (i == 0) break;
    ++tuple[i - 1];
  }
  std::sort(out.begin(), out.end());
  return out;
}

LaurentPoly laplace_determinant(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return LaurentPoly::constant(m.ring_rank(), 1);
  if (n == 1) return m(0, 0);
  LaurentPoly total(m.ring_rank());
  std::vector<std::size_t> rest_rows;
  for (std::size_t i = 1; i < n; ++i) rest_rows.push_back(i);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < n; ++c)
      if (c != j) cols.push_back(c);
    const LaurentPoly minor = laplace_determinant(m.submatrix(rest_rows, cols));
    const LaurentPoly term = m(0, j) * minor;
    total = j % 2 == 0 ? total + term : total - term;
  }
  return total;
}

UnitClass brute_maximal_minor_gcd(const PolyMatrix& m) {
  if (m.rows() < m.cols()) return UnitClass(LaurentPoly(m.ring_rank()));
  std::vector<std::size_t> all_cols(m.cols());
  std::iota(all_cols.begin(), all_cols.end(), 0);
  UnitClass g(LaurentPoly(m.ring_rank()));
  for (const auto& rows : subsets(m.rows(), m.cols())) {
    g = lp_gcd(g.representative(), laplace_determinant(m.submatrix(rows, all_cols)));
  }
  return g;
}

}  // namespace atk::oracle

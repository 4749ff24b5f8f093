#include "atk/grouppres/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <regex>

#include "atk/error.hpp"

namespace atk {

FiniteGroup::FiniteGroup(std::size_t order, std::vector<std::size_t> table, std::string label)
    : order_(order), table_(std::move(table)), inverse_(order), label_(std::move(label)) {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b)
      if (multiply(a, b) == 0) inverse_[a] = b;
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup(1, {0}, "trivial"); }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "cyclic group of order 0");
  if (n == 1) return trivial();
  std::vector<std::size_t> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  return FiniteGroup(n, std::move(t), "Z/" + std::to_string(n));
}

FiniteGroup FiniteGroup::dihedral(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "dihedral group needs n >= 2");
  // element r^k s^e is stored as k + n e
  const std::size_t m = 2 * n;
  std::vector<std::size_t> t(m * m);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      const std::size_t a = x % n, e = x / n, b = y % n, f = y / n;
      const std::size_t k = e == 0 ? (a + b) % n : (a + n - b) % n;
      t[x * m + y] = k + n * ((e + f) % 2);
    }
  }
  return FiniteGroup(m, std::move(t), "D_" + std::to_string(n));
}

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
  if (n == 0 || n > 4) throw Error(ErrorKind::InvalidInput, "symmetric groups supported for 1 <= n <= 4");
  if (n == 1) return trivial();
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const std::size_t m = perms.size();
  std::vector<std::size_t> t(m * m);
  std::vector<std::size_t> comp(n);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t x = 0; x < n; ++x) comp[x] = perms[a][perms[b][x]];
      t[a * m + b] = static_cast<std::size_t>(
          std::find(perms.begin(), perms.end(), comp) - perms.begin());
    }
  }
  return FiniteGroup(m, std::move(t), "S_" + std::to_string(n));
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<std::size_t>> table, std::string label) {
  const std::size_t m = table.size();
  if (m == 0) throw Error(ErrorKind::InvalidInput, "empty multiplication table");
  std::vector<std::size_t> t;
  t.reserve(m * m);
  for (const auto& row : table) {
    if (row.size() != m) throw Error(ErrorKind::InvalidInput, "multiplication table is not square");
    for (auto v : row) {
      if (v >= m) throw Error(ErrorKind::InvalidInput, "table entry outside the group");
      t.push_back(v);
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    if (t[a] != a || t[a * m] != a) {
      throw Error(ErrorKind::InvalidInput, "element 0 is not the identity");
    }
    std::vector<bool> row(m, false), col(m, false);
    for (std::size_t b = 0; b < m; ++b) {
      row[t[a * m + b]] = true;
      col[t[b * m + a]] = true;
    }
    if (std::find(row.begin(), row.end(), false) != row.end() ||
        std::find(col.begin(), col.end(), false) != col.end()) {
      throw Error(ErrorKind::InvalidInput, "table is not a Latin square");
    }
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c)
        if (t[t[a * m + b] * m + c] != t[a * m + t[b * m + c]]) {
          throw Error(ErrorKind::InvalidInput, "table is not associative");
        }
  return FiniteGroup(m, std::move(t), std::move(label));
}

std::vector<std::size_t> FiniteGroup::left_regular(std::size_t g) const {
  std::vector<std::size_t> p(order_);
  for (std::size_t x = 0; x < order_; ++x) p[x] = multiply(g, x);
  return p;
}

std::vector<std::size_t> FiniteGroup::generated_subgroup(const std::vector<std::size_t>& gens) const {
  std::vector<bool> in(order_, false);
  std::vector<std::size_t> frontier{0};
  in[0] = true;
  while (!frontier.empty()) {
    std::size_t x = frontier.back();
    frontier.pop_back();
    for (auto g : gens) {
      std::size_t y = multiply(x, g);
      if (!in[y]) {
        in[y] = true;
        frontier.push_back(y);
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < order_; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

std::vector<FiniteGroup> group_catalogue(std::size_t max_order) {
  std::vector<FiniteGroup> out;
  if (max_order >= 1) out.push_back(FiniteGroup::trivial());
  for (std::size_t m = 2; m <= max_order; ++m) {
    out.push_back(FiniteGroup::cyclic(m));
    if (m % 2 == 0 && m >= 4) out.push_back(FiniteGroup::dihedral(m / 2));
    if (m == 24) out.push_back(FiniteGroup::symmetric(4));
  }
  std::stable_sort(out.begin(), out.end(), [](const FiniteGroup& a, const FiniteGroup& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.label() < b.label();
  });
  return out;
}

FiniteGroup group_from_label(const std::string& label) {
  static const std::regex pattern(R"(^(Z/|D_|S_)([0-9]+)$)");
  if (label == "trivial" || label == "1") return FiniteGroup::trivial();
  std::smatch m;
  if (!std::regex_match(label, m, pattern)) {
    throw Error(ErrorKind::ParseError, "unknown group '" + label + "'");
  }
  const std::size_t n = std::stoul(m[2].str());
  if (m[1] == "Z/") return FiniteGroup::cyclic(n);
  if (m[1] == "D_") return FiniteGroup::dihedral(n);
  return FiniteGroup::symmetric(n);
}

std::size_t FiniteQuotient::evaluate(const Word& w) const {
  std::size_t x = 0;
  for (const auto& l : w.letters) {
    if (l.gen >= images.size()) throw Error(ErrorKind::Incompatible, "word outside the quotient domain");
    const std::size_t g = images[l.gen];
    x = group->multiply(x, l.exp > 0 ? g : group->inverse(g));
  }
  return x;
}

std::vector<std::size_t> FiniteQuotient::permutation(std::size_t generator) const {
  return group->left_regular(images.at(generator));
}

bool FiniteQuotient::respects(const Presentation& p) const {
  if (images.size() != p.generator_count()) return false;
  return std::all_of(p.relators().begin(), p.relators().end(),
                     [&](const Word& r) { return evaluate(r) == 0; });
}

bool FiniteQuotient::is_surjective() const {
  return group->generated_subgroup(images).size() == group->order();
}

FiniteQuotient trivial_quotient(const Presentation& p) {
  return FiniteQuotient{std::make_shared<const FiniteGroup>(FiniteGroup::trivial()),
                        std::vector<std::size_t>(p.generator_count(), 0)};
}

}  // namespace atk

#include "atk/grouppres/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "atk/error.hpp"
#include "atk/exactalg/smith.hpp"

namespace atk {
namespace {

bool valid_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators)
    : generators_(std::move(generators)), relators_(std::move(relators)) {
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (!valid_name(g)) throw Error(ErrorKind::InvalidInput, "bad generator name '" + g + "'");
    if (!seen.insert(g).second) {
      throw Error(ErrorKind::InvalidInput, "duplicate generator '" + g + "'");
    }
  }
  for (const auto& r : relators_) {
    for (const auto& l : r.letters) {
      if (l.gen >= generators_.size() || (l.exp != 1 && l.exp != -1)) {
        throw Error(ErrorKind::InvalidInput, "relator letter outside the generator list");
      }
    }
  }
}

Presentation Presentation::parse(std::vector<std::string> generators,
                                 const std::vector<std::string>& relators) {
  std::vector<Word> words;
  words.reserve(relators.size());
  for (const auto& r : relators) words.push_back(parse_word(r, generators));
  return Presentation(std::move(generators), std::move(words));
}

std::size_t Presentation::generator_index(const std::string& name) const {
  auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) throw Error(ErrorKind::InvalidInput, "no generator '" + name + "'");
  return static_cast<std::size_t>(it - generators_.begin());
}

IntMatrix Presentation::exponent_matrix() const {
  IntMatrix m(relators_.size(), generators_.size());
  for (std::size_t i = 0; i < relators_.size(); ++i)
    for (const auto& l : relators_[i].letters) m(i, l.gen) += l.exp;
  return m;
}

Abelianization abelianize(const Presentation& p) {
  const std::size_t n = p.generator_count();
  SmithDecomposition snf = smith_normal_form(p.exponent_matrix());
  const auto diag = snf.diagonal();

  Abelianization ab;
  for (std::size_t c = 0; c < n; ++c) {
    const bool has_divisor = c < diag.size() && diag[c] != 0;
    if (!has_divisor) {
      ab.free_columns.push_back(c);
    } else if (diag[c] != 1) {
      ab.group.torsion.push_back(diag[c]);
    }
  }
  ab.group.free_rank = ab.free_columns.size();
  ab.generator_images = IntMatrix(ab.free_columns.size(), n);
  for (std::size_t k = 0; k < ab.free_columns.size(); ++k)
    for (std::size_t g = 0; g < n; ++g) ab.generator_images(k, g) = snf.V(g, ab.free_columns[k]);
  ab.V_inverse = inverse_unimodular(snf.V);
  ab.V = std::move(snf.V);
  return ab;
}

ClassMap::ClassMap(const Presentation& p, IntMatrix values) : values_(std::move(values)) {
  if (values_.cols() != p.generator_count()) {
    throw Error(ErrorKind::InvalidInput, "class has " + std::to_string(values_.cols()) +
                                             " values for " +
                                             std::to_string(p.generator_count()) + " generators");
  }
  if (values_.rows() == 0) throw Error(ErrorKind::InvalidInput, "class with empty target");
  const IntMatrix killed = p.exponent_matrix() * values_.transpose();
  if (!killed.is_zero()) {
    throw Error(ErrorKind::InvalidInput, "class does not vanish on every relator");
  }
}

namespace {

IntMatrix row_matrix(const std::vector<long>& v) {
  IntMatrix m(1, v.size());
  for (std::size_t j = 0; j < v.size(); ++j) m(0, j) = v[j];
  return m;
}

}  // namespace

ClassMap::ClassMap(const Presentation& p, const std::vector<long>& values)
    : ClassMap(p, row_matrix(values)) {}

std::vector<Integer> ClassMap::evaluate(const Word& w) const {
  std::vector<Integer> out(values_.rows(), 0);
  for (const auto& l : w.letters) {
    if (l.gen >= values_.cols()) throw Error(ErrorKind::Incompatible, "word outside the class domain");
    for (std::size_t k = 0; k < values_.rows(); ++k) out[k] += l.exp * values_(k, l.gen);
  }
  return out;
}

ClassMap identity_class(const Presentation& p, const Abelianization& ab) {
  if (ab.b1() == 0) throw Error(ErrorKind::Precondition, "first Betti number is zero");
  return ClassMap(p, ab.generator_images);
}

IntMatrix class_on_homology(const ClassMap& phi, const Abelianization& ab) {
  const IntMatrix& v = phi.values();
  if (v.cols() != ab.V_inverse.cols()) {
    throw Error(ErrorKind::Incompatible, "class and abelianization disagree on generators");
  }
  const IntMatrix pulled = ab.V_inverse * v.transpose();  // n x s
  IntMatrix out(v.rows(), ab.b1());
  for (std::size_t k = 0; k < v.rows(); ++k)
    for (std::size_t c = 0; c < ab.b1(); ++c) out(k, c) = pulled(ab.free_columns[c], k);
  return out;
}

}  // namespace atk

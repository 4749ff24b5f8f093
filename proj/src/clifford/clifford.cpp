#include "atk/clifford/clifford.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "atk/error.hpp"

namespace atk {

std::pair<int, Blade> blade_product(Blade a, Blade b) {
  int swaps = 0;
  for (Blade rest = b; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    swaps += std::popcount(a >> (j + 1));
  }
  swaps += std::popcount(a & b);  // each e_i e_i contributes -1
  return {swaps % 2 == 0 ? 1 : -1, a ^ b};
}

int blade_grade(Blade b) { return std::popcount(b); }

std::string blade_name(Blade b) {
  if (b == 0) return "1";
  std::string s;
  for (Blade rest = b; rest != 0; rest &= rest - 1) s += "e" + std::to_string(std::countr_zero(rest) + 1);
  return s;
}

CliffordElement::CliffordElement(std::size_t n, Field field) : n_(n), field_(field) {
  if (n > kMaxCliffordDimension) {
    throw Error(ErrorKind::DimensionMismatch, "Clifford dimension above " +
                                                  std::to_string(kMaxCliffordDimension));
  }
}

CliffordElement CliffordElement::scalar(std::size_t n, Field field, const GaussianRational& c) {
  return blade(n, field, 0, c);
}

CliffordElement CliffordElement::blade(std::size_t n, Field field, Blade b,
                                       const GaussianRational& c) {
  CliffordElement x(n, field);
  if (n < 32 && (b >> n) != 0) throw Error(ErrorKind::DimensionMismatch, "blade outside dimension");
  x.add(b, c);
  return x;
}

CliffordElement CliffordElement::basis_vector(std::size_t n, Field field, std::size_t i) {
  if (i == 0 || i > n) throw Error(ErrorKind::DimensionMismatch, "basis index out of range");
  return blade(n, field, Blade{1} << (i - 1));
}

GaussianRational CliffordElement::coefficient(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void CliffordElement::add(Blade b, const GaussianRational& c) {
  if (c.is_zero()) return;
  if (field_ == Field::Real && !c.is_real()) {
    throw Error(ErrorKind::InvalidInput, "complex coefficient in a real Clifford algebra");
  }
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void CliffordElement::check(const CliffordElement& o) const {
  if (n_ != o.n_ || field_ != o.field_) {
    throw Error(ErrorKind::DimensionMismatch, "Clifford elements of different algebras");
  }
}

CliffordElement CliffordElement::operator+(const CliffordElement& o) const {
  check(o);
  CliffordElement r = *this;
  for (const auto& [b, c] : o.terms_) r.add(b, c);
  return r;
}

CliffordElement CliffordElement::operator-(const CliffordElement& o) const {
  check(o);
  CliffordElement r = *this;
  for (const auto& [b, c] : o.terms_) r.add(b, -c);
  return r;
}

CliffordElement CliffordElement::operator*(const CliffordElement& o) const {
  check(o);
  CliffordElement r(n_, field_);
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) {
      const auto [sign, blade] = blade_product(a, b);
      GaussianRational c = ca * cb;
      r.add(blade, sign > 0 ? c : -c);
    }
  }
  return r;
}

CliffordElement CliffordElement::operator-() const { return scaled(-1); }

CliffordElement CliffordElement::scaled(const GaussianRational& c) const {
  CliffordElement r(n_, field_);
  for (const auto& [b, v] : terms_) r.add(b, v * c);
  return r;
}

bool CliffordElement::operator==(const CliffordElement& o) const {
  return n_ == o.n_ && field_ == o.field_ && terms_ == o.terms_;
}

CliffordElement CliffordElement::grade(int k) const {
  CliffordElement r(n_, field_);
  for (const auto& [b, c] : terms_)
    if (blade_grade(b) == k) r.add(b, c);
  return r;
}

bool CliffordElement::is_even() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return blade_grade(t.first) % 2 == 0; });
}

bool CliffordElement::is_odd() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return blade_grade(t.first) % 2 == 1; });
}

CliffordElement CliffordElement::grade_involution() const {
  CliffordElement r(n_, field_);
  for (const auto& [b, c] : terms_) r.add(b, blade_grade(b) % 2 == 0 ? c : -c);
  return r;
}

CliffordElement CliffordElement::reversed() const {
  CliffordElement r(n_, field_);
  for (const auto& [b, c] : terms_) {
    const int k = blade_grade(b);
    r.add(b, (k * (k - 1) / 2) % 2 == 0 ? c : -c);
  }
  return r;
}

std::string CliffordElement::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<Blade> order;
  for (const auto& [b, c] : terms_) order.push_back(b);
  std::sort(order.begin(), order.end(), [](Blade x, Blade y) {
    if (blade_grade(x) != blade_grade(y)) return blade_grade(x) < blade_grade(y);
    // lexicographic on index lists: lowest differing bit present in x first
    const Blade diff = x ^ y;
    const Blade low = diff & (~diff + 1);
    return (x & low) != 0;
  });
  std::string s;
  for (Blade b : order) {
    const GaussianRational& c = terms_.at(b);
    std::string coef;
    bool negative = false;
    if (c.is_real()) {
      negative = c.re < 0;
      Rational a = negative ? Rational(-c.re) : c.re;
      coef = a.get_str();
    } else {
      coef = "(" + c.to_string() + ")";
    }
    if (!s.empty() || negative) s += negative ? "-" : "+";
    if (b == 0) {
      s += coef;
    } else if (coef == "1") {
      s += blade_name(b);
    } else {
      s += coef + "*" + blade_name(b);
    }
  }
  return s;
}

CliffordElement clifford_product(const CliffordElement& x, const CliffordElement& y) {
  return x * y;
}

CliffordElement volume_element(std::size_t n, Field field) {
  if (n == 0) throw Error(ErrorKind::DimensionMismatch, "volume element needs n >= 1");
  const Blade all = n >= 32 ? ~Blade{0} : (Blade{1} << n) - 1;
  GaussianRational c = 1;
  if (field == Field::Complex) {
    const std::size_t power = (n * (n - 1) / 2) % 4;
    for (std::size_t k = 0; k < power; ++k) c = c * GaussianRational::i();
  }
  return CliffordElement::blade(n, field, all, c);
}

CliffordElement projector(bool plus, std::size_t n, Field field) {
  const CliffordElement omega = volume_element(n, field);
  const CliffordElement one = CliffordElement::scalar(n, field, 1);
  if (!(omega * omega == one)) {
    throw Error(ErrorKind::NotSplitting, "volume element squares to " + (omega * omega).to_string() +
                                             " in dimension " + std::to_string(n));
  }
  const GaussianRational half = GaussianRational::fraction(1, 2);
  return (plus ? one + omega : one - omega).scaled(half);
}

std::pair<int, Blade> hodge_star(Blade b, std::size_t n) {
  const Blade all = (Blade{1} << n) - 1;
  if ((b & ~all) != 0) throw Error(ErrorKind::DimensionMismatch, "blade outside dimension");
  const Blade complement = all & ~b;
  // inversions of the sequence (I, I^c): pairs i in I, j in I^c with i > j
  int inversions = 0;
  for (Blade rest = complement; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    inversions += std::popcount(b >> (j + 1));
  }
  return {inversions % 2 == 0 ? 1 : -1, complement};
}

}  // namespace atk

#include "atk/laurent/laurent_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "atk/error.hpp"

namespace atk {

long Degree::value() const {
  if (!finite_) throw Error(ErrorKind::Precondition, "degree is minus infinity");
  return value_;
}

Degree Degree::operator+(const Degree& o) const {
  if (!finite_ || !o.finite_) return Degree();
  return Degree(value_ + o.value_);
}

std::strong_ordering Degree::operator<=>(const Degree& o) const {
  if (!finite_ || !o.finite_) return finite_ <=> o.finite_;
  return value_ <=> o.value_;
}

std::string Degree::to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

LaurentPoly LaurentPoly::constant(std::size_t rank, const Integer& c) {
  return monomial(rank, ExponentVector(rank, 0), c);
}

LaurentPoly LaurentPoly::monomial(std::size_t rank, ExponentVector e, const Integer& c) {
  if (e.size() != rank) throw Error(ErrorKind::RankMismatch, "exponent vector length");
  LaurentPoly p(rank);
  if (c != 0) p.terms_.emplace(std::move(e), c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t rank, std::size_t i) {
  ExponentVector e(rank, 0);
  e.at(i) = 1;
  return monomial(rank, std::move(e));
}

Integer LaurentPoly::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

bool LaurentPoly::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [e, c] = *terms_.begin();
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; }) && abs_value(c) == 1;
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && abs_value(terms_.begin()->second) == 1;
}

void LaurentPoly::add_term(const ExponentVector& e, const Integer& c) {
  if (e.size() != rank_) throw Error(ErrorKind::RankMismatch, "exponent vector length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_rank(const LaurentPoly& o) const {
  if (rank_ != o.rank_) {
    throw Error(ErrorKind::RankMismatch, "ring ranks " + std::to_string(rank_) + " and " +
                                             std::to_string(o.rank_));
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_rank(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_rank(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_rank(o);
  LaurentPoly r(rank_);
  if (is_zero() || o.is_zero()) return r;
  ExponentVector e(rank_);
  Integer prod;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < rank_; ++i) e[i] = ea[i] + eb[i];
      prod = ca * cb;
      r.add_term(e, prod);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::scaled(const Integer& c) const {
  LaurentPoly r(rank_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

LaurentPoly LaurentPoly::shifted(const ExponentVector& shift) const {
  if (shift.size() != rank_) throw Error(ErrorKind::RankMismatch, "shift length");
  LaurentPoly r(rank_);
  for (const auto& [e, c] : terms_) {
    ExponentVector f = e;
    for (std::size_t i = 0; i < rank_; ++i) f[i] += shift[i];
    r.terms_.emplace_hint(r.terms_.end(), std::move(f), c);
  }
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result = constant(rank_, 1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

ExponentVector LaurentPoly::min_exponents() const {
  if (terms_.empty()) return ExponentVector(rank_, 0);
  ExponentVector m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < rank_; ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

ExponentVector LaurentPoly::max_exponents() const {
  if (terms_.empty()) return ExponentVector(rank_, 0);
  ExponentVector m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < rank_; ++i) m[i] = std::max(m[i], e[i]);
  return m;
}

const LaurentPoly::TermMap::value_type& LaurentPoly::leading_term() const {
  if (terms_.empty()) throw Error(ErrorKind::Precondition, "zero polynomial has no leading term");
  return *terms_.rbegin();
}

Integer LaurentPoly::content() const {
  Integer g = 0;
  for (const auto& [e, c] : terms_) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

namespace {

std::string variable_name(std::size_t rank, std::size_t i) {
  return rank == 1 ? std::string("t") : "t" + std::to_string(i + 1);
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < rank_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += variable_name(rank_, i);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (c < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    Integer a = abs_value(c);
    if (mono.empty()) {
      os << a.get_str();
    } else if (a == 1) {
      os << mono;
    } else {
      os << a.get_str() << '*' << mono;
    }
    first = false;
  }
  return os.str();
}

namespace {

// Recursive-descent parser:
//   sum    := ['+'|'-'] product (('+'|'-') product)*
//   product:= factor (['*'] factor)*
//   factor := atom ['^' ['-'] digits]
//   atom   := digits | variable | '(' sum ')'
class LaurentParser {
 public:
  LaurentParser(std::string_view text, std::size_t rank) : s_(text), rank_(rank) {}

  LaurentPoly parse() {
    LaurentPoly p = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError, "polynomial \"" + std::string(s_) + "\" at offset " +
                                           std::to_string(pos_) + ": " + why);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool at_atom_start() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 't' || c == '(';
  }

  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  LaurentPoly sum() {
    LaurentPoly acc(rank_);
    bool negate = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      negate = true;
    }
    for (;;) {
      LaurentPoly term = product();
      acc += negate ? -term : term;
      if (peek('+')) {
        ++pos_;
        negate = false;
      } else if (peek('-')) {
        ++pos_;
        negate = true;
      } else {
        return acc;
      }
    }
  }

  LaurentPoly product() {
    LaurentPoly acc = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (at_atom_start()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  LaurentPoly factor() {
    skip();
    std::size_t atom_start = pos_;
    bool is_variable = pos_ < s_.size() && s_[pos_] == 't';
    std::size_t var_index = 0;
    LaurentPoly base = atom(var_index);
    if (!peek('^')) return base;
    ++pos_;
    bool neg = false;
    if (peek('-')) {
      ++pos_;
      neg = true;
    }
    long k = std::stol(digits());
    if (is_variable) {
      ExponentVector e(rank_, 0);
      e[var_index] = static_cast<int>(neg ? -k : k);
      return LaurentPoly::monomial(rank_, std::move(e));
    }
    if (neg) {
      if (!base.is_unit()) {
        pos_ = atom_start;
        fail("negative power of a non-unit");
      }
      // inverse of c*t^e with c = +-1 is c*t^-e
      const auto& [e, c] = *base.terms().begin();
      ExponentVector inv(rank_);
      for (std::size_t i = 0; i < rank_; ++i) inv[i] = -e[i];
      return LaurentPoly::monomial(rank_, std::move(inv), c).pow(static_cast<unsigned>(k));
    }
    return base.pow(static_cast<unsigned>(k));
  }

  LaurentPoly atom(std::size_t& var_index) {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly inner = sum();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return LaurentPoly::constant(rank_, Integer(digits()));
    }
    if (c == 't') {
      ++pos_;
      std::size_t index = 0;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        index = std::stoul(std::string(s_.substr(start, pos_ - start)));
        if (index == 0 || index > rank_) fail("variable index out of range");
        --index;
      } else if (rank_ != 1) {
        fail("bare 't' is only valid in rank 1");
      }
      var_index = index;
      return LaurentPoly::variable(rank_, index);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t rank_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, std::size_t rank) {
  if (rank == 0) {
    throw Error(ErrorKind::UnsupportedRank, "polynomial ring needs at least one variable");
  }
  return LaurentParser(text, rank).parse();
}

LaurentPoly normalize(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  ExponentVector shift = p.min_exponents();
  for (auto& x : shift) x = -x;
  LaurentPoly q = p.shifted(shift);
  if (q.leading_term().second < 0) q = -q;
  return q;
}

LaurentPoly lp_arith(const LaurentPoly& a, const LaurentPoly& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add:
      return a + b;
    case ArithOp::Sub:
      return a - b;
    case ArithOp::Mul:
      return a * b;
  }
  return a;
}

namespace {

void require_univariate(const LaurentPoly& p, const char* what) {
  if (p.rank() != 1) {
    throw Error(ErrorKind::RankMismatch,
                std::string(what) + " needs rank 1, got rank " + std::to_string(p.rank()));
  }
}

}  // namespace

Degree laurent_degree(const LaurentPoly& p) {
  require_univariate(p, "laurent_degree");
  if (p.is_zero()) return Degree::minus_infinity();
  return Degree(static_cast<long>(p.max_exponents()[0]) - p.min_exponents()[0]);
}

LaurentPoly specialize(const LaurentPoly& p, const IntMatrix& phi) {
  if (phi.cols() != p.rank()) {
    throw Error(ErrorKind::RankMismatch, "class has " + std::to_string(phi.cols()) +
                                             " coordinates for a rank " +
                                             std::to_string(p.rank()) + " ring");
  }
  const std::size_t s = phi.rows();
  LaurentPoly out(s);
  ExponentVector f(s);
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t k = 0; k < s; ++k) {
      Integer v = 0;
      for (std::size_t i = 0; i < p.rank(); ++i) v += phi(k, i) * e[i];
      f[k] = static_cast<int>(v.get_si());
    }
    out.add_term(f, c);
  }
  return out;
}

bool is_monic(const UnitClass& p) {
  require_univariate(p.representative(), "is_monic");
  if (p.is_zero()) return false;
  return abs_value(p.representative().leading_term().second) == 1;
}

SymmetricRepresentative symmetric_representative(const UnitClass& p) {
  const LaurentPoly& n = p.representative();
  require_univariate(n, "symmetric_representative");
  if (n.is_zero()) return {n, 1, 0};
  const long d = laurent_degree(n).value();
  auto coeff = [&](long i) { return n.coefficient({static_cast<int>(i)}); };

  const Integer low = coeff(0);
  const Integer high = coeff(d);
  int sign;
  if (low == high) {
    sign = 1;
  } else if (low == -high) {
    sign = -1;
  } else {
    throw Error(ErrorKind::NotSymmetrizable, n.to_string() + " has mismatched end coefficients");
  }
  for (long i = 0; i <= d; ++i) {
    if (coeff(i) != sign * coeff(d - i)) {
      throw Error(ErrorKind::NotSymmetrizable,
                  n.to_string() + " is not palindromic up to sign at exponent " +
                      std::to_string(i));
    }
  }
  if (d % 2 == 0) return {n.shifted({static_cast<int>(-d / 2)}), sign, 0};
  return {n, sign, d};
}

}  // namespace atk

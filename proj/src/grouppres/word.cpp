#include "atk/grouppres/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "atk/error.hpp"

namespace atk {

Word Word::inverse() const {
  Word out;
  out.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    out.letters.push_back(Letter{it->gen, -it->exp});
  return out;
}

Word Word::operator*(const Word& o) const {
  Word out = *this;
  out.letters.insert(out.letters.end(), o.letters.begin(), o.letters.end());
  return out;
}

long Word::exponent_sum(std::size_t gen) const {
  long s = 0;
  for (const auto& l : letters)
    if (l.gen == gen) s += l.exp;
  return s;
}

std::size_t Word::max_generator() const {
  std::size_t m = 0;
  for (const auto& l : letters) m = std::max(m, l.gen);
  return m;
}

Word free_reduce(const Word& w) {
  Word out;
  out.letters.reserve(w.letters.size());
  for (const auto& l : w.letters) {
    if (!out.letters.empty() && out.letters.back().gen == l.gen &&
        out.letters.back().exp == -l.exp) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

namespace {

class WordParser {
 public:
  WordParser(std::string_view s, const std::vector<std::string>& names) : s_(s), names_(names) {}

  Word parse() {
    Word w = sequence();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError, "word \"" + std::string(s_) + "\" at offset " +
                                           std::to_string(pos_) + ": " + why);
  }

  void skip() {
    while (pos_ < s_.size() &&
           (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '*' ||
            s_[pos_] == '.'))
      ++pos_;
  }

  Word sequence() {
    Word w;
    for (;;) {
      skip();
      if (pos_ >= s_.size() || s_[pos_] == ',' || s_[pos_] == ']' || s_[pos_] == ')') return w;
      w = w * item();
    }
  }

  Word item() {
    Word base = atom();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip();
      bool neg = false;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
        neg = s_[pos_] == '-';
        ++pos_;
      }
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an exponent");
      long k = std::stol(std::string(s_.substr(start, pos_ - start)));
      Word unit = neg ? base.inverse() : base;
      Word out;
      for (long i = 0; i < k; ++i) out = out * unit;
      return out;
    }
    return base;
  }

  Word atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of word");
    char c = s_[pos_];
    if (c == '[') {
      ++pos_;
      Word u = sequence();
      expect(',');
      Word v = sequence();
      expect(']');
      return u * v * u.inverse() * v.inverse();
    }
    if (c == '(') {
      ++pos_;
      Word u = sequence();
      expect(')');
      return u;
    }
    if (c == '1') {
      ++pos_;
      return Word();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto it = std::find(names_.begin(), names_.end(), name);
      if (it == names_.end()) {
        pos_ = start;
        fail("unknown generator '" + name + "'");
      }
      return Word::generator(static_cast<std::size_t>(it - names_.begin()));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view s_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, const std::vector<std::string>& names) {
  return WordParser(text, names).parse();
}

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.letters.size()) {
    const Letter l = w.letters[i];
    long power = 0;
    while (i < w.letters.size() && w.letters[i] == l) {
      power += l.exp;
      ++i;
    }
    if (!first) os << ' ';
    first = false;
    os << (l.gen < names.size() ? names[l.gen] : "g" + std::to_string(l.gen));
    if (power != 1) os << '^' << power;
  }
  return os.str();
}

GroupRingElement GroupRingElement::from_word(const Word& w, const Integer& c) {
  GroupRingElement e;
  e.add(w, c);
  return e;
}

void GroupRingElement::add(const Word& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(free_reduce(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
  GroupRingElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add(w, c);
  return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
  GroupRingElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add(w, -c);
  return r;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
  GroupRingElement r;
  for (const auto& [wa, ca] : terms_)
    for (const auto& [wb, cb] : o.terms_) r.add(wa * wb, ca * cb);
  return r;
}

std::string GroupRingElement::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Integer a = abs_value(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (w.empty()) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << '*';
      os << word_to_string(w, names);
    }
  }
  return os.str();
}

}  // namespace atk

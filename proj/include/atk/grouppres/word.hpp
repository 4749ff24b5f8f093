#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "atk/integer.hpp"

namespace atk {

struct Letter {
  std::size_t gen = 0;
  int exp = 1;  // +1 or -1

  auto operator<=>(const Letter&) const = default;
};

/// Element of a free group as a sequence of generator letters.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> l) : letters(std::move(l)) {}
  static Word generator(std::size_t g, int exp = 1) { return Word({Letter{g, exp}}); }

  bool empty() const noexcept { return letters.empty(); }
  std::size_t size() const noexcept { return letters.size(); }
  Word inverse() const;
  Word operator*(const Word& o) const;  // concatenation, not reduced
  long exponent_sum(std::size_t gen) const;
  std::size_t max_generator() const;  // 0 for the empty word

  auto operator<=>(const Word&) const = default;
};

/// Cancels adjacent x x^-1 pairs until none remain.
Word free_reduce(const Word& w);

/// Parses "a b^2 a^-1", commutators "[u,v]" = u v u^-1 v^-1, and
/// parenthesized powers "(a b)^-2". "1" denotes the empty word.
Word parse_word(std::string_view text, const std::vector<std::string>& names);

/// Space-separated letters, runs of one generator collapsed to powers;
/// "1" for the empty word.
std::string word_to_string(const Word& w, const std::vector<std::string>& names);

/// Formal integer combination of freely reduced words: an element of Z[F].
class GroupRingElement {
 public:
  GroupRingElement() = default;
  static GroupRingElement from_word(const Word& w, const Integer& c = 1);

  const std::map<Word, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(const Word& w, const Integer& c);
  GroupRingElement operator+(const GroupRingElement& o) const;
  GroupRingElement operator-(const GroupRingElement& o) const;
  GroupRingElement operator*(const GroupRingElement& o) const;
  bool operator==(const GroupRingElement&) const = default;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::map<Word, Integer> terms_;
};

}  // namespace atk

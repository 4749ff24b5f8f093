#include "atk/exactalg/exact_sequence.hpp"

#include <algorithm>

#include "atk/error.hpp"
#include "atk/integer.hpp"

namespace atk {
namespace {

struct LinearSystem {
  std::size_t vars = 0;
  std::vector<std::vector<Rational>> rows;  // coefficients followed by rhs

  void add(std::vector<Rational> row) { rows.push_back(std::move(row)); }
  std::vector<Rational> blank() const { return std::vector<Rational>(vars + 1, 0); }
};

// Reduced row echelon form in place; returns the pivot column of each row.
std::vector<std::size_t> reduce(LinearSystem& sys) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < sys.vars && r < sys.rows.size(); ++c) {
    std::size_t p = r;
    while (p < sys.rows.size() && sys.rows[p][c] == 0) ++p;
    if (p == sys.rows.size()) continue;
    std::swap(sys.rows[r], sys.rows[p]);
    Rational inv = 1 / sys.rows[r][c];
    for (auto& v : sys.rows[r]) v *= inv;
    for (std::size_t i = 0; i < sys.rows.size(); ++i) {
      if (i == r || sys.rows[i][c] == 0) continue;
      Rational f = sys.rows[i][c];
      for (std::size_t j = 0; j <= sys.vars; ++j) sys.rows[i][j] -= f * sys.rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < sys.rows.size(); ++i) {
    if (sys.rows[i][sys.vars] != 0) {
      throw Error(ErrorKind::Inconsistent, "the given ranks contradict exactness");
    }
  }
  return pivots;
}

}  // namespace

ExactSequenceSolution exact_sequence_solve(const ExactSequenceData& data) {
  const std::size_t n = data.terms.size();
  if (n == 0) throw Error(ErrorKind::InvalidInput, "empty sequence");
  const std::size_t maps = n - 1;

  // Variable layout: map ranks first, then the unknown terms.
  std::vector<std::optional<std::size_t>> term_var(n);
  std::size_t vars = maps;
  for (std::size_t i = 0; i < n; ++i) {
    if (data.terms[i]) {
      if (*data.terms[i] < 0) throw Error(ErrorKind::Inconsistent, "negative term rank");
    } else {
      term_var[i] = vars++;
    }
  }

  LinearSystem sys;
  sys.vars = vars;
  // term i as (coefficient vector, constant) contribution on the left side
  auto put_term = [&](std::vector<Rational>& row, std::size_t i, long sign) {
    if (term_var[i]) {
      row[*term_var[i]] += sign;
    } else {
      row[vars] -= sign * *data.terms[i];
    }
  };

  for (std::size_t i = 1; i + 1 < n; ++i) {
    auto row = sys.blank();
    put_term(row, i, 1);
    row[i - 1] -= 1;
    row[i] -= 1;
    sys.add(std::move(row));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!data.terms[i] || *data.terms[i] != 0) continue;
    if (i >= 1) {
      auto row = sys.blank();
      row[i - 1] = 1;
      sys.add(std::move(row));
    }
    if (i < maps) {
      auto row = sys.blank();
      row[i] = 1;
      sys.add(std::move(row));
    }
  }
  for (const auto& c : data.constraints) {
    if (c.map_index >= maps) {
      throw Error(ErrorKind::InvalidInput, "map index " + std::to_string(c.map_index) +
                                               " outside the sequence");
    }
    if (c.value < 0) throw Error(ErrorKind::Inconsistent, "negative map rank");
    auto row = sys.blank();
    if (c.kind == MapRankConstraint::Kind::Image) {
      row[c.map_index] = 1;
      row[vars] = c.value;
    } else {
      // rank ker f = rank source - rank im f
      put_term(row, c.map_index, 1);
      row[c.map_index] -= 1;
      row[vars] += c.value;
    }
    sys.add(std::move(row));
  }

  const auto pivots = reduce(sys);
  std::vector<bool> is_pivot(vars, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<std::optional<Rational>> value(vars);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    bool depends_on_free = false;
    for (std::size_t c = 0; c < vars; ++c) {
      if (c != pivots[r] && sys.rows[r][c] != 0 && !is_pivot[c]) depends_on_free = true;
    }
    if (!depends_on_free) value[pivots[r]] = sys.rows[r][vars];
  }

  auto as_rank = [](const Rational& q) -> long {
    if (q.get_den() != 1 || q < 0) {
      throw Error(ErrorKind::Inconsistent, "exactness forces a non-integral or negative rank");
    }
    return q.get_num().get_si();
  };

  ExactSequenceSolution out;
  out.term_ranks.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (data.terms[i]) {
      out.term_ranks[i] = *data.terms[i];
    } else if (value[*term_var[i]]) {
      out.term_ranks[i] = as_rank(*value[*term_var[i]]);
    } else {
      throw Error(ErrorKind::Underdetermined,
                  "term " + std::to_string(i) + " is not determined by the data");
    }
  }
  out.map_ranks.resize(maps);
  for (std::size_t m = 0; m < maps; ++m) {
    if (!value[m]) continue;
    long r = as_rank(*value[m]);
    if (r > std::min(out.term_ranks[m], out.term_ranks[m + 1])) {
      throw Error(ErrorKind::Inconsistent,
                  "map " + std::to_string(m) + " would have rank above an adjacent term");
    }
    out.map_ranks[m] = r;
  }
  return out;
}

}  // namespace atk

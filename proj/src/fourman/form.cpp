#include "atk/fourman/form.hpp"

#include "atk/error.hpp"

namespace atk {

const char* to_string(SurfaceType t) {
  switch (t) {
    case SurfaceType::Symplectic:
      return "symplectic";
    case SurfaceType::Lagrangian:
      return "lagrangian";
    case SurfaceType::None:
      return "none";
  }
  return "none";
}

SurfaceType surface_type_from_string(const std::string& s) {
  if (s == "symplectic") return SurfaceType::Symplectic;
  if (s == "lagrangian") return SurfaceType::Lagrangian;
  if (s == "none") return SurfaceType::None;
  throw Error(ErrorKind::ParseError, "unknown surface type '" + s + "'");
}

std::size_t FormData::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  throw Error(ErrorKind::InvalidInput, "no basis class named '" + label + "'");
}

void FormData::validate() const {
  const std::size_t n = labels.size();
  if (pairing.size() != n || canonical.size() != n || surfaces.size() != n) {
    throw Error(ErrorKind::InvalidInput, "form data sizes disagree with the basis");
  }
  for (const auto& row : pairing)
    if (row.size() != n) throw Error(ErrorKind::InvalidInput, "pairing matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (pairing[i][j] && pairing[j][i] && *pairing[i][j] != *pairing[j][i]) {
        throw Error(ErrorKind::InvalidInput, "pairing is not symmetric at " + labels[i] + ", " + labels[j]);
      }
  for (const auto& s : surfaces)
    if (s.genus && *s.genus < 0) throw Error(ErrorKind::InvalidInput, "negative genus");
}

namespace {

const Integer& need(const std::optional<Integer>& v, const std::string& what) {
  if (!v) throw Error(ErrorKind::MissingData, what + " is not given");
  return *v;
}

SurfaceCheck surface_check(const FormData& form, std::size_t index, SurfaceType want, bool with_k) {
  form.validate();
  if (index >= form.size()) throw Error(ErrorKind::IndexOutOfRange, "basis index out of range");
  const std::string& label = form.labels[index];
  if (form.surfaces[index].type != want) {
    throw Error(ErrorKind::Precondition, label + " is not tagged " + to_string(want));
  }
  if (!form.surfaces[index].genus) throw Error(ErrorKind::MissingData, "genus of " + label + " is not given");
  SurfaceCheck c;
  c.label = label;
  c.lhs = need(form.pairing[index][index], label + "." + label);
  if (with_k) c.lhs += need(form.canonical[index], "K." + label);
  c.rhs = Integer(2 * *form.surfaces[index].genus - 2);
  c.holds = c.lhs == c.rhs;
  return c;
}

}  // namespace

SurfaceCheck adjunction_check(const FormData& form, std::size_t index) {
  return surface_check(form, index, SurfaceType::Symplectic, true);
}

SurfaceCheck lagrangian_square_check(const FormData& form, std::size_t index) {
  return surface_check(form, index, SurfaceType::Lagrangian, false);
}

EvennessReport evenness_check(const FormData& form) {
  form.validate();
  EvennessReport r;
  r.characteristic = true;
  r.diagonal_even = true;
  for (std::size_t i = 0; i < form.size(); ++i) {
    const std::string& label = form.labels[i];
    const Integer& q = need(form.pairing[i][i], label + "." + label);
    const Integer& k = need(form.canonical[i], "K." + label);
    if (!divides(2, q - k)) r.characteristic = false;
    if (!divides(2, q)) {
      r.diagonal_even = false;
      r.odd_labels.push_back(label);
    }
  }
  return r;
}

IntMatrix pairing_matrix(const FormData& form) {
  form.validate();
  IntMatrix q(form.size(), form.size());
  for (std::size_t i = 0; i < form.size(); ++i)
    for (std::size_t j = 0; j < form.size(); ++j) {
      const auto& v = form.pairing[i][j] ? form.pairing[i][j] : form.pairing[j][i];
      q(i, j) = need(v, form.labels[i] + "." + form.labels[j]);
    }
  return q;
}

FormData change_basis(const FormData& form, const IntMatrix& p) {
  const IntMatrix q = pairing_matrix(form);
  if (p.cols() != form.size()) throw Error(ErrorKind::DimensionMismatch, "basis change has the wrong width");
  IntMatrix k(form.size(), 1);
  for (std::size_t i = 0; i < form.size(); ++i) k(i, 0) = need(form.canonical[i], "K." + form.labels[i]);
  const IntMatrix q2 = p * q * p.transpose();
  const IntMatrix k2 = p * k;
  FormData out;
  const std::size_t n = p.rows();
  out.pairing.assign(n, std::vector<std::optional<Integer>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    out.labels.push_back("v" + std::to_string(i));
    out.canonical.emplace_back(k2(i, 0));
    out.surfaces.emplace_back();
    for (std::size_t j = 0; j < n; ++j) out.pairing[i][j] = q2(i, j);
  }
  return out;
}

}  // namespace atk

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "atk/grouppres/epimorphisms.hpp"
#include "atk/grouppres/presentation.hpp"
#include "atk/laurent/laurent_poly.hpp"

namespace atk {

/// Outcome for one finite quotient alpha.
struct FibredRecord {
  std::string group_label;
  std::size_t order = 0;
  std::vector<std::size_t> images;
  std::optional<UnitClass> delta;
  Degree degree;
  bool monic = false;
  Integer div_alpha;
  Integer expected_degree;  // |G| T + (1 + b3) div(phi_alpha)
  bool degree_ok = false;
  /// Set when the computation for this alpha failed; the record then
  /// neither passes nor fails.
  std::optional<std::string> error;

  bool passes() const { return !error && monic && degree_ok; }
  bool fails() const { return !error && !(monic && degree_ok); }
};

enum class Verdict { FibredEvidence, NotFibred, Inconclusive };
const char* to_string(Verdict v);

struct FibredCertificate {
  std::vector<FibredRecord> records;
  Verdict verdict = Verdict::Inconclusive;
  Integer thurston_norm;
  long b3 = 1;
  std::size_t budget = 0;
};

struct CertificateOptions {
  /// Largest |G| tested; must be >= 1.
  std::size_t budget = 4;
  /// User-attested Thurston norm of phi; even and nonnegative.
  Integer thurston_norm = 0;
  long b3 = 1;
  bool dedup_automorphisms = false;
  std::size_t order_bound = kDefaultGroupBound;
  bool parallel = true;
};

/// Runs the monicness and degree test for every epimorphism onto a
/// catalogued group of order <= budget. NotFibred if any record fails,
/// Inconclusive if any record errored or none were computed, otherwise
/// FibredEvidence. Throws BudgetZero, BoundExceeded, Precondition.
FibredCertificate fibred_certificate(const Presentation& p, const ClassMap& phi,
                                     const CertificateOptions& options);

}  // namespace atk

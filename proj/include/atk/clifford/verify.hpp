#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "atk/clifford/clifford.hpp"
#include "atk/clifford/exact_matrix.hpp"

namespace atk {

/// Clifford multiplication Cl(C^4) -> Mat(C, 4) fixed by Kronecker products
/// of 2x2 generator images. Throws DimensionMismatch unless x lies in the
/// complex algebra of dimension 4.
ExactMatrix mu_map(const CliffordElement& x);

struct VerificationCheck {
  std::string identity;
  bool passed = false;
  std::string detail;  // offending values on failure
};

struct VerificationReport {
  std::string suite;
  std::vector<VerificationCheck> checks;

  bool passed() const;
  std::size_t failures() const;
  /// One line per check group, "PASS"/"FAIL" prefixed.
  std::string to_string() const;
};

/// cliffmult, cliff3, cliffm1, cliffiso, endiso, extcliff, spin4-adjoint.
const std::vector<std::string>& verification_suites();

struct VerifyOptions {
  std::size_t spin_samples = 200;
  std::uint32_t seed = 20240613;
};

/// Runs one suite by exact computation; InvalidInput for unknown names.
VerificationReport verify_iso(const std::string& which, const VerifyOptions& options = {});

/// Throws VerificationFailed naming the first failed identity.
void require_passed(const VerificationReport& report);

}  // namespace atk

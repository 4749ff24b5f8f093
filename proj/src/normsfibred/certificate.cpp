#include "atk/normsfibred/certificate.hpp"

#include <algorithm>
#include <memory>
#include <tuple>

#include "atk/error.hpp"
#include "atk/grouppres/schreier.hpp"
#include "atk/twistedalex/twisted.hpp"

namespace atk {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::FibredEvidence:
      return "Fibred-evidence";
    case Verdict::NotFibred:
      return "NotFibred";
    case Verdict::Inconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

namespace {

FibredRecord evaluate(const Presentation& p, const ClassMap& phi, const FiniteQuotient& alpha,
                      const CertificateOptions& options) {
  FibredRecord r;
  r.group_label = alpha.group->label();
  r.order = alpha.order();
  r.images = alpha.images;
  try {
    TwistOptions topt;
    topt.parallel = false;
    const TwistedPoly tw = twisted_alexander(p, TwistData{phi, alpha}, topt);
    r.delta = tw.value;
    r.degree = laurent_degree(tw.value.representative());
    r.monic = is_monic(tw.value);
    r.div_alpha = pullback_class(phi, reidemeister_schreier(p, alpha)).divisibility;
    r.expected_degree = Integer(static_cast<unsigned long>(r.order)) * options.thurston_norm +
                        (1 + options.b3) * r.div_alpha;
    r.degree_ok = r.degree.is_finite() && Integer(r.degree.value()) == r.expected_degree;
  } catch (const Error& e) {
    r.error = e.what();
  }
  return r;
}

}  // namespace

FibredCertificate fibred_certificate(const Presentation& p, const ClassMap& phi,
                                     const CertificateOptions& options) {
  if (options.budget < 1) throw Error(ErrorKind::BudgetZero, "group budget must be at least 1");
  if (options.budget > options.order_bound) {
    throw Error(ErrorKind::BoundExceeded, "budget " + std::to_string(options.budget) +
                                              " exceeds the group-order bound " +
                                              std::to_string(options.order_bound));
  }
  if (phi.target_rank() != 1) throw Error(ErrorKind::Precondition, "class must take values in Z");
  if (phi.is_zero()) throw Error(ErrorKind::Precondition, "class is zero");
  if (options.thurston_norm < 0 || !divides(Integer(2), options.thurston_norm)) {
    throw Error(ErrorKind::Precondition, "Thurston norm must be even and nonnegative");
  }
  if (options.b3 < 0) throw Error(ErrorKind::Precondition, "b3 must be nonnegative");

  std::vector<FiniteQuotient> quotients;
  EpimorphismOptions eopt;
  eopt.order_bound = options.order_bound;
  eopt.dedup_automorphisms = options.dedup_automorphisms;
  for (const auto& g : group_catalogue(options.budget)) {
    auto found = enumerate_epimorphisms(p, std::make_shared<const FiniteGroup>(g), eopt);
    quotients.insert(quotients.end(), found.begin(), found.end());
  }

  FibredCertificate cert;
  cert.thurston_norm = options.thurston_norm;
  cert.b3 = options.b3;
  cert.budget = options.budget;
  cert.records.resize(quotients.size());
  const std::int64_t count = static_cast<std::int64_t>(quotients.size());
#pragma omp parallel for schedule(dynamic) if (options.parallel)
  for (std::int64_t i = 0; i < count; ++i) cert.records[i] = evaluate(p, phi, quotients[i], options);

  std::sort(cert.records.begin(), cert.records.end(), [](const FibredRecord& a, const FibredRecord& b) {
    return std::tie(a.order, a.group_label, a.images) < std::tie(b.order, b.group_label, b.images);
  });

  const bool any_fail = std::any_of(cert.records.begin(), cert.records.end(),
                                    [](const FibredRecord& r) { return r.fails(); });
  const bool any_error = std::any_of(cert.records.begin(), cert.records.end(),
                                     [](const FibredRecord& r) { return r.error.has_value(); });
  if (any_fail) {
    cert.verdict = Verdict::NotFibred;
  } else if (any_error || cert.records.empty()) {
    cert.verdict = Verdict::Inconclusive;
  } else {
    cert.verdict = Verdict::FibredEvidence;
  }
  return cert;
}

}  // namespace atk

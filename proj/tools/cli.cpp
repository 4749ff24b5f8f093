#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <memory>
#include <optional>
#include <sstream>

#include "atk/clifford/verify.hpp"
#include "atk/error.hpp"
#include "atk/exactalg/chain_complex.hpp"
#include "atk/exactalg/exact_sequence.hpp"
#include "atk/fourman/form.hpp"
#include "atk/grouppres/epimorphisms.hpp"
#include "atk/io/documents.hpp"
#include "atk/normsfibred/certificate.hpp"
#include "atk/normsfibred/norms.hpp"
#include "atk/twistedalex/twisted.hpp"

namespace atk::cli {

namespace {

struct Options {
  std::string output = "text";
  std::size_t budget = 4;
  long thurston = 0;
  long b3 = 1;
  bool dedup = false;
  std::string file;
  std::string phi;
  std::string group;
  std::string group_file;
  std::string images;
  std::optional<std::size_t> column;
  std::string suite = "all";
  std::size_t samples = 200;
  std::uint32_t seed = VerifyOptions{}.seed;
};

/// Collects the text and structured renderings of one command.
struct Report {
  std::ostringstream text;
  Json doc = Json::object();
  int exit_code = kOk;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
      return kParse;
    case ErrorKind::NoValidColumn:
    case ErrorKind::BoundExceeded:
    case ErrorKind::UnsupportedRank:
    case ErrorKind::Underdetermined:
    case ErrorKind::NotSymmetrizable:
    case ErrorKind::BudgetZero:
      return kImpossible;
    case ErrorKind::VerificationFailed:
      return kVerificationFailed;
    default:
      return kPrecondition;
  }
}

std::vector<long> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<long> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      while (used < item.size() && item[used] == ' ') ++used;
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad " + what + " entry '" + item + "'");
    }
  }
  if (out.empty()) throw Error(ErrorKind::ParseError, what + " is empty");
  return out;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

PresentationDocument load_presentation(const Options& o) {
  return presentation_from_json(read_json_file(o.file));
}

/// --phi accepts a class name from the document or a comma list of values.
/// Without it the abelianization map is used when b1 = 1.
ClassMap resolve_phi(const Options& o, const PresentationDocument& doc, const Abelianization& ab) {
  const Presentation& p = doc.presentation;
  if (o.phi.empty()) {
    if (ab.b1() != 1) {
      throw Error(ErrorKind::Precondition, "b1 = " + std::to_string(ab.b1()) + "; choose a class with --phi");
    }
    return identity_class(p, ab);
  }
  if (auto it = doc.classes.find(o.phi); it != doc.classes.end()) return ClassMap(p, it->second);
  const std::vector<long> values = parse_int_list(o.phi, "--phi");
  if (values.size() != p.generator_count()) {
    throw Error(ErrorKind::InvalidInput, "--phi needs one value per generator");
  }
  return ClassMap(p, values);
}

std::shared_ptr<const FiniteGroup> resolve_group(const Options& o) {
  if (!o.group_file.empty()) return std::make_shared<const FiniteGroup>(group_from_json(read_json_file(o.group_file)));
  if (!o.group.empty()) return std::make_shared<const FiniteGroup>(group_from_label(o.group));
  return nullptr;
}

Json poly_json(const TwistedPoly& tw) {
  Json j;
  j["delta"] = tw.value.to_string();
  j["raw_minor_gcd"] = tw.raw_minor_gcd.to_string();
  j["h0_order"] = tw.h0_order.to_string();
  j["column_determinant"] = tw.column_determinant.to_string();
  j["deleted_column"] = tw.deleted_column;
  j["corrected"] = tw.corrected;
  return j;
}

std::string degree_text(const UnitClass& v) { return laurent_degree(v.representative()).to_string(); }

void cmd_homology(const Options& o, Report& r) {
  const ChainComplex c = complex_from_json(read_json_file(o.file));
  const std::vector<HomologyGroup> groups = homology_all(c);
  Json list = Json::array();
  std::string line;
  for (std::size_t k = 0; k < groups.size(); ++k) {
    line += (k ? " H" : "H") + std::to_string(k) + "=" + groups[k].to_string();
    Json g;
    g["k"] = k;
    g["group"] = groups[k].to_string();
    g["free_rank"] = groups[k].free_rank;
    Json tor = Json::array();
    for (const auto& t : groups[k].torsion) tor.push_back(integer_to_json(t));
    g["torsion"] = tor;
    list.push_back(g);
  }
  if (c.is_empty()) r.doc["warnings"] = Json::array({"empty complex"});
  r.doc["homology"] = list;
  r.doc["euler_characteristic"] = euler_characteristic(c);
  r.text << line << "\n";
}

void cmd_alexander(const Options& o, Report& r) {
  const PresentationDocument doc = load_presentation(o);
  const Presentation& p = doc.presentation;
  const Abelianization ab = abelianize(p);
  const ClassMap phi = resolve_phi(o, doc, ab);
  const auto group = resolve_group(o);

  std::vector<FiniteQuotient> quotients;
  if (!group) {
    quotients.push_back(trivial_quotient(p));
  } else if (!o.images.empty()) {
    FiniteQuotient q{group, {}};
    for (long v : parse_int_list(o.images, "--images")) {
      if (v < 0) throw Error(ErrorKind::InvalidInput, "group elements are nonnegative indices");
      q.images.push_back(static_cast<std::size_t>(v));
    }
    quotients.push_back(q);
  } else {
    EpimorphismOptions eo;
    eo.dedup_automorphisms = o.dedup;
    quotients = enumerate_epimorphisms(p, group, eo);
    if (quotients.empty()) r.text << "no epimorphisms onto " << group->label() << "\n";
  }

  TwistOptions topt;
  topt.column = o.column;
  Json list = Json::array();
  for (const FiniteQuotient& q : quotients) {
    const TwistedPoly tw = twisted_alexander(p, TwistData{phi, q}, topt);
    const bool monic = is_monic(tw.value);
    const std::string deg = degree_text(tw.value);
    if (group) r.text << q.group->label() << " " << join(q.images) << ": ";
    r.text << tw.value.to_string() << ", deg " << deg << ", " << (monic ? "monic" : "not monic") << "\n";
    r.text << "  raw minor gcd " << tw.raw_minor_gcd.to_string() << ", h0 order " << tw.h0_order.to_string()
           << ", deleted generator " << p.generators()[tw.deleted_column]
           << (tw.corrected ? "" : ", correction not exact") << "\n";
    Json j = poly_json(tw);
    j["group"] = q.group->label();
    j["images"] = q.images;
    j["degree"] = deg;
    j["monic"] = monic;
    list.push_back(j);
  }
  r.doc["phi"] = Json::array();
  for (const Integer& v : phi.values().entries()) r.doc["phi"].push_back(integer_to_json(v));
  r.doc["results"] = list;
}

void cmd_multivariable(const Options& o, Report& r) {
  const PresentationDocument doc = load_presentation(o);
  const Abelianization ab = abelianize(doc.presentation);
  TwistOptions topt;
  topt.column = o.column;
  const TwistedPoly tw = multivariable_alexander(doc.presentation, topt);
  r.text << "b1 = " << ab.b1() << "\n" << tw.value.to_string() << "\n";
  r.doc["b1"] = ab.b1();
  r.doc["result"] = poly_json(tw);
}

void cmd_norms(const Options& o, Report& r) {
  const PresentationDocument doc = load_presentation(o);
  const Presentation& p = doc.presentation;
  const Abelianization ab = abelianize(p);
  const ClassMap phi = resolve_phi(o, doc, ab);
  const TwistedPoly multi = multivariable_alexander(p);
  const IntMatrix phi_h = class_on_homology(phi, ab);
  const Integer a_norm = alexander_norm(multi.value.representative(), phi_h);
  const Integer div = divisibility(phi);
  const NormReport nr = mcmullen_check(a_norm, div, Integer(o.thurston), ab.b1());
  const TwistedPoly single = twisted_alexander(p, TwistData{phi, trivial_quotient(p)});

  r.text << "multivariable: " << multi.value.to_string() << "\n";
  r.text << "single: " << single.value.to_string() << "\n";
  r.text << "degree case: " << to_string(degree_case_analysis(single.value)) << "\n";
  r.text << "alexander norm: " << a_norm << "\n";
  r.text << "div: " << div << "\n";
  r.text << "thurston norm (user-supplied): " << o.thurston << "\n";
  r.text << "mcmullen: " << (nr.mcmullen_ok ? "ok" : "violated") << " (" << a_norm << " <= " << nr.bound << ")\n";
  for (const auto& w : nr.warnings) r.text << "warning: " << w << "\n";
  r.doc["multivariable"] = multi.value.to_string();
  r.doc["single"] = single.value.to_string();
  r.doc["degree_case"] = to_string(degree_case_analysis(single.value));
  r.doc["alexander_norm"] = integer_to_json(a_norm);
  r.doc["div"] = integer_to_json(div);
  r.doc["thurston_norm"] = o.thurston;
  r.doc["thurston_norm_source"] = "user-supplied";
  r.doc["mcmullen_bound"] = integer_to_json(nr.bound);
  r.doc["mcmullen_ok"] = nr.mcmullen_ok;
  r.doc["warnings"] = nr.warnings;

  if (ab.b1() > 1) {
    const NormRelation rel = norm_relation_check(p, phi);
    const DegreeBoundAudit audit = degree_bound_audit(p, phi);
    r.text << "norm relation: " << (rel.holds ? "holds" : "fails") << " (" << rel.single.to_string() << " vs "
           << rel.predicted.to_string() << ")\n";
    r.text << "degree bound: " << (audit.holds ? "holds" : "fails") << " (" << audit.degree.to_string()
           << " <= " << audit.alexander_norm << " + 2*" << audit.div << ")\n";
    r.doc["norm_relation"] = {{"holds", rel.holds}, {"single", rel.single.to_string()},
                              {"predicted", rel.predicted.to_string()}};
    r.doc["degree_bound"] = {{"holds", audit.holds}, {"degree", audit.degree.to_string()}};
  }
}

void cmd_fibred(const Options& o, Report& r) {
  const PresentationDocument doc = load_presentation(o);
  const Presentation& p = doc.presentation;
  const Abelianization ab = abelianize(p);
  const ClassMap phi = resolve_phi(o, doc, ab);
  CertificateOptions co;
  co.budget = o.budget;
  co.thurston_norm = o.thurston;
  co.b3 = o.b3;
  co.dedup_automorphisms = o.dedup;
  const FibredCertificate cert = fibred_certificate(p, phi, co);

  Json records = Json::array();
  for (const FibredRecord& rec : cert.records) {
    Json j;
    j["group"] = rec.group_label;
    j["order"] = rec.order;
    j["images"] = rec.images;
    r.text << rec.group_label << " " << join(rec.images);
    if (rec.error) {
      r.text << " error: " << *rec.error << "\n";
      j["error"] = *rec.error;
    } else {
      r.text << " delta " << rec.delta->to_string() << " deg " << rec.degree.to_string() << " expected "
             << rec.expected_degree << " div " << rec.div_alpha << (rec.monic ? " monic" : " not-monic")
             << (rec.passes() ? " pass" : " FAIL") << "\n";
      j["delta"] = rec.delta->to_string();
      j["degree"] = rec.degree.to_string();
      j["expected_degree"] = integer_to_json(rec.expected_degree);
      j["div"] = integer_to_json(rec.div_alpha);
      j["monic"] = rec.monic;
      j["degree_ok"] = rec.degree_ok;
      j["passes"] = rec.passes();
    }
    records.push_back(j);
  }
  r.text << "verdict: " << to_string(cert.verdict) << " (all catalogued groups of order <= " << cert.budget
         << ", thurston norm " << cert.thurston_norm << " user-supplied, b3 " << cert.b3 << ")\n";
  r.doc["records"] = records;
  r.doc["budget"] = cert.budget;
  r.doc["thurston_norm"] = integer_to_json(cert.thurston_norm);
  r.doc["b3"] = cert.b3;
  r.doc["verdict"] = to_string(cert.verdict);
}

void cmd_clifford(const Options& o, Report& r) {
  std::vector<std::string> suites;
  if (o.suite == "all") {
    suites = verification_suites();
  } else {
    suites.push_back(o.suite);
  }
  VerifyOptions vo;
  vo.spin_samples = o.samples;
  vo.seed = o.seed;
  std::size_t passed = 0;
  Json list = Json::array();
  for (const auto& s : suites) {
    const VerificationReport rep = verify_iso(s, vo);
    r.text << rep.to_string();
    passed += rep.passed() ? 1 : 0;
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
      Json cj = {{"identity", c.identity}, {"passed", c.passed}};
      if (!c.detail.empty()) cj["detail"] = c.detail;
      checks.push_back(cj);
    }
    list.push_back({{"suite", s}, {"passed", rep.passed()}, {"checks", checks}});
  }
  r.text << "suites passed: " << passed << "/" << suites.size() << "\n";
  r.doc["suites"] = list;
  r.doc["passed"] = passed == suites.size();
  if (passed != suites.size()) r.exit_code = kVerificationFailed;
}

void cmd_formcheck(const Options& o, Report& r) {
  const FormData form = form_from_json(read_json_file(o.file));
  Json checks = Json::array();
  bool all_hold = true;
  for (std::size_t i = 0; i < form.size(); ++i) {
    const SurfaceType t = form.surfaces[i].type;
    if (t == SurfaceType::None) continue;
    const bool symp = t == SurfaceType::Symplectic;
    const SurfaceCheck c = symp ? adjunction_check(form, i) : lagrangian_square_check(form, i);
    all_hold = all_hold && c.holds;
    r.text << (symp ? "adjunction " : "lagrangian ") << c.label << ": " << (symp ? "K.S + S.S = " : "S.S = ")
           << c.lhs << ", 2g-2 = " << c.rhs << (c.holds ? " ok" : " FAILED") << "\n";
    checks.push_back({{"label", c.label},
                      {"kind", symp ? "adjunction" : "lagrangian"},
                      {"lhs", integer_to_json(c.lhs)},
                      {"rhs", integer_to_json(c.rhs)},
                      {"holds", c.holds}});
  }
  const EvennessReport ev = evenness_check(form);
  r.text << "characteristic: " << (ev.characteristic ? "true" : "false") << "\n";
  r.text << "even: " << (ev.even() ? "true" : "false") << "\n";
  r.doc["surface_checks"] = checks;
  r.doc["characteristic"] = ev.characteristic;
  r.doc["even"] = ev.even();
  r.doc["odd_classes"] = ev.odd_labels;
  if (!all_hold) r.exit_code = kVerificationFailed;
}

void cmd_exactseq(const Options& o, Report& r) {
  const ExactSequenceData data = exact_sequence_from_json(read_json_file(o.file));
  const ExactSequenceSolution sol = exact_sequence_solve(data);
  Json terms = Json::array();
  std::string unknowns;
  for (std::size_t i = 0; i < sol.term_ranks.size(); ++i) {
    const std::string label =
        i < data.labels.size() && !data.labels[i].empty() ? data.labels[i] : "T" + std::to_string(i);
    r.text << label << " = " << sol.term_ranks[i] << (data.terms[i] ? "" : " (solved)") << "\n";
    if (!data.terms[i]) unknowns += (unknowns.empty() ? "" : " ") + label + "=" + std::to_string(sol.term_ranks[i]);
    terms.push_back({{"label", label}, {"rank", sol.term_ranks[i]}, {"given", data.terms[i].has_value()}});
  }
  r.text << "solved: " << unknowns << "\n";
  r.doc["terms"] = terms;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact homology, Alexander polynomial, fibredness and Clifford algebra computations", "atk"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--output", o.output, "Report format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--budget", o.budget, "Largest finite group order tested by 'fibred'");
  app.add_option("--thurston", o.thurston, "User-attested Thurston norm of the class");
  app.add_option("--b3", o.b3, "Third Betti number used in the degree equation");
  app.add_flag("--dedup-aut", o.dedup, "Count epimorphisms up to automorphisms of the target");

  auto add_pres = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Presentation document")->required();
    sub->add_option("--phi", o.phi, "Class name from the document or comma-separated generator values");
    sub->add_option("--column", o.column, "Deleted generator index");
  };

  CLI::App* homology = app.add_subcommand("homology", "Homology of a cellular chain complex");
  homology->add_option("file", o.file, "Chain complex document")->required();
  CLI::App* alexander = app.add_subcommand("alexander", "Twisted Alexander polynomial of a class");
  add_pres(alexander);
  alexander->add_option("--group", o.group, "Finite group label: trivial, Z/n, D_n, S_n");
  alexander->add_option("--group-file", o.group_file, "Finite group multiplication table document");
  alexander->add_option("--images", o.images, "Generator images as group element indices");
  CLI::App* multivariable = app.add_subcommand("multivariable", "Multivariable Alexander polynomial");
  add_pres(multivariable);
  CLI::App* norms = app.add_subcommand("norms", "Alexander norm, McMullen inequality and degree relations");
  add_pres(norms);
  CLI::App* fibred = app.add_subcommand("fibred", "Finite-cover fibredness certificate");
  add_pres(fibred);
  CLI::App* clifford = app.add_subcommand("clifford-verify", "Exact verification of Clifford algebra identities");
  clifford->add_option("suite", o.suite, "Suite name or 'all'");
  clifford->add_option("--samples", o.samples, "Random spin elements for spin4-adjoint");
  clifford->add_option("--seed", o.seed, "Seed for spin4-adjoint sampling");
  CLI::App* formcheck = app.add_subcommand("formcheck", "Intersection form diagnostics");
  formcheck->add_option("file", o.file, "Form document")->required();
  CLI::App* exactseq = app.add_subcommand("exactseq", "Solve unknown ranks in an exact sequence");
  exactseq->add_option("file", o.file, "Exact sequence document")->required();

  std::vector<std::string> rest(args.size() > 0 ? args.begin() + 1 : args.begin(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  Report r;
  try {
    if (*homology) {
      r.doc["command"] = "homology";
      cmd_homology(o, r);
    } else if (*alexander) {
      r.doc["command"] = "alexander";
      cmd_alexander(o, r);
    } else if (*multivariable) {
      r.doc["command"] = "multivariable";
      cmd_multivariable(o, r);
    } else if (*norms) {
      r.doc["command"] = "norms";
      cmd_norms(o, r);
    } else if (*fibred) {
      r.doc["command"] = "fibred";
      cmd_fibred(o, r);
    } else if (*clifford) {
      r.doc["command"] = "clifford-verify";
      cmd_clifford(o, r);
    } else if (*formcheck) {
      r.doc["command"] = "formcheck";
      cmd_formcheck(o, r);
    } else if (*exactseq) {
      r.doc["command"] = "exactseq";
      cmd_exactseq(o, r);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  if (r.doc.contains("warnings") && r.doc["command"] == "homology") {
    for (const auto& w : r.doc["warnings"]) err << "warning: " << w.get<std::string>() << "\n";
  }
  if (o.output == "structured") {
    r.doc["exit_code"] = r.exit_code;
    out << r.doc.dump(2) << "\n";
  } else {
    out << r.text.str();
  }
  return r.exit_code;
}

}  // namespace atk::cli

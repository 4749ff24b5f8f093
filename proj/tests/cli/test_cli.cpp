#include <sstream>

#include "../support.hpp"
#include "cli.hpp"
#include "doctest.h"

using namespace atk;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "atk");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("homology command") {
  const Run na = run({"homology", test::fixture("na.cplx")});
  CHECK(na.code == cli::kOk);
  CHECK(contains(na.out, "H0=Z H1=Z^2 H2=Z^2 H3=Z"));
  CHECK(contains(run({"homology", test::fixture("na_x_s1.cplx")}).out, "H0=Z H1=Z^3 H2=Z^4 H3=Z^3 H4=Z"));
  CHECK(contains(run({"homology", test::fixture("na_minus_nu.cplx")}).out, "H0=Z H1=Z^2 H2=Z H3=0"));
  const Run empty = run({"homology", test::fixture("empty.cplx")});
  CHECK(empty.code == cli::kOk);
  CHECK(contains(empty.out, "H0=0"));
}

TEST_CASE("alexander command") {
  CHECK(contains(run({"alexander", test::fixture("trefoil.pres")}).out, "t^2-t+1"));
  CHECK(contains(run({"alexander", test::fixture("figure8.pres")}).out, "t^2-3*t+1"));
  CHECK(contains(run({"alexander", test::fixture("na.pres"), "--phi", "fibration"}).out, "t^2-2*t+1"));
  CHECK(contains(run({"alexander", test::fixture("na.pres"), "--phi", "0,0,1"}).out, "t^2-2*t+1"));
  CHECK(run({"alexander", test::fixture("na.pres")}).code == cli::kPrecondition);
  CHECK(run({"alexander", test::fixture("na.pres"), "--phi", "0,0,0"}).code == cli::kPrecondition);
  CHECK(run({"alexander", test::fixture("na.pres"), "--phi", "1,0,0"}).code == cli::kPrecondition);
  CHECK(run({"alexander", test::fixture("na.pres"), "--phi", "0,1,0", "--column", "0"}).code == cli::kImpossible);
  const Run grp = run({"alexander", test::fixture("trefoil.pres"), "--group", "S_3"});
  CHECK(grp.code == cli::kOk);
  CHECK(contains(grp.out, "S_3"));
  const Run q8 = run({"alexander", test::fixture("m_identity.pres"), "--phi", "1,0,0,0,0,0,0,0,0,0",
                      "--group-file", test::fixture("quaternion.group")});
  CHECK(q8.code != cli::kParse);
}

TEST_CASE("multivariable command") {
  CHECK(contains(run({"multivariable", test::fixture("na.pres")}).out, "1"));
  CHECK(run({"multivariable", test::fixture("m_twist.pres")}).code == cli::kImpossible);
}

TEST_CASE("norms command") {
  const Run r = run({"norms", test::fixture("na.pres"), "--phi", "fibration"});
  CHECK(r.code == cli::kOk);
  CHECK(contains(r.out, "norm relation: holds"));
  CHECK(contains(r.out, "degree bound: holds"));
  CHECK(run({"--thurston", "3", "norms", test::fixture("na.pres"), "--phi", "fibration"}).code == cli::kPrecondition);
}

TEST_CASE("fibred command") {
  const Run r = run({"--budget", "6", "fibred", test::fixture("na.pres"), "--phi", "fibration"});
  CHECK(r.code == cli::kOk);
  CHECK(contains(r.out, "verdict: Fibred-evidence"));
  CHECK(contains(run({"fibred", test::fixture("free2.pres"), "--phi", "a-dual"}).out, "verdict: NotFibred"));
  CHECK(run({"--budget", "0", "fibred", test::fixture("na.pres"), "--phi", "fibration"}).code == cli::kImpossible);
  CHECK(run({"--budget", "50", "fibred", test::fixture("na.pres"), "--phi", "fibration"}).code == cli::kImpossible);
}

TEST_CASE("clifford-verify command") {
  const Run all = run({"clifford-verify", "all", "--samples", "20"});
  CHECK(all.code == cli::kOk);
  CHECK(contains(all.out, "suites passed: 7/7"));
  CHECK_FALSE(contains(all.out, "FAIL"));
  CHECK(run({"clifford-verify", "nonsense"}).code == cli::kPrecondition);
}

TEST_CASE("formcheck command") {
  const Run m = run({"formcheck", test::fixture("m_form.json")});
  CHECK(m.code == cli::kOk);
  CHECK(contains(m.out, "even: true"));
  const Run cp2 = run({"formcheck", test::fixture("cp2_form.json")});
  CHECK(cp2.code == cli::kOk);
  CHECK(contains(cp2.out, "even: false"));
}

TEST_CASE("exactseq command") {
  const Run r = run({"exactseq", test::fixture("m_mayer_vietoris.json")});
  CHECK(r.code == cli::kOk);
  CHECK(contains(r.out, "solved: H4(M)=1 H3(M)=4 H2(M)=6 H1(M)=4 H0(M)=1"));
}

TEST_CASE("parse failures exit 2") {
  CHECK(run({"homology", "/nonexistent.cplx"}).code == cli::kParse);
  CHECK(run({"homology", test::fixture("na.pres")}).code == cli::kParse);
  CHECK(run({"bogus"}).code == cli::kParse);
  CHECK(run({"--output", "xml", "homology", test::fixture("na.cplx")}).code == cli::kParse);
}

TEST_CASE("structured output is valid JSON carrying the exit code") {
  const Run r = run({"--output", "structured", "alexander", test::fixture("trefoil.pres")});
  const Json doc = parse_json_text(r.out);
  CHECK(doc["exit_code"] == 0);
  CHECK(doc["results"][0]["delta"] == "t^2-t+1");
  const Run f = run({"--output", "structured", "formcheck", test::fixture("m_form.json")});
  CHECK_NOTHROW(parse_json_text(f.out));
}

TEST_CASE("identical inputs give byte-identical output") {
  const std::vector<std::vector<std::string>> commands{
      {"homology", test::fixture("na_x_s1.cplx")},
      {"--budget", "4", "fibred", test::fixture("na.pres"), "--phi", "fibration"},
      {"--output", "structured", "norms", test::fixture("t3.pres"), "--phi", "mixed"},
      {"clifford-verify", "spin4-adjoint", "--samples", "10"},
  };
  for (const auto& c : commands) {
    const Run a = run(c), b = run(c);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

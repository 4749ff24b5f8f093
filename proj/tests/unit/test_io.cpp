#include <filesystem>

#include "../support.hpp"
#include "atk/io/documents.hpp"
#include "doctest.h"

using namespace atk;

TEST_CASE("every fixture round trips") {
  int seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(ATK_FIXTURE_DIR)) {
    const std::string path = entry.path().string();
    CAPTURE(path);
    const Json doc = read_json_file(path);
    const std::string format = document_format(doc);
    ++seen;
    if (format == kComplexFormat) {
      const ChainComplex c = complex_from_json(doc);
      const ChainComplex again = complex_from_json(complex_to_json(c));
      CHECK(again.cells() == c.cells());
      CHECK(again.boundaries() == c.boundaries());
      CHECK(again.is_empty() == c.is_empty());
    } else if (format == kPresentationFormat) {
      const PresentationDocument p = presentation_from_json(doc);
      const PresentationDocument again = presentation_from_json(presentation_to_json(p));
      CHECK(again.presentation == p.presentation);
      CHECK(again.classes == p.classes);
      CHECK(again.name == p.name);
    } else if (format == kExactSequenceFormat) {
      const ExactSequenceData d = exact_sequence_from_json(doc);
      CHECK(exact_sequence_from_json(exact_sequence_to_json(d)) == d);
    } else if (format == kFormFormat) {
      const FormData f = form_from_json(doc);
      CHECK(form_from_json(form_to_json(f)) == f);
    } else if (format == kGroupFormat) {
      const FiniteGroup g = group_from_json(doc);
      const FiniteGroup again = group_from_json(group_to_json(g));
      CHECK(again.label() == g.label());
      REQUIRE(again.order() == g.order());
      for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t x = 0; x < g.order(); ++x) CHECK(again.multiply(a, x) == g.multiply(a, x));
    } else {
      FAIL("unknown format " << format);
    }
  }
  CHECK(seen >= 15);
}

TEST_CASE("malformed documents are parse errors") {
  CHECK(test::error_kind([] { parse_json_text("{"); }) == ErrorKind::ParseError);
  CHECK(test::error_kind([] { complex_from_json(parse_json_text(R"({"format":"atk-form"})")); }) ==
        ErrorKind::ParseError);
  CHECK(test::error_kind([] {
          complex_from_json(parse_json_text(R"({"format":"atk-complex","cells":[1,1],"boundaries":[[[1,2]]]})"));
        }) == ErrorKind::ParseError);
  CHECK(test::error_kind([] {
          presentation_from_json(parse_json_text(
              R"({"format":"atk-presentation","generators":["a"],"relators":[],"classes":{"x":[1,2]}})"));
        }) == ErrorKind::ParseError);
  CHECK(test::error_kind([] { read_json_file("/nonexistent/file.json"); }) == ErrorKind::ParseError);
}

TEST_CASE("large integers travel as strings") {
  const Integer big("123456789012345678901234567890");
  CHECK(integer_to_json(big).is_string());
  CHECK(integer_from_json(integer_to_json(big)) == big);
  CHECK(integer_from_json(Json(-4)) == -4);
}

TEST_CASE("an inconsistent complex in a document is rejected by the complex itself") {
  const Json doc = parse_json_text(
      R"({"format":"atk-complex","cells":[1,1,1],"boundaries":[[[1]],[[1]]]})");
  CHECK(test::error_kind([&] { complex_from_json(doc); }) == ErrorKind::ComplexInvalid);
}

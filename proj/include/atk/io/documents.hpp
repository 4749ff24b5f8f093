#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "atk/exactalg/chain_complex.hpp"
#include "atk/exactalg/exact_sequence.hpp"
#include "atk/fourman/form.hpp"
#include "atk/grouppres/finite_group.hpp"
#include "atk/grouppres/presentation.hpp"

namespace atk {

using Json = nlohmann::ordered_json;

/// Every input document is a JSON object whose "format" key names its kind.
inline constexpr std::string_view kComplexFormat = "atk-complex";
inline constexpr std::string_view kPresentationFormat = "atk-presentation";
inline constexpr std::string_view kExactSequenceFormat = "atk-exact-sequence";
inline constexpr std::string_view kFormFormat = "atk-form";
inline constexpr std::string_view kGroupFormat = "atk-group";

/// ParseError on malformed JSON or an unreadable file.
Json parse_json_text(std::string_view text);
Json read_json_file(const std::string& path);
/// The "format" value; ParseError if missing.
std::string document_format(const Json& doc);

/// Integers may be written as JSON numbers or decimal strings.
Integer integer_from_json(const Json& v);
Json integer_to_json(const Integer& v);

ChainComplex complex_from_json(const Json& doc);
Json complex_to_json(const ChainComplex& complex, const std::string& name = "");

struct PresentationDocument {
  std::string name;
  Presentation presentation;
  /// Named classes to Z, one value per generator.
  std::map<std::string, std::vector<long>> classes;

  bool operator==(const PresentationDocument&) const = default;
};

PresentationDocument presentation_from_json(const Json& doc);
Json presentation_to_json(const PresentationDocument& doc);

ExactSequenceData exact_sequence_from_json(const Json& doc);
Json exact_sequence_to_json(const ExactSequenceData& data);

FormData form_from_json(const Json& doc);
Json form_to_json(const FormData& form);

FiniteGroup group_from_json(const Json& doc);
Json group_to_json(const FiniteGroup& group);

}  // namespace atk

#pragma once

#include <functional>
#include <optional>
#include <string>

#include "atk/error.hpp"
#include "atk/io/documents.hpp"

namespace atk::test {

inline std::string fixture(const std::string& name) { return std::string(ATK_FIXTURE_DIR) + "/" + name; }

inline PresentationDocument load_presentation(const std::string& name) {
  return presentation_from_json(read_json_file(fixture(name)));
}

inline ChainComplex load_complex(const std::string& name) {
  return complex_from_json(read_json_file(fixture(name)));
}

/// Kind of the atk::Error thrown by f, or nothing if f returns normally.
inline std::optional<ErrorKind> error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace atk::test

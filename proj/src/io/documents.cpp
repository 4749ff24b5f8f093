#include "atk/io/documents.hpp"

#include <fstream>
#include <sstream>

#include "atk/error.hpp"

namespace atk {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorKind::ParseError, msg); }

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object()) fail("expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(std::string("missing key '") + key + "'");
  return *it;
}

const Json& array_field(const Json& obj, const char* key) {
  const Json& v = field(obj, key);
  if (!v.is_array()) fail(std::string("'") + key + "' must be an array");
  return v;
}

std::string string_value(const Json& v, const std::string& what) {
  if (!v.is_string()) fail(what + " must be a string");
  return v.get<std::string>();
}

long long_value(const Json& v, const std::string& what) {
  if (!v.is_number_integer()) fail(what + " must be an integer");
  return v.get<long>();
}

std::size_t count_value(const Json& v, const std::string& what) {
  const long n = long_value(v, what);
  if (n < 0) fail(what + " must be nonnegative");
  return static_cast<std::size_t>(n);
}

void expect_format(const Json& doc, std::string_view format) {
  const std::string f = document_format(doc);
  if (f != format) fail("expected format '" + std::string(format) + "', found '" + f + "'");
}

IntMatrix matrix_from_json(const Json& v, std::size_t rows, std::size_t cols, const std::string& what) {
  if (!v.is_array()) fail(what + " must be an array of rows");
  IntMatrix m(rows, cols);
  if (v.empty()) return m;  // zero map shorthand
  if (v.size() != rows) fail(what + " has " + std::to_string(v.size()) + " rows, expected " + std::to_string(rows));
  for (std::size_t i = 0; i < rows; ++i) {
    if (!v[i].is_array() || v[i].size() != cols) {
      fail(what + " row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
    }
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = integer_from_json(v[i][j]);
  }
  return m;
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  if (m.empty()) return rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

std::string document_format(const Json& doc) { return string_value(field(doc, "format"), "format"); }

Integer integer_from_json(const Json& v) {
  if (v.is_number_integer()) return Integer(v.get<long>());
  if (v.is_string()) {
    Integer out;
    if (out.set_str(v.get<std::string>(), 10) != 0) fail("bad integer '" + v.get<std::string>() + "'");
    return out;
  }
  fail("expected an integer");
}

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

ChainComplex complex_from_json(const Json& doc) {
  expect_format(doc, kComplexFormat);
  std::vector<std::size_t> cells;
  for (const Json& c : array_field(doc, "cells")) cells.push_back(count_value(c, "cell count"));
  std::vector<IntMatrix> boundaries;
  if (!cells.empty()) {
    const Json& b = array_field(doc, "boundaries");
    if (b.size() != cells.size() - 1) {
      fail("expected " + std::to_string(cells.size() - 1) + " boundary maps, found " + std::to_string(b.size()));
    }
    for (std::size_t k = 1; k < cells.size(); ++k) {
      boundaries.push_back(
          matrix_from_json(b[k - 1], cells[k - 1], cells[k], "boundary d" + std::to_string(k)));
    }
  }
  return ChainComplex(std::move(cells), std::move(boundaries));
}

Json complex_to_json(const ChainComplex& complex, const std::string& name) {
  Json doc;
  doc["format"] = kComplexFormat;
  if (!name.empty()) doc["name"] = name;
  Json cells = Json::array();
  Json maps = Json::array();
  if (!complex.is_empty()) {
    for (std::size_t c : complex.cells()) cells.push_back(c);
    for (const IntMatrix& m : complex.boundaries()) maps.push_back(matrix_to_json(m));
  }
  doc["cells"] = cells;
  doc["boundaries"] = maps;
  return doc;
}

PresentationDocument presentation_from_json(const Json& doc) {
  expect_format(doc, kPresentationFormat);
  PresentationDocument out;
  if (doc.contains("name")) out.name = string_value(doc["name"], "name");
  std::vector<std::string> gens;
  for (const Json& g : array_field(doc, "generators")) gens.push_back(string_value(g, "generator"));
  std::vector<std::string> rels;
  for (const Json& r : array_field(doc, "relators")) rels.push_back(string_value(r, "relator"));
  out.presentation = Presentation::parse(std::move(gens), rels);
  if (doc.contains("classes")) {
    const Json& cls = doc["classes"];
    if (!cls.is_object()) fail("'classes' must be an object");
    for (const auto& [key, values] : cls.items()) {
      if (!values.is_array() || values.size() != out.presentation.generator_count()) {
        fail("class '" + key + "' needs one value per generator");
      }
      std::vector<long> v;
      for (const Json& x : values) v.push_back(long_value(x, "class value"));
      out.classes[key] = std::move(v);
    }
  }
  return out;
}

Json presentation_to_json(const PresentationDocument& doc) {
  Json out;
  out["format"] = kPresentationFormat;
  if (!doc.name.empty()) out["name"] = doc.name;
  out["generators"] = doc.presentation.generators();
  Json rels = Json::array();
  for (const Word& w : doc.presentation.relators()) rels.push_back(word_to_string(w, doc.presentation.generators()));
  out["relators"] = rels;
  if (!doc.classes.empty()) {
    Json cls = Json::object();
    for (const auto& [k, v] : doc.classes) cls[k] = v;
    out["classes"] = cls;
  }
  return out;
}

ExactSequenceData exact_sequence_from_json(const Json& doc) {
  expect_format(doc, kExactSequenceFormat);
  ExactSequenceData data;
  bool any_label = false;
  for (const Json& t : array_field(doc, "terms")) {
    const Json& r = field(t, "rank");
    data.terms.push_back(r.is_null() ? std::nullopt : std::optional<long>(long_value(r, "term rank")));
    if (t.contains("label")) {
      data.labels.push_back(string_value(t["label"], "label"));
      any_label = true;
    } else {
      data.labels.emplace_back();
    }
  }
  if (!any_label) data.labels.clear();
  if (doc.contains("maps")) {
    for (const Json& m : doc["maps"]) {
      MapRankConstraint c;
      c.map_index = count_value(field(m, "map"), "map index");
      const bool image = m.contains("image"), kernel = m.contains("kernel");
      if (image == kernel) fail("each map fact gives exactly one of 'image' or 'kernel'");
      c.kind = image ? MapRankConstraint::Kind::Image : MapRankConstraint::Kind::Kernel;
      c.value = long_value(image ? m["image"] : m["kernel"], "map rank");
      data.constraints.push_back(c);
    }
  }
  return data;
}

Json exact_sequence_to_json(const ExactSequenceData& data) {
  Json out;
  out["format"] = kExactSequenceFormat;
  Json terms = Json::array();
  for (std::size_t i = 0; i < data.terms.size(); ++i) {
    Json t;
    if (i < data.labels.size() && !data.labels[i].empty()) t["label"] = data.labels[i];
    t["rank"] = data.terms[i] ? Json(*data.terms[i]) : Json(nullptr);
    terms.push_back(t);
  }
  out["terms"] = terms;
  Json maps = Json::array();
  for (const auto& c : data.constraints) {
    Json m;
    m["map"] = c.map_index;
    m[c.kind == MapRankConstraint::Kind::Image ? "image" : "kernel"] = c.value;
    maps.push_back(m);
  }
  out["maps"] = maps;
  return out;
}

FormData form_from_json(const Json& doc) {
  expect_format(doc, kFormFormat);
  FormData f;
  for (const Json& b : array_field(doc, "basis")) {
    f.labels.push_back(string_value(field(b, "label"), "label"));
    SurfaceInfo s;
    if (b.contains("type")) s.type = surface_type_from_string(string_value(b["type"], "type"));
    if (b.contains("genus") && !b["genus"].is_null()) s.genus = long_value(b["genus"], "genus");
    f.surfaces.push_back(s);
    if (b.contains("K") && !b["K"].is_null()) {
      f.canonical.emplace_back(integer_from_json(b["K"]));
    } else {
      f.canonical.emplace_back();
    }
  }
  const std::size_t n = f.labels.size();
  const Json& q = array_field(doc, "pairing");
  if (q.size() != n) fail("pairing needs one row per basis class");
  for (const Json& row : q) {
    if (!row.is_array() || row.size() != n) fail("pairing rows need one entry per basis class");
    std::vector<std::optional<Integer>> r;
    for (const Json& x : row) r.push_back(x.is_null() ? std::nullopt : std::optional<Integer>(integer_from_json(x)));
    f.pairing.push_back(std::move(r));
  }
  try {
    f.validate();
  } catch (const Error& e) {
    fail(e.what());
  }
  return f;
}

Json form_to_json(const FormData& form) {
  Json out;
  out["format"] = kFormFormat;
  Json basis = Json::array();
  for (std::size_t i = 0; i < form.size(); ++i) {
    Json b;
    b["label"] = form.labels[i];
    b["type"] = to_string(form.surfaces[i].type);
    b["genus"] = form.surfaces[i].genus ? Json(*form.surfaces[i].genus) : Json(nullptr);
    b["K"] = form.canonical[i] ? integer_to_json(*form.canonical[i]) : Json(nullptr);
    basis.push_back(b);
  }
  out["basis"] = basis;
  Json q = Json::array();
  for (const auto& row : form.pairing) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(x ? integer_to_json(*x) : Json(nullptr));
    q.push_back(r);
  }
  out["pairing"] = q;
  return out;
}

FiniteGroup group_from_json(const Json& doc) {
  expect_format(doc, kGroupFormat);
  const std::string label = string_value(field(doc, "label"), "label");
  if (!doc.contains("table")) return group_from_label(label);
  std::vector<std::vector<std::size_t>> table;
  for (const Json& row : array_field(doc, "table")) {
    if (!row.is_array()) fail("table rows must be arrays");
    std::vector<std::size_t> r;
    for (const Json& x : row) r.push_back(count_value(x, "table entry"));
    table.push_back(std::move(r));
  }
  return FiniteGroup::from_table(std::move(table), label);
}

Json group_to_json(const FiniteGroup& group) {
  Json out;
  out["format"] = kGroupFormat;
  out["label"] = group.label();
  Json table = Json::array();
  for (std::size_t a = 0; a < group.order(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < group.order(); ++b) row.push_back(group.multiply(a, b));
    table.push_back(row);
  }
  out["table"] = table;
  return out;
}

}  // namespace atk

#include "gompf/document.hpp"

#include <nlohmann/json.hpp>

#include <initializer_list>
#include <set>
#include <vector>

namespace gompf {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

void reject_unknown_keys(const json& obj, const std::string& where,
                         std::initializer_list<const char*> allowed) {
  const std::set<std::string> known(allowed.begin(), allowed.end());
  for (const auto& [key, value] : obj.items())
    if (!known.count(key)) fail(where, "unknown key '" + key + "'");
}

Integer read_integer(const json& j, const std::string& where) {
  if (j.is_number_integer() && j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()), 10);
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()), 10);
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(where, e.what());
    }
  }
  fail(where, "expected an integer, got " + j.dump());
}

Rational read_rational(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(where, e.what());
    }
  }
  if (j.is_number_integer()) return Rational(read_integer(j, where));
  fail(where, "expected a rational string like \"-4/3\", got " + j.dump());
}

IntVector read_int_vector(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected a list");
  IntVector out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(read_integer(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

template <class T, class Reader>
Matrix<T> read_matrix(const json& j, const std::string& where, std::size_t cols_if_empty,
                      Reader read) {
  if (!j.is_array()) fail(where, "expected a list of rows");
  std::vector<std::vector<T>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string row_where = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array()) fail(row_where, "expected a row");
    std::vector<T> row;
    for (std::size_t k = 0; k < j[i].size(); ++k)
      row.push_back(read(j[i][k], row_where + "[" + std::to_string(k) + "]"));
    if (!rows.empty() && row.size() != rows.front().size()) fail(row_where, "ragged matrix");
    rows.push_back(std::move(row));
  }
  return Matrix<T>::from_rows(rows, cols_if_empty);
}

CombingEntry read_combing(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  reject_unknown_keys(j, where, {"c", "gamma"});
  if (!j.contains("c")) fail(where, "missing 'c'");
  CombingEntry out;
  out.c = read_int_vector(j.at("c"), where + ".c");
  if (j.contains("gamma")) out.gamma = read_integer(j.at("gamma"), where + ".gamma");
  return out;
}

json write_integer(const Integer& z) {
  if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

json write_int_vector(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(write_integer(x));
  return out;
}

json write_int_matrix(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(write_int_vector(m.row(i)));
  return out;
}

json write_combing(const CombingEntry& c) {
  return json{{"c", write_int_vector(c.c)}, {"gamma", write_integer(c.gamma)}};
}

}  // namespace

Document parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) fail("document", "expected a JSON object");
  reject_unknown_keys(root, "document",
                      {"linking_matrix", "combing", "second_combing", "class", "framed", "lambda"});
  if (!root.contains("linking_matrix")) fail("document", "missing 'linking_matrix'");

  Document doc;
  doc.linking_matrix = read_matrix<Integer>(root.at("linking_matrix"), "linking_matrix", 0, read_integer);
  if (!doc.linking_matrix.is_square()) fail("linking_matrix", "not square");
  if (!doc.linking_matrix.is_symmetric()) fail("linking_matrix", "not symmetric");
  const std::size_t n = doc.linking_matrix.rows();

  if (root.contains("combing")) doc.combing = read_combing(root.at("combing"), "combing");
  if (root.contains("second_combing"))
    doc.second_combing = read_combing(root.at("second_combing"), "second_combing");
  if (root.contains("class")) doc.meridian_class = read_int_vector(root.at("class"), "class");
  if (root.contains("lambda")) doc.lambda = read_rational(root.at("lambda"), "lambda");

  if (root.contains("framed")) {
    const json& f = root.at("framed");
    if (!f.is_object()) fail("framed", "expected an object");
    reject_unknown_keys(f, "framed", {"lambda_matrix", "classes"});
    if (!f.contains("lambda_matrix")) fail("framed", "missing 'lambda_matrix'");
    FramedEntry entry;
    entry.lambda_matrix =
        read_matrix<Rational>(f.at("lambda_matrix"), "framed.lambda_matrix", 0, read_rational);
    if (!entry.lambda_matrix.is_square()) fail("framed.lambda_matrix", "not square");
    if (!entry.lambda_matrix.is_symmetric()) fail("framed.lambda_matrix", "not symmetric");
    if (f.contains("classes")) {
      entry.classes = read_matrix<Integer>(f.at("classes"), "framed.classes", n, read_integer);
      if (entry.classes->rows() != entry.lambda_matrix.rows())
        fail("framed.classes", "needs one row per link component");
    }
    doc.framed = std::move(entry);
  }
  return doc;
}

std::string emit_document(const Document& doc) {
  json root;
  root["linking_matrix"] = write_int_matrix(doc.linking_matrix);
  if (doc.combing) root["combing"] = write_combing(*doc.combing);
  if (doc.second_combing) root["second_combing"] = write_combing(*doc.second_combing);
  if (doc.meridian_class) root["class"] = write_int_vector(*doc.meridian_class);
  if (doc.lambda) root["lambda"] = to_string(*doc.lambda);
  if (doc.framed) {
    json lam = json::array();
    for (std::size_t i = 0; i < doc.framed->lambda_matrix.rows(); ++i) {
      json row = json::array();
      for (const auto& q : doc.framed->lambda_matrix.row(i)) row.push_back(to_string(q));
      lam.push_back(std::move(row));
    }
    json framed{{"lambda_matrix", std::move(lam)}};
    if (doc.framed->classes) framed["classes"] = write_int_matrix(*doc.framed->classes);
    root["framed"] = std::move(framed);
  }
  return root.dump(2) + "\n";
}

}  // namespace gompf

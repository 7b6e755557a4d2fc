#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gompf/matrix.hpp"
#include "gompf/rational.hpp"

namespace gompf {

/// Malformed document text (exit code 1 in the CLI).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CombingEntry {
  IntVector c;
  Integer gamma = 0;
  friend bool operator==(const CombingEntry&, const CombingEntry&) = default;
};

struct FramedEntry {
  RatMatrix lambda_matrix;
  std::optional<IntMatrix> classes;
  friend bool operator==(const FramedEntry&, const FramedEntry&) = default;
};

/// Input record of the command-line tool, stored as a JSON object:
///
///   {
///     "linking_matrix": [[2, 1], [1, 2]],
///     "combing": {"c": [0, 0], "gamma": 0},
///     "second_combing": {"c": [2, 4], "gamma": -1},
///     "class": [1, 0],
///     "framed": {"lambda_matrix": [["-1/2"]], "classes": [[1, 0]]},
///     "lambda": "1/12"
///   }
///
/// Only linking_matrix is required. Integers may be JSON numbers or decimal
/// strings; rationals are "p/q" strings (plain JSON integers are accepted).
struct Document {
  IntMatrix linking_matrix;
  std::optional<CombingEntry> combing;
  std::optional<CombingEntry> second_combing;
  std::optional<IntVector> meridian_class;
  std::optional<FramedEntry> framed;
  std::optional<Rational> lambda;

  friend bool operator==(const Document&, const Document&) = default;
};

/// Throws ParseError on bad JSON, unknown keys, ragged or non-symmetric
/// linking matrices and malformed numbers.
Document parse_document(std::string_view text);

/// Canonical form: sorted keys, two-space indentation, integers as JSON
/// numbers when they fit in 64 bits, rationals as reduced "p/q" strings.
std::string emit_document(const Document& doc);

}  // namespace gompf

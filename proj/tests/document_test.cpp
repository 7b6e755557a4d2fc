#include "gompf/document.hpp"

#include <gtest/gtest.h>

#include "gompf/generators.hpp"

namespace gompf {
namespace {

TEST(Document, ParseMinimal) {
  const Document d = parse_document(R"({"linking_matrix": []})");
  EXPECT_EQ(d.linking_matrix.rows(), 0u);
  EXPECT_FALSE(d.combing);
  EXPECT_FALSE(d.lambda);
}

TEST(Document, ParseFull) {
  const Document d = parse_document(R"({
    "linking_matrix": [[2, 1], [1, "2"]],
    "combing": {"c": [0, 0], "gamma": 3},
    "second_combing": {"c": [2, "4"]},
    "class": [1, 0],
    "framed": {"lambda_matrix": [["-1/2", 0], [0, "4/6"]], "classes": [[1, 0], [0, 0]]},
    "lambda": "1/12"
  })");
  EXPECT_EQ(d.linking_matrix, (IntMatrix{{2, 1}, {1, 2}}));
  EXPECT_EQ(d.combing->c, (IntVector{0, 0}));
  EXPECT_EQ(d.combing->gamma, 3);
  EXPECT_EQ(d.second_combing->gamma, 0);
  EXPECT_EQ(*d.meridian_class, (IntVector{1, 0}));
  EXPECT_EQ(d.framed->lambda_matrix(1, 1), make_rational(2, 3));
  EXPECT_EQ(*d.framed->classes, (IntMatrix{{1, 0}, {0, 0}}));
  EXPECT_EQ(*d.lambda, make_rational(1, 12));
}

TEST(Document, BigIntegersSurvive) {
  const std::string big = "123456789012345678901234567890";
  const Document d = parse_document(R"({"linking_matrix": [[")" + big + R"("]]})");
  EXPECT_EQ(d.linking_matrix(0, 0), Integer(big));
  const std::string text = emit_document(d);
  EXPECT_NE(text.find('"' + big + '"'), std::string::npos);
  EXPECT_EQ(parse_document(text), d);
}

TEST(Document, EmitIsCanonical) {
  Document d;
  d.linking_matrix = IntMatrix{{-1}};
  d.combing = CombingEntry{IntVector{1}, 2};
  d.lambda = make_rational(-3, 6);
  EXPECT_EQ(emit_document(d),
            "{\n"
            "  \"combing\": {\n"
            "    \"c\": [\n      1\n    ],\n"
            "    \"gamma\": 2\n"
            "  },\n"
            "  \"lambda\": \"-1/2\",\n"
            "  \"linking_matrix\": [\n    [\n      -1\n    ]\n  ]\n"
            "}\n");
}

TEST(Document, RoundTripOnRandomDocuments) {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(0, 4));
    Document d;
    d.linking_matrix = random_symmetric(rng, n, 1000);
    if (rng.coin()) d.combing = CombingEntry{random_vector(rng, n, 50), Integer(rng.uniform(-5, 5))};
    if (rng.coin()) d.second_combing = CombingEntry{random_vector(rng, n, 50), 0};
    if (rng.coin()) d.meridian_class = random_vector(rng, n, 3);
    if (rng.coin()) {
      const FramedLinkData f = random_framed(rng, static_cast<std::size_t>(rng.uniform(0, 3)), n, 6);
      d.framed = FramedEntry{f.lambda, rng.coin() ? f.classes : std::nullopt};
    }
    if (rng.coin()) d.lambda = make_rational(rng.uniform(-50, 50), rng.uniform(1, 24));
    if (rng.coin() && n > 0) d.linking_matrix(0, 0) *= Integer("100000000000000000000");

    const std::string text = emit_document(d);
    const Document back = parse_document(text);
    EXPECT_EQ(back, d) << text;
    EXPECT_EQ(emit_document(back), text);
  }
}

TEST(Document, ParseErrors) {
  const char* bad[] = {
      "",
      "[1, 2]",
      R"({})",
      R"({"linking_matrix": [[1]], "extra": 1})",
      R"({"linking_matrix": [[0, 1], [2, 0]]})",
      R"({"linking_matrix": [[0, 1], [1]]})",
      R"({"linking_matrix": [[0, 1]]})",
      R"({"linking_matrix": [[1.5]]})",
      R"({"linking_matrix": [["x"]]})",
      R"({"linking_matrix": [[1]], "lambda": "1/0"})",
      R"({"linking_matrix": [[1]], "lambda": "a/2"})",
      R"({"linking_matrix": [[1]], "combing": {"c": [1], "gama": 0}})",
      R"({"linking_matrix": [[1]], "combing": {"gamma": 0}})",
      R"({"linking_matrix": [[1]], "framed": {"lambda_matrix": [["1/2", 0], [1, 0]]}})",
  };
  for (const char* text : bad) EXPECT_THROW(parse_document(text), ParseError) << text;
}

TEST(Document, IntegerLambdaAccepted) {
  EXPECT_EQ(*parse_document(R"({"linking_matrix": [], "lambda": 2})").lambda, 2);
}

}  // namespace
}  // namespace gompf

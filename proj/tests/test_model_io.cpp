#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "hpi/model_io.hpp"
#include "hpi/zoo.hpp"

using namespace hpi;

namespace {

Model model_of(const std::string& name) {
  ZooModel z = zoo_model(name);
  Model m;
  m.name = z.name;
  m.alg = z.alg;
  m.unit = z.alg.find_unit();
  m.generators = z.generators;
  return m;
}

std::string expect_parse_error(const std::string& text) {
  try {
    parse_model(text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    return e.what();
  }
  FAIL("expected a parse error");
  return "";
}

}  // namespace

TEST_CASE("serialization round-trips every catalogued model") {
  for (const std::string& name : zoo_names()) {
    CAPTURE(name);
    Model m = model_of(name);
    std::string text = serialize_model(m);
    Model back = parse_model(text);
    CHECK(models_equal(m, back));
    // Canonical text is a fixed point.
    CHECK(serialize_model(back) == text);
  }
}

TEST_CASE("a minimal model parses with comments and defaults") {
  Model m = parse_model(
      "hpi-model v1\n"
      "# a silly one-dimensional example\n"
      "name tiny\n"
      "dim 1\n"
      "unit 1\n"
      "sc 0 0 0 1   # e*e = e\n");
  CHECK(m.name == "tiny");
  CHECK(m.alg.dim() == 1);
  CHECK(m.alg.labels() == std::vector<std::string>{"e0"});
  REQUIRE(m.unit.has_value());
  CHECK(m.generators.empty());
}

TEST_CASE("generalized operator blocks round-trip") {
  std::string text =
      "hpi-model v1\n"
      "name one-way\n"
      "dim 2\n"
      "labels a b\n"
      "sc 0 0 0 1\n"
      "sc 1 1 1 1\n"
      "op pi generalized\n"
      "row 0 0\n"
      "row 1 0\n"
      "sym\n"
      "row 0 0\n"
      "row 1 0\n"
      "row 0 0\n"
      "row 1 0\n"
      "end\n";
  Model m = parse_model(text);
  REQUIRE(m.generators.size() == 1);
  CHECK(m.generators[0].rule.kind == RuleKind::Generalized);
  CHECK(m.generators[0].rule.sym.size() == 1);
  CHECK(m.generators[0].rule.twist.empty());
  Model back = parse_model(serialize_model(m));
  CHECK(models_equal(m, back));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(expect_parse_error("nope\n").find("line 1") != std::string::npos);
  CHECK(expect_parse_error("hpi-model v1\nname x\nname y\ndim 1\n").find("line 3") !=
        std::string::npos);
  CHECK(expect_parse_error("hpi-model v1\nname x\ndim 1\nsc 0 0 5 1\n").find("line 4") !=
        std::string::npos);
  CHECK(expect_parse_error("hpi-model v1\nname x\ndim 1\nsc 0 0 0 1/0\n").find("line 4") !=
        std::string::npos);
  CHECK(expect_parse_error("hpi-model v1\nname x\nlabels a\ndim 1\n").find("line 3") !=
        std::string::npos);
  // A generalized op without its end line.
  expect_parse_error(
      "hpi-model v1\nname x\ndim 1\nsc 0 0 0 1\nop f generalized\nrow 1\nsym\nrow 1\nrow 1\n");
}

TEST_CASE("missing header fields are parse errors") {
  expect_parse_error("hpi-model v1\ndim 1\n");
  expect_parse_error("hpi-model v1\nname x\n");
  expect_parse_error("hpi-model v2\nname x\ndim 1\n");
}

TEST_CASE("structural validation distinguishes itself from parsing") {
  // Associativity failure names the offending basis triple.
  std::string bad_assoc =
      "hpi-model v1\n"
      "name broken\n"
      "dim 2\n"
      "labels x y\n"
      "sc 0 0 1 1\n"
      "sc 1 0 0 1\n";
  try {
    parse_model(bad_assoc);
    FAIL("expected a validation error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ValidationError);
    CHECK(std::string(e.what()).find("x") != std::string::npos);
  }
  // A declared unit that is only a one-sided partial identity.
  std::string bad_unit =
      "hpi-model v1\n"
      "name broken\n"
      "dim 2\n"
      "unit 1 0\n"
      "sc 0 0 0 1\n"
      "sc 1 1 1 1\n";
  CHECK_THROWS_AS(parse_model(bad_unit), Error);
  // An operator whose matrix violates the declared product rule.
  std::string bad_op =
      "hpi-model v1\n"
      "name broken\n"
      "dim 2\n"
      "sc 0 0 0 1\n"
      "sc 1 1 1 1\n"
      "op f automorphism\n"
      "row 1 1\n"
      "row 0 1\n";
  try {
    parse_model(bad_op);
    FAIL("expected a validation error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ValidationError);
    CHECK(std::string(e.what()).find("f") != std::string::npos);
  }
}

TEST_CASE("dimension caps are size limits") {
  try {
    parse_model("hpi-model v1\nname big\ndim 65\n");
    FAIL("expected a size limit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeLimit);
  }
}

TEST_CASE("structure constants accumulate across lines") {
  Model m = parse_model(
      "hpi-model v1\n"
      "name acc\n"
      "dim 1\n"
      "sc 0 0 0 1/2\n"
      "sc 0 0 0 1/2\n");
  CHECK(m.alg.multiply(m.alg.basis_vec(0), m.alg.basis_vec(0)) == Vec{Rat(1)});
  // Canonical form merges them into a single line.
  std::string text = serialize_model(m);
  CHECK(text.find("sc 0 0 0 1\n") != std::string::npos);
}

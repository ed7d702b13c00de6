#include <catch2/catch_amalgamated.hpp>

#include "hpi/haction.hpp"
#include "hpi/zoo.hpp"

using namespace hpi;

TEST_CASE("every catalogued model is well formed") {
  for (const std::string& name : zoo_names()) {
    CAPTURE(name);
    ZooModel z = zoo_model(name);
    CHECK(z.name == name);
    CHECK(z.alg.dim() > 0);
    z.alg.check_associativity();
    for (const HOperator& op : z.generators)
      CHECK(verify_product_rule(z.alg, op.mat, op.rule));
    // Closing the operator set re-verifies all composite rules.
    HActionData act = operator_algebra_basis(z.alg, z.generators);
    CHECK(act.zeta_span.dim() >= 1);
  }
}

TEST_CASE("expected units and dimensions") {
  CHECK(zoo_model("point").alg.dim() == 1);
  CHECK(zoo_model("ut2").alg.dim() == 3);
  CHECK(zoo_model("m2").alg.dim() == 4);
  CHECK(zoo_model("qq-swap").alg.dim() == 2);
  CHECK(zoo_model("bahturin-m2").alg.dim() == 8);
  CHECK(zoo_model("nil3").alg.dim() == 2);
  CHECK(zoo_model("point").alg.find_unit().has_value());
  CHECK_FALSE(zoo_model("nil3").alg.find_unit().has_value());
}

TEST_CASE("parametric families resolve by suffix") {
  CHECK(zoo_model("ut3").alg.dim() == 6);
  CHECK(zoo_model("ut4").alg.dim() == 10);
  CHECK(zoo_model("m3").alg.dim() == 9);
  CHECK(zoo_model("nil5").alg.dim() == 4);
  CHECK(zoo_model("bahturin-m1").alg.dim() == 2);
  CHECK(zoo_model("bahturin-m3").alg.dim() == 18);
}

TEST_CASE("swap action on the split two-line model") {
  ZooModel z = zoo_model("qq-swap");
  REQUIRE(z.generators.size() == 1);
  const Matrix& s = z.generators[0].mat;
  // The swap exchanges the two idempotents and squares to the identity.
  Vec e0 = z.alg.basis_vec(0), e1 = z.alg.basis_vec(1);
  CHECK(mat_apply(s, e0) == e1);
  CHECK(mat_apply(s, e1) == e0);
  CHECK(verify_product_rule(z.alg, s, z.generators[0].rule));
}

TEST_CASE("adjoint operators are derivations of the matrix algebra") {
  ZooModel z = zoo_model("m2-ad");
  CHECK(z.generators.size() == 4);
  for (const HOperator& op : z.generators) {
    CHECK(op.rule.kind == RuleKind::Derivation);
    CHECK(verify_product_rule(z.alg, op.mat, op.rule));
  }
}

TEST_CASE("unknown and out-of-range names are rejected distinctly") {
  try {
    zoo_model("no-such-model");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
  try {
    zoo_model("ut9");
    FAIL("expected a size limit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeLimit);
  }
  try {
    zoo_model("bahturin-m7");
    FAIL("expected a size limit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeLimit);
  }
}
